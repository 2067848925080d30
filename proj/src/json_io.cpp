#include <limits>
#include "rootfold/json_io.hpp"

namespace rootfold {

namespace {

long long int_to_ll(const Int& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
    throw Failure("BadInput", "integer too large for JSON");
  return x.convert_to<long long>();
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_to_ll(x));
  return a;
}

Vec vec_from_json(const json& j) {
  Vec v;
  for (const auto& x : j) {
    if (x.is_string())
      v.push_back(Int(x.get<std::string>()));
    else
      v.push_back(Int(x.get<long long>()));
  }
  return v;
}

json qvec_to_json(const QVec& v) {
  json a = json::array();
  for (const Rat& x : v) {
    if (denominator(x) == 1)
      a.push_back(int_to_ll(numerator(x)));
    else
      a.push_back(numerator(x).str() + "/" + denominator(x).str());
  }
  return a;
}

}  // namespace

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) rows.push_back(vec_to_json(m.row(i)));
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  return IntMatrix::from_rows(rows);
}

json to_json(const RootDatum& d) {
  json j;
  j["rank"] = d.rank;
  json roots = json::array(), coroots = json::array();
  for (const Vec& r : d.roots) roots.push_back(vec_to_json(r));
  for (const Vec& c : d.coroots) coroots.push_back(vec_to_json(c));
  j["roots"] = roots;
  j["coroots"] = coroots;
  return j;
}

RootDatum datum_from_json(const json& j) {
  if (j.contains("type")) return make_named(j["type"].get<std::string>());
  RootDatum d;
  if (!j.contains("rank") || !j.contains("roots") || !j.contains("coroots"))
    throw Failure("BadInput", "datum JSON needs rank/roots/coroots or type");
  d.rank = j["rank"].get<int>();
  for (const auto& r : j["roots"]) d.roots.push_back(vec_from_json(r));
  for (const auto& c : j["coroots"]) d.coroots.push_back(vec_from_json(c));
  d.rebuild_index();
  return d;
}

ActionSpec action_from_json(const json& j) {
  ActionSpec spec;
  if (j.contains("generators"))
    for (const auto& g : j["generators"]) {
      if (g.contains("matrix"))
        spec.generators.push_back(matrix_from_json(g["matrix"]));
      else
        spec.generators.push_back(matrix_from_json(g));
    }
  if (j.contains("geometric")) {
    spec.has_geometric = true;
    for (const auto& i : j["geometric"]) spec.geometric.push_back(i.get<int>());
  }
  return spec;
}

namespace {

const char* class_name(RootClass c) {
  switch (c) {
    case RootClass::NonMultipliable: return "non-multipliable";
    case RootClass::MultipliableSplit: return "split";
    case RootClass::MultipliableInert: return "inert";
  }
  return "?";
}

}  // namespace

json folding_to_json(const FoldingResult& f) {
  json j;
  j["source"] = to_json(f.source);
  j["quotient"] = to_json(f.quotient);
  j["quotient_type"] = type_label(f.quotient).str();
  j["projection"] = to_json(f.restriction.projection);
  json tors = json::array();
  for (const Int& t : f.restriction.torsion_invariants) tors.push_back(int_to_ll(t));
  j["torsion_invariants"] = tors;
  json fibers = json::array(), classes = json::array(), pairs = json::array();
  for (std::size_t a = 0; a < f.quotient.num_roots(); ++a) {
    fibers.push_back(f.fiber[a]);
    classes.push_back(class_name(f.classification[a]));
    json ps = json::array();
    for (auto [x, y] : f.exceptional_pairs[a]) ps.push_back(json::array({x, y}));
    pairs.push_back(ps);
  }
  j["fibers"] = fibers;
  j["classification"] = classes;
  j["exceptional_pairs"] = pairs;
  json cor = json::array();
  for (const Vec& w : f.coroot_in_source) cor.push_back(vec_to_json(w));
  j["coroots_in_source"] = cor;
  j["positive"] = f.quotient_positive.flag;
  return j;
}

json two_stage_to_json(const TwoStageResult& t, int p) {
  json j;
  j["stage1"] = folding_to_json(t.stage1);
  j["stage2"] = folding_to_json(t.stage2);
  j["total"] = folding_to_json(t.total);
  j["characteristic"] = p;
  auto subset = [&](const std::vector<int>& idx) {
    json roots = json::array();
    for (int i : idx) roots.push_back(vec_to_json(t.total.quotient.roots[i]));
    return roots;
  };
  std::vector<int> fixed = fixed_root_system(t, p);
  std::vector<int> smooth = smooth_root_system(t, p);
  j["fixed_roots"] = subset(fixed);
  j["fixed_type"] = type_label(sub_datum(t.total.quotient, fixed)).str();
  j["smooth_roots"] = subset(smooth);
  j["smooth_type"] = type_label(sub_datum(t.total.quotient, smooth)).str();
  j["exceptional"] = is_exceptional(t, p);
  return j;
}

json bds_to_json(const RootDatum& d, const BdSData& b) {
  json j;
  j["chosen_root"] = vec_to_json(d.roots[b.chosen]);
  j["highest_root"] = vec_to_json(d.roots[b.highest]);
  j["highest_coefficients"] = vec_to_json(b.highest_coefficients);
  j["coefficient"] = int_to_ll(b.coefficient);
  json basis = json::array();
  for (int i : b.bds_basis) basis.push_back(vec_to_json(d.roots[i]));
  j["bds_basis"] = basis;
  json sys = json::array();
  for (int i : b.subsystem) sys.push_back(vec_to_json(d.roots[i]));
  j["subsystem"] = sys;
  j["subsystem_type"] = type_label(sub_datum(d, b.subsystem)).str();
  j["fundamental_coweight"] = qvec_to_json(b.fundamental_coweight);
  return j;
}

json induced_to_json(const InducedDatum& ind) {
  json j;
  j["result"] = to_json(ind.result);
  j["result_type"] = type_label(ind.result).str();
  j["coset_blocks"] = ind.coset_blocks;
  j["coset_representatives"] = ind.coset_rep;
  json gens = json::array();
  for (const DatumAutomorphism& a : ind.action.elements) gens.push_back(to_json(a.matrix));
  j["action_elements"] = gens;
  return j;
}

FMat fmat_from_json(const json& j, const TowerField& field) {
  FMat m;
  for (const auto& row : j) {
    FVec r;
    for (const auto& x : row) {
      if (x.is_string())
        r.push_back(gf2::parse_fraction(x.get<std::string>(), field.gen_names));
      else
        r.push_back(x.get<long long>() % 2 ? gf2::Fraction::one(field.num_gens())
                                           : gf2::Fraction::zero(field.num_gens()));
    }
    m.push_back(r);
  }
  return m;
}

json fmat_to_json(const FMat& m, const TowerField& field) {
  json rows = json::array();
  std::vector<std::string> names = field.display_names();
  for (const FVec& r : m) {
    json row = json::array();
    for (const gf2::Fraction& x : r) row.push_back(gf2::to_string(x, names));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rootfold
