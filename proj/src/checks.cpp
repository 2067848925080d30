#include "rootfold/checks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "rootfold/bds.hpp"
#include "rootfold/catalog.hpp"
#include "rootfold/folding.hpp"
#include "rootfold/formlab.hpp"

namespace rootfold {

namespace {

struct Checker {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "FAILED: " << what << "; ";
    }
  }
};

CheckResult finish(const std::string& name, Checker& c) {
  return {name, c.ok, c.ok ? "ok" : c.detail.str()};
}

CheckResult check_e6_highest_root() {
  Checker c;
  RootDatum d = make_named("E6");
  HighestRoot h = highest_root(d, irreducible_components(d)[0]);
  c.expect(h.coefficients == Vec{Int(1), Int(2), Int(2), Int(3), Int(2), Int(1)},
           "highest-root coefficients are not (1,2,2,3,2,1)");
  return finish("e6-highest-root", c);
}

CheckResult check_e6_bds_3a2() {
  Checker c;
  RootDatum d = make_named("E6");
  SimpleSystem delta = bourbaki_base(d);
  BdSData b = bds(d, delta, delta[3]);
  c.expect(b.coefficient == 3, "coefficient of alpha_4 is not 3");
  c.expect(b.subsystem.size() == 18, "subsystem does not have 18 roots");
  c.expect(type_label(sub_datum(d, b.subsystem)).str() == "A2+A2+A2", "subsystem is not 3A2");
  return finish("e6-bds-3a2", c);
}

CheckResult check_e6_pairings() {
  Checker c;
  E6PairingReport rep = e6_coweight_pairings();
  for (const Int& p : rep.pairings_with_alpha4) c.expect(p == 1, "a cocharacter pairing is not 1");
  c.expect(rep.alpha2_pairing == 0, "<alpha_2, -2a1 - a3> is not 0");
  c.expect(rep.kills_subsystem_mod3, "a subsystem pairing is not divisible by 3");
  c.expect(rep.inside_own_component, "a cocharacter leaves its component's coroot lattice");
  c.expect(rep.onto_center, "mu_3 image is not the full center");
  return finish("e6-pairings", c);
}

CheckResult check_e6_word(const std::string& name, const std::vector<int>& word) {
  Checker c;
  RootDatum d = make_named("E6");
  SimpleSystem delta = bourbaki_base(d);
  auto refl = [&](int node) { return d.reflection_matrix(delta[node - 1]); };
  IntMatrix w = IntMatrix::identity(6);
  for (int node : word) w = mul(w, refl(node));
  // pinned flip: 1<->6, 3<->5
  std::vector<int> flip{5, 1, 4, 3, 2, 0};
  IntMatrix gamma = mul(w, lift_delta_permutation(d, delta, flip));
  c.expect(det(gamma) == -1, "lattice determinant is not -1");
  Vec alpha4 = d.roots[delta[3]];
  Vec image = mul(gamma, alpha4);
  Vec expected = vec_add(vec_add(d.roots[delta[1]], d.roots[delta[2]]),
                         vec_add(vec_scale(2, alpha4), d.roots[delta[4]]));
  c.expect(image == expected, "alpha_4 does not map to alpha_2+alpha_3+2alpha_4+alpha_5");
  return finish(name, c);
}

CheckResult check_d4_coweight() {
  Checker c;
  RootDatum d = make_named("D4");
  SimpleSystem delta = bourbaki_base(d);
  BdSData b = bds(d, delta, delta[1]);
  QVec expected(d.rank, Rat(0));
  Vec comb = vec_add(vec_add(d.coroots[delta[0]], vec_scale(2, d.coroots[delta[1]])),
                     vec_add(d.coroots[delta[2]], d.coroots[delta[3]]));
  for (int i = 0; i < d.rank; ++i) expected[i] = Rat(comb[i]);
  c.expect(b.fundamental_coweight == expected,
           "coweight is not alpha1^vee + 2 alpha2^vee + alpha3^vee + alpha4^vee");
  return finish("d4-coweight", c);
}

CheckResult check_d4_mu2_identity() {
  Checker c;
  RootDatum d = make_named("D4");
  SimpleSystem delta = bourbaki_base(d);
  BdSData b = bds(d, delta, delta[1]);
  QVec diff = b.fundamental_coweight;
  Vec sum = vec_add(vec_add(d.coroots[delta[0]], d.coroots[delta[2]]), d.coroots[delta[3]]);
  for (int i = 0; i < d.rank; ++i) diff[i] -= Rat(sum[i]);
  QVec expected(d.rank);
  for (int i = 0; i < d.rank; ++i) expected[i] = Rat(2 * d.coroots[delta[1]][i]);
  c.expect(diff == expected, "coweight minus the three outer coroots is not 2 alpha2^vee");
  return finish("d4-mu2-identity", c);
}

CheckResult check_d4_fold_g2() {
  Checker c;
  RootDatum d = make_named("D4");
  ActionGroup g = close_group(d, named_action(d, "triality"));
  FoldingResult f = quotient_datum(d, g, positive_system_of_simple(d, bourbaki_base(d)));
  c.expect(type_label(f.quotient).str() == "G2", "folded type is not G2");
  return finish("d4-fold-g2", c);
}

CheckResult check_d4_bds_4a1() {
  Checker c;
  RootDatum d = make_named("D4");
  SimpleSystem delta = bourbaki_base(d);
  BdSData b = bds(d, delta, delta[1]);
  c.expect(type_label(sub_datum(d, b.subsystem)).str() == "A1+A1+A1+A1", "subsystem is not 4A1");
  c.expect(b.coefficient == 2, "coefficient is not 2");
  return finish("d4-bds-4a1", c);
}

CheckResult check_a2n_beta() {
  Checker c;
  for (int n = 1; n <= 4; ++n) {
    RootDatum d = make_named("A" + std::to_string(2 * n));
    SimpleSystem delta = bourbaki_base(d);
    DatumAutomorphism flip = make_automorphism(d, named_action(d, "swap")[0]);
    PositiveSystem pos = positive_system_of_simple(d, delta);
    for (int h = 1; h <= 2 * n; ++h) {
      std::vector<int> fixed_of_height;
      for (std::size_t r = 0; r < d.num_roots(); ++r) {
        if (!pos.flag[r]) continue;
        Int height = 0;  // X = Z Delta, so coordinates are the coefficients
        for (const Int& x : d.roots[r]) height += x;
        if (height != h) continue;
        if (flip.perm[r] == int(r)) fixed_of_height.push_back(int(r));
      }
      if (h % 2 == 1) {
        c.expect(fixed_of_height.empty(),
                 "odd height " + std::to_string(h) + " has a pre-divisible root");
      } else {
        c.expect(fixed_of_height.size() == 1,
                 "height " + std::to_string(h) + " does not have a unique pre-divisible root");
        if (fixed_of_height.size() == 1) {
          Vec expected(d.rank, Int(0));
          for (int i = n - h / 2 + 1; i <= n + h / 2; ++i) expected[i - 1] = 1;
          c.expect(d.roots[fixed_of_height[0]] == expected,
                   "beta_h formula fails at h = " + std::to_string(h) + ", n = " + std::to_string(n));
        }
      }
    }
  }
  return finish("a2n-beta", c);
}

CheckResult check_a2n_quotient_types() {
  Checker c;
  std::map<int, std::string> expected{{2, "BC1"}, {3, "C2"}, {4, "BC2"}, {5, "C3"},
                                      {6, "BC3"}, {7, "C4"}, {8, "BC4"}};
  for (auto& [n, label] : expected) {
    RootDatum d = make_named("A" + std::to_string(n));
    ActionGroup g = close_group(d, named_action(d, "swap"));
    FoldingResult f = quotient_datum(d, g, positive_system_of_simple(d, bourbaki_base(d)));
    c.expect(type_label(f.quotient).str() == label,
             "A" + std::to_string(n) + " quotient is not " + label);
  }
  return finish("a2n-quotient-types", c);
}

CheckResult check_inspection_table() {
  Checker c;
  struct TypeEntry {
    std::string name;
    Family family;
    int rank;
  };
  std::vector<TypeEntry> types;
  for (int n = 1; n <= 8; ++n) types.push_back({"A" + std::to_string(n), Family::A, n});
  for (int n = 2; n <= 8; ++n) types.push_back({"B" + std::to_string(n), Family::B, n});
  for (int n = 3; n <= 8; ++n) types.push_back({"C" + std::to_string(n), Family::C, n});
  for (int n = 4; n <= 8; ++n) types.push_back({"D" + std::to_string(n), Family::D, n});
  for (int n = 6; n <= 8; ++n) types.push_back({"E" + std::to_string(n), Family::E, n});
  types.push_back({"F4", Family::F, 4});
  types.push_back({"G2", Family::G, 2});

  std::set<std::pair<std::string, int>> admitted;
  std::set<std::tuple<std::string, int, long long>> ell_not_p;
  for (const TypeEntry& t : types) {
    RootDatum d = make_named(t.name);
    for (int p : {2, 3, 5, 7}) {
      InspectionReport rep = inspection_report(d, p);
      if (rep.admits_order_p) {
        admitted.insert({t.name, p});
        c.expect(!rep.p_squared_divides, "p^2 divides the automorphism group order for " + t.name);
        for (auto& [coeff, prime] : rep.highest_coefficients)
          if (prime && coeff != p)
            ell_not_p.insert({t.name, p, coeff.convert_to<long long>()});
      }
    }
  }
  std::set<std::pair<std::string, int>> expected;
  for (int n = 2; n <= 8; ++n) expected.insert({"A" + std::to_string(n), 2});
  for (int n = 4; n <= 8; ++n) expected.insert({"D" + std::to_string(n), 2});
  expected.insert({"D4", 3});
  expected.insert({"E6", 2});
  c.expect(admitted == expected, "the (type, p) table does not match");
  std::set<std::tuple<std::string, int, long long>> expected_ell{{"E6", 2, 3}, {"D4", 3, 2}};
  c.expect(ell_not_p == expected_ell, "the ell != p pairs do not match");
  return finish("inspection-table", c);
}

CheckResult check_sl_example(int which) {
  Checker c;
  if (which == 1) {
    TowerField k = TowerField::rational({"t"});
    FMat cm(3, FVec(3, gf2::Fraction::zero(1)));
    cm[0][0] = gf2::parse_fraction("t", k.gen_names);
    cm[1][1] = gf2::Fraction::one(1);
    cm[2][2] = gf2::parse_fraction("t", k.gen_names);
    FormData f = gram_from_involution(k, cm);
    TowerField e = k.with_sqrt("t");
    auto ker_k = qb_kernel(f, k);
    auto ker_e = qb_kernel(f, e);
    c.expect(ker_k.size() == 1, "ker(q_b) is not a line");
    c.expect(ker_e.size() == 2, "ker(q_b over E) is not a plane");
    c.expect(!smoothability_check(f, k, e), "example is wrongly smoothable");
    FixedGroupReport rep = fixed_group_report(f, k);
    c.expect(rep.smooth_dim == 1, "smooth dimension is not 1");
    LieFixedReport lie = lie_fixed_dimension(f, k);
    c.expect(!lie.smooth_verdict, "Lie dimension unexpectedly matches");
  } else {
    TowerField k = TowerField::rational({"t0", "t2"});
    FMat cm(3, FVec(3, gf2::Fraction::zero(2)));
    cm[0][0] = gf2::parse_fraction("t0", k.gen_names);
    cm[1][1] = gf2::Fraction::one(2);
    cm[2][2] = gf2::parse_fraction("t2", k.gen_names);
    FormData f = gram_from_involution(k, cm);
    TowerField e = k.with_sqrt("t0").with_sqrt("t2");
    c.expect(qb_kernel(f, k).empty(), "ker(q_b) is not trivial");
    c.expect(qb_kernel(f, e).size() == 2, "ker(q_b over E) is not a plane");
    c.expect(!smoothability_check(f, k, e), "example is wrongly smoothable");
    FixedGroupReport rep = fixed_group_report(f, k);
    c.expect(rep.smooth_dim == 0, "smooth fixed group is not trivial");
    LieFixedReport lie = lie_fixed_dimension(f, k);
    c.expect(!lie.smooth_verdict, "Lie dimension unexpectedly matches");
  }
  // the alternating regime is smooth in both parities
  TowerField k1 = TowerField::rational({"t"});
  for (int dim : {2, 4}) {
    FMat anti(dim, FVec(dim, gf2::Fraction::zero(1)));
    for (int i = 0; i + 1 < dim; i += 2) {
      anti[i][i + 1] = gf2::Fraction::one(1);
      anti[i + 1][i] = gf2::Fraction::one(1);
    }
    FormData fa = gram_from_involution(k1, anti);
    c.expect(lie_fixed_dimension(fa, k1).smooth_verdict,
             "alternating form of dimension " + std::to_string(dim) + " fails the smooth verdict");
  }
  return finish(which == 1 ? "sl-example-1" : "sl-example-2", c);
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "e6-highest-root", "e6-bds-3a2",  "e6-pairings",        "e6-word-1",
      "e6-word-2",       "d4-coweight", "d4-mu2-identity",    "d4-fold-g2",
      "d4-bds-4a1",      "a2n-beta",    "a2n-quotient-types", "inspection-table",
      "sl-example-1",    "sl-example-2"};
  return names;
}

CheckResult run_named_check(const std::string& name) {
  if (name == "e6-highest-root") return check_e6_highest_root();
  if (name == "e6-bds-3a2") return check_e6_bds_3a2();
  if (name == "e6-pairings") return check_e6_pairings();
  if (name == "e6-word-1") return check_e6_word("e6-word-1", {2, 4, 3, 1, 5, 4, 3, 6, 5, 4, 2});
  if (name == "e6-word-2") return check_e6_word("e6-word-2", {2, 4, 5, 6, 3, 4, 5, 1, 3, 4, 2});
  if (name == "d4-coweight") return check_d4_coweight();
  if (name == "d4-mu2-identity") return check_d4_mu2_identity();
  if (name == "d4-fold-g2") return check_d4_fold_g2();
  if (name == "d4-bds-4a1") return check_d4_bds_4a1();
  if (name == "a2n-beta") return check_a2n_beta();
  if (name == "a2n-quotient-types") return check_a2n_quotient_types();
  if (name == "inspection-table") return check_inspection_table();
  if (name == "sl-example-1") return check_sl_example(1);
  if (name == "sl-example-2") return check_sl_example(2);
  throw Failure("UnknownCheck", "no check named " + name);
}

std::vector<CheckResult> run_all_checks() {
  std::vector<CheckResult> out;
  for (const std::string& n : check_names()) out.push_back(run_named_check(n));
  return out;
}

}  // namespace rootfold
