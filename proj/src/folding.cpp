#include "rootfold/folding.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rootfold {

namespace {

void axiom(bool cond, const char* what) {
  if (!cond) throw Failure("InternalAxiomFailure", what);
}

}  // namespace

FoldingResult quotient_datum(const RootDatum& d, const ActionGroup& g, const PositiveSystem& pos) {
  if (pos.flag.size() != d.num_roots()) throw Failure("BadInput", "positive system size mismatch");
  if (!preserves_positive_system(g, pos))
    throw Failure("NotStable", "positive system is not Gamma-stable");

  FoldingResult f;
  f.source = d;
  f.group = g;
  f.source_positive = pos;

  std::vector<IntMatrix> mats;
  for (const DatumAutomorphism& a : g.elements) mats.push_back(a.matrix);
  f.restriction = coinvariant_quotient(d.rank, mats);
  const IntMatrix& q = f.restriction.projection;
  f.section = right_inverse(q);

  // quotient roots in first-occurrence order
  std::map<Vec, int> qindex;
  f.root_restriction.resize(d.num_roots());
  for (std::size_t i = 0; i < d.num_roots(); ++i) {
    Vec img = mul(q, d.roots[i]);
    axiom(!is_zero(img), "a root restricts to zero");
    auto it = qindex.find(img);
    if (it == qindex.end()) {
      it = qindex.emplace(img, int(f.quotient.roots.size())).first;
      f.quotient.roots.push_back(img);
      f.fiber.push_back({});
    }
    f.root_restriction[i] = it->second;
    f.fiber[it->second].push_back(int(i));
  }
  f.quotient.rank = f.restriction.target_rank;

  // fibers are Gamma-orbits
  for (const auto& fib : f.fiber) {
    std::set<int> orbit;
    std::vector<int> work{fib[0]};
    orbit.insert(fib[0]);
    while (!work.empty()) {
      int x = work.back();
      work.pop_back();
      for (const DatumAutomorphism& a : g.elements)
        if (orbit.insert(a.perm[x]).second) work.push_back(a.perm[x]);
    }
    axiom(orbit == std::set<int>(fib.begin(), fib.end()), "fiber is not a single orbit");
  }

  // positive flags descend
  f.quotient_positive.flag.assign(f.quotient.roots.size(), 0);
  for (std::size_t a = 0; a < f.quotient.roots.size(); ++a) {
    bool flag = pos.flag[f.fiber[a][0]];
    for (int i : f.fiber[a]) axiom(pos.flag[i] == char(flag), "fiber mixes signs");
    f.quotient_positive.flag[a] = flag;
  }

  // classification and exceptional pairs
  auto comps = irreducible_components(d);
  std::vector<int> comp_of(d.num_roots());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int i : comps[c].root_indices) comp_of[i] = int(c);

  int nq = int(f.quotient.roots.size());
  f.classification.assign(nq, RootClass::NonMultipliable);
  f.exceptional_pairs.assign(nq, {});
  std::map<Vec, int> qroot_index;
  for (int a = 0; a < nq; ++a) qroot_index[f.quotient.roots[a]] = a;
  auto quotient_index_of = [&qroot_index](const Vec& v) {
    auto it = qroot_index.find(v);
    return it == qroot_index.end() ? -1 : it->second;
  };

  for (int a = 0; a < nq; ++a) {
    if (!f.quotient_positive.flag[a]) continue;  // handle positives, mirror below
    if (quotient_index_of(vec_scale(2, f.quotient.roots[a])) < 0) continue;
    std::map<int, std::vector<int>> by_comp;
    for (int i : f.fiber[a]) by_comp[comp_of[i]].push_back(i);
    bool saw_split = false, saw_inert = false;
    for (auto& [c, ext] : by_comp) {
      axiom(ext.size() <= 2, "more than two extensions in one component");
      if (ext.size() == 1) {
        axiom(d.is_multipliable(ext[0]), "single extension is not multipliable");
        f.exceptional_pairs[a].push_back({ext[0], ext[0]});
        saw_inert = true;
      } else {
        axiom(d.has_root(vec_add(d.roots[ext[0]], d.roots[ext[1]])),
              "pair does not sum to a root");
        f.exceptional_pairs[a].push_back({ext[0], ext[1]});
        saw_split = true;
      }
    }
    axiom(!f.exceptional_pairs[a].empty(), "multipliable root with no exceptional pair");
    axiom(!(saw_split && saw_inert), "mixed exceptional pair kinds");
    f.classification[a] = saw_split ? RootClass::MultipliableSplit : RootClass::MultipliableInert;
  }
  for (int a = 0; a < nq; ++a) {
    if (f.quotient_positive.flag[a]) continue;
    int na = quotient_index_of(vec_neg(f.quotient.roots[a]));
    axiom(na >= 0, "quotient not closed under negation");
    f.classification[a] = f.classification[na];
    for (auto [x, y] : f.exceptional_pairs[na])
      f.exceptional_pairs[a].push_back({d.index_of(vec_neg(d.roots[x])), d.index_of(vec_neg(d.roots[y]))});
  }

  // coroots: sum over the fiber, doubled for split roots
  f.coroot_in_source.resize(nq);
  for (int a = 0; a < nq; ++a) {
    Vec w(d.rank, Int(0));
    for (int i : f.fiber[a]) w = vec_add(w, d.coroots[i]);
    if (f.classification[a] == RootClass::MultipliableSplit) w = vec_scale(2, w);
    f.coroot_in_source[a] = w;
    f.quotient.coroots.push_back(mul(f.section.transpose(), w));
  }
  f.quotient.rebuild_index();

  ValidationReport rep = validate(f.quotient);
  axiom(rep.ok, "quotient fails root-datum validation");
  axiom(regular_witness(f.quotient, f.quotient_positive).has_value(),
        "descended positive system is not a positive system");
  return f;
}

std::pair<SimpleSystem, DynkinDiagram> folded_simple_and_dynkin(const FoldingResult& f,
                                                                const SimpleSystem& delta) {
  const RootDatum& d = f.source;
  std::set<int> ds(delta.begin(), delta.end());
  for (const DatumAutomorphism& a : f.group.elements)
    for (int i : delta)
      if (!ds.count(a.perm[i])) throw Failure("NotStable", "simple system not Gamma-stable");

  PositiveSystem src_pos = positive_system_of_simple(d, delta);

  SimpleSystem image;
  std::set<int> seen;
  for (int i : delta)
    if (seen.insert(f.root_restriction[i]).second) image.push_back(f.root_restriction[i]);

  // the image must be the simple system of the descended positive system
  PositiveSystem qpos;
  qpos.flag.assign(f.quotient.roots.size(), 0);
  for (std::size_t i = 0; i < d.num_roots(); ++i)
    if (src_pos.flag[i]) qpos.flag[f.root_restriction[i]] = 1;
  SimpleSystem expected = simple_system(f.quotient, qpos);
  if (std::set<int>(expected.begin(), expected.end()) != std::set<int>(image.begin(), image.end()))
    throw Failure("InternalAxiomFailure", "restricted simple system mismatch");
  return {image, dynkin_diagram(f.quotient, image)};
}

bool coroot_lattice_check(const FoldingResult& f) {
  const RootDatum& d = f.source;
  // Z Phi^vee, inside the source cocharacter lattice
  std::vector<Vec> lhs = f.coroot_in_source;
  // (Z Phi~^vee)^Gamma: invariants of the dual action on the coroot lattice
  std::vector<Vec> cobasis = lattice_canonical_basis(d.coroots, d.rank);
  if (cobasis.empty()) return lhs.empty();
  IntMatrix cb = IntMatrix::from_cols(cobasis);
  int r = int(cobasis.size());
  std::vector<IntMatrix> induced;
  for (const DatumAutomorphism& a : f.group.elements) {
    IntMatrix y(r, r);
    for (int j = 0; j < r; ++j) {
      auto col = solve_integer(cb, mul(a.dual_matrix, cobasis[j]));
      if (!col) throw Failure("InternalAxiomFailure", "dual action does not preserve Z Phi~^vee");
      for (int i = 0; i < r; ++i) y.at(i, j) = (*col)[i];
    }
    induced.push_back(y);
  }
  std::vector<Vec> inv = invariant_sublattice(r, induced);
  std::vector<Vec> rhs;
  for (const Vec& y : inv) rhs.push_back(mul(cb, y));
  return lattice_equal(lhs, rhs, d.rank);
}

namespace {

ActionGroup subgroup_action(const RootDatum& d, const ActionGroup& g, const std::vector<int>& elems) {
  std::vector<IntMatrix> gens;
  for (int e : elems) gens.push_back(g.elements[e].matrix);
  return close_group(d, gens);
}

}  // namespace

TwoStageResult two_stage(const RootDatum& d, const ActionGroup& sigma, const PositiveSystem& pos) {
  if (!sigma.has_geometric) throw Failure("BadInput", "no geometric subgroup designated");
  if (!subgroup_is_normal(sigma, sigma.geometric))
    throw Failure("NotNormal", "geometric subgroup is not normal");
  if (!preserves_positive_system(sigma, pos))
    throw Failure("NotStable", "positive system is not Sigma-stable");

  TwoStageResult t;
  ActionGroup gamma0 = subgroup_action(d, sigma, sigma.geometric);
  t.stage1 = quotient_datum(d, gamma0, pos);

  // induced matrices on the stage-1 quotient: A = Q M R, well defined on
  // cosets of the geometric subgroup by normality
  const IntMatrix& q1 = t.stage1.restriction.projection;
  const IntMatrix& r1 = t.stage1.section;
  std::set<std::vector<Int>> seen;
  std::vector<IntMatrix> induced_gens;
  for (const DatumAutomorphism& a : sigma.elements) {
    IntMatrix m = mul(q1, mul(a.matrix, r1));
    if (seen.insert(m.a).second) induced_gens.push_back(m);
  }
  t.induced_action = close_group(t.stage1.quotient, induced_gens);
  t.stage2 = quotient_datum(t.stage1.quotient, t.induced_action, t.stage1.quotient_positive);

  ActionGroup plain = subgroup_action(d, sigma, [&] {
    std::vector<int> all(sigma.order());
    for (std::size_t i = 0; i < sigma.order(); ++i) all[i] = int(i);
    return all;
  }());
  t.total = quotient_datum(d, plain, pos);

  // transitivity: stage2 o stage1 equals total, up to a unimodular change of
  // coordinates commuting with the restriction maps
  IntMatrix q21 = mul(t.stage2.restriction.projection, q1);
  t.iso = mul(q21, t.total.section);
  Int di = det(t.iso);
  if (di != 1 && di != -1) throw Failure("InternalAxiomFailure", "stage iso not unimodular");
  if (mul(t.iso, t.total.restriction.projection) != q21)
    throw Failure("InternalAxiomFailure", "stage iso does not commute with restrictions");
  t.total_to_stage2.assign(t.total.quotient.num_roots(), -1);
  IntMatrix iso_dual = inverse_unimodular(t.iso.transpose());
  for (std::size_t a = 0; a < t.total.quotient.num_roots(); ++a) {
    int b = t.stage2.quotient.index_of(mul(t.iso, t.total.quotient.roots[a]));
    if (b < 0) throw Failure("InternalAxiomFailure", "stage iso does not match roots");
    if (mul(iso_dual, t.total.quotient.coroots[a]) != t.stage2.quotient.coroots[b])
      throw Failure("InternalAxiomFailure", "stage iso does not match coroots");
    t.total_to_stage2[a] = b;
  }
  std::set<int> hit(t.total_to_stage2.begin(), t.total_to_stage2.end());
  if (hit.size() != t.stage2.quotient.num_roots())
    throw Failure("InternalAxiomFailure", "stage iso not bijective on roots");
  return t;
}

TwoStageResult two_stage_geometric(const RootDatum& d, const ActionGroup& g, const PositiveSystem& pos) {
  std::vector<IntMatrix> gens;
  for (const DatumAutomorphism& a : g.elements) gens.push_back(a.matrix);
  std::vector<int> all(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) all[i] = int(i);
  return two_stage(d, close_group_with_geometric(d, gens, all), pos);
}

TwoStageResult two_stage_galois(const RootDatum& d, const ActionGroup& g, const PositiveSystem& pos) {
  std::vector<IntMatrix> gens;
  for (const DatumAutomorphism& a : g.elements) gens.push_back(a.matrix);
  return two_stage(d, close_group_with_geometric(d, gens, {}), pos);
}

void check_characteristic(int p) {
  if (p == 1 || is_prime_int(Int(p))) return;
  throw Failure("BadInput", "characteristic exponent must be 1 or a prime");
}

std::vector<int> fixed_root_system(const TwoStageResult& t, int p) {
  check_characteristic(p);
  const RootDatum& q1 = t.stage1.quotient;
  // stage-1 roots surviving at the fixed-point level
  std::set<int> f1;
  for (std::size_t b = 0; b < q1.num_roots(); ++b) {
    if (!q1.is_divisible(int(b))) {
      f1.insert(int(b));
      continue;
    }
    int half = q1.index_of([&] {
      Vec h(q1.rank);
      for (int c = 0; c < q1.rank; ++c) h[c] = q1.roots[b][c] / 2;
      return h;
    }());
    if (p == 2 || t.stage1.classification[half] == RootClass::MultipliableInert) f1.insert(int(b));
  }
  std::set<int> stage2_image;
  for (int b : f1) stage2_image.insert(t.stage2.root_restriction[b]);
  std::vector<int> out;
  for (std::size_t a = 0; a < t.total.quotient.num_roots(); ++a)
    if (stage2_image.count(t.total_to_stage2[a])) out.push_back(int(a));
  return out;
}

std::vector<int> smooth_root_system(const TwoStageResult& t, int p) {
  std::vector<int> fixed = fixed_root_system(t, p);
  if (p != 2) return fixed;
  std::set<int> fixed_set(fixed.begin(), fixed.end());
  const RootDatum& qt = t.total.quotient;
  std::vector<int> out;
  for (int a : fixed) {
    int twice = qt.index_of(vec_scale(2, qt.roots[a]));
    bool mult_in_fixed = twice >= 0 && fixed_set.count(twice);
    if (!mult_in_fixed) {
      out.push_back(a);
      continue;
    }
    // multipliable inside the fixed system: kept iff split for the Galois stage
    if (t.stage2.classification[t.total_to_stage2[a]] == RootClass::MultipliableSplit) out.push_back(a);
  }
  return out;
}

bool is_exceptional(const TwoStageResult& t, int p) {
  std::vector<int> fixed = fixed_root_system(t, p);
  std::set<int> fixed_set(fixed.begin(), fixed.end());
  const RootDatum& qt = t.total.quotient;
  for (int c : smooth_root_system(t, p)) {
    Vec half(qt.rank);
    bool integral = true;
    for (int k = 0; k < qt.rank; ++k) {
      if (qt.roots[c][k] % 2 != 0) {
        integral = false;
        break;
      }
      half[k] = qt.roots[c][k] / 2;
    }
    if (!integral) continue;
    int h = qt.index_of(half);
    if (h >= 0 && fixed_set.count(h)) return true;
  }
  return false;
}


}  // namespace rootfold
