#include "rootfold/bds.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rootfold/qlinalg.hpp"

namespace rootfold {

BdSData bds(const RootDatum& d, const SimpleSystem& delta, int alpha) {
  if (std::find(delta.begin(), delta.end(), alpha) == delta.end())
    throw Failure("BadInput", "alpha is not a member of delta");

  auto comps = irreducible_components(d);
  const Component* comp = nullptr;
  for (const Component& c : comps)
    if (std::find(c.root_indices.begin(), c.root_indices.end(), alpha) != c.root_indices.end())
      comp = &c;
  for (int i : comp->root_indices)
    if (d.is_multipliable(i)) throw Failure("NonReduced", "alpha's component is non-reduced");

  SimpleSystem comp_delta;
  std::set<int> comp_set(comp->root_indices.begin(), comp->root_indices.end());
  for (int s : delta)
    if (comp_set.count(s)) comp_delta.push_back(s);

  BdSData out;
  out.base = delta;
  out.chosen = alpha;

  // fundamental coweight: combination of the component's simple coroots with
  // <delta_i, coweight> = [delta_i == alpha]
  int m = int(comp_delta.size());
  QMatrix cart(m, m);
  QVec rhs(m, Rat(0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) cart.at(i, j) = Rat(d.pairing(comp_delta[i], comp_delta[j]));
    if (comp_delta[i] == alpha) rhs[i] = 1;
  }
  auto coeffs = qsolve(cart, rhs);
  if (!coeffs) throw Failure("InternalAxiomFailure", "Cartan matrix not invertible");
  out.fundamental_coweight.assign(d.rank, Rat(0));
  for (int j = 0; j < m; ++j)
    for (int c = 0; c < d.rank; ++c)
      out.fundamental_coweight[c] += (*coeffs)[j] * Rat(d.coroots[comp_delta[j]][c]);

  HighestRoot h = highest_root(d, comp->root_indices, comp_delta);
  out.highest = h.root_index;
  out.highest_coefficients = h.coefficients;
  Rat n = qdot(d.roots[h.root_index], out.fundamental_coweight);
  if (denominator(n) != 1) throw Failure("InternalAxiomFailure", "non-integral highest pairing");
  out.coefficient = numerator(n);

  int neg_highest = d.index_of(vec_neg(d.roots[h.root_index]));
  for (int s : delta)
    if (s != alpha) out.bds_basis.push_back(s);
  out.bds_basis.push_back(neg_highest);

  // route one: integral closure of the basis
  std::vector<int> by_closure = integral_closure(d, out.bds_basis);
  std::sort(by_closure.begin(), by_closure.end());
  // route two: pairing with the coweight divisible by n
  std::vector<int> by_pairing;
  for (std::size_t r = 0; r < d.num_roots(); ++r) {
    Rat p = qdot(d.roots[r], out.fundamental_coweight);
    if (denominator(p) != 1) continue;
    if (out.coefficient != 0 && numerator(p) % out.coefficient != 0) continue;
    by_pairing.push_back(int(r));
  }
  if (by_closure != by_pairing)
    throw Failure("InternalAxiomFailure", "closure and pairing routes disagree");
  out.subsystem = by_closure;

  // the basis is a simple system for the subsystem: every member is a
  // one-signed integral combination of the basis
  QMatrix basis(d.rank, int(out.bds_basis.size()));
  for (std::size_t j = 0; j < out.bds_basis.size(); ++j)
    for (int i = 0; i < d.rank; ++i) basis.at(i, int(j)) = Rat(d.roots[out.bds_basis[j]][i]);
  for (int r : out.subsystem) {
    QVec b(d.rank);
    for (int i = 0; i < d.rank; ++i) b[i] = Rat(d.roots[r][i]);
    auto sol = qsolve(basis, b);
    if (!sol) throw Failure("InternalAxiomFailure", "subsystem member outside basis span");
    bool nonneg = true, nonpos = true;
    for (const Rat& x : *sol) {
      if (denominator(x) != 1) throw Failure("InternalAxiomFailure", "non-integral basis coefficient");
      if (x > 0) nonpos = false;
      if (x < 0) nonneg = false;
    }
    if (!nonneg && !nonpos)
      throw Failure("InternalAxiomFailure", "basis is not a simple system for the subsystem");
  }
  return out;
}

std::vector<Int> bds_center_invariant(const RootDatum& d, const SimpleSystem& delta, int alpha) {
  if (int(delta.size()) != d.rank) throw Failure("NotAdjoint", "delta does not span the lattice");
  std::vector<Vec> cols;
  for (int s : delta) cols.push_back(d.roots[s]);
  IntMatrix dm = IntMatrix::from_cols(cols);
  Int dd = det(dm);
  if (dd != 1 && dd != -1) throw Failure("NotAdjoint", "X is not the root lattice Z Delta");
  BdSData b = bds(d, delta, alpha);
  std::vector<Vec> bcols;
  for (int s : b.bds_basis) bcols.push_back(d.roots[s]);
  SmithResult s = smith_normal_form(IntMatrix::from_cols(bcols));
  std::vector<Int> invariants;
  for (int i = 0; i < std::min(s.d.rows, s.d.cols); ++i)
    if (s.d.at(i, i) > 1) invariants.push_back(s.d.at(i, i));
  return invariants;
}

E6PairingReport e6_coweight_pairings() {
  RootDatum d = make_named("E6");
  Component comp = irreducible_components(d)[0];
  const SimpleSystem& delta = comp.bourbaki_simple;  // Bourbaki alpha_1 .. alpha_6
  auto coroot = [&](int node) { return d.coroots[delta[node - 1]]; };
  int alpha4 = delta[3];
  BdSData b = bds(d, delta, alpha4);

  Vec v1 = vec_sub(vec_scale(-2, coroot(1)), coroot(3));
  Vec v2 = vec_sub(vec_scale(-2, coroot(6)), coroot(5));
  Vec v3 = vec_sub(vec_scale(2, d.coroots[b.highest]), coroot(2));

  E6PairingReport rep;
  for (const Vec& v : {v1, v2, v3}) rep.pairings_with_alpha4.push_back(dot(d.roots[alpha4], v));
  rep.alpha2_pairing = dot(d.roots[delta[1]], v1);
  rep.onto_center = true;
  for (const Int& p : rep.pairings_with_alpha4)
    if (p != 1 || p % 3 == 0) rep.onto_center = false;

  rep.kills_subsystem_mod3 = true;
  for (int r : b.subsystem)
    for (const Vec& v : {v1, v2, v3})
      if (dot(d.roots[r], v) % 3 != 0) rep.kills_subsystem_mod3 = false;

  // each cocharacter lies in the coroot lattice of its own A2 component
  rep.inside_own_component = true;
  RootDatum sub = sub_datum(d, b.subsystem);
  auto sub_comps = irreducible_components(sub);
  std::vector<std::pair<Vec, int>> assign = {{v1, -1}, {v2, -1}, {v3, -1}};
  for (auto& [v, owner] : assign) {
    for (std::size_t c = 0; c < sub_comps.size(); ++c) {
      std::vector<Vec> gens;
      for (int i : sub_comps[c].root_indices) gens.push_back(sub.coroots[i]);
      if (lattice_contains(gens, v)) owner = int(c);
    }
    if (owner < 0) rep.inside_own_component = false;
  }
  if (rep.inside_own_component) {
    std::set<int> owners;
    for (auto& [v, owner] : assign) owners.insert(owner);
    if (owners.size() != 3) rep.inside_own_component = false;
  }
  rep.ok = rep.kills_subsystem_mod3 && rep.inside_own_component && rep.onto_center &&
           rep.alpha2_pairing == 0;
  return rep;
}

std::vector<std::vector<int>> maximal_closed_subsystems(const RootDatum& d, bool full_rank_only,
                                                        std::size_t root_bound) {
  if (d.num_roots() > root_bound) throw Failure("TooLarge", "too many roots for brute force");
  int n = int(d.num_roots());
  PositiveSystem pos = canonical_positive_system(d);
  std::vector<int> positives;
  for (int i = 0; i < n; ++i)
    if (pos.flag[i]) positives.push_back(i);

  // every closed subsystem is the closure of <= rank of its members, and
  // closures are negation-symmetric, so positive generating sets suffice
  std::set<std::vector<int>> closed;
  std::vector<int> subset;
  auto enumerate = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (!subset.empty()) {
      std::vector<int> cl = integral_closure(d, subset);
      std::sort(cl.begin(), cl.end());
      if (int(cl.size()) < n) closed.insert(cl);
    }
    if (remaining == 0) return;
    for (std::size_t i = start; i < positives.size(); ++i) {
      subset.push_back(positives[i]);
      self(self, i + 1, remaining - 1);
      subset.pop_back();
    }
  };
  enumerate(enumerate, 0, d.rank);

  std::vector<std::vector<int>> maximal;
  for (const auto& c : closed) {
    bool is_max = true;
    for (const auto& bigger : closed) {
      if (bigger.size() <= c.size()) continue;
      if (std::includes(bigger.begin(), bigger.end(), c.begin(), c.end())) is_max = false;
    }
    if (is_max) maximal.push_back(c);
  }

  if (full_rank_only) {
    int full = [&] {
      std::vector<Vec> all;
      for (const Vec& r : d.roots) all.push_back(r);
      return int(lattice_canonical_basis(all, d.rank).size());
    }();
    std::vector<std::vector<int>> kept;
    for (const auto& c : maximal) {
      std::vector<Vec> gens;
      for (int i : c) gens.push_back(d.roots[i]);
      if (int(lattice_canonical_basis(gens, d.rank).size()) == full) kept.push_back(c);
    }
    maximal = kept;
  }

  // W-conjugacy: canonical representative = lexicographically least W-image
  WeylGroup w = weyl_group(d);
  std::set<std::vector<int>> reps;
  for (const auto& c : maximal) {
    std::vector<int> best;
    for (const auto& perm : w.elements) {
      std::vector<int> img;
      for (int i : c) img.push_back(perm[i]);
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = img;
    }
    reps.insert(best);
  }
  return std::vector<std::vector<int>>(reps.begin(), reps.end());
}

}  // namespace rootfold
