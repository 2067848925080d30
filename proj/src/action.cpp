#include "rootfold/action.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rootfold {

DatumAutomorphism make_automorphism(const RootDatum& d, const IntMatrix& g) {
  if (g.rows != d.rank || g.cols != d.rank)
    throw Failure("NotAutomorphism", "matrix has wrong shape");
  Int dg = det(g);
  if (dg != 1 && dg != -1) throw Failure("NotAutomorphism", "matrix not unimodular");
  DatumAutomorphism a;
  a.matrix = g;
  a.dual_matrix = inverse_unimodular(g.transpose());
  a.perm.resize(d.num_roots());
  for (std::size_t i = 0; i < d.num_roots(); ++i) {
    int k = d.index_of(mul(g, d.roots[i]));
    if (k < 0) throw Failure("NotAutomorphism", "does not preserve the root list");
    a.perm[i] = k;
    if (mul(a.dual_matrix, d.coroots[i]) != d.coroots[k])
      throw Failure("NotAutomorphism", "violates duality compatibility");
  }
  return a;
}

int ActionGroup::inverse(int i) const {
  for (std::size_t j = 0; j < order(); ++j)
    if (table[i][j] == identity) return int(j);
  throw Failure("InternalAxiomFailure", "element without inverse");
}

bool ActionGroup::is_geometric_element(int i) const {
  return std::binary_search(geometric.begin(), geometric.end(), i);
}

ActionGroup close_group(const RootDatum& d, const std::vector<IntMatrix>& generators,
                        std::size_t bound) {
  ActionGroup g;
  std::map<std::vector<Int>, int> seen;
  g.elements.push_back(make_automorphism(d, IntMatrix::identity(d.rank)));
  seen[g.elements[0].matrix.a] = 0;
  std::vector<DatumAutomorphism> gens;
  for (const IntMatrix& m : generators) gens.push_back(make_automorphism(d, m));
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (const DatumAutomorphism& gen : gens) {
      IntMatrix prod = mul(gen.matrix, g.elements[head].matrix);
      if (seen.count(prod.a)) continue;
      if (g.elements.size() >= bound) throw Failure("GroupTooLarge", "group closure exceeds bound");
      seen[prod.a] = int(g.elements.size());
      g.elements.push_back(make_automorphism(d, prod));
    }
  }
  g.table.assign(g.order(), std::vector<int>(g.order()));
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) {
      IntMatrix prod = mul(g.elements[i].matrix, g.elements[j].matrix);
      auto it = seen.find(prod.a);
      if (it == seen.end()) throw Failure("InternalAxiomFailure", "closure not closed");
      g.table[i][j] = it->second;
    }
  return g;
}

std::vector<int> subgroup_closure(const ActionGroup& g, std::vector<int> elements) {
  std::set<int> sub(elements.begin(), elements.end());
  sub.insert(g.identity);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(sub.begin(), sub.end());
    for (int x : cur)
      for (int y : cur)
        if (sub.insert(g.compose(x, y)).second) grew = true;
  }
  return std::vector<int>(sub.begin(), sub.end());
}

bool subgroup_is_normal(const ActionGroup& g, const std::vector<int>& sub) {
  std::set<int> s(sub.begin(), sub.end());
  for (std::size_t x = 0; x < g.order(); ++x) {
    int xi = g.inverse(int(x));
    for (int h : sub)
      if (!s.count(g.compose(g.compose(int(x), h), xi))) return false;
  }
  return true;
}

ActionGroup close_group_with_geometric(const RootDatum& d, const std::vector<IntMatrix>& generators,
                                       const std::vector<int>& geometric_generators,
                                       std::size_t bound) {
  ActionGroup g = close_group(d, generators, bound);
  std::vector<int> seeds;
  for (int gi : geometric_generators) {
    if (gi < 0 || gi >= int(generators.size()))
      throw Failure("BadInput", "geometric generator index out of range");
    DatumAutomorphism a = make_automorphism(d, generators[gi]);
    bool found = false;
    for (std::size_t e = 0; e < g.order(); ++e)
      if (g.elements[e].matrix == a.matrix) {
        seeds.push_back(int(e));
        found = true;
        break;
      }
    if (!found) throw Failure("InternalAxiomFailure", "generator missing from closure");
  }
  g.geometric = subgroup_closure(g, seeds);
  g.has_geometric = true;
  if (!subgroup_is_normal(g, g.geometric))
    throw Failure("NotNormal", "geometric subgroup is not normal");
  return g;
}

bool preserves_positive_system(const ActionGroup& g, const PositiveSystem& p) {
  for (const DatumAutomorphism& a : g.elements)
    for (std::size_t i = 0; i < p.flag.size(); ++i)
      if (p.flag[i] != p.flag[a.perm[i]]) return false;
  return true;
}

std::optional<PositiveSystem> stable_positive_system(const RootDatum& d, const ActionGroup& g,
                                                     std::size_t weyl_bound) {
  if (d.num_roots() == 0) return PositiveSystem{};
  WeylGroup w = weyl_group(d, weyl_bound);
  PositiveSystem seed = canonical_positive_system(d);
  for (const std::vector<int>& perm : w.elements) {
    PositiveSystem q;
    q.flag.assign(d.num_roots(), 0);
    for (std::size_t i = 0; i < d.num_roots(); ++i)
      if (seed.flag[i]) q.flag[perm[i]] = 1;
    if (preserves_positive_system(g, q)) return q;
  }
  return std::nullopt;
}

std::optional<QVec> fixed_space_regular_vector(const RootDatum& d, const ActionGroup& g) {
  // fixed subspace of the cocharacter space under the dual action
  std::vector<QVec> rows;
  for (const DatumAutomorphism& a : g.elements)
    for (int i = 0; i < d.rank; ++i) {
      QVec r(d.rank);
      bool nonzero = false;
      for (int j = 0; j < d.rank; ++j) {
        r[j] = Rat(a.dual_matrix.at(i, j) - (i == j ? 1 : 0));
        if (r[j] != 0) nonzero = true;
      }
      if (nonzero) rows.push_back(r);
    }
  std::vector<QVec> basis;
  if (rows.empty()) {
    for (int i = 0; i < d.rank; ++i) {
      QVec e(d.rank, Rat(0));
      e[i] = 1;
      basis.push_back(e);
    }
  } else {
    QMatrix m(int(rows.size()), d.rank);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < d.rank; ++j) m.at(int(i), j) = rows[i][j];
    basis = qkernel(m);
  }
  if (basis.empty() && d.num_roots() > 0) return std::nullopt;
  // no root functional may vanish identically on the fixed subspace
  for (const Vec& a : d.roots) {
    bool all_zero = true;
    for (const QVec& w : basis)
      if (qdot(a, w) != 0) all_zero = false;
    if (all_zero) return std::nullopt;
  }
  // generic combination avoiding the finitely many root hyperplanes
  for (Int t = 1;; ++t) {
    QVec v(d.rank, Rat(0));
    Rat pw = 1;
    for (const QVec& w : basis) {
      for (int j = 0; j < d.rank; ++j) v[j] += pw * w[j];
      pw *= Rat(t);
    }
    bool regular = true;
    for (const Vec& a : d.roots)
      if (qdot(a, v) == 0) {
        regular = false;
        break;
      }
    if (regular) return v;
  }
}

namespace {

std::vector<std::vector<int>> orbit_partition(int n, const std::vector<const std::vector<int>*>& perms) {
  std::vector<int> owner(n, -1);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < n; ++i) {
    if (owner[i] >= 0) continue;
    std::vector<int> orbit{i};
    owner[i] = int(orbits.size());
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto* p : perms) {
        int img = (*p)[orbit[head]];
        if (owner[img] < 0) {
          owner[img] = int(orbits.size());
          orbit.push_back(img);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(orbit);
  }
  return orbits;
}

}  // namespace

std::vector<std::vector<int>> orbits_on_roots(const RootDatum& d, const ActionGroup& g) {
  std::vector<const std::vector<int>*> perms;
  for (const DatumAutomorphism& a : g.elements) perms.push_back(&a.perm);
  return orbit_partition(int(d.num_roots()), perms);
}

std::vector<std::vector<int>> orbits_on_simple(const RootDatum& d, const ActionGroup& g,
                                               const SimpleSystem& delta) {
  std::set<int> ds(delta.begin(), delta.end());
  for (const DatumAutomorphism& a : g.elements)
    for (int i : delta)
      if (!ds.count(a.perm[i])) throw Failure("NotStable", "simple system not preserved");
  // restrict the permutations to positions within delta
  std::vector<std::vector<int>> restricted;
  std::map<int, int> pos;
  for (std::size_t k = 0; k < delta.size(); ++k) pos[delta[k]] = int(k);
  for (const DatumAutomorphism& a : g.elements) {
    std::vector<int> p(delta.size());
    for (std::size_t k = 0; k < delta.size(); ++k) p[k] = pos[a.perm[delta[k]]];
    restricted.push_back(p);
  }
  std::vector<const std::vector<int>*> perms;
  for (const auto& p : restricted) perms.push_back(&p);
  auto orbits = orbit_partition(int(delta.size()), perms);
  for (auto& o : orbits)
    for (int& x : o) x = delta[x];
  return orbits;
}

std::vector<std::vector<int>> orbits_on_components(const RootDatum& d, const ActionGroup& g) {
  auto comps = irreducible_components(d);
  std::vector<int> comp_of(d.num_roots());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int i : comps[c].root_indices) comp_of[i] = int(c);
  std::vector<std::vector<int>> perms;
  for (const DatumAutomorphism& a : g.elements) {
    std::vector<int> p(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) p[c] = comp_of[a.perm[comps[c].root_indices[0]]];
    perms.push_back(p);
  }
  std::vector<const std::vector<int>*> pp;
  for (const auto& p : perms) pp.push_back(&p);
  return orbit_partition(int(comps.size()), pp);
}

IntMatrix lift_delta_permutation(const RootDatum& d, const SimpleSystem& delta,
                                 const std::vector<int>& perm) {
  int m = int(delta.size());
  // complement: intersection of the kernels of the delta coroots
  std::vector<QVec> comp_basis;
  {
    QMatrix rows(m, d.rank);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < d.rank; ++j) rows.at(i, j) = Rat(d.coroots[delta[i]][j]);
    comp_basis = qkernel(rows);
  }
  int w = int(comp_basis.size());
  if (m + w != d.rank)
    throw Failure("NonIntegralLift", "span(delta) and coroot kernel do not fill the lattice");
  QMatrix b(d.rank, d.rank);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < d.rank; ++i) b.at(i, j) = Rat(d.roots[delta[j]][i]);
  for (int j = 0; j < w; ++j)
    for (int i = 0; i < d.rank; ++i) b.at(i, m + j) = comp_basis[j][i];
  QMatrix binv(d.rank, d.rank);
  for (int col = 0; col < d.rank; ++col) {
    QVec e(d.rank, Rat(0));
    e[col] = 1;
    auto x = qsolve(b, e);
    if (!x) throw Failure("NonIntegralLift", "basis not invertible");
    for (int i = 0; i < d.rank; ++i) binv.at(i, col) = (*x)[i];
  }
  // g maps the basis b to the permuted basis bp; g = bp * b^{-1}
  QMatrix bp(d.rank, d.rank);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < d.rank; ++i) bp.at(i, j) = Rat(d.roots[delta[perm[j]]][i]);
  for (int j = 0; j < w; ++j)
    for (int i = 0; i < d.rank; ++i) bp.at(i, m + j) = comp_basis[j][i];
  IntMatrix g(d.rank, d.rank);
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) {
      Rat s = 0;
      for (int k = 0; k < d.rank; ++k) s += bp.at(i, k) * binv.at(k, j);
      if (denominator(s) != 1)
        throw Failure("NonIntegralLift", "diagram automorphism does not preserve the lattice");
      g.at(i, j) = numerator(s);
    }
  return g;
}

ActionGroup diagram_automorphisms(const RootDatum& d, const SimpleSystem& delta) {
  for (std::size_t i = 0; i < d.num_roots(); ++i)
    if (d.is_multipliable(int(i))) throw Failure("NonReduced", "datum is non-reduced");
  int m = int(delta.size());
  IntMatrix cartan(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) cartan.at(i, j) = d.pairing(delta[i], delta[j]);

  // Cartan-preserving permutations of delta, by backtracking
  std::vector<std::vector<int>> perms;
  std::vector<int> assign(m, -1);
  std::vector<char> used(m, 0);
  auto backtrack = [&](auto&& self, int i) -> void {
    if (i == m) {
      perms.push_back(assign);
      return;
    }
    for (int j = 0; j < m; ++j) {
      if (used[j]) continue;
      bool ok = cartan.at(i, i) == cartan.at(j, j);
      for (int k = 0; k < i && ok; ++k)
        if (cartan.at(k, i) != cartan.at(assign[k], j) || cartan.at(i, k) != cartan.at(j, assign[k]))
          ok = false;
      if (!ok) continue;
      assign[i] = j;
      used[j] = 1;
      self(self, i + 1);
      assign[i] = -1;
      used[j] = 0;
    }
  };
  backtrack(backtrack, 0);

  std::vector<IntMatrix> gens;
  for (const std::vector<int>& p : perms) gens.push_back(lift_delta_permutation(d, delta, p));
  return close_group(d, gens);
}

bool is_prime_int(const Int& n) {
  if (n < 2) return false;
  for (Int f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

InspectionReport inspection_report(const RootDatum& d, int p) {
  auto comps = irreducible_components(d);
  if (comps.size() != 1) throw Failure("NotIrreducible", "datum is not irreducible");
  const Component& comp = comps[0];
  for (int i : comp.root_indices)
    if (d.is_multipliable(i)) throw Failure("NonReduced", "datum is non-reduced");

  InspectionReport rep;
  rep.p = p;
  ActionGroup autos = diagram_automorphisms(d, comp.bourbaki_simple);
  rep.diagram_aut_order = autos.order();
  if (p > 1) {
    for (std::size_t e = 0; e < autos.order(); ++e) {
      int ord = 1, cur = int(e);
      while (cur != autos.identity) {
        cur = autos.compose(cur, int(e));
        ++ord;
      }
      if (ord == p) rep.admits_order_p = true;
    }
    rep.p_squared_divides = (rep.diagram_aut_order % (std::size_t(p) * p)) == 0;
  }
  HighestRoot h = highest_root(d, comp);
  for (std::size_t i = 0; i < h.coefficients.size(); ++i)
    rep.highest_coefficients.push_back({h.coefficients[i], is_prime_int(h.coefficients[i])});
  return rep;
}

}  // namespace rootfold
