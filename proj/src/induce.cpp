#include "rootfold/induce.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rootfold/folding.hpp"

namespace rootfold {

int FiniteGroup::inverse(int i) const {
  for (std::size_t j = 0; j < order(); ++j)
    if (table[i][j] == identity) return int(j);
  throw Failure("BadInput", "group element without inverse");
}

void FiniteGroup::check() const {
  int n = int(order());
  for (int i = 0; i < n; ++i) {
    if (int(table[i].size()) != n) throw Failure("BadInput", "ragged multiplication table");
    if (table[identity][i] != i || table[i][identity] != i)
      throw Failure("BadInput", "identity is not neutral");
  }
  for (int i = 0; i < n; ++i) inverse(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw Failure("BadInput", "multiplication table not associative");
}

FiniteGroup FiniteGroup::cyclic(int n) {
  FiniteGroup g;
  g.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  return g;
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  int na = int(a.order()), nb = int(b.order());
  FiniteGroup g;
  g.table.assign(na * nb, std::vector<int>(na * nb));
  for (int i = 0; i < na * nb; ++i)
    for (int j = 0; j < na * nb; ++j)
      g.table[i][j] = a.table[i / nb][j / nb] * nb + b.table[i % nb][j % nb];
  g.identity = a.identity * nb + b.identity;
  return g;
}

InducedDatum induce_datum(const RootDatum& d1, const FiniteGroup& gamma,
                          const std::vector<int>& gamma1, const std::vector<IntMatrix>& action1) {
  gamma.check();
  if (gamma1.size() != action1.size()) throw Failure("BadInput", "gamma1/action1 length mismatch");
  std::set<int> sub(gamma1.begin(), gamma1.end());
  if (!sub.count(gamma.identity)) throw Failure("NotSubgroup", "gamma1 does not contain the identity");
  for (int x : gamma1)
    for (int y : gamma1)
      if (!sub.count(gamma.compose(x, y))) throw Failure("NotSubgroup", "gamma1 is not closed");

  std::map<int, int> pos;  // gamma1 element -> position
  for (std::size_t k = 0; k < gamma1.size(); ++k) pos[gamma1[k]] = int(k);
  auto act1 = [&](int h) -> const IntMatrix& {
    auto it = pos.find(h);
    if (it == pos.end()) throw Failure("NotSubgroup", "element outside gamma1");
    return action1[it->second];
  };
  for (int x : gamma1) {
    make_automorphism(d1, act1(x));  // validates
    for (int y : gamma1)
      if (mul(act1(x), act1(y)) != act1(gamma.compose(x, y)))
        throw Failure("BadInput", "action1 is not a homomorphism");
  }

  // left cosets with minimal representatives, sorted by representative
  std::vector<int> coset_of(gamma.order(), -1);
  std::vector<int> reps;
  for (std::size_t g = 0; g < gamma.order(); ++g) {
    if (coset_of[g] >= 0) continue;
    int c = int(reps.size());
    reps.push_back(int(g));
    for (int h : gamma1) coset_of[gamma.compose(int(g), h)] = c;
  }
  int m = int(reps.size()), r = d1.rank;

  InducedDatum out;
  out.coset_rep = reps;
  out.result.rank = m * r;
  for (int b = 0; b < m; ++b) {
    std::vector<int> block(r);
    for (int i = 0; i < r; ++i) block[i] = b * r + i;
    out.coset_blocks.push_back(block);
  }
  auto embed = [&](const Vec& v, int b) {
    Vec w(std::size_t(m) * r, Int(0));
    for (int i = 0; i < r; ++i) w[b * r + i] = v[i];
    return w;
  };
  for (int b = 0; b < m; ++b)
    for (std::size_t i = 0; i < d1.num_roots(); ++i) {
      out.result.roots.push_back(embed(d1.roots[i], b));
      out.result.coroots.push_back(embed(d1.coroots[i], b));
    }
  out.result.rebuild_index();
  ValidationReport rep = validate(out.result);
  if (!rep.ok) throw Failure("InternalAxiomFailure", "induced datum invalid: " + rep.violations[0]);

  out.embedding = IntMatrix(m * r, r);
  for (int i = 0; i < r; ++i) out.embedding.at(i, i) = 1;

  // gamma acts by block permutation twisted through gamma1
  std::vector<IntMatrix> gens;
  for (std::size_t g = 0; g < gamma.order(); ++g) {
    IntMatrix mg(m * r, m * r);
    for (int b = 0; b < m; ++b) {
      int gb = gamma.compose(int(g), reps[b]);
      int c = coset_of[gb];
      int h = gamma.compose(gamma.inverse(reps[c]), gb);
      const IntMatrix& amat = act1(h);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) mg.at(c * r + i, b * r + j) = amat.at(i, j);
    }
    gens.push_back(mg);
  }
  out.action = close_group(out.result, gens);
  for (const IntMatrix& mg : gens) {
    int idx = -1;
    for (std::size_t e = 0; e < out.action.order(); ++e)
      if (out.action.elements[e].matrix == mg) idx = int(e);
    out.gamma_to_element.push_back(idx);
  }
  return out;
}

bool induction_quotient_compat(const RootDatum& d1, const FiniteGroup& gamma,
                               const std::vector<int>& gamma1,
                               const std::vector<IntMatrix>& action1) {
  ActionGroup g1 = close_group(d1, action1);
  auto p1 = stable_positive_system(d1, g1);
  if (!p1) throw Failure("NotStable", "(d1, gamma1) is not quasisemisimple");
  FoldingResult f1 = quotient_datum(d1, g1, *p1);

  InducedDatum ind = induce_datum(d1, gamma, gamma1, action1);
  // blockwise positive system is stable for the induced action
  PositiveSystem pind;
  pind.flag.assign(ind.result.num_roots(), 0);
  for (std::size_t i = 0; i < ind.result.num_roots(); ++i) {
    std::size_t within = i % d1.num_roots();
    pind.flag[i] = p1->flag[within];
  }
  if (!preserves_positive_system(ind.action, pind))
    throw Failure("InternalAxiomFailure", "blockwise positive system not stable");
  FoldingResult find = quotient_datum(ind.result, ind.action, pind);

  if (find.quotient.rank != f1.quotient.rank) return false;
  // tau([x]_1) = [embed(x)]; as matrices: T Q1 = Q_ind E
  IntMatrix t = mul(find.restriction.projection, mul(ind.embedding, f1.section));
  Int dt = det(t);
  if (dt != 1 && dt != -1) return false;
  if (mul(t, f1.restriction.projection) != mul(find.restriction.projection, ind.embedding))
    return false;
  // roots and coroots correspond
  IntMatrix tdual = inverse_unimodular(t.transpose());
  std::set<int> hit;
  for (std::size_t a = 0; a < f1.quotient.num_roots(); ++a) {
    int b = find.quotient.index_of(mul(t, f1.quotient.roots[a]));
    if (b < 0) return false;
    if (mul(tdual, f1.quotient.coroots[a]) != find.quotient.coroots[b]) return false;
    hit.insert(b);
  }
  return hit.size() == find.quotient.num_roots();
}

}  // namespace rootfold
