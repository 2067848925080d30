#ifndef ROOTFOLD_INDUCE_HPP
#define ROOTFOLD_INDUCE_HPP

#include <vector>

#include "rootfold/action.hpp"
#include "rootfold/rootdata.hpp"

namespace rootfold {

// Abstract finite group given by its multiplication table.
struct FiniteGroup {
  std::vector<std::vector<int>> table;  // table[i][j] = i * j
  int identity = 0;

  std::size_t order() const { return table.size(); }
  int compose(int i, int j) const { return table[i][j]; }
  int inverse(int i) const;
  void check() const;  // identity, inverses, associativity

  static FiniteGroup cyclic(int n);
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
};

// Induction of (d1, Gamma_1) along Gamma_1 <= Gamma: block lattice
// Z[Gamma] (x)_{Z[Gamma_1]} X_1, roots supported in single blocks, Gamma
// permuting blocks through coset representatives.
struct InducedDatum {
  RootDatum result;
  ActionGroup action;                          // image of Gamma on the result
  std::vector<int> gamma_to_element;           // Gamma element -> action element
  std::vector<int> coset_rep;                  // minimal representative per block
  std::vector<std::vector<int>> coset_blocks;  // coordinate indices per block
  IntMatrix embedding;                         // block-0 inclusion of X_1
};

// action1[k] is the matrix of gamma1[k] on d1; gamma1 must be a subgroup,
// action1 a homomorphism.
InducedDatum induce_datum(const RootDatum& d1, const FiniteGroup& gamma,
                          const std::vector<int>& gamma1, const std::vector<IntMatrix>& action1);

// quotient(induce(d1)) is unimodularly isomorphic to quotient(d1), commuting
// with the restriction maps (Frobenius-reciprocity shadow).
bool induction_quotient_compat(const RootDatum& d1, const FiniteGroup& gamma,
                               const std::vector<int>& gamma1,
                               const std::vector<IntMatrix>& action1);

}  // namespace rootfold

#endif
