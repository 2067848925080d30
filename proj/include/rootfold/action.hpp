#ifndef ROOTFOLD_ACTION_HPP
#define ROOTFOLD_ACTION_HPP

#include <optional>
#include <vector>

#include "rootfold/qlinalg.hpp"
#include "rootfold/rootdata.hpp"

namespace rootfold {

// Automorphism of a root datum: unimodular on X^*, permutes the roots, and is
// duality-compatible ((g a)^vee = (g^T)^{-1} a^vee).
struct DatumAutomorphism {
  IntMatrix matrix;
  IntMatrix dual_matrix;
  std::vector<int> perm;
};

DatumAutomorphism make_automorphism(const RootDatum& d, const IntMatrix& g);

struct ActionGroup {
  std::vector<DatumAutomorphism> elements;  // [0] is the identity
  std::vector<std::vector<int>> table;
  int identity = 0;
  bool has_geometric = false;
  std::vector<int> geometric;  // sorted element indices; nonempty iff has_geometric

  std::size_t order() const { return elements.size(); }
  int compose(int i, int j) const { return table[i][j]; }
  int inverse(int i) const;
  bool is_geometric_element(int i) const;
};

ActionGroup close_group(const RootDatum& d, const std::vector<IntMatrix>& generators,
                        std::size_t bound = 1u << 20);

// Closes the whole group and designates the subgroup generated by
// `geometric_generators` (indices into `generators`) as the geometric part.
// Throws NotNormal if that subgroup is not normal.
ActionGroup close_group_with_geometric(const RootDatum& d, const std::vector<IntMatrix>& generators,
                                       const std::vector<int>& geometric_generators,
                                       std::size_t bound = 1u << 20);

std::vector<int> subgroup_closure(const ActionGroup& g, std::vector<int> elements);
bool subgroup_is_normal(const ActionGroup& g, const std::vector<int>& sub);

bool preserves_positive_system(const ActionGroup& g, const PositiveSystem& p);

// Some Gamma-stable positive system, searched over the Weyl orbit of the
// canonical seed; decides quasisemisimplicity of the action.
std::optional<PositiveSystem> stable_positive_system(const RootDatum& d, const ActionGroup& g,
                                                     std::size_t weyl_bound = 1000000);

// Rational cross-check: a stable system exists iff the Gamma-fixed subspace of
// the cocharacter space contains a Phi-regular vector.
std::optional<QVec> fixed_space_regular_vector(const RootDatum& d, const ActionGroup& g);

std::vector<std::vector<int>> orbits_on_roots(const RootDatum& d, const ActionGroup& g);
std::vector<std::vector<int>> orbits_on_simple(const RootDatum& d, const ActionGroup& g,
                                               const SimpleSystem& delta);
std::vector<std::vector<int>> orbits_on_components(const RootDatum& d, const ActionGroup& g);

// All Cartan-preserving permutations of Delta, lifted to lattice automorphisms
// that fix the canonical complement of span(Delta) pointwise.
ActionGroup diagram_automorphisms(const RootDatum& d, const SimpleSystem& delta);

// Lift of a permutation of delta (given as positions within delta) to a
// lattice automorphism fixing the canonical complement pointwise.
IntMatrix lift_delta_permutation(const RootDatum& d, const SimpleSystem& delta,
                                 const std::vector<int>& perm);

struct InspectionReport {
  int p = 0;
  bool admits_order_p = false;
  std::size_t diagram_aut_order = 1;
  bool p_squared_divides = false;
  std::vector<std::pair<Int, bool>> highest_coefficients;  // (coefficient, is prime) per node
};
InspectionReport inspection_report(const RootDatum& d, int p);

bool is_prime_int(const Int& n);

}  // namespace rootfold

#endif
