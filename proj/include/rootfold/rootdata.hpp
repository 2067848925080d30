#ifndef ROOTFOLD_ROOTDATA_HPP
#define ROOTFOLD_ROOTDATA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootfold/intlat.hpp"
#include "rootfold/numeric.hpp"

namespace rootfold {

// Root datum (X^*, Phi, X_*, Phi^vee) with the pairing fixed to the
// coordinate dot product; coroots[i] is dual to roots[i].  May be non-reduced.
struct RootDatum {
  int rank = 0;
  std::vector<Vec> roots;
  std::vector<Vec> coroots;

  std::size_t num_roots() const { return roots.size(); }
  int index_of(const Vec& r) const;  // -1 if absent
  bool has_root(const Vec& r) const { return index_of(r) >= 0; }
  Int pairing(int root_i, int coroot_j) const { return dot(roots[root_i], coroots[coroot_j]); }

  // s_i(x) = x - <x, coroots[i]> roots[i]; returns the root index of the image
  int reflect_root(int i, int j) const;
  IntMatrix reflection_matrix(int i) const;       // on X^*
  IntMatrix dual_reflection_matrix(int i) const;  // on X_*

  bool is_multipliable(int i) const { return has_root(vec_scale(2, roots[i])); }
  bool is_divisible(int i) const;  // roots[i]/2 is a root
  void rebuild_index();

 private:
  mutable std::map<Vec, int> index_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};
ValidationReport validate(const RootDatum& d);

// Member flags per root; exactly one of {a, -a} flagged for a valid system.
struct PositiveSystem {
  std::vector<char> flag;
  bool operator==(const PositiveSystem& o) const { return flag == o.flag; }
  bool operator<(const PositiveSystem& o) const { return flag < o.flag; }
};

// Ordered root indices of the simple roots.
using SimpleSystem = std::vector<int>;

PositiveSystem positive_system_from_regular(const RootDatum& d, const Vec& v);
PositiveSystem positive_system_from_regular(const RootDatum& d, const QVec& v);

// Deterministic chamber choice; whole-datum seed for enumerations.
PositiveSystem canonical_positive_system(const RootDatum& d);

// Integer regular vector witnessing the flagged roots, if the flags form a
// genuine positive system.
std::optional<Vec> regular_witness(const RootDatum& d, const PositiveSystem& p);

SimpleSystem simple_system(const RootDatum& d, const PositiveSystem& p);

// Positive system whose simple system is `delta`; BadInput if delta is not a
// simple system of d.
PositiveSystem positive_system_of_simple(const RootDatum& d, const SimpleSystem& delta);

// All positive systems, as the Weyl orbit of the canonical seed.
std::vector<PositiveSystem> all_positive_systems(const RootDatum& d, std::size_t weyl_bound = 1000000);

// Brute-force oracle: subsets P with P u -P = Phi, P n -P = 0, closed under
// addition inside Phi.  Exponential; test scale only.
std::vector<PositiveSystem> positive_systems_brute_force(const RootDatum& d);

struct WeylGroup {
  std::vector<std::vector<int>> elements;  // permutations of the root list; [0] = identity
  std::vector<std::vector<int>> words;     // reduced-ish words over `gens`
  std::vector<int> gens;                   // root indices of the generating reflections
  std::size_t order() const { return elements.size(); }
  int index_of(const std::vector<int>& perm) const;
  // full multiplication table; guarded, only sensible for small groups
  std::vector<std::vector<int>> table(std::size_t bound = 4096) const;
  IntMatrix matrix(const RootDatum& d, int element) const;  // lattice matrix on X^*

 private:
  mutable std::map<std::vector<int>, int> index_;
};

WeylGroup weyl_group(const RootDatum& d, std::size_t bound = 1000000);

enum class Family { A, B, C, D, E, F, G, BC };
std::string family_name(Family f);

struct TypeLabel {
  std::vector<std::pair<Family, int>> parts;  // sorted for comparison
  std::string str() const;
  bool operator==(const TypeLabel& o) const { return parts == o.parts; }
};

struct Component {
  std::vector<int> root_indices;
  Family family = Family::A;
  int type_rank = 0;
  SimpleSystem bourbaki_simple;  // simple roots in Bourbaki order
};

// Connectivity classes of the non-orthogonality graph, classified.
std::vector<Component> irreducible_components(const RootDatum& d);
TypeLabel type_label(const RootDatum& d);

struct DynkinDiagram {
  SimpleSystem nodes;
  IntMatrix cartan;  // cartan(i, j) = <node_i, node_j^vee>
  std::vector<char> multipliable;
};
DynkinDiagram dynkin_diagram(const RootDatum& d, const SimpleSystem& delta);

// Highest root of the given component, with coefficients over the component's
// Bourbaki-ordered simple roots.
struct HighestRoot {
  int root_index;
  Vec coefficients;
};
HighestRoot highest_root(const RootDatum& d, const Component& comp);
HighestRoot highest_root(const RootDatum& d, const std::vector<int>& component_roots,
                         const SimpleSystem& component_delta);

// Z-span(S) n Phi, as root indices.
std::vector<int> integral_closure(const RootDatum& d, const std::vector<int>& subset);

bool strongly_orthogonal(const RootDatum& d, int a, int b);

// Positive system of Phi containing the given positive system of the
// sub-root system phi1, such that `a` (or a/2 when a is divisible in Phi)
// is simple.  phi1 is given by root indices; flags1 runs over phi1.
PositiveSystem keep_it_simple(const RootDatum& d, const std::vector<int>& phi1,
                              const std::vector<char>& flags1, int a);

// Root datum on the same lattice spanned by a reflection-closed subset.
RootDatum sub_datum(const RootDatum& d, const std::vector<int>& root_subset);

// Named constructors, Bourbaki numbering; e.g. "A2", "E6", "BC3", "A2+A2".
RootDatum make_named(const std::string& spec);
IntMatrix standard_cartan(Family f, int rank);

}  // namespace rootfold

#endif
