#ifndef ROOTFOLD_COXFIX_HPP
#define ROOTFOLD_COXFIX_HPP

#include <vector>

#include "rootfold/action.hpp"
#include "rootfold/folding.hpp"
#include "rootfold/rootdata.hpp"

namespace rootfold {

// Finite Coxeter complex: simplices are pairs (J, w W_J) with J a proper
// subset of the simple positions; chambers have J empty.
struct CoxeterComplex {
  RootDatum datum;
  SimpleSystem delta;
  WeylGroup weyl;

  struct Simplex {
    unsigned type = 0;  // bitmask over delta positions
    int coset = 0;      // minimal element index of the coset
    bool operator<(const Simplex& o) const {
      return type != o.type ? type < o.type : coset < o.coset;
    }
    bool operator==(const Simplex& o) const { return type == o.type && coset == o.coset; }
  };
  std::vector<Simplex> simplices;
  std::vector<std::vector<int>> parabolic;   // per type mask, sorted element indices
  std::vector<std::vector<int>> right_table; // w -> w * s_k, per delta position

  int compose(int i, int j) const;           // Weyl element composition by index
  int coset_rep(unsigned type, int w) const;  // minimal element of w W_type
  std::size_t chamber_count() const;
  // face = coarsening: bigger type, containing coset
  bool is_face(const Simplex& face, const Simplex& of) const;
};

CoxeterComplex build_complex(const RootDatum& d, const SimpleSystem& delta,
                             std::size_t weyl_bound = 1000000);

// Action of an automorphism group on the complex.  Each element factors as
// w_gamma composed with a diagram part stabilizing the base chamber; the
// simplex (J, w W_J) maps to (delta_part(J), (gamma w gamma^{-1}) w_gamma W).
struct ComplexAction {
  ActionGroup group;
  std::vector<std::vector<int>> weyl_conj;   // per element: W index under conjugation
  std::vector<int> chamber_shift;            // per element: index of w_gamma
  std::vector<std::vector<int>> delta_perm;  // per element: diagram-part permutation of delta
};

ComplexAction complex_action(const CoxeterComplex& c, const ActionGroup& g);

CoxeterComplex::Simplex act_on_simplex(const CoxeterComplex& c, const ComplexAction& a, int element,
                                       const CoxeterComplex::Simplex& s);

std::vector<CoxeterComplex::Simplex> fixed_subcomplex(const CoxeterComplex& c,
                                                      const ComplexAction& a);

// Comparison of the fixed subcomplex with the Coxeter complex of the folded
// smooth root system: Weyl order match plus an explicit face-preserving
// bijection.  Failures are reported, not thrown.
struct CoxeterCompareReport {
  bool ok = false;
  bool weyl_orders_match = false;
  bool parabolic_types_match = false;
  bool bijection_found = false;
  std::size_t fixed_simplices = 0;
  std::size_t folded_simplices = 0;
  std::size_t fixed_chambers = 0;
  std::size_t folded_weyl_order = 0;
};

CoxeterCompareReport compare_with_folded(const CoxeterComplex& c, const ComplexAction& a,
                                         const TwoStageResult& t, int p);

}  // namespace rootfold

#endif
