#ifndef ROOTFOLD_BDS_HPP
#define ROOTFOLD_BDS_HPP

#include <vector>

#include "rootfold/rootdata.hpp"

namespace rootfold {

// Borel-de Siebenthal basis and subsystem for a chosen simple root.
struct BdSData {
  SimpleSystem base;            // the given Delta
  int chosen;                   // root index of alpha (member of base)
  int highest;                  // root index of alpha_0 in alpha's component
  Vec highest_coefficients;     // over the component's part of Delta
  Int coefficient;              // n = <alpha_0, coweight>
  std::vector<int> bds_basis;   // Delta u {-alpha_0} minus {alpha}
  std::vector<int> subsystem;   // sorted root indices
  QVec fundamental_coweight;    // rational cocharacter
};

// Computes the subsystem twice (integral closure of the basis, and the
// coweight divisibility criterion) and insists they agree.
BdSData bds(const RootDatum& d, const SimpleSystem& delta, int alpha);

// Invariant factors (> 1) of Z Delta / Z Delta_alpha; requires X = Z Delta.
std::vector<Int> bds_center_invariant(const RootDatum& d, const SimpleSystem& delta, int alpha);

struct E6PairingReport {
  bool ok = false;
  std::vector<Int> pairings_with_alpha4;     // the three cocharacter pairings
  Int alpha2_pairing = 0;                    // <alpha_2, -2 alpha_1^vee - alpha_3^vee>
  bool kills_subsystem_mod3 = false;         // all 18 subsystem pairings = 0 mod 3
  bool inside_own_component = false;         // each cochar in Z-span of its A2's coroots
  bool onto_center = false;                  // order-3 image: pairing 1 with alpha_4
};
E6PairingReport e6_coweight_pairings();

// Maximal integrally closed proper subsystems up to W-conjugacy, sorted
// canonical representatives.  Brute force; guarded by the root bound.
std::vector<std::vector<int>> maximal_closed_subsystems(const RootDatum& d, bool full_rank_only,
                                                        std::size_t root_bound = 30);

}  // namespace rootfold

#endif
