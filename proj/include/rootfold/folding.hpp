#ifndef ROOTFOLD_FOLDING_HPP
#define ROOTFOLD_FOLDING_HPP

#include <utility>
#include <vector>

#include "rootfold/action.hpp"
#include "rootfold/rootdata.hpp"

namespace rootfold {

enum class RootClass { NonMultipliable, MultipliableSplit, MultipliableInert };

// Quotient root datum of (source, group): character lattice the torsion-free
// co-invariants, roots the images of the source roots, coroots summed (or
// doubled sums) over fibers.
struct FoldingResult {
  RootDatum source;
  ActionGroup group;
  RootDatum quotient;
  LatticeQuotient restriction;  // projection X~ -> X
  IntMatrix section;            // integer right inverse of the projection
  std::vector<int> root_restriction;             // source root -> quotient root
  std::vector<std::vector<int>> fiber;           // quotient root -> source roots
  std::vector<Vec> coroot_in_source;             // quotient coroot inside (X~^vee)^Gamma
  std::vector<RootClass> classification;         // per quotient root
  std::vector<std::vector<std::pair<int, int>>> exceptional_pairs;  // per quotient root
  PositiveSystem source_positive;
  PositiveSystem quotient_positive;
};

FoldingResult quotient_datum(const RootDatum& d, const ActionGroup& g, const PositiveSystem& pos);

// Image of a Gamma-stable simple system, with the folded Dynkin diagram.
std::pair<SimpleSystem, DynkinDiagram> folded_simple_and_dynkin(const FoldingResult& f,
                                                                const SimpleSystem& delta);

// Z Phi^vee = (Z Phi~^vee)^Gamma inside X~^vee; true on every valid folding.
bool coroot_lattice_check(const FoldingResult& f);

// Geometric-then-Galois factorization of a folding.
struct TwoStageResult {
  FoldingResult stage1;       // by the geometric subgroup
  ActionGroup induced_action; // of Sigma/Gamma_0 on stage1.quotient
  FoldingResult stage2;       // by the induced action
  FoldingResult total;        // by all of Sigma
  IntMatrix iso;              // unimodular: total.quotient -> stage2.quotient
  std::vector<int> total_to_stage2;  // root index translation along iso
};

TwoStageResult two_stage(const RootDatum& d, const ActionGroup& sigma, const PositiveSystem& pos);

// Whole group geometric (trivial Galois stage) / whole group Galois.
TwoStageResult two_stage_geometric(const RootDatum& d, const ActionGroup& g, const PositiveSystem& pos);
TwoStageResult two_stage_galois(const RootDatum& d, const ActionGroup& g, const PositiveSystem& pos);

void check_characteristic(int p);  // 1 or a prime

// Restricted root system of the fixed group, as total-quotient root indices:
// the restrictions of stage-1 roots that survive at the fixed-point level
// (divisible stage-1 roots 2b survive iff b is inert for the geometric stage
// or p = 2).
std::vector<int> fixed_root_system(const TwoStageResult& t, int p);

// Restricted root system after smoothing: all of fixed_root_system for odd p;
// for p = 2, the members that are non-multipliable inside it or split for the
// Galois stage.
std::vector<int> smooth_root_system(const TwoStageResult& t, int p);

// Some smooth-system root is divisible inside the fixed system.
bool is_exceptional(const TwoStageResult& t, int p);

}  // namespace rootfold

#endif
