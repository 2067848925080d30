#ifndef ROOTFOLD_FORMLAB_HPP
#define ROOTFOLD_FORMLAB_HPP

#include <optional>
#include <string>
#include <vector>

#include "rootfold/gf2field.hpp"

namespace rootfold {

// Rational-function field over F_2 with a designated set of generators whose
// square roots have been adjoined.  Elements are written in variables v_i;
// v_i means sqrt(t_i) when adjoined, else t_i.  Extending a level rewrites
// t_i as v_i^2.
struct TowerField {
  std::vector<std::string> gen_names;
  std::vector<char> sqrt_adjoined;

  static TowerField rational(const std::vector<std::string>& names);
  TowerField with_sqrt(const std::string& gen) const;
  int num_gens() const { return int(gen_names.size()); }
  bool extends(const TowerField& base) const;
  std::vector<std::string> display_names() const;  // "sqrt(t)" for adjoined
};

gf2::Fraction embed(const gf2::Fraction& x, const TowerField& from, const TowerField& to);

using FVec = std::vector<gf2::Fraction>;
using FMat = std::vector<FVec>;  // row-major

// Symmetric invertible Gram matrix over a tower level; b(x, y) = x^T M y.
struct FormData {
  TowerField field;
  int dimension = 0;
  FMat gram;
  std::optional<FMat> provenance;  // the conjugating matrix c when known
};

// M = c^{-1} for the involution g -> Int(c) g^{-T}; c must be symmetric
// invertible (characteristic 2).
FormData gram_from_involution(const TowerField& k, const FMat& c);

// Basis of ker(q_b) over the given extension level, q_b(x) = sum M_ii x_i^2.
std::vector<FVec> qb_kernel(const FormData& f, const TowerField& over);

std::vector<FVec> orthogonal_complement(const FormData& f, const std::vector<FVec>& subspace,
                                        const TowerField& over);

// dim ker(q_b over k) extended = dim ker(q_b over E)?
bool smoothability_check(const FormData& f, const TowerField& k_level, const TowerField& e_level);

struct FixedGroupReport {
  int d = 0;                // dim(ker n ker^perp)
  int r = 0;                // dim(ker / (ker n ker^perp)), always even
  int symplectic_rank = 0;  // r / 2
  int hom_dim = 0;          // r * d
  int skew_dim = 0;         // d (d + 1) / 2
  int smooth_dim = 0;       // dim Sp_r + hom_dim + skew_dim
  bool exceptional = false; // n even
};
FixedGroupReport fixed_group_report(const FormData& f, const TowerField& over);

struct LieFixedReport {
  int dimension = 0;  // dim { X : X^T M = M X, tr X = 0 }
  bool smooth_verdict = false;
};
LieFixedReport lie_fixed_dimension(const FormData& f, const TowerField& over);

}  // namespace rootfold

#endif
