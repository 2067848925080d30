#ifndef ROOTFOLD_INTLAT_HPP
#define ROOTFOLD_INTLAT_HPP

#include <optional>
#include <vector>

#include "rootfold/numeric.hpp"

namespace rootfold {

// Dense integer matrix, row-major, arbitrary-precision entries.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, Int(0)) {}

  Int& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[std::size_t(i) * cols + j]; }

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<Vec>& rows);
  static IntMatrix from_cols(const std::vector<Vec>& cols);

  Vec row(int i) const;
  Vec col(int j) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

IntMatrix mul(const IntMatrix& x, const IntMatrix& y);
Vec mul(const IntMatrix& x, const Vec& v);
Int det(const IntMatrix& m);

// Inverse of a matrix with determinant +-1.  Throws NonUnimodular otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

// U*M*V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithResult {
  IntMatrix u, d, v;
  int rank() const;  // number of nonzero diagonal entries
};
SmithResult smith_normal_form(const IntMatrix& m);

// Basis of {x : M x = 0} over the integers; saturated by construction.
std::vector<Vec> integer_kernel(const IntMatrix& m);

// Solves M x = b over the integers.
std::optional<Vec> solve_integer(const IntMatrix& m, const Vec& b);

// Integer right inverse of a surjection onto Z^rows (all invariant factors 1).
IntMatrix right_inverse(const IntMatrix& p);

// Canonical basis (column Hermite form) of the lattice spanned by `gens`.
std::vector<Vec> lattice_canonical_basis(const std::vector<Vec>& gens, int ambient_dim);
bool lattice_contains(const std::vector<Vec>& gens, const Vec& v);
bool lattice_equal(const std::vector<Vec>& gens1, const std::vector<Vec>& gens2, int ambient_dim);

// Z^source_rank --> Z^target_rank, kernel recorded through its torsion.
struct LatticeQuotient {
  int source_rank = 0;
  int target_rank = 0;
  IntMatrix projection;              // target_rank x source_rank, surjective
  std::vector<Int> torsion_invariants;  // invariant factors > 1 of the raw quotient
};

// Quotient of Z^rank by the subgroup generated by {x - g x}, then by torsion.
LatticeQuotient coinvariant_quotient(int rank, const std::vector<IntMatrix>& generators);

// Saturated basis of {v : g v = v for all generators}.
std::vector<Vec> invariant_sublattice(int rank, const std::vector<IntMatrix>& generators);

}  // namespace rootfold

#endif
