#ifndef ROOTFOLD_QLINALG_HPP
#define ROOTFOLD_QLINALG_HPP

#include <optional>
#include <vector>

#include "rootfold/numeric.hpp"

namespace rootfold {

// Small dense rational matrices; enough for coweights and chamber selection.
struct QMatrix {
  int rows = 0, cols = 0;
  std::vector<Rat> a;
  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, Rat(0)) {}
  Rat& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[std::size_t(i) * cols + j]; }
};

// One solution of A x = b, if any.
std::optional<QVec> qsolve(QMatrix a, QVec b);

// Basis of the null space of A.
std::vector<QVec> qkernel(QMatrix a);

int qrank(QMatrix a);

}  // namespace rootfold

#endif
