#include "rootfold/qlinalg.hpp"

namespace rootfold {

namespace {

// Row echelon; returns pivot column per pivot row.
std::vector<int> eliminate(QMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(p, j));
    Rat inv = m.at(r, c);
    for (int j = 0; j < m.cols; ++j) m.at(r, j) /= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<QVec> qsolve(QMatrix a, QVec b) {
  if (int(b.size()) != a.rows) throw Failure("BadInput", "qsolve: size mismatch");
  QMatrix aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  std::vector<int> pivots = eliminate(aug);
  for (std::size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] == a.cols) return std::nullopt;  // inconsistent
  QVec x(a.cols, Rat(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(int(k), a.cols);
  return x;
}

std::vector<QVec> qkernel(QMatrix a) {
  int n = a.cols;
  std::vector<int> pivots = eliminate(a);
  std::vector<char> is_pivot(n, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<QVec> basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    QVec v(n, Rat(0));
    v[c] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a.at(int(k), c);
    basis.push_back(v);
  }
  return basis;
}

int qrank(QMatrix a) { return int(eliminate(a).size()); }

}  // namespace rootfold
