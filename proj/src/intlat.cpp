#include "rootfold/intlat.hpp"

#include <algorithm>
#include <cstdlib>

namespace rootfold {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows) {
  IntMatrix m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    if (int(rows[i].size()) != m.cols) throw Failure("BadInput", "ragged rows");
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<Vec>& cols) {
  IntMatrix m(cols.empty() ? 0 : int(cols[0].size()), int(cols.size()));
  for (int j = 0; j < m.cols; ++j) {
    if (int(cols[j].size()) != m.rows) throw Failure("BadInput", "ragged cols");
    for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec IntMatrix::row(int i) const {
  Vec r(cols);
  for (int j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

Vec IntMatrix::col(int j) const {
  Vec c(rows);
  for (int i = 0; i < rows; ++i) c[i] = at(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw Failure("BadInput", "mul: shape mismatch");
  IntMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

Vec mul(const IntMatrix& x, const Vec& v) {
  if (x.cols != int(v.size())) throw Failure("BadInput", "mul: shape mismatch");
  Vec r(x.rows, Int(0));
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r[i] += x.at(i, j) * v[j];
  return r;
}

// Bareiss fraction-free elimination.
Int det(const IntMatrix& m) {
  if (m.rows != m.cols) throw Failure("BadInput", "det: not square");
  int n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

namespace {

struct SmithWork {
  IntMatrix d, u, v;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  // row i -= q * row j
  void row_sub(int i, const Int& q, int j) {
    if (q == 0) return;
    for (int c = 0; c < d.cols; ++c) d.at(i, c) -= q * d.at(j, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(j, c);
  }
  // col i -= q * col j
  void col_sub(int i, const Int& q, int j) {
    if (q == 0) return;
    for (int r = 0; r < d.rows; ++r) d.at(r, i) -= q * d.at(r, j);
    for (int r = 0; r < v.rows; ++r) v.at(r, i) -= q * v.at(r, j);
  }
  void negate_row(int i) {
    for (int c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithWork w;
  w.d = m;
  w.u = IntMatrix::identity(m.rows);
  w.v = IntMatrix::identity(m.cols);
  int t = 0;
  const int lim = std::min(m.rows, m.cols);
  while (t < lim) {
    // pick a pivot of minimal absolute value in the trailing block
    int pi = -1, pj = -1;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j)
        if (w.d.at(i, j) != 0 &&
            (pi < 0 || abs(w.d.at(i, j)) < abs(w.d.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;  // trailing block is zero
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < m.rows; ++i) {
        if (w.d.at(i, t) == 0) continue;
        Int q = w.d.at(i, t) / w.d.at(t, t);
        w.row_sub(i, q, t);
        if (w.d.at(i, t) != 0) {  // remainder smaller than pivot: promote it
          w.swap_rows(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < m.cols; ++j) {
        if (w.d.at(t, j) == 0) continue;
        Int q = w.d.at(t, j) / w.d.at(t, t);
        w.col_sub(j, q, t);
        if (w.d.at(t, j) != 0) {
          w.swap_cols(t, j);
          clean = false;
        }
      }
      if (clean) {
        // enforce divisibility of the trailing block by the pivot
        for (int i = t + 1; i < m.rows && clean; ++i)
          for (int j = t + 1; j < m.cols && clean; ++j)
            if (w.d.at(i, j) % w.d.at(t, t) != 0) {
              w.row_sub(t, Int(-1), i);  // row t += row i
              clean = false;
            }
      }
    }
    if (w.d.at(t, t) < 0) w.negate_row(t);
    ++t;
  }
  return SmithResult{w.u, w.d, w.v};
}

int SmithResult::rank() const {
  int r = 0;
  const int lim = std::min(d.rows, d.cols);
  for (int i = 0; i < lim; ++i)
    if (d.at(i, i) != 0) ++r;
  return r;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows != m.cols) throw Failure("NonUnimodular", "not square");
  SmithResult s = smith_normal_form(m);
  for (int i = 0; i < m.rows; ++i)
    if (s.d.at(i, i) != 1)
      throw Failure("NonUnimodular", "determinant not a unit");
  return mul(s.v, s.u);  // m = u^-1 v^-1, so m^-1 = v u
}

std::vector<Vec> integer_kernel(const IntMatrix& m) {
  SmithResult s = smith_normal_form(m);
  int r = s.rank();
  std::vector<Vec> basis;
  for (int j = r; j < m.cols; ++j) basis.push_back(s.v.col(j));
  return basis;
}

std::optional<Vec> solve_integer(const IntMatrix& m, const Vec& b) {
  if (int(b.size()) != m.rows) throw Failure("BadInput", "solve: size mismatch");
  SmithResult s = smith_normal_form(m);
  Vec ub = mul(s.u, b);
  Vec y(m.cols, Int(0));
  const int lim = std::min(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i) {
    if (i < lim && s.d.at(i, i) != 0) {
      if (ub[i] % s.d.at(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / s.d.at(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return mul(s.v, y);
}

IntMatrix right_inverse(const IntMatrix& p) {
  SmithResult s = smith_normal_form(p);
  for (int i = 0; i < p.rows; ++i)
    if (i >= p.cols || s.d.at(i, i) != 1)
      throw Failure("BadInput", "right_inverse: not surjective");
  IntMatrix e(p.cols, p.rows);
  for (int i = 0; i < p.rows; ++i) e.at(i, i) = 1;
  return mul(s.v, mul(e, s.u));
}

std::vector<Vec> lattice_canonical_basis(const std::vector<Vec>& gens, int ambient_dim) {
  // column-style Hermite form: echelon with positive pivots, entries left of a
  // pivot reduced into [0, pivot)
  IntMatrix h = gens.empty() ? IntMatrix(ambient_dim, 0) : IntMatrix::from_cols(gens);
  if (h.rows != ambient_dim) throw Failure("BadInput", "ambient dimension mismatch");
  int c = 0;
  for (int i = 0; i < h.rows && c < h.cols; ++i) {
    for (;;) {
      int best = -1;
      for (int j = c; j < h.cols; ++j)
        if (h.at(i, j) != 0 && (best < 0 || abs(h.at(i, j)) < abs(h.at(i, best)))) best = j;
      if (best < 0) break;
      for (int r = 0; r < h.rows; ++r) std::swap(h.at(r, c), h.at(r, best));
      bool done = true;
      for (int j = c + 1; j < h.cols; ++j) {
        if (h.at(i, j) == 0) continue;
        Int q = h.at(i, j) / h.at(i, c);
        for (int r = 0; r < h.rows; ++r) h.at(r, j) -= q * h.at(r, c);
        if (h.at(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (h.at(i, c) == 0) continue;
    if (h.at(i, c) < 0)
      for (int r = 0; r < h.rows; ++r) h.at(r, c) = -h.at(r, c);
    for (int j = 0; j < c; ++j) {  // reduce earlier columns at the pivot row
      Int q = h.at(i, j) / h.at(i, c);
      if (h.at(i, j) - q * h.at(i, c) < 0) q -= 1;  // floor division
      for (int r = 0; r < h.rows; ++r) h.at(r, j) -= q * h.at(r, c);
    }
    ++c;
  }
  std::vector<Vec> basis;
  for (int j = 0; j < c; ++j) basis.push_back(h.col(j));
  return basis;
}

bool lattice_contains(const std::vector<Vec>& gens, const Vec& v) {
  if (is_zero(v)) return true;
  if (gens.empty()) return false;
  return solve_integer(IntMatrix::from_cols(gens), v).has_value();
}

bool lattice_equal(const std::vector<Vec>& gens1, const std::vector<Vec>& gens2, int ambient_dim) {
  return lattice_canonical_basis(gens1, ambient_dim) == lattice_canonical_basis(gens2, ambient_dim);
}

static void check_unimodular_generators(int rank, const std::vector<IntMatrix>& generators) {
  for (const IntMatrix& g : generators) {
    if (g.rows != rank || g.cols != rank)
      throw Failure("BadInput", "generator has wrong shape");
    Int dg = det(g);
    if (dg != 1 && dg != -1) throw Failure("NonUnimodular", "generator determinant not a unit");
  }
}

LatticeQuotient coinvariant_quotient(int rank, const std::vector<IntMatrix>& generators) {
  check_unimodular_generators(rank, generators);
  // relation columns x - g x, x ranging over the standard basis
  std::vector<Vec> rels;
  for (const IntMatrix& g : generators)
    for (int j = 0; j < rank; ++j) {
      Vec r(rank);
      for (int i = 0; i < rank; ++i) r[i] = (i == j ? Int(1) : Int(0)) - g.at(i, j);
      if (!is_zero(r)) rels.push_back(r);
    }
  IntMatrix rel = rels.empty() ? IntMatrix(rank, 0) : IntMatrix::from_cols(rels);
  SmithResult s = smith_normal_form(rel);
  int nz = s.rank();
  LatticeQuotient q;
  q.source_rank = rank;
  q.target_rank = rank - nz;
  q.projection = IntMatrix(q.target_rank, rank);
  for (int i = 0; i < q.target_rank; ++i)
    for (int j = 0; j < rank; ++j) q.projection.at(i, j) = s.u.at(nz + i, j);
  for (int i = 0; i < nz; ++i)
    if (s.d.at(i, i) > 1) q.torsion_invariants.push_back(s.d.at(i, i));
  return q;
}

std::vector<Vec> invariant_sublattice(int rank, const std::vector<IntMatrix>& generators) {
  check_unimodular_generators(rank, generators);
  std::vector<Vec> rows;
  for (const IntMatrix& g : generators)
    for (int i = 0; i < rank; ++i) {
      Vec r(rank);
      for (int j = 0; j < rank; ++j) r[j] = g.at(i, j) - (i == j ? 1 : 0);
      rows.push_back(r);
    }
  if (rows.empty()) {
    std::vector<Vec> basis;
    IntMatrix id = IntMatrix::identity(rank);
    for (int j = 0; j < rank; ++j) basis.push_back(id.col(j));
    return basis;
  }
  return integer_kernel(IntMatrix::from_rows(rows));
}

}  // namespace rootfold
