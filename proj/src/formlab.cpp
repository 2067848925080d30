#include "rootfold/formlab.hpp"

#include <algorithm>
#include <map>

namespace rootfold {

using gf2::Fraction;
using gf2::Poly;

TowerField TowerField::rational(const std::vector<std::string>& names) {
  TowerField t;
  t.gen_names = names;
  t.sqrt_adjoined.assign(names.size(), 0);
  return t;
}

TowerField TowerField::with_sqrt(const std::string& gen) const {
  TowerField t = *this;
  for (std::size_t i = 0; i < gen_names.size(); ++i)
    if (gen_names[i] == gen) {
      t.sqrt_adjoined[i] = 1;
      return t;
    }
  throw Failure("BadInput", "unknown generator: " + gen);
}

bool TowerField::extends(const TowerField& base) const {
  if (gen_names != base.gen_names) return false;
  for (std::size_t i = 0; i < sqrt_adjoined.size(); ++i)
    if (base.sqrt_adjoined[i] && !sqrt_adjoined[i]) return false;
  return true;
}

std::vector<std::string> TowerField::display_names() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < gen_names.size(); ++i)
    out.push_back(sqrt_adjoined[i] ? "sqrt(" + gen_names[i] + ")" : gen_names[i]);
  return out;
}

gf2::Fraction embed(const gf2::Fraction& x, const TowerField& from, const TowerField& to) {
  if (!to.extends(from)) throw Failure("BadInput", "target level does not extend the source");
  std::vector<char> which(from.num_gens(), 0);
  for (int i = 0; i < from.num_gens(); ++i)
    which[i] = to.sqrt_adjoined[i] && !from.sqrt_adjoined[i];
  return substitute_square(x, which);
}

namespace {

int nvars_of(const TowerField& t) { return t.num_gens(); }

// Gaussian elimination over the fraction field; returns pivot columns.
std::vector<int> eliminate(FMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Fraction lead = m[r][c];
    for (std::size_t j = 0; j < cols; ++j) m[r][j] = gf2::div(m[r][j], lead);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Fraction f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        m[i][j] = gf2::add(m[i][j], gf2::mul(f, m[r][j]));
    }
    pivots.push_back(int(c));
    ++r;
  }
  return pivots;
}

std::vector<FVec> kernel_basis(FMat m, int nvars) {
  if (m.empty()) return {};
  std::size_t cols = m[0].size();
  std::vector<int> pivots = eliminate(m);
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<FVec> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    FVec v(cols, Fraction::zero(nvars));
    v[c] = Fraction::one(nvars);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = m[k][c];  // char 2: -x = x
    basis.push_back(v);
  }
  return basis;
}

int rank_of(FMat m) { return int(eliminate(m).size()); }

FMat matmul(const FMat& a, const FMat& b, int nvars) {
  FMat r(a.size(), FVec(b[0].size(), Fraction::zero(nvars)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j)
        r[i][j] = gf2::add(r[i][j], gf2::mul(a[i][k], b[k][j]));
    }
  return r;
}

FMat invert(const FMat& m, int nvars) {
  std::size_t n = m.size();
  FMat aug(n, FVec(2 * n, Fraction::zero(nvars)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = Fraction::one(nvars);
  }
  std::vector<int> pivots = eliminate(aug);
  if (pivots.size() != n || std::size_t(pivots.back()) != n - 1)
    throw Failure("NotInvolution", "matrix is not invertible");
  FMat inv(n, FVec(n, Fraction::zero(nvars)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace

FormData gram_from_involution(const TowerField& k, const FMat& c) {
  std::size_t n = c.size();
  for (const FVec& row : c)
    if (row.size() != n) throw Failure("BadInput", "gram matrix not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(c[i][j] == c[j][i]))
        throw Failure("NotInvolution", "conjugating matrix is not symmetric");
  FormData f;
  f.field = k;
  f.dimension = int(n);
  f.gram = invert(c, nvars_of(k));
  f.provenance = c;
  return f;
}

std::vector<FVec> qb_kernel(const FormData& f, const TowerField& over) {
  if (!over.extends(f.field)) throw Failure("BadInput", "level does not extend the form's field");
  int nv = nvars_of(over);
  int n = f.dimension;
  // diagonal entries at the requested level
  std::vector<Fraction> diag;
  for (int i = 0; i < n; ++i) diag.push_back(embed(f.gram[i][i], f.field, over));

  // decompose over the basis of E over E^2 indexed by parity patterns and
  // solve the linear system on y_i = x_i^2
  std::map<std::vector<int>, FVec> rows;  // parity pattern -> coefficients in E^2
  for (int i = 0; i < n; ++i) {
    const Fraction& d = diag[i];
    Poly nd = gf2::mul(d.num, d.den);
    Poly d2 = gf2::mul(d.den, d.den);
    std::map<std::vector<int>, Poly> parts;  // parity -> even-exponent polynomial
    for (auto m : nd.monos) {
      std::vector<int> parity(nv);
      for (int v = 0; v < nv; ++v) {
        parity[v] = m[v] % 2;
        m[v] -= parity[v];
      }
      auto [it, fresh] = parts.try_emplace(parity, Poly::zero(nv));
      it->second.monos.insert(m);
    }
    for (const auto& [parity, poly] : parts) {
      auto [it, fresh] = rows.try_emplace(parity, FVec(n, Fraction::zero(nv)));
      it->second[i] = Fraction::make(poly, d2);
    }
  }
  FMat system;
  for (auto& [parity, row] : rows) system.push_back(row);
  std::vector<FVec> ker2 =
      system.empty() ? [&] {
        std::vector<FVec> full;
        for (int i = 0; i < n; ++i) {
          FVec e(n, Fraction::zero(nv));
          e[i] = Fraction::one(nv);
          full.push_back(e);
        }
        return full;
      }()
                     : kernel_basis(system, nv);
  // solutions in x are the componentwise square roots
  std::vector<FVec> out;
  for (const FVec& y : ker2) {
    FVec x;
    for (const Fraction& c : y) {
      auto s = gf2::sqrt(c);
      if (!s) throw Failure("InternalAxiomFailure", "kernel solution not a square");
      x.push_back(*s);
    }
    out.push_back(x);
  }
  return out;
}

std::vector<FVec> orthogonal_complement(const FormData& f, const std::vector<FVec>& subspace,
                                        const TowerField& over) {
  if (!over.extends(f.field)) throw Failure("BadInput", "level does not extend the form's field");
  int nv = nvars_of(over);
  int n = f.dimension;
  if (subspace.empty()) {
    std::vector<FVec> full;
    for (int i = 0; i < n; ++i) {
      FVec e(n, Fraction::zero(nv));
      e[i] = Fraction::one(nv);
      full.push_back(e);
    }
    return full;
  }
  FMat gram(n, FVec(n, Fraction::zero(nv)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = embed(f.gram[i][j], f.field, over);
  FMat rows;
  for (const FVec& s : subspace) {
    FVec row(n, Fraction::zero(nv));
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) row[j] = gf2::add(row[j], gf2::mul(gram[j][k], s[k]));
    rows.push_back(row);  // b(x, s) = sum_j x_j (M s)_j
  }
  return kernel_basis(rows, nv);
}

bool smoothability_check(const FormData& f, const TowerField& k_level, const TowerField& e_level) {
  if (!e_level.extends(k_level)) throw Failure("BadInput", "E does not extend k");
  return qb_kernel(f, k_level).size() == qb_kernel(f, e_level).size();
}

FixedGroupReport fixed_group_report(const FormData& f, const TowerField& over) {
  int nv = nvars_of(over);
  std::vector<FVec> ker = qb_kernel(f, over);
  std::vector<FVec> kerp = orthogonal_complement(f, ker, over);
  // intersection: kernel of [K | P] on coefficient pairs, read off K-part
  int inter;
  if (ker.empty() || kerp.empty()) {
    inter = 0;
  } else {
    FMat stacked(f.dimension, FVec(ker.size() + kerp.size(), Fraction::zero(nv)));
    for (std::size_t j = 0; j < ker.size(); ++j)
      for (int i = 0; i < f.dimension; ++i) stacked[i][j] = ker[j][i];
    for (std::size_t j = 0; j < kerp.size(); ++j)
      for (int i = 0; i < f.dimension; ++i) stacked[i][ker.size() + j] = kerp[j][i];
    inter = int(kernel_basis(stacked, nv).size());
  }
  FixedGroupReport rep;
  rep.d = inter;
  rep.r = int(ker.size()) - inter;
  if (rep.r % 2 != 0)
    throw Failure("OddDimensionParity", "ker(q_b) mod radical has odd dimension");
  rep.symplectic_rank = rep.r / 2;
  rep.hom_dim = rep.r * rep.d;
  rep.skew_dim = rep.d * (rep.d + 1) / 2;
  rep.smooth_dim = rep.r * (rep.r + 1) / 2 + rep.hom_dim + rep.skew_dim;
  rep.exceptional = (f.dimension - 1) % 2 == 0;
  return rep;
}

LieFixedReport lie_fixed_dimension(const FormData& f, const TowerField& over) {
  int nv = nvars_of(over);
  int n = f.dimension;
  FMat gram(n, FVec(n, Fraction::zero(nv)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = embed(f.gram[i][j], f.field, over);
  // unknowns X_{ab}, equations (X^T M)_{ij} = (M X)_{ij} and tr X = 0
  FMat rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      FVec row(std::size_t(n) * n, Fraction::zero(nv));
      for (int k = 0; k < n; ++k) {
        // (X^T M)_{ij} = sum_k X_{ki} M_{kj}
        row[std::size_t(k) * n + i] = gf2::add(row[std::size_t(k) * n + i], gram[k][j]);
        // (M X)_{ij} = sum_k M_{ik} X_{kj}
        row[std::size_t(k) * n + j] = gf2::add(row[std::size_t(k) * n + j], gram[i][k]);
      }
      rows.push_back(row);
    }
  FVec trace(std::size_t(n) * n, Fraction::zero(nv));
  for (int i = 0; i < n; ++i) trace[std::size_t(i) * n + i] = Fraction::one(nv);
  rows.push_back(trace);
  LieFixedReport rep;
  rep.dimension = int(kernel_basis(rows, nv).size());
  rep.smooth_verdict = rep.dimension == fixed_group_report(f, over).smooth_dim;
  return rep;
}

}  // namespace rootfold
