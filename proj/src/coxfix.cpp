#include "rootfold/coxfix.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rootfold {

int CoxeterComplex::compose(int i, int j) const {
  const auto& pi = weyl.elements[i];
  const auto& pj = weyl.elements[j];
  std::vector<int> prod(pi.size());
  for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = pi[pj[k]];
  int idx = weyl.index_of(prod);
  if (idx < 0) throw Failure("InternalAxiomFailure", "Weyl composition escaped the group");
  return idx;
}

int CoxeterComplex::coset_rep(unsigned type, int w) const {
  // walk the coset w W_type along right multiplications
  int m = int(delta.size());
  std::set<int> seen{w};
  std::vector<int> work{w};
  int best = w;
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    if (x < best) best = x;
    for (int k = 0; k < m; ++k) {
      if (!(type & (1u << k))) continue;
      int y = right_table[x][k];
      if (seen.insert(y).second) work.push_back(y);
    }
  }
  return best;
}

std::size_t CoxeterComplex::chamber_count() const {
  std::size_t n = 0;
  for (const Simplex& s : simplices)
    if (s.type == 0) ++n;
  return n;
}

bool CoxeterComplex::is_face(const Simplex& face, const Simplex& of) const {
  if ((face.type & of.type) != of.type) return false;  // face type must contain of's
  return coset_rep(face.type, of.coset) == face.coset;
}

CoxeterComplex build_complex(const RootDatum& d, const SimpleSystem& delta,
                             std::size_t weyl_bound) {
  CoxeterComplex c;
  c.datum = d;
  c.delta = delta;
  c.weyl = weyl_group(d, weyl_bound);
  int m = int(delta.size());
  if (m > 20) throw Failure("GroupTooLarge", "too many simple roots");

  // reflection indices of the simple roots inside the Weyl enumeration
  std::vector<int> refl(m);
  for (int k = 0; k < m; ++k) {
    std::vector<int> perm(d.num_roots());
    for (std::size_t r = 0; r < d.num_roots(); ++r) perm[r] = d.reflect_root(delta[k], int(r));
    refl[k] = c.weyl.index_of(perm);
    if (refl[k] < 0) throw Failure("InternalAxiomFailure", "simple reflection not in Weyl group");
  }

  // right-multiplication transitions w -> w s_k
  c.right_table.assign(c.weyl.order(), std::vector<int>(m));
  for (std::size_t w = 0; w < c.weyl.order(); ++w)
    for (int k = 0; k < m; ++k) c.right_table[w][k] = c.compose(int(w), refl[k]);

  c.parabolic.assign(1u << m, {});
  for (unsigned type = 0; type < (1u << m); ++type) {
    std::set<int> sub{0};
    std::vector<int> work{0};
    while (!work.empty()) {
      int w = work.back();
      work.pop_back();
      for (int k = 0; k < m; ++k) {
        if (!(type & (1u << k))) continue;
        int x = c.right_table[w][k];
        if (sub.insert(x).second) work.push_back(x);
      }
    }
    c.parabolic[type].assign(sub.begin(), sub.end());
  }

  unsigned full = (1u << m) - 1;
  std::vector<char> visited(c.weyl.order());
  for (unsigned type = 0; type < full; ++type) {  // proper subsets only
    std::fill(visited.begin(), visited.end(), 0);
    for (std::size_t w = 0; w < c.weyl.order(); ++w) {
      if (visited[w]) continue;
      // ascending start: w is the minimal element of its coset
      c.simplices.push_back({type, int(w)});
      std::vector<int> work{int(w)};
      visited[w] = 1;
      while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (int k = 0; k < m; ++k) {
          if (!(type & (1u << k))) continue;
          int y = c.right_table[x][k];
          if (!visited[y]) {
            visited[y] = 1;
            work.push_back(y);
          }
        }
      }
    }
  }
  std::sort(c.simplices.begin(), c.simplices.end());
  return c;
}

ComplexAction complex_action(const CoxeterComplex& c, const ActionGroup& g) {
  ComplexAction a;
  a.group = g;
  int m = int(c.delta.size());
  std::map<int, int> pos;
  for (int k = 0; k < m; ++k) pos[c.delta[k]] = k;
  PositiveSystem base = positive_system_of_simple(c.datum, c.delta);
  for (const DatumAutomorphism& el : g.elements) {
    // w_gamma: the Weyl element carrying the base chamber to its image
    PositiveSystem image;
    image.flag.assign(base.flag.size(), 0);
    for (std::size_t r = 0; r < base.flag.size(); ++r)
      if (base.flag[r]) image.flag[el.perm[r]] = 1;
    int shift = -1;
    for (std::size_t w = 0; w < c.weyl.order() && shift < 0; ++w) {
      bool match = true;
      const auto& pw = c.weyl.elements[w];
      for (std::size_t r = 0; r < base.flag.size() && match; ++r)
        if (base.flag[r] && !image.flag[pw[r]]) match = false;
      if (match) shift = int(w);
    }
    if (shift < 0) throw Failure("InternalAxiomFailure", "image chamber not in the Weyl orbit");
    a.chamber_shift.push_back(shift);
    // diagram part: w_gamma^{-1} gamma permutes delta
    const auto& pshift = c.weyl.elements[shift];
    std::vector<int> inv_shift(pshift.size());
    for (std::size_t r = 0; r < pshift.size(); ++r) inv_shift[pshift[r]] = int(r);
    std::vector<int> dperm(m);
    for (int k = 0; k < m; ++k) {
      auto it = pos.find(inv_shift[el.perm[c.delta[k]]]);
      if (it == pos.end())
        throw Failure("InternalAxiomFailure", "diagram part does not permute delta");
      dperm[k] = it->second;
    }
    a.delta_perm.push_back(dperm);
    std::vector<int> conj(c.weyl.order());
    // gamma w gamma^{-1} as a root permutation
    std::vector<int> inv_perm(el.perm.size());
    for (std::size_t r = 0; r < el.perm.size(); ++r) inv_perm[el.perm[r]] = int(r);
    for (std::size_t w = 0; w < c.weyl.order(); ++w) {
      const auto& pw = c.weyl.elements[w];
      std::vector<int> img(pw.size());
      for (std::size_t r = 0; r < pw.size(); ++r) img[r] = el.perm[pw[inv_perm[r]]];
      int idx = c.weyl.index_of(img);
      if (idx < 0) throw Failure("NotStable", "action does not normalize the Weyl group");
      conj[w] = idx;
    }
    a.weyl_conj.push_back(conj);
  }
  return a;
}

CoxeterComplex::Simplex act_on_simplex(const CoxeterComplex& c, const ComplexAction& a, int element,
                                       const CoxeterComplex::Simplex& s) {
  unsigned type = 0;
  int m = int(c.delta.size());
  for (int k = 0; k < m; ++k)
    if (s.type & (1u << k)) type |= 1u << a.delta_perm[element][k];
  int w = c.compose(a.weyl_conj[element][s.coset], a.chamber_shift[element]);
  return {type, c.coset_rep(type, w)};
}

std::vector<CoxeterComplex::Simplex> fixed_subcomplex(const CoxeterComplex& c,
                                                      const ComplexAction& a) {
  std::vector<CoxeterComplex::Simplex> fixed;
  for (const auto& s : c.simplices) {
    bool ok = true;
    for (std::size_t e = 0; e < a.group.order() && ok; ++e)
      if (!(act_on_simplex(c, a, int(e), s) == s)) ok = false;
    if (ok) fixed.push_back(s);
  }
  return fixed;
}

CoxeterCompareReport compare_with_folded(const CoxeterComplex& c, const ComplexAction& a,
                                         const TwoStageResult& t, int p) {
  CoxeterCompareReport rep;

  // centralizer of the action inside W
  std::vector<int> centralizer;
  for (std::size_t w = 0; w < c.weyl.order(); ++w) {
    bool commutes = true;
    for (std::size_t e = 0; e < a.group.order() && commutes; ++e)
      if (a.weyl_conj[e][w] != int(w)) commutes = false;
    if (commutes) centralizer.push_back(int(w));
  }

  std::vector<int> smooth = smooth_root_system(t, p);
  RootDatum smooth_datum = sub_datum(t.total.quotient, smooth);
  // simple system of the smooth datum in the folded chamber
  PositiveSystem spos;
  for (int i : smooth) spos.flag.push_back(t.total.quotient_positive.flag[i]);
  SimpleSystem sdelta = simple_system(smooth_datum, spos);
  CoxeterComplex folded = build_complex(smooth_datum, sdelta);

  rep.fixed_chambers = 0;
  std::vector<CoxeterComplex::Simplex> fixed = fixed_subcomplex(c, a);
  for (const auto& s : fixed)
    if (s.type == 0) ++rep.fixed_chambers;
  rep.fixed_simplices = fixed.size();
  rep.folded_simplices = folded.simplices.size();
  rep.folded_weyl_order = folded.weyl.order();
  rep.weyl_orders_match = centralizer.size() == folded.weyl.order();
  if (!rep.weyl_orders_match) return rep;

  // group homomorphism: centralizer elements descend to the quotient lattice
  // and permute the smooth roots
  const IntMatrix& q = t.total.restriction.projection;
  const IntMatrix& r = t.total.section;
  std::map<int, int> phi;  // centralizer W index -> folded W index
  for (int w : centralizer) {
    IntMatrix mw = c.weyl.matrix(c.datum, w);
    IntMatrix desc = mul(q, mul(mw, r));
    std::vector<int> perm(smooth_datum.num_roots());
    bool ok = true;
    for (std::size_t i = 0; i < smooth_datum.num_roots() && ok; ++i) {
      int img = smooth_datum.index_of(mul(desc, smooth_datum.roots[i]));
      if (img < 0) ok = false;
      else perm[i] = img;
    }
    if (!ok) return rep;
    int idx = folded.weyl.index_of(perm);
    if (idx < 0) return rep;
    phi[w] = idx;
  }
  {
    std::set<int> image;
    for (auto& [w, x] : phi) image.insert(x);
    if (image.size() != folded.weyl.order()) return rep;  // not an isomorphism
  }

  // sigma-stable types J correspond to folded types: the image of W_J's
  // centralizer part must be a standard folded parabolic
  std::map<unsigned, unsigned> type_map;
  rep.parabolic_types_match = true;
  int m = int(c.delta.size());
  std::set<int> cent_set(centralizer.begin(), centralizer.end());
  for (unsigned type = 0; type < (1u << m) - 1; ++type) {
    bool stable = true;
    for (std::size_t e = 0; e < a.group.order() && stable; ++e) {
      unsigned img = 0;
      for (int k = 0; k < m; ++k)
        if (type & (1u << k)) img |= 1u << a.delta_perm[e][k];
      if (img != type) stable = false;
    }
    if (!stable) continue;
    std::set<int> folded_sub;
    for (int u : c.parabolic[type])
      if (cent_set.count(u)) folded_sub.insert(phi[u]);
    unsigned target = 0;
    int mf = int(folded.delta.size());
    for (int k = 0; k < mf; ++k) {
      // reflection of folded node k
      std::vector<int> perm(smooth_datum.num_roots());
      for (std::size_t rr = 0; rr < smooth_datum.num_roots(); ++rr)
        perm[rr] = smooth_datum.reflect_root(folded.delta[k], int(rr));
      int idx = folded.weyl.index_of(perm);
      if (folded_sub.count(idx)) target |= 1u << k;
    }
    if (std::set<int>(folded.parabolic[target].begin(), folded.parabolic[target].end()) !=
        folded_sub) {
      rep.parabolic_types_match = false;
      return rep;
    }
    type_map[type] = target;
  }

  // explicit bijection: fixed simplex -> folded simplex through a commuting
  // coset representative
  std::set<CoxeterComplex::Simplex> image;
  for (const auto& s : fixed) {
    int witness = -1;
    for (int u : c.parabolic[s.type]) {
      int x = c.compose(s.coset, u);
      if (cent_set.count(x)) {
        witness = x;
        break;
      }
    }
    if (witness < 0) return rep;  // no commuting representative: bijection fails
    auto it = type_map.find(s.type);
    if (it == type_map.end()) return rep;
    CoxeterComplex::Simplex img{it->second, folded.coset_rep(it->second, phi[witness])};
    if (!image.insert(img).second) return rep;  // not injective
  }
  if (image.size() != folded.simplices.size()) return rep;  // not surjective

  // face preservation, checked on the bijection pairs exhaustively
  std::map<CoxeterComplex::Simplex, CoxeterComplex::Simplex> bij;
  for (const auto& s : fixed) {
    int witness = -1;
    for (int u : c.parabolic[s.type]) {
      int x = c.compose(s.coset, u);
      if (cent_set.count(x)) {
        witness = x;
        break;
      }
    }
    bij[s] = {type_map[s.type], folded.coset_rep(type_map[s.type], phi[witness])};
  }
  for (const auto& [s1, f1] : bij)
    for (const auto& [s2, f2] : bij)
      if (c.is_face(s1, s2) != folded.is_face(f1, f2)) return rep;

  rep.bijection_found = true;
  rep.ok = rep.weyl_orders_match && rep.parabolic_types_match && rep.bijection_found;
  return rep;
}

}  // namespace rootfold
