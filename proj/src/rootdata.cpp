#include "rootfold/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "rootfold/qlinalg.hpp"

namespace rootfold {

void RootDatum::rebuild_index() {
  index_.clear();
  for (std::size_t i = 0; i < roots.size(); ++i) index_[roots[i]] = int(i);
}

int RootDatum::index_of(const Vec& r) const {
  if (index_.size() != roots.size()) {
    index_.clear();
    for (std::size_t i = 0; i < roots.size(); ++i) index_[roots[i]] = int(i);
  }
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

int RootDatum::reflect_root(int i, int j) const {
  Vec img = vec_sub(roots[j], vec_scale(dot(roots[j], coroots[i]), roots[i]));
  return index_of(img);
}

IntMatrix RootDatum::reflection_matrix(int i) const {
  IntMatrix m = IntMatrix::identity(rank);
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < rank; ++c) m.at(r, c) -= roots[i][r] * coroots[i][c];
  return m;
}

IntMatrix RootDatum::dual_reflection_matrix(int i) const {
  IntMatrix m = IntMatrix::identity(rank);
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < rank; ++c) m.at(r, c) -= coroots[i][r] * roots[i][c];
  return m;
}

bool RootDatum::is_divisible(int i) const {
  Vec half(rank);
  for (int c = 0; c < rank; ++c) {
    if (roots[i][c] % 2 != 0) return false;
    half[c] = roots[i][c] / 2;
  }
  return has_root(half);
}

ValidationReport validate(const RootDatum& d) {
  ValidationReport rep;
  auto fail = [&rep](const std::string& s) {
    rep.ok = false;
    rep.violations.push_back(s);
  };
  if (d.roots.size() != d.coroots.size()) {
    fail("root and coroot lists have different lengths");
    return rep;
  }
  std::set<Vec> seen;
  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    if (int(d.roots[i].size()) != d.rank || int(d.coroots[i].size()) != d.rank) {
      fail("vector length differs from rank at index " + std::to_string(i));
      return rep;
    }
    if (is_zero(d.roots[i])) fail("zero root at index " + std::to_string(i));
    if (!seen.insert(d.roots[i]).second) fail("duplicate root at index " + std::to_string(i));
  }
  if (!rep.ok) return rep;
  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    if (dot(d.roots[i], d.coroots[i]) != 2)
      fail("<a, a^vee> != 2 at index " + std::to_string(i));
    int ni = d.index_of(vec_neg(d.roots[i]));
    if (ni < 0)
      fail("root list not closed under negation at index " + std::to_string(i));
    else if (d.coroots[ni] != vec_neg(d.coroots[i]))
      fail("coroot of -a is not -a^vee at index " + std::to_string(i));
  }
  if (!rep.ok) return rep;
  for (std::size_t i = 0; i < d.roots.size(); ++i)
    for (std::size_t j = 0; j < d.roots.size(); ++j) {
      int k = d.reflect_root(int(i), int(j));
      if (k < 0) {
        fail("reflection s_" + std::to_string(i) + " takes root " + std::to_string(j) +
             " outside the root list");
        continue;
      }
      Vec dual_img = vec_sub(d.coroots[j], vec_scale(dot(d.roots[i], d.coroots[j]), d.coroots[i]));
      if (d.coroots[k] != dual_img)
        fail("dual reflection mismatch at pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return rep;
}

PositiveSystem positive_system_from_regular(const RootDatum& d, const Vec& v) {
  PositiveSystem p;
  p.flag.assign(d.num_roots(), 0);
  for (std::size_t i = 0; i < d.num_roots(); ++i) {
    Int s = dot(d.roots[i], v);
    if (s == 0)
      throw Failure("NotRegular", "vector vanishes on root " + std::to_string(i));
    p.flag[i] = s > 0;
  }
  return p;
}

PositiveSystem positive_system_from_regular(const RootDatum& d, const QVec& v) {
  PositiveSystem p;
  p.flag.assign(d.num_roots(), 0);
  for (std::size_t i = 0; i < d.num_roots(); ++i) {
    Rat s = qdot(d.roots[i], v);
    if (s == 0)
      throw Failure("NotRegular", "vector vanishes on root " + std::to_string(i));
    p.flag[i] = s > 0;
  }
  return p;
}

PositiveSystem canonical_positive_system(const RootDatum& d) {
  for (Int t = 1;; ++t) {
    Vec v(d.rank);
    Int pw = 1;
    for (int i = 0; i < d.rank; ++i) {
      v[i] = pw;
      pw *= t;
    }
    bool regular = true;
    for (const Vec& a : d.roots)
      if (dot(a, v) == 0) {
        regular = false;
        break;
      }
    if (regular) return positive_system_from_regular(d, v);
  }
}

std::optional<Vec> regular_witness(const RootDatum& d, const PositiveSystem& p) {
  if (p.flag.size() != d.num_roots()) return std::nullopt;
  for (std::size_t i = 0; i < d.num_roots(); ++i) {
    int ni = d.index_of(vec_neg(d.roots[i]));
    if (ni < 0 || p.flag[i] == p.flag[ni]) return std::nullopt;
  }
  Vec v(d.rank, Int(0));
  for (std::size_t i = 0; i < d.num_roots(); ++i)
    if (p.flag[i]) v = vec_add(v, d.coroots[i]);
  for (std::size_t i = 0; i < d.num_roots(); ++i)
    if (p.flag[i] && dot(d.roots[i], v) <= 0) return std::nullopt;
  return v;
}

SimpleSystem simple_system(const RootDatum& d, const PositiveSystem& p) {
  SimpleSystem delta;
  for (std::size_t i = 0; i < d.num_roots(); ++i) {
    if (!p.flag[i]) continue;
    bool decomposable = false;
    for (std::size_t j = 0; j < d.num_roots() && !decomposable; ++j) {
      if (!p.flag[j]) continue;
      for (std::size_t k = j; k < d.num_roots(); ++k) {
        if (!p.flag[k]) continue;
        if (vec_add(d.roots[j], d.roots[k]) == d.roots[i]) {
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) delta.push_back(int(i));
  }
  return delta;
}

PositiveSystem positive_system_of_simple(const RootDatum& d, const SimpleSystem& delta) {
  QMatrix sys(int(delta.size()), d.rank);
  QVec rhs(delta.size(), Rat(1));
  for (std::size_t r = 0; r < delta.size(); ++r)
    for (int c = 0; c < d.rank; ++c) sys.at(int(r), c) = Rat(d.roots[delta[r]][c]);
  auto v = qsolve(sys, rhs);
  if (!v) throw Failure("BadInput", "delta is not linearly independent");
  PositiveSystem p;
  try {
    p = positive_system_from_regular(d, *v);
  } catch (const Failure&) {
    throw Failure("BadInput", "delta does not span a positive system");
  }
  SimpleSystem check = simple_system(d, p);
  if (std::set<int>(check.begin(), check.end()) != std::set<int>(delta.begin(), delta.end()))
    throw Failure("BadInput", "delta is not a simple system");
  return p;
}

WeylGroup weyl_group(const RootDatum& d, std::size_t bound) {
  WeylGroup w;
  int n = int(d.num_roots());
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  if (n == 0) {
    w.elements.push_back(id);
    w.words.push_back({});
    return w;
  }
  PositiveSystem p = canonical_positive_system(d);
  w.gens = simple_system(d, p);
  std::vector<std::vector<int>> gen_perms;
  for (int g : w.gens) {
    std::vector<int> perm(n);
    for (int j = 0; j < n; ++j) {
      perm[j] = d.reflect_root(g, j);
      if (perm[j] < 0) throw Failure("BadInput", "reflection not closed; invalid datum");
    }
    gen_perms.push_back(perm);
  }
  std::map<std::vector<int>, int> seen;
  w.elements.push_back(id);
  w.words.push_back({});
  seen[id] = 0;
  for (std::size_t head = 0; head < w.elements.size(); ++head) {
    for (std::size_t gi = 0; gi < gen_perms.size(); ++gi) {
      std::vector<int> next(n);
      for (int j = 0; j < n; ++j) next[j] = gen_perms[gi][w.elements[head][j]];
      if (seen.emplace(next, int(w.elements.size())).second) {
        if (w.elements.size() >= bound)
          throw Failure("GroupTooLarge", "Weyl closure exceeds bound");
        std::vector<int> word = w.words[head];
        word.insert(word.begin(), int(gi));
        w.elements.push_back(std::move(next));
        w.words.push_back(std::move(word));
      }
    }
  }
  return w;
}

int WeylGroup::index_of(const std::vector<int>& perm) const {
  if (index_.size() != elements.size()) {
    index_.clear();
    for (std::size_t i = 0; i < elements.size(); ++i) index_[elements[i]] = int(i);
  }
  auto it = index_.find(perm);
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::vector<int>> WeylGroup::table(std::size_t bound) const {
  if (order() > bound) throw Failure("GroupTooLarge", "multiplication table too large");
  std::vector<std::vector<int>> t(order(), std::vector<int>(order()));
  for (std::size_t i = 0; i < order(); ++i)
    for (std::size_t j = 0; j < order(); ++j) {
      std::vector<int> prod(elements[i].size());
      for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = elements[i][elements[j][k]];
      int idx = index_of(prod);
      if (idx < 0) throw Failure("InternalAxiomFailure", "group not closed");
      t[i][j] = idx;
    }
  return t;
}

IntMatrix WeylGroup::matrix(const RootDatum& d, int element) const {
  IntMatrix m = IntMatrix::identity(d.rank);
  for (int gi : words[element]) m = mul(m, d.reflection_matrix(gens[gi]));
  return m;
}

std::vector<PositiveSystem> all_positive_systems(const RootDatum& d, std::size_t weyl_bound) {
  WeylGroup w = weyl_group(d, weyl_bound);
  PositiveSystem seed = canonical_positive_system(d);
  std::set<PositiveSystem> out;
  for (const std::vector<int>& perm : w.elements) {
    PositiveSystem q;
    q.flag.assign(d.num_roots(), 0);
    for (std::size_t i = 0; i < d.num_roots(); ++i)
      if (seed.flag[i]) q.flag[perm[i]] = 1;
    out.insert(q);
  }
  return std::vector<PositiveSystem>(out.begin(), out.end());
}

std::vector<PositiveSystem> positive_systems_brute_force(const RootDatum& d) {
  // one representative index per {a, -a} pair
  std::vector<int> reps;
  std::vector<int> neg(d.num_roots());
  for (std::size_t i = 0; i < d.num_roots(); ++i) {
    neg[i] = d.index_of(vec_neg(d.roots[i]));
    if (neg[i] < 0) throw Failure("BadInput", "not closed under negation");
    if (int(i) < neg[i]) reps.push_back(int(i));
  }
  if (reps.size() > 20) throw Failure("GroupTooLarge", "too many roots for brute force");
  std::vector<PositiveSystem> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << reps.size()); ++mask) {
    PositiveSystem p;
    p.flag.assign(d.num_roots(), 0);
    for (std::size_t k = 0; k < reps.size(); ++k) {
      int idx = (mask >> k) & 1 ? reps[k] : neg[reps[k]];
      p.flag[idx] = 1;
    }
    bool closed = true;
    for (std::size_t i = 0; i < d.num_roots() && closed; ++i) {
      if (!p.flag[i]) continue;
      for (std::size_t j = i; j < d.num_roots() && closed; ++j) {
        if (!p.flag[j]) continue;
        int k = d.index_of(vec_add(d.roots[i], d.roots[j]));
        if (k >= 0 && !p.flag[k]) closed = false;
      }
    }
    if (closed) out.push_back(p);
  }
  return out;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
  }
  return "?";
}

std::string TypeLabel::str() const {
  if (parts.empty()) return "torus";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << "+";
    os << family_name(parts[i].first) << parts[i].second;
  }
  return os.str();
}

IntMatrix standard_cartan(Family f, int n) {
  auto path = [](int m) {
    IntMatrix c = IntMatrix::identity(m);
    for (int i = 0; i < m; ++i) c.at(i, i) = 2;
    for (int i = 0; i + 1 < m; ++i) {
      c.at(i, i + 1) = -1;
      c.at(i + 1, i) = -1;
    }
    return c;
  };
  switch (f) {
    case Family::A:
      if (n < 1) throw Failure("UnknownType", "A rank");
      return path(n);
    case Family::B:
    case Family::BC: {
      if (n < 1) throw Failure("UnknownType", "B/BC rank");
      if (n == 1) return path(1);
      IntMatrix c = path(n);
      c.at(n - 2, n - 1) = -2;
      return c;
    }
    case Family::C: {
      if (n < 2) throw Failure("UnknownType", "C rank");
      IntMatrix c = path(n);
      c.at(n - 1, n - 2) = -2;
      return c;
    }
    case Family::D: {
      if (n < 3) throw Failure("UnknownType", "D rank");
      IntMatrix c = path(n - 1);
      IntMatrix full = IntMatrix::identity(n);
      for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) full.at(i, j) = c.at(i, j);
      full.at(n - 1, n - 1) = 2;
      full.at(n - 3, n - 1) = -1;
      full.at(n - 1, n - 3) = -1;
      return full;
    }
    case Family::E: {
      if (n < 6 || n > 8) throw Failure("UnknownType", "E rank");
      IntMatrix full = IntMatrix::identity(n);
      for (int i = 0; i < n; ++i) full.at(i, i) = 2;
      auto link = [&full](int i, int j) {
        full.at(i, j) = -1;
        full.at(j, i) = -1;
      };
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      return full;
    }
    case Family::F: {
      if (n != 4) throw Failure("UnknownType", "F rank");
      IntMatrix c = path(4);
      c.at(1, 2) = -2;
      return c;
    }
    case Family::G: {
      if (n != 2) throw Failure("UnknownType", "G rank");
      IntMatrix c = path(2);
      c.at(1, 0) = -3;
      return c;
    }
  }
  throw Failure("UnknownType", "unhandled family");
}

namespace {

// Closes (root, coroot) pairs of the simple system under simple reflections.
RootDatum datum_from_cartan(const IntMatrix& cartan) {
  int n = cartan.rows;
  RootDatum d;
  d.rank = n;
  std::vector<Vec> simples, cosimples;
  for (int i = 0; i < n; ++i) {
    Vec a(n, Int(0)), av(n);
    a[i] = 1;
    for (int r = 0; r < n; ++r) av[r] = cartan.at(r, i);
    simples.push_back(a);
    cosimples.push_back(av);
  }
  std::map<Vec, Vec> found;
  std::vector<Vec> work = simples;
  for (int i = 0; i < n; ++i) found[simples[i]] = cosimples[i];
  while (!work.empty()) {
    Vec a = work.back();
    work.pop_back();
    Vec av = found[a];
    for (int i = 0; i < n; ++i) {
      Vec b = vec_sub(a, vec_scale(dot(a, cosimples[i]), simples[i]));
      Vec bv = vec_sub(av, vec_scale(dot(simples[i], av), cosimples[i]));
      auto it = found.find(b);
      if (it == found.end()) {
        found[b] = bv;
        work.push_back(b);
      } else if (it->second != bv) {
        throw Failure("InternalAxiomFailure", "inconsistent coroot closure");
      }
    }
    Vec na = vec_neg(a), nav = vec_neg(av);
    if (!found.count(na)) {
      found[na] = nav;
      work.push_back(na);
    }
  }
  for (const auto& [a, av] : found) {
    d.roots.push_back(a);
    d.coroots.push_back(av);
  }
  d.rebuild_index();
  return d;
}

RootDatum make_bc(int n) {
  RootDatum d;
  d.rank = n;
  auto add = [&d](const Vec& a, const Vec& av) {
    d.roots.push_back(a);
    d.coroots.push_back(av);
    d.roots.push_back(vec_neg(a));
    d.coroots.push_back(vec_neg(av));
  };
  auto e = [n](int i) {
    Vec v(n, Int(0));
    v[i] = 1;
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      add(vec_sub(e(i), e(j)), vec_sub(e(i), e(j)));
      add(vec_add(e(i), e(j)), vec_add(e(i), e(j)));
    }
  for (int i = 0; i < n; ++i) {
    add(e(i), vec_scale(2, e(i)));
    add(vec_scale(2, e(i)), e(i));
  }
  d.rebuild_index();
  return d;
}

RootDatum direct_sum(const RootDatum& x, const RootDatum& y) {
  RootDatum d;
  d.rank = x.rank + y.rank;
  auto pad = [&d](const Vec& v, int offset) {
    Vec w(d.rank, Int(0));
    for (std::size_t i = 0; i < v.size(); ++i) w[offset + i] = v[i];
    return w;
  };
  for (std::size_t i = 0; i < x.num_roots(); ++i) {
    d.roots.push_back(pad(x.roots[i], 0));
    d.coroots.push_back(pad(x.coroots[i], 0));
  }
  for (std::size_t i = 0; i < y.num_roots(); ++i) {
    d.roots.push_back(pad(y.roots[i], x.rank));
    d.coroots.push_back(pad(y.coroots[i], x.rank));
  }
  d.rebuild_index();
  return d;
}

RootDatum make_simple_named(const std::string& s) {
  if (s.size() < 2) throw Failure("UnknownType", "bad type string: " + s);
  Family f;
  std::size_t pos = 1;
  switch (s[0]) {
    case 'A': f = Family::A; break;
    case 'B':
      if (s[1] == 'C') {
        f = Family::BC;
        pos = 2;
      } else {
        f = Family::B;
      }
      break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    case 'F': f = Family::F; break;
    case 'G': f = Family::G; break;
    default: throw Failure("UnknownType", "bad type string: " + s);
  }
  int n = std::stoi(s.substr(pos));
  if (f == Family::BC) return make_bc(n);
  return datum_from_cartan(standard_cartan(f, n));
}

}  // namespace

RootDatum make_named(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == '+' || c == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  RootDatum d = make_simple_named(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) d = direct_sum(d, make_simple_named(parts[i]));
  return d;
}

namespace {

// All Cartan-preserving bijections candidate -> ours, by backtracking.
void match_perms(const IntMatrix& cand, const IntMatrix& ours, std::vector<int>& assign,
                 std::vector<char>& used, std::vector<std::vector<int>>& out) {
  int n = cand.rows;
  int i = int(std::count_if(assign.begin(), assign.end(), [](int x) { return x >= 0; }));
  if (i == n) {
    out.push_back(assign);
    return;
  }
  for (int j = 0; j < n; ++j) {
    if (used[j]) continue;
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      if (assign[k] < 0) continue;
      if (cand.at(k, i) != ours.at(assign[k], j) || cand.at(i, k) != ours.at(j, assign[k]))
        ok = false;
    }
    if (cand.at(i, i) != ours.at(j, j)) ok = false;
    if (!ok) continue;
    assign[i] = j;
    used[j] = 1;
    match_perms(cand, ours, assign, used, out);
    assign[i] = -1;
    used[j] = 0;
  }
}

std::vector<std::vector<int>> cartan_matchings(const IntMatrix& cand, const IntMatrix& ours) {
  std::vector<int> assign(cand.rows, -1);
  std::vector<char> used(cand.rows, 0);
  std::vector<std::vector<int>> out;
  match_perms(cand, ours, assign, used, out);
  return out;
}

}  // namespace

std::vector<Component> irreducible_components(const RootDatum& d) {
  int n = int(d.num_roots());
  std::vector<int> comp_of(n, -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp_of[i] >= 0) continue;
    std::vector<int> stack{i};
    comp_of[i] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y)
        if (comp_of[y] < 0 && dot(d.roots[x], d.coroots[y]) != 0) {
          comp_of[y] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }
  PositiveSystem pos = canonical_positive_system(d);
  SimpleSystem delta = simple_system(d, pos);
  std::vector<Component> comps(ncomp);
  for (int i = 0; i < n; ++i) comps[comp_of[i]].root_indices.push_back(i);

  for (Component& c : comps) {
    SimpleSystem local;
    for (int s : delta)
      if (comp_of[s] == comp_of[c.root_indices[0]]) local.push_back(s);
    int m = int(local.size());
    IntMatrix ours(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) ours.at(i, j) = d.pairing(local[i], local[j]);
    bool non_reduced = false;
    for (int s : c.root_indices)
      if (d.is_multipliable(s)) non_reduced = true;

    struct Candidate {
      Family f;
      int n;
    };
    std::vector<Candidate> cands;
    if (non_reduced) {
      cands.push_back({Family::BC, m});  // base Cartan of BC_n matches B_n (A_1 when n = 1)
    } else {
      cands.push_back({Family::A, m});
      // rank-2 double-edge systems are reported as C2 (isomorphic to B2)
      if (m >= 3) cands.push_back({Family::B, m});
      if (m >= 2) cands.push_back({Family::C, m});
      if (m >= 4) cands.push_back({Family::D, m});
      if (m >= 6 && m <= 8) cands.push_back({Family::E, m});
      if (m == 4) cands.push_back({Family::F, m});
      if (m == 2) cands.push_back({Family::G, m});
    }
    bool matched = false;
    for (const Candidate& cd : cands) {
      IntMatrix cm = standard_cartan(cd.f == Family::BC ? Family::B : cd.f, cd.n);
      std::vector<std::vector<int>> perms = cartan_matchings(cm, ours);
      if (perms.empty()) continue;
      // tie-break by lexicographic root vectors of the ordered simple system
      std::vector<int> best;
      std::vector<Vec> best_key;
      for (const std::vector<int>& p : perms) {
        std::vector<Vec> key;
        for (int i = 0; i < m; ++i) key.push_back(d.roots[local[p[i]]]);
        if (best.empty() || key < best_key) {
          best = p;
          best_key = key;
        }
      }
      c.family = cd.f;
      c.type_rank = cd.n;
      c.bourbaki_simple.clear();
      for (int i = 0; i < m; ++i) c.bourbaki_simple.push_back(local[best[i]]);
      matched = true;
      break;
    }
    if (!matched) throw Failure("UnknownType", "component matches no classical Cartan matrix");
  }
  return comps;
}

TypeLabel type_label(const RootDatum& d) {
  TypeLabel t;
  for (const Component& c : irreducible_components(d)) t.parts.push_back({c.family, c.type_rank});
  std::sort(t.parts.begin(), t.parts.end());
  return t;
}

DynkinDiagram dynkin_diagram(const RootDatum& d, const SimpleSystem& delta) {
  DynkinDiagram g;
  g.nodes = delta;
  int m = int(delta.size());
  g.cartan = IntMatrix(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g.cartan.at(i, j) = d.pairing(delta[i], delta[j]);
  for (int i = 0; i < m; ++i) g.multipliable.push_back(d.is_multipliable(delta[i]) ? 1 : 0);
  return g;
}

HighestRoot highest_root(const RootDatum& d, const Component& comp) {
  return highest_root(d, comp.root_indices, comp.bourbaki_simple);
}

HighestRoot highest_root(const RootDatum& d, const std::vector<int>& component_roots,
                         const SimpleSystem& delta) {
  for (int i : component_roots)
    if (d.is_multipliable(i)) throw Failure("NonReduced", "component is non-reduced");
  int m = int(delta.size());
  QMatrix basis(d.rank, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < d.rank; ++i) basis.at(i, j) = Rat(d.roots[delta[j]][i]);
  // coefficient vectors of the positive roots of the component
  std::vector<std::pair<int, Vec>> positives;
  for (int r : component_roots) {
    QVec b(d.rank);
    for (int i = 0; i < d.rank; ++i) b[i] = Rat(d.roots[r][i]);
    auto sol = qsolve(basis, b);
    if (!sol) throw Failure("InternalAxiomFailure", "root outside simple span");
    Vec coeffs(m);
    bool nonneg = true;
    for (int j = 0; j < m; ++j) {
      if (denominator((*sol)[j]) != 1) throw Failure("InternalAxiomFailure", "non-integral coefficient");
      coeffs[j] = numerator((*sol)[j]);
      if (coeffs[j] < 0) nonneg = false;
    }
    if (nonneg) positives.push_back({r, coeffs});
  }
  // maximal height; the highest root dominates everything componentwise
  int best = -1;
  Vec best_coeffs;
  Int best_height = -1;
  for (const auto& [r, coeffs] : positives) {
    Int h = 0;
    for (int j = 0; j < m; ++j) h += coeffs[j];
    if (h > best_height) {
      best = r;
      best_coeffs = coeffs;
      best_height = h;
    }
  }
  if (best < 0) throw Failure("InternalAxiomFailure", "no positive root in component");
  for (const auto& [r, coeffs] : positives)
    for (int j = 0; j < m; ++j)
      if (coeffs[j] > best_coeffs[j])
        throw Failure("InternalAxiomFailure", "no unique highest root");
  return HighestRoot{best, best_coeffs};
}

std::vector<int> integral_closure(const RootDatum& d, const std::vector<int>& subset) {
  if (subset.empty()) return {};
  std::vector<Vec> gens;
  for (int i : subset) gens.push_back(d.roots[i]);
  IntMatrix m = IntMatrix::from_cols(gens);
  std::vector<int> out;
  for (std::size_t r = 0; r < d.num_roots(); ++r)
    if (solve_integer(m, d.roots[r]).has_value()) out.push_back(int(r));
  return out;
}

bool strongly_orthogonal(const RootDatum& d, int a, int b) {
  // proportional over Q?
  const Vec &x = d.roots[a], &y = d.roots[b];
  bool prop = true;
  for (int i = 0; i < d.rank && prop; ++i)
    for (int j = i + 1; j < d.rank && prop; ++j)
      if (x[i] * y[j] != x[j] * y[i]) prop = false;
  if (prop) return false;
  return !d.has_root(vec_add(x, y)) && !d.has_root(vec_sub(x, y));
}

namespace {

// simple roots of a positive system given on an arbitrary sub-root system
std::vector<int> sub_simples(const RootDatum& d, const std::vector<int>& phi1,
                             const std::vector<char>& flags1) {
  std::vector<int> simples;
  for (std::size_t i = 0; i < phi1.size(); ++i) {
    if (!flags1[i]) continue;
    bool decomposable = false;
    for (std::size_t j = 0; j < phi1.size() && !decomposable; ++j) {
      if (!flags1[j]) continue;
      for (std::size_t k = j; k < phi1.size(); ++k) {
        if (!flags1[k]) continue;
        if (vec_add(d.roots[phi1[j]], d.roots[phi1[k]]) == d.roots[phi1[i]]) {
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) simples.push_back(int(i));
  }
  return simples;
}

}  // namespace


RootDatum sub_datum(const RootDatum& d, const std::vector<int>& root_subset) {
  RootDatum s;
  s.rank = d.rank;
  for (int i : root_subset) {
    s.roots.push_back(d.roots[i]);
    s.coroots.push_back(d.coroots[i]);
  }
  s.rebuild_index();
  ValidationReport rep = validate(s);
  if (!rep.ok) throw Failure("BadInput", "subset is not a sub-root datum: " + rep.violations[0]);
  return s;
}

PositiveSystem keep_it_simple(const RootDatum& d, const std::vector<int>& phi1,
                              const std::vector<char>& flags1, int a) {
  if (phi1.size() != flags1.size()) throw Failure("BadInput", "flag length mismatch");
  std::set<int> phi1_set(phi1.begin(), phi1.end());
  std::size_t a_pos = phi1.size();
  for (std::size_t i = 0; i < phi1.size(); ++i)
    if (phi1[i] == a) a_pos = i;
  if (a_pos == phi1.size() || !flags1[a_pos]) throw Failure("BadInput", "a not positive in phi1");
  // phi1 must be a sub-root system: closed under its own reflections
  for (int i : phi1)
    for (int j : phi1) {
      int k = d.reflect_root(i, j);
      if (k < 0 || !phi1_set.count(k)) throw Failure("BadInput", "phi1 not a sub-root system");
    }
  for (int i : phi1) {
    int ni = d.index_of(vec_neg(d.roots[i]));
    if (!phi1_set.count(ni)) throw Failure("BadInput", "phi1 not closed under negation");
  }
  std::vector<int> d1 = sub_simples(d, phi1, flags1);
  bool a_simple = false;
  for (int i : d1)
    if (std::size_t(i) == a_pos) a_simple = true;
  if (!a_simple) throw Failure("BadInput", "a not simple for the given positive system");

  // u on the wall of a: <a, u> = 0, <b, u> = 1 for the other simples of phi1
  QMatrix sys(int(d1.size()), d.rank);
  QVec rhs(d1.size());
  for (std::size_t r = 0; r < d1.size(); ++r) {
    for (int c = 0; c < d.rank; ++c) sys.at(int(r), c) = Rat(d.roots[phi1[d1[r]]][c]);
    rhs[r] = (d1[r] == int(a_pos)) ? Rat(0) : Rat(1);
  }
  auto u0 = qsolve(sys, rhs);
  if (!u0) throw Failure("InternalAxiomFailure", "simple system not independent");

  // wall directions: kernel of <a, .>
  QMatrix awall(1, d.rank);
  for (int c = 0; c < d.rank; ++c) awall.at(0, c) = Rat(d.roots[a][c]);
  std::vector<QVec> wall = qkernel(awall);

  const Vec& aroot = d.roots[a];
  auto proportional_to_a = [&](const Vec& x) {
    for (int i = 0; i < d.rank; ++i)
      for (int j = i + 1; j < d.rank; ++j)
        if (x[i] * aroot[j] != x[j] * aroot[i]) return false;
    return true;
  };

  // perturb within the wall until every non-proportional root sees u', keeping
  // the phi1 simples strictly positive
  QVec u = *u0;
  for (Int t = 1;; ++t) {
    for (Int den = 2;; den *= 2) {
      QVec cand = u;
      Rat scale = Rat(1, den);
      Rat pw = 1;
      for (const QVec& w : wall) {
        for (int c = 0; c < d.rank; ++c) cand[c] += scale * pw * w[c];
        pw *= Rat(t);
      }
      bool ok = true;
      for (std::size_t r = 0; r < d.num_roots() && ok; ++r)
        if (!proportional_to_a(d.roots[r]) && qdot(d.roots[r], cand) == 0) ok = false;
      for (std::size_t r = 0; r < d1.size() && ok; ++r)
        if (d1[r] != int(a_pos) && qdot(d.roots[phi1[d1[r]]], cand) <= 0) ok = false;
      if (ok) {
        u = cand;
        goto perturbed;
      }
      if (den > 1024) break;  // try another direction mix
    }
  }
perturbed:
  // step off the wall toward a
  Rat tau(1);
  for (std::size_t r = 0; r < d.num_roots(); ++r) {
    Rat s = qdot(d.roots[r], u);
    if (s == 0) continue;
    Rat step = qdot(d.roots[r], QVec(d.coroots[a].begin(), d.coroots[a].end()));
    if (step == 0) continue;
    Rat lim = abs(s) / (2 * abs(step));
    if (lim < tau) tau = lim;
  }
  QVec v = u;
  for (int c = 0; c < d.rank; ++c) v[c] += tau * Rat(d.coroots[a][c]);
  PositiveSystem p = positive_system_from_regular(d, v);

  // required properties; InternalAxiomFailure signals a bug in the chamber step
  for (std::size_t i = 0; i < phi1.size(); ++i)
    if (flags1[i] && !p.flag[phi1[i]])
      throw Failure("InternalAxiomFailure", "result does not contain phi1+");
  int target = a;
  if (d.is_divisible(a)) {
    Vec half(d.rank);
    for (int c = 0; c < d.rank; ++c) half[c] = d.roots[a][c] / 2;
    target = d.index_of(half);
  }
  SimpleSystem sd = simple_system(d, p);
  if (std::find(sd.begin(), sd.end(), target) == sd.end())
    throw Failure("InternalAxiomFailure", "a (or a/2) not simple in result");
  return p;
}

}  // namespace rootfold
