#include "rootfold/gf2field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace rootfold::gf2 {

Poly Poly::variable(int nvars, int i) {
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  return Poly{nvars, {e}};
}

bool Poly::is_one() const {
  return monos.size() == 1 && *monos.begin() == std::vector<int>(nvars, 0);
}

int Poly::degree(int var) const {
  int d = -1;  // -1 for the zero polynomial
  for (const auto& m : monos) d = std::max(d, m[var]);
  return d;
}

Poly add(const Poly& a, const Poly& b) {
  Poly r{a.nvars, a.monos};
  for (const auto& m : b.monos) {
    auto it = r.monos.find(m);
    if (it == r.monos.end())
      r.monos.insert(m);
    else
      r.monos.erase(it);
  }
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r = Poly::zero(a.nvars);
  for (const auto& ma : a.monos)
    for (const auto& mb : b.monos) {
      std::vector<int> m(a.nvars);
      for (int i = 0; i < a.nvars; ++i) m[i] = ma[i] + mb[i];
      auto it = r.monos.find(m);
      if (it == r.monos.end())
        r.monos.insert(m);
      else
        r.monos.erase(it);
    }
  return r;
}

namespace {

// lexicographically largest monomial
std::vector<int> lead(const Poly& p) { return *p.monos.rbegin(); }

bool mono_divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

std::optional<Poly> div_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  Poly rem = a, quot = Poly::zero(a.nvars);
  while (!rem.is_zero()) {
    std::vector<int> lr = lead(rem), lb = lead(b);
    if (!mono_divides(lb, lr)) return std::nullopt;
    std::vector<int> q(a.nvars);
    for (int i = 0; i < a.nvars; ++i) q[i] = lr[i] - lb[i];
    Poly qm{a.nvars, {q}};
    quot = add(quot, qm);
    rem = add(rem, mul(qm, b));  // char 2: subtraction is addition
  }
  return quot;
}

namespace {

// coefficients of p as a polynomial in variable `var`
std::map<int, Poly> coeffs_in(const Poly& p, int var) {
  std::map<int, Poly> out;
  for (const auto& m : p.monos) {
    std::vector<int> rest = m;
    int d = rest[var];
    rest[var] = 0;
    auto [it, fresh] = out.try_emplace(d, Poly::zero(p.nvars));
    auto found = it->second.monos.find(rest);
    if (found == it->second.monos.end())
      it->second.monos.insert(rest);
    else
      it->second.monos.erase(found);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Poly from_coeffs(const std::map<int, Poly>& cs, int var, int nvars) {
  Poly r = Poly::zero(nvars);
  for (const auto& [d, c] : cs)
    for (auto m : c.monos) {
      m[var] += d;
      r.monos.insert(m);
    }
  return r;
}

int top_variable(const Poly& a, const Poly& b) {
  for (int v = a.nvars - 1; v >= 0; --v)
    if (a.degree(v) > 0 || b.degree(v) > 0) return v;
  return -1;
}

Poly content_in(const Poly& p, int var) {
  Poly g = Poly::zero(p.nvars);
  for (const auto& [d, c] : coeffs_in(p, var)) g = gcd(g, c);
  return g;
}

// pseudo-remainder of a by b in the main variable
Poly prem(Poly a, const Poly& b, int var) {
  auto bc = coeffs_in(b, var);
  int db = bc.rbegin()->first;
  const Poly& lb = bc.rbegin()->second;
  while (!a.is_zero()) {
    auto ac = coeffs_in(a, var);
    int da = ac.rbegin()->first;
    if (da < db) break;
    const Poly& la = ac.rbegin()->second;
    // a <- a*lb + la * v^(da-db) * b
    Poly shift = Poly::one(a.nvars);
    std::vector<int> e(a.nvars, 0);
    e[var] = da - db;
    shift = Poly{a.nvars, {e}};
    a = add(mul(a, lb), mul(mul(la, shift), b));
  }
  return a;
}

}  // namespace

Poly gcd(Poly a, Poly b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int var = top_variable(a, b);
  if (var < 0) return Poly::one(a.nvars);  // both are the constant 1
  if (a.degree(var) == 0 || b.degree(var) == 0) {
    // one side is free of the main variable: gcd with the other's content
    const Poly& flat = a.degree(var) == 0 ? a : b;
    const Poly& tall = a.degree(var) == 0 ? b : a;
    return gcd(flat, content_in(tall, var));
  }
  Poly ca = content_in(a, var), cb = content_in(b, var);
  Poly cg = gcd(ca, cb);
  Poly pa = *div_exact(a, ca), pb = *div_exact(b, cb);
  while (!pb.is_zero()) {
    Poly r = prem(pa, pb, var);
    pa = pb;
    pb = r.is_zero() ? r : *div_exact(r, content_in(r, var));
  }
  return mul(cg, pa);
}

Poly substitute_square(const Poly& a, const std::vector<char>& which) {
  Poly r = Poly::zero(a.nvars);
  for (auto m : a.monos) {
    for (int i = 0; i < a.nvars; ++i)
      if (which[i]) m[i] *= 2;
    r.monos.insert(m);
  }
  return r;
}

std::optional<Poly> sqrt(const Poly& a) {
  Poly r = Poly::zero(a.nvars);
  for (auto m : a.monos) {
    for (int i = 0; i < a.nvars; ++i) {
      if (m[i] % 2 != 0) return std::nullopt;
      m[i] /= 2;
    }
    r.monos.insert(m);
  }
  return r;
}

Fraction Fraction::make(Poly n, Poly d) {
  if (d.is_zero()) throw Failure("DivisionByZero", "zero denominator");
  if (n.is_zero()) return Fraction::zero(n.nvars);
  Poly g = gcd(n, d);
  return Fraction{*div_exact(n, g), *div_exact(d, g)};
}

Fraction add(const Fraction& a, const Fraction& b) {
  return Fraction::make(gf2::add(mul(a.num, b.den), mul(b.num, a.den)), mul(a.den, b.den));
}

Fraction mul(const Fraction& a, const Fraction& b) {
  return Fraction::make(gf2::mul(a.num, b.num), gf2::mul(a.den, b.den));
}

Fraction div(const Fraction& a, const Fraction& b) {
  if (b.is_zero()) throw Failure("DivisionByZero", "division by zero");
  return Fraction::make(gf2::mul(a.num, b.den), gf2::mul(a.den, b.num));
}

Fraction inv(const Fraction& a) { return div(Fraction::one(a.num.nvars), a); }

Fraction substitute_square(const Fraction& a, const std::vector<char>& which) {
  return Fraction::make(substitute_square(a.num, which), substitute_square(a.den, which));
}

std::optional<Fraction> sqrt(const Fraction& a) {
  auto n = sqrt(a.num);
  auto d = sqrt(a.den);
  if (!n || !d) return std::nullopt;
  return Fraction::make(*n, *d);
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  const std::vector<std::string>& names;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Fraction expr() {
    Fraction r = term();
    for (;;) {
      skip();
      if (eat('+') || eat('-'))
        r = add(r, term());
      else
        break;
    }
    return r;
  }
  Fraction term() {
    Fraction r = factor();
    for (;;) {
      skip();
      if (eat('*'))
        r = mul(r, factor());
      else if (eat('/'))
        r = div(r, factor());
      else
        break;
    }
    return r;
  }
  Fraction factor() {
    Fraction base = atom();
    skip();
    if (eat('^')) {
      skip();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw Failure("BadInput", "missing exponent");
      int e = std::stoi(s.substr(start, pos - start));
      Fraction r = Fraction::one(int(names.size()));
      for (int i = 0; i < e; ++i) r = mul(r, base);
      return r;
    }
    return base;
  }
  Fraction atom() {
    skip();
    int nv = int(names.size());
    if (eat('(')) {
      Fraction r = expr();
      if (!eat(')')) throw Failure("BadInput", "missing )");
      return r;
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      long v = std::stol(s.substr(start, pos - start));
      return v % 2 ? Fraction::one(nv) : Fraction::zero(nv);
    }
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    std::string name = s.substr(start, pos - start);
    for (int i = 0; i < nv; ++i)
      if (names[i] == name) return Fraction::of(Poly::variable(nv, i));
    throw Failure("BadInput", "unknown variable: " + name);
  }
};

}  // namespace

Fraction parse_fraction(const std::string& text, const std::vector<std::string>& var_names) {
  Parser p{text, 0, var_names};
  Fraction r = p.expr();
  p.skip();
  if (p.pos != text.size()) throw Failure("BadInput", "trailing input in: " + text);
  return r;
}

std::string to_string(const Poly& p, const std::vector<std::string>& var_names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first_m = true;
  for (auto it = p.monos.rbegin(); it != p.monos.rend(); ++it) {
    if (!first_m) os << "+";
    first_m = false;
    const auto& m = *it;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (any) os << "*";
      os << var_names[i];
      if (m[i] > 1) os << "^" << m[i];
      any = true;
    }
    if (!any) os << "1";
  }
  return os.str();
}

std::string to_string(const Fraction& f, const std::vector<std::string>& var_names) {
  std::string n = to_string(f.num, var_names);
  if (f.den.is_one()) return n;
  std::string d = to_string(f.den, var_names);
  bool nb = f.num.monos.size() > 1;
  // the denominator needs parentheses unless it is a power of one variable
  bool db = f.den.monos.size() > 1;
  if (!db) {
    int active = 0;
    for (int e : *f.den.monos.begin())
      if (e > 0) ++active;
    db = active > 1;
  }
  return (nb ? "(" + n + ")" : n) + "/" + (db ? "(" + d + ")" : d);
}

}  // namespace rootfold::gf2
