#ifndef ROOTFOLD_GF2FIELD_HPP
#define ROOTFOLD_GF2FIELD_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rootfold/numeric.hpp"

namespace rootfold::gf2 {

// Multivariate polynomial over F_2: a set of monomials (exponent vectors).
struct Poly {
  int nvars = 0;
  std::set<std::vector<int>> monos;

  static Poly zero(int nvars) { return Poly{nvars, {}}; }
  static Poly one(int nvars) { return Poly{nvars, {std::vector<int>(nvars, 0)}}; }
  static Poly variable(int nvars, int i);

  bool is_zero() const { return monos.empty(); }
  bool is_one() const;
  int degree(int var) const;
  bool operator==(const Poly& o) const { return nvars == o.nvars && monos == o.monos; }
  bool operator<(const Poly& o) const { return monos < o.monos; }
};

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
std::optional<Poly> div_exact(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);

// v_i -> v_i^2 for flagged variables
Poly substitute_square(const Poly& a, const std::vector<char>& which);
// halves all exponents; nullopt if any is odd
std::optional<Poly> sqrt(const Poly& a);

// Reduced fraction over F_2: gcd(num, den) = 1, den nonzero (monic for free).
struct Fraction {
  Poly num, den;

  static Fraction make(Poly n, Poly d);
  static Fraction zero(int nvars) { return {Poly::zero(nvars), Poly::one(nvars)}; }
  static Fraction one(int nvars) { return {Poly::one(nvars), Poly::one(nvars)}; }
  static Fraction of(const Poly& p) { return {p, Poly::one(p.nvars)}; }

  bool is_zero() const { return num.is_zero(); }
  bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
  bool operator<(const Fraction& o) const { return num != o.num ? num < o.num : den < o.den; }
};

Fraction add(const Fraction& a, const Fraction& b);
Fraction mul(const Fraction& a, const Fraction& b);
Fraction div(const Fraction& a, const Fraction& b);
Fraction inv(const Fraction& a);
Fraction substitute_square(const Fraction& a, const std::vector<char>& which);
std::optional<Fraction> sqrt(const Fraction& a);

// "(t+1)/t", "t0^2*t2 + 1", ... ; '-' is accepted and means '+'.
Fraction parse_fraction(const std::string& text, const std::vector<std::string>& var_names);
std::string to_string(const Fraction& f, const std::vector<std::string>& var_names);
std::string to_string(const Poly& p, const std::vector<std::string>& var_names);

}  // namespace rootfold::gf2

#endif
