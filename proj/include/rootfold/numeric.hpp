#ifndef ROOTFOLD_NUMERIC_HPP
#define ROOTFOLD_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace rootfold {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Vec = std::vector<Int>;   // lattice vector
using QVec = std::vector<Rat>;  // rational vector

// Typed failure; `code` is a stable machine-readable tag, e.g. "NonUnimodular".
class Failure : public std::runtime_error {
 public:
  Failure(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline Int dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Failure("BadInput", "dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat qdot(const Vec& a, const QVec& b) {
  if (a.size() != b.size()) throw Failure("BadInput", "qdot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec vec_neg(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Vec vec_scale(const Int& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero(const Vec& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

}  // namespace rootfold

#endif
