#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace demwhit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Laurent polynomial in the deformation parameter v, integer coefficients.
// Canonical form: zero has empty coeffs and lo == 0; otherwise coeffs.front()
// and coeffs.back() are nonzero.  coeffs[k] is the coefficient of v^(lo+k).
class VPoly {
public:
  VPoly() = default;
  VPoly(long c) { if (c != 0) coeffs_.push_back(c); }
  VPoly(Int c) { if (c != 0) coeffs_.push_back(std::move(c)); }

  static VPoly monomial(long exp, Int c = Int(1));
  static VPoly v(long exp = 1) { return monomial(exp); }

  bool is_zero() const { return coeffs_.empty(); }
  long lo() const { return lo_; }
  long hi() const { return lo_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(long exp) const;

  bool is_constant() const { return is_zero() || (lo_ == 0 && coeffs_.size() == 1); }
  // v-free value; requires is_constant()
  Int constant_value() const;
  // true when no negative powers of v occur
  bool is_polynomial() const { return is_zero() || lo_ >= 0; }
  // degree in v; requires nonzero
  long degree() const;

  VPoly operator-() const;
  VPoly& operator+=(const VPoly& o);
  VPoly& operator-=(const VPoly& o);
  friend VPoly operator+(VPoly a, const VPoly& b) { a += b; return a; }
  friend VPoly operator-(VPoly a, const VPoly& b) { a -= b; return a; }
  friend VPoly operator*(const VPoly& a, const VPoly& b);
  VPoly& operator*=(const VPoly& o) { *this = *this * o; return *this; }

  bool operator==(const VPoly& o) const { return lo_ == o.lo_ && coeffs_ == o.coeffs_; }
  bool operator!=(const VPoly& o) const { return !(*this == o); }
  bool operator<(const VPoly& o) const;  // arbitrary total order for map keys

  VPoly bar() const;               // v -> v^{-1}
  VPoly shifted(long k) const;     // multiply by v^k
  // exact division by v^k; throws std::domain_error when not divisible
  VPoly divided_by_v(long k) const;

  // evaluate at v = t; throws std::domain_error at t = 0 when lo() < 0
  Rational eval(const Rational& t) const;

  std::string to_string() const;   // e.g. "1 - v", "v^-1 + 2"
  std::string to_latex() const;

private:
  void normalize();
  long lo_ = 0;
  std::vector<Int> coeffs_;
};

}  // namespace demwhit
