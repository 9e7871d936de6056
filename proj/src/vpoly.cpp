#include "vpoly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>

namespace demwhit {

void VPoly::normalize() {
  std::size_t a = 0, b = coeffs_.size();
  while (a < b && coeffs_[a] == 0) ++a;
  while (b > a && coeffs_[b - 1] == 0) --b;
  if (a == b) {
    coeffs_.clear();
    lo_ = 0;
    return;
  }
  if (a > 0 || b < coeffs_.size()) {
    std::vector<Int> t(coeffs_.begin() + a, coeffs_.begin() + b);
    coeffs_ = std::move(t);
    lo_ += static_cast<long>(a);
  }
}

VPoly VPoly::monomial(long exp, Int c) {
  VPoly p;
  if (c != 0) {
    p.lo_ = exp;
    p.coeffs_.push_back(std::move(c));
  }
  return p;
}

Int VPoly::coeff(long exp) const {
  if (exp < lo_ || exp > hi() || is_zero()) return Int(0);
  return coeffs_[static_cast<std::size_t>(exp - lo_)];
}

Int VPoly::constant_value() const {
  if (is_zero()) return Int(0);
  if (!is_constant()) throw std::domain_error("VPoly: not a constant");
  return coeffs_[0];
}

long VPoly::degree() const {
  if (is_zero()) throw std::domain_error("VPoly: degree of zero");
  return hi();
}

VPoly VPoly::operator-() const {
  VPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

VPoly& VPoly::operator+=(const VPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) { *this = o; return *this; }
  long nlo = std::min(lo_, o.lo_);
  long nhi = std::max(hi(), o.hi());
  std::vector<Int> t(static_cast<std::size_t>(nhi - nlo + 1));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    t[static_cast<std::size_t>(lo_ - nlo) + k] = coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
    t[static_cast<std::size_t>(o.lo_ - nlo) + k] += o.coeffs_[k];
  lo_ = nlo;
  coeffs_ = std::move(t);
  normalize();
  return *this;
}

VPoly& VPoly::operator-=(const VPoly& o) { return *this += -o; }

VPoly operator*(const VPoly& a, const VPoly& b) {
  if (a.is_zero() || b.is_zero()) return VPoly();
  VPoly r;
  r.lo_ = a.lo_ + b.lo_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  r.normalize();
  return r;
}

bool VPoly::operator<(const VPoly& o) const {
  if (lo_ != o.lo_) return lo_ < o.lo_;
  if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != o.coeffs_[k]) return coeffs_[k] < o.coeffs_[k];
  return false;
}

VPoly VPoly::bar() const {
  VPoly r;
  if (is_zero()) return r;
  r.lo_ = -hi();
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return r;
}

VPoly VPoly::shifted(long k) const {
  VPoly r(*this);
  if (!r.is_zero()) r.lo_ += k;
  return r;
}

VPoly VPoly::divided_by_v(long k) const {
  if (is_zero()) return VPoly();
  if (lo_ < k) throw std::domain_error("VPoly: not divisible by v^" + std::to_string(k));
  return shifted(-k);
}

Rational VPoly::eval(const Rational& t) const {
  if (is_zero()) return Rational(0);
  if (t == 0) {
    if (lo_ < 0) throw std::domain_error("VPoly: pole at v = 0");
    return Rational(lo_ == 0 ? coeffs_[0] : Int(0));
  }
  // Horner on the polynomial part, then the v^lo prefactor.
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + Rational(*it);
  Rational pre(1);
  long e = lo_;
  Rational base = e < 0 ? Rational(1) / t : t;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) pre *= base;
  return pre * acc;
}

namespace {

void append_term(std::ostream& os, bool& first, const Int& c, long e, bool latex) {
  if (c == 0) return;
  Int a = c < 0 ? Int(-c) : c;
  if (first) {
    if (c < 0) os << "-";
    first = false;
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  bool unit = (a == 1) && e != 0;
  if (!unit) os << a.str();
  if (e != 0) {
    if (!unit) os << (latex ? " " : "*");
    os << "v";
    if (e != 1) {
      if (latex)
        os << "^{" << e << "}";
      else
        os << "^" << e;
    }
  }
}

}  // namespace

std::string VPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    append_term(os, first, coeffs_[k], lo_ + static_cast<long>(k), false);
  return os.str();
}

std::string VPoly::to_latex() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    append_term(os, first, coeffs_[k], lo_ + static_cast<long>(k), true);
  return os.str();
}

}  // namespace demwhit
