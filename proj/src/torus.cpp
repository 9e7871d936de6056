#include "torus.hpp"

#include <sstream>
#include <stdexcept>

namespace demwhit {

void check_same_rank(const TorusFn& a, const TorusFn& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("torus functions from mismatched root systems (ranks " +
                                std::to_string(a.rank()) + " and " + std::to_string(b.rank()) + ")");
}

TorusFn TorusFn::monomial(Weight mu, VPoly c) {
  TorusFn f(static_cast<int>(mu.size()));
  f.add_term(mu, c);
  return f;
}

VPoly TorusFn::coeff(const Weight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? VPoly() : it->second;
}

void TorusFn::add_term(const Weight& mu, const VPoly& c) {
  if (static_cast<int>(mu.size()) != rank_)
    throw std::invalid_argument("term weight rank mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TorusFn TorusFn::operator-() const {
  TorusFn r(rank_);
  for (const auto& [mu, c] : terms_) r.terms_.emplace(mu, -c);
  return r;
}

TorusFn& TorusFn::operator+=(const TorusFn& o) {
  check_same_rank(*this, o);
  for (const auto& [mu, c] : o.terms_) add_term(mu, c);
  return *this;
}

TorusFn& TorusFn::operator-=(const TorusFn& o) {
  check_same_rank(*this, o);
  for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
  return *this;
}

TorusFn operator*(const TorusFn& a, const TorusFn& b) {
  check_same_rank(a, b);
  TorusFn r(a.rank());
  for (const auto& [mu, c] : a.terms())
    for (const auto& [nu, d] : b.terms()) r.add_term(mu + nu, c * d);
  return r;
}

TorusFn TorusFn::scaled(const VPoly& c) const {
  TorusFn r(rank_);
  if (c.is_zero()) return r;
  for (const auto& [mu, p] : terms_) r.terms_.emplace(mu, p * c);
  return r;
}

TorusFn TorusFn::divided_by_v(long k) const {
  TorusFn r(rank_);
  for (const auto& [mu, p] : terms_) r.terms_.emplace(mu, p.divided_by_v(k));
  return r;
}

TorusFn TorusFn::inverted_z() const {
  TorusFn r(rank_);
  for (const auto& [mu, c] : terms_) r.terms_.emplace(-mu, c);
  return r;
}

VPoly TorusFn::coefficient_sum() const {
  VPoly s;
  for (const auto& [mu, c] : terms_) s += c;
  return s;
}

std::string TorusFn::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*z^" << weight_str(mu);
  }
  return os.str();
}

std::string TorusFn::to_latex() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "\\left(" << c.to_latex() << "\\right) z^{" << weight_str(mu) << "}";
  }
  return os.str();
}

TorusFn weyl_twist(const WeylGroup& g, int w, const TorusFn& f) {
  if (g.rs().rank() != f.rank())
    throw std::invalid_argument("weyl_twist: rank mismatch");
  TorusFn r(f.rank());
  for (const auto& [mu, c] : f.terms()) r.add_term(g.act(w, mu), c);
  return r;
}

TorusFn divide_by_root_minus_one(const RootSystem& rs, int i, const TorusFn& f) {
  rs.check_index(i);
  if (rs.rank() != f.rank()) throw std::invalid_argument("divide: rank mismatch");
  const Weight& alpha = rs.simple_root(i);
  // Strings mu + Z*alpha_i are keyed by the representative with pairing 0 or 1;
  // <alpha_i, alpha_i^vee> = 2, so j0 = floor(<mu, alpha_i^vee> / 2) works.
  std::map<Weight, std::map<long, VPoly>> strings;
  for (const auto& [mu, c] : f.terms()) {
    long p = rs.pairing(mu, i);
    long j0 = p >= 0 ? p / 2 : -((-p + 1) / 2);
    strings[mu - j0 * alpha][j0] = c;
  }
  TorusFn q(f.rank());
  for (const auto& [base, coeffs] : strings) {
    long a = coeffs.begin()->first;
    long b = coeffs.rbegin()->first;
    VPoly running;  // d_j = sum of c_k for k > j
    for (long j = b - 1; j >= a; --j) {
      auto it = coeffs.find(j + 1);
      if (it != coeffs.end()) running += it->second;
      if (!running.is_zero()) q.add_term(base + j * alpha, running);
    }
    auto it = coeffs.find(a);
    if (it != coeffs.end()) running += it->second;
    if (!running.is_zero())
      throw std::domain_error("division by z^alpha - 1 is not exact");
  }
  return q;
}

RationalFn specialize_v(const TorusFn& f, const Rational& t) {
  RationalFn out;
  for (const auto& [mu, c] : f.terms()) {
    Rational val = c.eval(t);
    if (val != 0) out.emplace(mu, val);
  }
  return out;
}

}  // namespace demwhit
