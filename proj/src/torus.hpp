#pragma once

#include "root_weyl.hpp"
#include "vpoly.hpp"

#include <map>
#include <string>

namespace demwhit {

// Element of the group algebra of the weight lattice over Laurent polynomials
// in v: a finite sum of terms  c(v) * z^mu.  Terms are kept in weight-lex
// order with no zero coefficients, so equality is structural.
class TorusFn {
public:
  explicit TorusFn(int rank) : rank_(rank) {}
  static TorusFn monomial(Weight mu, VPoly c = VPoly(1));

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Weight, VPoly>& terms() const { return terms_; }
  VPoly coeff(const Weight& mu) const;
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Weight& mu, const VPoly& c);

  TorusFn operator-() const;
  TorusFn& operator+=(const TorusFn& o);
  TorusFn& operator-=(const TorusFn& o);
  friend TorusFn operator+(TorusFn a, const TorusFn& b) { a += b; return a; }
  friend TorusFn operator-(TorusFn a, const TorusFn& b) { a -= b; return a; }
  friend TorusFn operator*(const TorusFn& a, const TorusFn& b);

  TorusFn scaled(const VPoly& c) const;
  // exact division of every coefficient by v^k
  TorusFn divided_by_v(long k) const;

  bool operator==(const TorusFn& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }
  bool operator!=(const TorusFn& o) const { return !(*this == o); }

  // the involution z^mu -> z^{-mu}
  TorusFn inverted_z() const;
  // sum of all coefficients (evaluation at z = 1)
  VPoly coefficient_sum() const;

  std::string to_string() const;
  std::string to_latex() const;

private:
  int rank_;
  std::map<Weight, VPoly> terms_;
};

// z^mu -> z^{w mu} on exponents, coefficients untouched
TorusFn weyl_twist(const WeylGroup& g, int w, const TorusFn& f);

// exact quotient f / (z^{alpha_i} - 1); throws std::domain_error when the
// division leaves a remainder
TorusFn divide_by_root_minus_one(const RootSystem& rs, int i, const TorusFn& f);

// evaluation of v at a rational point; weights keep exact rational coefficients
using RationalFn = std::map<Weight, Rational>;
RationalFn specialize_v(const TorusFn& f, const Rational& t);

void check_same_rank(const TorusFn& a, const TorusFn& b);

}  // namespace demwhit
