#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "root_weyl.hpp"
#include "torus.hpp"
#include "vpoly.hpp"

#include <algorithm>
#include <random>

using namespace demwhit;

namespace {

std::mt19937_64 rng(20240817);

VPoly random_vpoly() {
  VPoly p;
  long lo = static_cast<long>(rng() % 5) - 2;
  for (long k = 0; k < 4; ++k)
    p += VPoly::monomial(lo + k, static_cast<long>(rng() % 9) - 4);
  return p;
}

Weight random_weight(int rank) {
  Weight mu(static_cast<std::size_t>(rank));
  for (auto& c : mu) c = static_cast<long>(rng() % 7) - 3;
  return mu;
}

TorusFn random_torusfn(int rank) {
  TorusFn f(rank);
  for (int k = 0; k < 3; ++k) f.add_term(random_weight(rank), random_vpoly());
  return f;
}

}  // namespace

TEST_CASE("VPoly canonical form") {
  CHECK(VPoly().is_zero());
  CHECK(VPoly(0).is_zero());
  CHECK(VPoly(3).constant_value() == 3);
  CHECK((VPoly(1) + VPoly::v() - VPoly::v()) == VPoly(1));
  CHECK((VPoly::v(2) - VPoly::v(2)).is_zero());
  CHECK((VPoly::v(2) - VPoly::v(2)).lo() == 0);

  VPoly p = VPoly::monomial(-1, 2) + VPoly(5);  // 2v^{-1} + 5
  CHECK(p.lo() == -1);
  CHECK(p.hi() == 0);
  CHECK(p.coeff(-1) == 2);
  CHECK(p.coeff(0) == 5);
  CHECK(p.coeff(7) == 0);
  CHECK_FALSE(p.is_polynomial());
  CHECK(VPoly(1).is_polynomial());
  CHECK((VPoly(1) + VPoly::v()).degree() == 1);
  CHECK_THROWS_AS(VPoly().degree(), std::domain_error);
  CHECK_THROWS_AS(p.constant_value(), std::domain_error);
}

TEST_CASE("VPoly arithmetic identities") {
  VPoly one(1), v = VPoly::v();
  CHECK((one + v) * (one - v) == one - VPoly::v(2));
  CHECK((one - v) * (one - v) == one - VPoly::monomial(1, 2) + VPoly::v(2));
  CHECK((v * VPoly::v(-1)) == one);
  CHECK((-v) * (-v) == VPoly::v(2));

  for (int t = 0; t < 50; ++t) {
    VPoly a = random_vpoly(), b = random_vpoly(), c = random_vpoly();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == VPoly());
  }
}

TEST_CASE("VPoly bar, shift and division by v") {
  VPoly v = VPoly::v();
  CHECK(v.bar() == VPoly::v(-1));
  CHECK((VPoly(2) + VPoly::monomial(1, 3)).bar() == VPoly(2) + VPoly::monomial(-1, 3));
  for (int t = 0; t < 30; ++t) {
    VPoly a = random_vpoly();
    CHECK(a.bar().bar() == a);
    CHECK(a.shifted(3).shifted(-3) == a);
    CHECK(a.shifted(2) == a * VPoly::v(2));
    if (!a.is_zero()) {
      VPoly p = a.shifted(-a.lo());  // lowest exponent 0
      CHECK(p.shifted(5).divided_by_v(5) == p);
      CHECK_THROWS_AS(p.shifted(4).divided_by_v(5), std::domain_error);
    }
  }
  CHECK_THROWS_WITH_AS((VPoly(1) + v).divided_by_v(1), "VPoly: not divisible by v^1",
                       std::domain_error);
  CHECK((v + VPoly::v(2)).divided_by_v(1) == VPoly(1) + v);
}

TEST_CASE("VPoly evaluation") {
  VPoly p = VPoly(1) + VPoly::v(2);  // 1 + v^2
  CHECK(p.eval(Rational(2)) == Rational(5));
  CHECK(p.eval(Rational(0)) == Rational(1));
  CHECK(p.eval(Rational(1, 2)) == Rational(5, 4));
  VPoly q = VPoly::v(-1) + VPoly(1);
  CHECK(q.eval(Rational(2)) == Rational(3, 2));
  CHECK_THROWS_WITH_AS(q.eval(Rational(0)), "VPoly: pole at v = 0", std::domain_error);
}

TEST_CASE("VPoly printing") {
  CHECK(VPoly().to_string() == "0");
  CHECK((VPoly(1) - VPoly::v()).to_string() == "1 - v");
  CHECK(VPoly::monomial(2, -3).to_string() == "-3*v^2");
  CHECK(VPoly::v(-1).to_string() == "v^-1");
  CHECK((VPoly(1) - VPoly::v()).to_latex() == "1 - v");
  CHECK(VPoly::monomial(-2, 5).to_latex() == "5 v^{-2}");
}

TEST_CASE("TorusFn canonical form and ring operations") {
  TorusFn z1 = TorusFn::monomial(Weight{1, 0});
  TorusFn z2 = TorusFn::monomial(Weight{0, 1});
  CHECK(z1.rank() == 2);
  CHECK((z1 - z1).is_zero());
  CHECK((z1 + z2).term_count() == 2);
  CHECK(z1 * z2 == TorusFn::monomial(Weight{1, 1}));
  CHECK(z1.coeff(Weight{1, 0}) == VPoly(1));
  CHECK(z1.coeff(Weight{0, 1}).is_zero());

  TorusFn f(2);
  f.add_term(Weight{1, 0}, VPoly::v());
  f.add_term(Weight{1, 0}, -VPoly::v());
  CHECK(f.is_zero());

  for (int t = 0; t < 25; ++t) {
    TorusFn a = random_torusfn(2), b = random_torusfn(2), c = random_torusfn(2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a.scaled(VPoly(1) + VPoly::v()) == a + a.scaled(VPoly::v()));
    // evaluation at z = 1 is a ring homomorphism
    CHECK((a * b).coefficient_sum() == a.coefficient_sum() * b.coefficient_sum());
  }
  CHECK_THROWS_AS(TorusFn::monomial(Weight{1, 0}) + TorusFn::monomial(Weight{1}),
                  std::invalid_argument);
}

TEST_CASE("TorusFn z-inversion and v-division") {
  for (int t = 0; t < 25; ++t) {
    TorusFn a = random_torusfn(3);
    CHECK(a.inverted_z().inverted_z() == a);
    TorusFn p(3);  // same support, coefficients shifted into Z[v]
    for (const auto& [mu, c] : a.terms()) p.add_term(mu, c.shifted(std::max(0L, -c.lo())));
    CHECK(p.scaled(VPoly::v(2)).divided_by_v(2) == p);
  }
  TorusFn f = TorusFn::monomial(Weight{1}, VPoly(1) + VPoly::v());
  CHECK_THROWS_AS(f.divided_by_v(1), std::domain_error);
  CHECK(TorusFn::monomial(Weight{2, -1}).inverted_z() == TorusFn::monomial(Weight{-2, 1}));
}

TEST_CASE("weyl_twist is a left action") {
  for (char t : {'A', 'B'}) {
    WeylGroup g = WeylGroup::enumerate(RootSystem::build(t, 2));
    for (int trial = 0; trial < 10; ++trial) {
      TorusFn f = random_torusfn(2);
      CHECK(weyl_twist(g, g.identity(), f) == f);
      for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b)
          CHECK(weyl_twist(g, a, weyl_twist(g, b, f)) == weyl_twist(g, g.mul(a, b), f));
    }
  }
}

TEST_CASE("exact division by z^alpha - 1") {
  RootSystem a2 = RootSystem::build('A', 2);
  for (int i = 1; i <= 2; ++i) {
    TorusFn pole = TorusFn::monomial(a2.simple_root(i)) - TorusFn::monomial(Weight{0, 0});
    for (int t = 0; t < 25; ++t) {
      TorusFn f = random_torusfn(2);
      CHECK(divide_by_root_minus_one(a2, i, pole * f) == f);
    }
    CHECK(divide_by_root_minus_one(a2, i, TorusFn(2)).is_zero());
  }
  CHECK_THROWS_WITH_AS(divide_by_root_minus_one(a2, 1, TorusFn::monomial(Weight{0, 0})),
                       "division by z^alpha - 1 is not exact", std::domain_error);
  CHECK_THROWS_AS(divide_by_root_minus_one(a2, 1, TorusFn::monomial(Weight{1, 0})),
                  std::domain_error);
}

TEST_CASE("specialization at rational v") {
  TorusFn f(1);
  f.add_term(Weight{1}, VPoly(1) - VPoly::v());
  f.add_term(Weight{-1}, VPoly::v(2));
  RationalFn at2 = specialize_v(f, Rational(2));
  CHECK(at2.size() == 2);
  CHECK(at2.at(Weight{1}) == Rational(-1));
  CHECK(at2.at(Weight{-1}) == Rational(4));
  // zero coefficients are dropped
  RationalFn at1 = specialize_v(f, Rational(1));
  CHECK(at1.size() == 1);
  CHECK(at1.at(Weight{-1}) == Rational(1));
}
