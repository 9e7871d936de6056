#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "demazure.hpp"
#include "root_weyl.hpp"
#include "torus.hpp"

#include <random>

using namespace demwhit;

namespace {

std::mt19937_64 rng(67280421);

Weight random_weight(int rank) {
  Weight mu(static_cast<std::size_t>(rank));
  for (auto& c : mu) c = static_cast<long>(rng() % 7) - 3;
  return mu;
}

TorusFn zpow(std::initializer_list<long> mu) { return TorusFn::monomial(Weight(mu)); }

}  // namespace

TEST_CASE("divided difference closed form, rank one") {
  RootSystem a1 = RootSystem::build('A', 1);
  CHECK(demazure(a1, 1, zpow({1})) == zpow({1}) + zpow({-1}));
  CHECK(demazure(a1, 1, zpow({3})) == zpow({3}) + zpow({1}) + zpow({-1}) + zpow({-3}));
  CHECK(demazure(a1, 1, zpow({0})) == zpow({0}));
  CHECK(demazure(a1, 1, zpow({-1})).is_zero());
  CHECK(demazure(a1, 1, zpow({-2})) == -zpow({0}));
  CHECK(demazure(a1, 1, zpow({-4})) == -(zpow({0}) + zpow({2}) + zpow({-2})));

  CHECK(demazure_prime(a1, 1, zpow({1})).is_zero());
  CHECK(demazure_prime(a1, 1, zpow({0})) == zpow({0}));
  CHECK(demazure_prime(a1, 1, zpow({-1})) == zpow({-1}) + zpow({1}));
  CHECK(demazure_prime(a1, 1, zpow({2})) == -zpow({0}));
}

TEST_CASE("divided difference closed form, rank two") {
  RootSystem a2 = RootSystem::build('A', 2);
  CHECK(demazure(a2, 1, zpow({1, 0})) == zpow({1, 0}) + zpow({-1, 1}));
  CHECK(demazure(a2, 2, zpow({1, 0})) == zpow({1, 0}));
  CHECK(demazure(a2, 2, zpow({1, -1})).is_zero());
  CHECK(demazure(a2, 1, zpow({2, -1})) == zpow({2, -1}) + zpow({0, 0}) + zpow({-2, 1}));
}

TEST_CASE("deformed operators, rank one") {
  RootSystem a1 = RootSystem::build('A', 1);
  VPoly v = VPoly::v();
  TorusFn expected = zpow({1}) + zpow({-1}).scaled(VPoly(1) - v) - zpow({-3}).scaled(v);
  CHECK(op_D(a1, 1, zpow({1})) == expected);
  CHECK(op_T(a1, 1, zpow({1})) == expected - zpow({1}));
  CHECK(op_T(a1, 1, zpow({0})) == zpow({-2}).scaled(-v));
  CHECK(op_T_prime(a1, 1, zpow({0})) == zpow({2}).scaled(-v));
  CHECK(op_D(a1, 1, zpow({-1})).is_zero());
  CHECK(lusztig_op(a1, 1, zpow({0})) == -zpow({0}));
}

TEST_CASE("deformed operators, rank two") {
  RootSystem a2 = RootSystem::build('A', 2);
  VPoly v = VPoly::v();
  CHECK(op_D(a2, 1, zpow({1, 0})) ==
        zpow({1, 0}) + zpow({-1, 1}).scaled(VPoly(1) - v) - zpow({-3, 2}).scaled(v));
}

TEST_CASE("theta conjugations between primed and unprimed families") {
  RootSystem b2 = RootSystem::build('B', 2);
  for (int t = 0; t < 40; ++t) {
    TorusFn f = TorusFn::monomial(random_weight(2));
    for (int i = 1; i <= 2; ++i) {
      CHECK(demazure_prime(b2, i, f) == demazure(b2, i, f.inverted_z()).inverted_z());
      CHECK(op_T_prime(b2, i, f) == op_T(b2, i, f.inverted_z()).inverted_z());
      CHECK(op_D_prime(b2, i, f) == op_D(b2, i, f.inverted_z()).inverted_z());
    }
  }
}

TEST_CASE("operator linearity and word composition order") {
  RootSystem a2 = RootSystem::build('A', 2);
  TorusFn f = TorusFn::monomial(Weight{1, -2}, VPoly::v()) +
              TorusFn::monomial(Weight{0, 2}, VPoly(1) - VPoly::v());
  for (OpFamily fam : {OpFamily::Demazure, OpFamily::D, OpFamily::T, OpFamily::LusztigPrime}) {
    CHECK(apply_word(a2, fam, {1, 2}, f) == apply_op(a2, fam, 1, apply_op(a2, fam, 2, f)));
    CHECK(apply_word(a2, fam, {}, f) == f);
  }
  // linearity over VPoly coefficients
  TorusFn g = TorusFn::monomial(Weight{1, 0});
  CHECK(op_T(a2, 1, g.scaled(VPoly::v(3))) == op_T(a2, 1, g).scaled(VPoly::v(3)));
  CHECK(op_T(a2, 1, f + g) == op_T(a2, 1, f) + op_T(a2, 1, g));
}

TEST_CASE("braid relations hold for the five braid-compatible families") {
  for (char t : {'A', 'B', 'G'}) {
    RootSystem rs = RootSystem::build(t, 2);
    int m = rs.coxeter_m(1, 2);
    std::vector<int> w12, w21;
    for (int k = 0; k < m; ++k) {
      w12.push_back(k % 2 == 0 ? 1 : 2);
      w21.push_back(k % 2 == 0 ? 2 : 1);
    }
    for (OpFamily fam : {OpFamily::Demazure, OpFamily::DemazurePrime, OpFamily::T,
                         OpFamily::TPrime, OpFamily::LusztigPrime}) {
      for (int trial = 0; trial < 25; ++trial) {
        TorusFn f = TorusFn::monomial(random_weight(2));
        CHECK(apply_word(rs, fam, w12, f) == apply_word(rs, fam, w21, f));
      }
    }
  }
}

TEST_CASE("the deformed divided differences do not braid") {
  RootSystem a2 = RootSystem::build('A', 2);
  bool found_d = false, found_dp = false;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      TorusFn f = TorusFn::monomial(Weight{a, b});
      if (apply_word(a2, OpFamily::D, {1, 2, 1}, f) !=
          apply_word(a2, OpFamily::D, {2, 1, 2}, f))
        found_d = true;
      if (apply_word(a2, OpFamily::DPrime, {1, 2, 1}, f) !=
          apply_word(a2, OpFamily::DPrime, {2, 1, 2}, f))
        found_dp = true;
    }
  CHECK(found_d);
  CHECK(found_dp);
}

TEST_CASE("quadratic relations") {
  RootSystem g2 = RootSystem::build('G', 2);
  VPoly v = VPoly::v(), one(1);
  for (int t = 0; t < 40; ++t) {
    TorusFn f = TorusFn::monomial(random_weight(2));
    for (int i = 1; i <= 2; ++i) {
      TorusFn d = demazure(g2, i, f);
      CHECK(demazure(g2, i, d) == d);
      TorusFn dd = op_D(g2, i, f);
      CHECK(op_D(g2, i, dd) == dd.scaled(one + v));
      for (OpFamily fam : {OpFamily::T, OpFamily::TPrime, OpFamily::LusztigPrime}) {
        TorusFn tf = apply_op(g2, fam, i, f);
        CHECK(apply_op(g2, fam, i, tf) == tf.scaled(v - one) + f.scaled(v));
      }
    }
  }
}

TEST_CASE("dominance predicates") {
  CHECK(is_dominant(Weight{0, 0, 0}));
  CHECK(is_dominant(Weight{2, 0, 1}));
  CHECK_FALSE(is_dominant(Weight{1, -1}));
  CHECK(is_regular_dominant(Weight{1, 2}));
  CHECK_FALSE(is_regular_dominant(Weight{1, 0}));
}

TEST_CASE("Demazure characters") {
  WeylGroup a2 = WeylGroup::enumerate(RootSystem::build('A', 2));
  CHECK(demazure_character(a2, a2.identity(), Weight{1, 1}) == zpow({1, 1}));

  TorusFn adjoint = zpow({1, 1}) + zpow({2, -1}) + zpow({-1, 2}) + zpow({1, -2}) +
                    zpow({-2, 1}) + zpow({-1, -1}) + TorusFn::monomial(Weight{0, 0}, VPoly(2));
  CHECK(demazure_character(a2, a2.longest(), Weight{1, 1}) == adjoint);
  CHECK(adjoint.coefficient_sum() == VPoly(8));

  // partial character: one reflection from the highest weight
  CHECK(demazure_character(a2, a2.from_word({1}), Weight{1, 0}) ==
        zpow({1, 0}) + zpow({-1, 1}));

  CHECK_THROWS_WITH_AS(demazure_character(a2, a2.longest(), Weight{-1, 0}),
                       "demazure_character requires a dominant weight, got (-1,0)",
                       std::invalid_argument);
}

TEST_CASE("full character is invariant and has highest weight coefficient one") {
  WeylGroup a2 = WeylGroup::enumerate(RootSystem::build('A', 2));
  for (Weight lam : {Weight{1, 0}, Weight{1, 1}, Weight{2, 1}}) {
    TorusFn chi = demazure_character(a2, a2.longest(), lam);
    CHECK(chi.coeff(lam) == VPoly(1));
    for (int w = 0; w < a2.size(); ++w) CHECK(weyl_twist(a2, w, chi) == chi);
  }
  // character duality under z -> z^{-1}
  CHECK(demazure_character(a2, a2.longest(), Weight{1, 0}).inverted_z() ==
        demazure_character(a2, a2.longest(), Weight{0, 1}));
}

TEST_CASE("characters agree along every reduced word") {
  WeylGroup a3 = WeylGroup::enumerate(RootSystem::build('A', 3));
  Weight lam{1, 2, 1};
  for (int w : {a3.from_word({1, 2, 1}), a3.from_word({2, 1, 3, 2}), a3.longest()}) {
    TorusFn expected = demazure_character(a3, w, lam);
    for (const auto& word : a3.all_reduced_words(w))
      CHECK(apply_word(a3.rs(), OpFamily::Demazure, word, TorusFn::monomial(lam)) == expected);
  }
}

TEST_CASE("mismatched rank is rejected") {
  RootSystem a2 = RootSystem::build('A', 2);
  CHECK_THROWS_WITH_AS(demazure(a2, 1, TorusFn::monomial(Weight{1})),
                       "operator argument from mismatched root system", std::invalid_argument);
  CHECK_THROWS_AS(op_T(a2, 3, TorusFn::monomial(Weight{1, 0})), std::invalid_argument);
}
