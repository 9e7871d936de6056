#pragma once

#include "root_weyl.hpp"
#include "torus.hpp"

#include <vector>

namespace demwhit {

// The seven operator families acting on torus functions.  All are linear;
// apply_word composes with the leftmost index outermost, so apply_word(fam,
// [1,2], f) = op_1(op_2(f)).
enum class OpFamily {
  Demazure,       // divided difference
  DemazurePrime,  // conjugate by z -> z^{-1}
  D,              // (1 - v z^{-alpha}) Demazure
  DPrime,         // (1 - v z^{alpha}) DemazurePrime
  T,              // D - 1  (Demazure-Lusztig)
  TPrime,         // DPrime - 1
  LusztigPrime    // rho-shifted conjugate of T
};

TorusFn demazure(const RootSystem& rs, int i, const TorusFn& f);
TorusFn demazure_prime(const RootSystem& rs, int i, const TorusFn& f);
TorusFn op_D(const RootSystem& rs, int i, const TorusFn& f);
TorusFn op_D_prime(const RootSystem& rs, int i, const TorusFn& f);
TorusFn op_T(const RootSystem& rs, int i, const TorusFn& f);
TorusFn op_T_prime(const RootSystem& rs, int i, const TorusFn& f);
TorusFn lusztig_op(const RootSystem& rs, int i, const TorusFn& f);

TorusFn apply_op(const RootSystem& rs, OpFamily fam, int i, const TorusFn& f);
TorusFn apply_word(const RootSystem& rs, OpFamily fam, const std::vector<int>& word, TorusFn f);

// Demazure character: apply_word(Demazure, reduced word of w, z^lambda).
// Independent of the chosen reduced word; requires lambda dominant.
TorusFn demazure_character(const WeylGroup& g, int w, const Weight& lambda);

bool is_dominant(const Weight& lambda);
bool is_regular_dominant(const Weight& lambda);

}  // namespace demwhit
