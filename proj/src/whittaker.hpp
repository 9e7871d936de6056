#pragma once

#include "hecke.hpp"
#include "root_weyl.hpp"
#include "torus.hpp"

#include <functional>
#include <map>
#include <vector>

namespace demwhit {

// Per-(group, weight) table of the Y and X families, computed once by the
// Hecke-module route: Y_w = T_w . z^lambda, X_w = sum_{u <= w} Y_u.
class WhittakerTable {
public:
  WhittakerTable(const WeylGroup& g, Weight lambda);

  const WeylGroup& group() const { return *g_; }
  const Weight& lambda() const { return lambda_; }
  const TorusFn& Y(int w) const { return y_[static_cast<std::size_t>(w)]; }
  const TorusFn& X(int w) const { return x_[static_cast<std::size_t>(w)]; }

private:
  const WeylGroup* g_;
  Weight lambda_;
  std::vector<TorusFn> y_, x_;
};

TorusFn y_basis(const WeylGroup& g, int w, const Weight& lambda);
TorusFn x_basis_hecke(const WeylGroup& g, int w, const Weight& lambda);

// X over the whole group by the descent recursion
//   X_e = z^lambda,  X_{sw} = D_s X_w - v sum_u c_{w,s}(u) X_u,
// where pick(x) selects which left descent to peel (smallest when empty).
std::vector<TorusFn> x_table_recursive(const WeylGroup& g, const Weight& lambda,
                                       const std::function<int(int)>& pick = {});
TorusFn x_basis_recursive(const WeylGroup& g, int w, const Weight& lambda);

// Bott-Samelson value: D-family word applied to z^lambda; any word is allowed
TorusFn z_word(const WeylGroup& g, const std::vector<int>& word, const Weight& lambda);
// Z_{s,w} = D_s X_w for an ascent s of w
TorusFn z_partial(const WeylGroup& g, int s, int w, const Weight& lambda);

// specialization checks at v = 0 (Demazure character) and v = 1 (signed orbit sum)
bool check_v0(const WhittakerTable& t, int w);
bool check_v1(const WhittakerTable& t, int w);
bool check_v0(const WeylGroup& g, int w, const Weight& lambda);
bool check_v1(const WeylGroup& g, int w, const Weight& lambda);

// KL-weighted basis: sum_u P_{u,w}(v) T_u . z^lambda
TorusFn c_basis(const WeylGroup& g, const KLTable& kl, int w, const Weight& lambda);

// per-element flag X_w == C_w; requires a regular dominant weight
std::map<int, bool> smoothness_census(const WeylGroup& g, const Weight& lambda);

// Recovers the correction coefficients from the residue Z_{s,w} - X_{sw} by an
// exact linear solve over the X family: the residue must equal
// v * sum_u c_u X_u with integer constants c_u.  The solution is found by
// Gaussian elimination at a sample value of v (full column rank certifies
// uniqueness) and then certified by exact re-expansion.  Throws
// std::domain_error when no such representation exists.
std::map<int, long> extract_correction_coeffs(const WhittakerTable& t, int w, int s);

}  // namespace demwhit
