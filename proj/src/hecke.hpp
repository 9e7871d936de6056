#pragma once

#include "root_weyl.hpp"
#include "torus.hpp"

#include <map>
#include <vector>

namespace demwhit {

// Element of the Iwahori-Hecke algebra H_v in the T-basis, indexed by Weyl
// element indices of a fixed group.  Zero coefficients are never stored.
class HeckeElt {
public:
  HeckeElt() = default;
  static HeckeElt basis(int w) { HeckeElt h; h.terms_.emplace(w, VPoly(1)); return h; }
  static HeckeElt unit() { return basis(0); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, VPoly>& terms() const { return terms_; }
  VPoly coeff(int w) const;
  void add_term(int w, const VPoly& c);

  HeckeElt operator-() const;
  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { a += b; return a; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { a -= b; return a; }
  HeckeElt scaled(const VPoly& c) const;

  bool operator==(const HeckeElt& o) const { return terms_ == o.terms_; }
  bool operator!=(const HeckeElt& o) const { return !(*this == o); }

  std::string to_string(const WeylGroup& g) const;

private:
  std::map<int, VPoly> terms_;
};

// T_s * h by the quadratic rule: T_s T_w = T_{sw} when l(sw) > l(w),
// else (v-1) T_w + v T_{sw}.
HeckeElt gen_mul_left(const WeylGroup& g, int s, const HeckeElt& h);
// T_s^{-1} * h = v^{-1} T_s h + (v^{-1} - 1) h
HeckeElt gen_inv_mul_left(const WeylGroup& g, int s, const HeckeElt& h);

HeckeElt hecke_mul(const WeylGroup& g, const HeckeElt& a, const HeckeElt& b);
// T_w^{-1} expanded in the T-basis
HeckeElt hecke_inverse_basis(const WeylGroup& g, int w);
// bar: v -> v^{-1}, T_w -> T_{w^{-1}}^{-1}
HeckeElt bar_involution(const WeylGroup& g, const HeckeElt& h);

// Kazhdan-Lusztig data: D[w] = v^{l(w)/2} C'_w = sum_{u <= w} P_{u,w}(v) T_u.
struct KLTable {
  std::vector<HeckeElt> D;
  const WeylGroup* group = nullptr;
  VPoly P(int u, int w) const { return D[static_cast<std::size_t>(w)].coeff(u); }
};
KLTable kl_table(const WeylGroup& g);

// Left module action on torus functions via T_i -> Demazure-Lusztig operator,
// leftmost reduced-word letter applied outermost.
TorusFn module_act(const WeylGroup& g, const HeckeElt& h, const TorusFn& f);
TorusFn t_basis_act(const WeylGroup& g, int w, const TorusFn& f);
// zeta^lambda acts by multiplication with z^{-lambda}
TorusFn zeta_act(const Weight& lambda, const TorusFn& f);

// (T_i + 1) zeta^lambda - zeta^{s_i lambda} (T_i + 1) applied to z^mu, minus
// the Bernstein right-hand side expanded as an exact geometric sum; zero when
// the presentation relation holds.
TorusFn bernstein_residual(const RootSystem& rs, int i, const Weight& lambda, const Weight& mu);

}  // namespace demwhit
