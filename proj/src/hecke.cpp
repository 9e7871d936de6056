#include "hecke.hpp"

#include "demazure.hpp"

#include <sstream>
#include <stdexcept>

namespace demwhit {

VPoly HeckeElt::coeff(int w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? VPoly() : it->second;
}

void HeckeElt::add_term(int w, const VPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt HeckeElt::operator-() const {
  HeckeElt r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HeckeElt HeckeElt::scaled(const VPoly& c) const {
  HeckeElt r;
  if (c.is_zero()) return r;
  for (const auto& [w, p] : terms_) r.terms_.emplace(w, p * c);
  return r;
}

std::string HeckeElt::to_string(const WeylGroup& g) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*T[";
    const auto& word = g.reduced_word(w);
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (k) os << ",";
      os << word[k];
    }
    os << "]";
  }
  return os.str();
}

HeckeElt gen_mul_left(const WeylGroup& g, int s, const HeckeElt& h) {
  HeckeElt out;
  const VPoly v = VPoly::v();
  const VPoly vm1 = VPoly::v() - VPoly(1);
  for (const auto& [w, c] : h.terms()) {
    int sw = g.left_mul(s, w);
    if (g.length(sw) > g.length(w)) {
      out.add_term(sw, c);
    } else {
      out.add_term(w, c * vm1);
      out.add_term(sw, c * v);
    }
  }
  return out;
}

HeckeElt gen_inv_mul_left(const WeylGroup& g, int s, const HeckeElt& h) {
  const VPoly vinv = VPoly::v(-1);
  HeckeElt out = gen_mul_left(g, s, h).scaled(vinv);
  out += h.scaled(vinv - VPoly(1));
  return out;
}

HeckeElt hecke_mul(const WeylGroup& g, const HeckeElt& a, const HeckeElt& b) {
  HeckeElt out;
  for (const auto& [w, c] : a.terms()) {
    HeckeElt acc = b;
    const auto& word = g.reduced_word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = gen_mul_left(g, *it, acc);
    out += acc.scaled(c);
  }
  return out;
}

HeckeElt hecke_inverse_basis(const WeylGroup& g, int w) {
  HeckeElt out = HeckeElt::unit();
  for (int s : g.reduced_word(w)) out = gen_inv_mul_left(g, s, out);
  return out;
}

HeckeElt bar_involution(const WeylGroup& g, const HeckeElt& h) {
  HeckeElt out;
  for (const auto& [w, c] : h.terms())
    out += hecke_inverse_basis(g, g.inverse(w)).scaled(c.bar());
  return out;
}

KLTable kl_table(const WeylGroup& g) {
  const int n = g.size();
  KLTable t;
  t.group = &g;
  t.D.resize(static_cast<std::size_t>(n));
  t.D[0] = HeckeElt::unit();
  for (int w = 1; w < n; ++w) {
    int s = g.reduced_word(w)[0];
    int x = g.left_mul(s, w);
    HeckeElt Dw = gen_mul_left(g, s, t.D[static_cast<std::size_t>(x)]);
    Dw += t.D[static_cast<std::size_t>(x)];
    // subtract mu(z,x) v^{(l(w)-l(z))/2} D_z over z < x with sz < z
    for (int z = 0; z < x; ++z) {
      if (!g.bruhat_leq(z, x)) continue;
      if (!g.is_left_descent(s, z)) continue;
      long d = g.length(x) - g.length(z);
      if (d % 2 == 0) continue;
      Int mu = t.P(z, x).coeff((d - 1) / 2);
      if (mu == 0) continue;
      Dw -= t.D[static_cast<std::size_t>(z)].scaled(
          VPoly::monomial((g.length(w) - g.length(z)) / 2, mu));
    }
    t.D[static_cast<std::size_t>(w)] = std::move(Dw);
  }
  return t;
}

TorusFn t_basis_act(const WeylGroup& g, int w, const TorusFn& f) {
  return apply_word(g.rs(), OpFamily::T, g.reduced_word(w), f);
}

TorusFn module_act(const WeylGroup& g, const HeckeElt& h, const TorusFn& f) {
  TorusFn out(f.rank());
  for (const auto& [w, c] : h.terms()) out += t_basis_act(g, w, f).scaled(c);
  return out;
}

TorusFn zeta_act(const Weight& lambda, const TorusFn& f) {
  if (static_cast<int>(lambda.size()) != f.rank())
    throw std::invalid_argument("zeta_act: rank mismatch");
  TorusFn out(f.rank());
  for (const auto& [mu, c] : f.terms()) out.add_term(mu - lambda, c);
  return out;
}

TorusFn bernstein_residual(const RootSystem& rs, int i, const Weight& lambda, const Weight& mu) {
  rs.check_index(i);
  rs.check_weight(lambda);
  rs.check_weight(mu);
  const Weight& alpha = rs.simple_root(i);
  const TorusFn zmu = TorusFn::monomial(mu);

  TorusFn lhs = op_D(rs, i, zeta_act(lambda, zmu));
  lhs -= zeta_act(rs.reflect_simple(i, lambda), op_D(rs, i, zmu));

  // rhs = (v - z^alpha) z^{mu-lambda} (1 - z^{k alpha})/(1 - z^alpha), k = <lambda, alpha_i^vee>
  long k = rs.pairing(lambda, i);
  TorusFn geo(rs.rank());
  if (k >= 0) {
    Weight w(static_cast<std::size_t>(rs.rank()), 0);
    for (long j = 0; j < k; ++j) {
      geo.add_term(w, VPoly(1));
      w = w + alpha;
    }
  } else {
    Weight w = k * alpha;
    for (long j = k; j < 0; ++j) {
      geo.add_term(w, VPoly(-1));
      w = w + alpha;
    }
  }
  TorusFn factor(rs.rank());
  factor.add_term(Weight(static_cast<std::size_t>(rs.rank()), 0), VPoly::v());
  factor.add_term(alpha, VPoly(-1));
  TorusFn rhs = factor * TorusFn::monomial(mu - lambda) * geo;

  return lhs - rhs;
}

}  // namespace demwhit
