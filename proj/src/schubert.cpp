#include "schubert.hpp"

#include <stdexcept>

namespace demwhit {

namespace {

void require_ascent(const WeylGroup& g, int w, int s) {
  if (g.is_left_descent(s, w))
    throw std::invalid_argument("expected an ascent: s_" + std::to_string(s) +
                                " is a left descent of the given element");
}

void require_descent(const WeylGroup& g, int w, int s) {
  if (!g.is_left_descent(s, w))
    throw std::invalid_argument("expected a descent: s_" + std::to_string(s) +
                                " is a left ascent of the given element");
}

int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

std::vector<int> h_set(const WeylGroup& g, int w, int s) {
  require_ascent(g, w, s);
  std::vector<int> out;
  for (int u = 0; u < g.size(); ++u)
    if (g.bruhat_leq(u, w) && g.bruhat_leq(g.left_mul(s, u), w)) out.push_back(u);
  return out;
}

std::vector<int> h_prime_set(const WeylGroup& g, int w, int s) {
  require_descent(g, w, s);
  std::vector<int> out;
  for (int u = 0; u < g.size(); ++u)
    if (g.bruhat_leq(w, u) && g.bruhat_leq(w, g.left_mul(s, u))) out.push_back(u);
  return out;
}

std::map<int, long> correction_coeffs(const WeylGroup& g, int w, int s) {
  std::vector<int> h = h_set(g, w, s);
  std::map<int, long> out;
  for (int u = 0; u < g.size(); ++u) {
    long acc = 0;
    for (int t : h)
      if (g.bruhat_leq(u, t)) acc += sign_pow(g.length(t) - g.length(u));
    if (acc != 0) out.emplace(u, acc);
  }
  return out;
}

std::map<int, long> correction_coeffs_prime(const WeylGroup& g, int w, int s) {
  std::vector<int> h = h_prime_set(g, w, s);
  std::map<int, long> out;
  for (int u = 0; u < g.size(); ++u) {
    long acc = 0;
    for (int t : h)
      if (g.bruhat_leq(t, u)) acc += sign_pow(g.length(t) - g.length(u));
    if (acc != 0) out.emplace(u, acc);
  }
  return out;
}

int fiber_euler(const WeylGroup& g, int s, int w, int t) {
  require_ascent(g, w, s);
  int sw = g.left_mul(s, w);
  if (!g.bruhat_leq(t, sw))
    throw std::invalid_argument("fiber_euler: cell index not below sw");
  return g.bruhat_leq(t, w) && g.bruhat_leq(g.left_mul(s, t), w) ? 2 : 1;
}

bool verify_fiber_decomposition(const WeylGroup& g, int s, int w) {
  std::map<int, long> c = correction_coeffs(g, w, s);
  int sw = g.left_mul(s, w);
  for (int t = 0; t < g.size(); ++t) {
    long acc = 0;
    for (const auto& [u, cu] : c)
      if (g.bruhat_leq(t, u)) acc += cu;
    bool in_h = g.bruhat_leq(t, w) && g.bruhat_leq(g.left_mul(s, t), w);
    long expected = in_h ? 1 : 0;
    if (in_h && !g.bruhat_leq(t, sw))
      throw std::logic_error("fiber check: cell of H not below sw");
    if (acc != expected) return false;
  }
  return true;
}

Census census_prime(const WeylGroup& g) {
  Census census;
  census.summary = {{"zero", 0}, {"single", 0}, {"triple", 0}, {"other", 0}};
  for (int w = 0; w < g.size(); ++w) {
    for (int s = 1; s <= g.rs().rank(); ++s) {
      if (!g.is_left_descent(s, w)) continue;
      CensusEntry e;
      e.w = w;
      e.s = s;
      e.cprime = correction_coeffs_prime(g, w, s);
      if (e.cprime.empty()) {
        e.pattern = "zero";
      } else if (e.cprime.size() == 1 && e.cprime.begin()->second == 1) {
        e.pattern = "single";
      } else if (e.cprime.size() == 3) {
        int plus = 0, minus = 0;
        for (const auto& [u, c] : e.cprime) {
          if (c == 1) ++plus;
          if (c == -1) ++minus;
        }
        e.pattern = (plus == 2 && minus == 1) ? "triple" : "other";
      } else {
        e.pattern = "other";
      }
      ++census.summary[e.pattern];
      census.entries.push_back(std::move(e));
    }
  }
  return census;
}

}  // namespace demwhit
