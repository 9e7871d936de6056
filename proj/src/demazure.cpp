#include "demazure.hpp"

#include <stdexcept>

namespace demwhit {

namespace {

void check_op_args(const RootSystem& rs, int i, const TorusFn& f) {
  rs.check_index(i);
  if (rs.rank() != f.rank())
    throw std::invalid_argument("operator argument from mismatched root system");
}

}  // namespace

// On a monomial z^mu with k = <mu, alpha_i^vee>:
//   k >= 0   ->  sum_{j=0}^{k} z^{mu - j alpha_i}
//   k = -1   ->  0
//   k <= -2  ->  -sum_{j=1}^{-k-1} z^{mu + j alpha_i}
TorusFn demazure(const RootSystem& rs, int i, const TorusFn& f) {
  check_op_args(rs, i, f);
  const Weight& alpha = rs.simple_root(i);
  TorusFn out(f.rank());
  for (const auto& [mu, c] : f.terms()) {
    long k = rs.pairing(mu, i);
    if (k >= 0) {
      Weight w = mu;
      for (long j = 0; j <= k; ++j) {
        out.add_term(w, c);
        w = w - alpha;
      }
    } else if (k <= -2) {
      Weight w = mu + alpha;
      for (long j = 1; j <= -k - 1; ++j) {
        out.add_term(w, -c);
        w = w + alpha;
      }
    }
  }
  return out;
}

// theta demazure theta, theta: z^mu -> z^{-mu}
TorusFn demazure_prime(const RootSystem& rs, int i, const TorusFn& f) {
  check_op_args(rs, i, f);
  const Weight& alpha = rs.simple_root(i);
  TorusFn out(f.rank());
  for (const auto& [mu, c] : f.terms()) {
    long k = rs.pairing(mu, i);
    if (k <= 0) {
      Weight w = mu;
      for (long j = 0; j <= -k; ++j) {
        out.add_term(w, c);
        w = w + alpha;
      }
    } else if (k >= 2) {
      Weight w = mu - alpha;
      for (long j = 1; j <= k - 1; ++j) {
        out.add_term(w, -c);
        w = w - alpha;
      }
    }
  }
  return out;
}

TorusFn op_D(const RootSystem& rs, int i, const TorusFn& f) {
  TorusFn d = demazure(rs, i, f);
  const Weight& alpha = rs.simple_root(i);
  TorusFn out = d;
  const VPoly v = VPoly::v();
  for (const auto& [mu, c] : d.terms()) out.add_term(mu - alpha, -(c * v));
  return out;
}

TorusFn op_D_prime(const RootSystem& rs, int i, const TorusFn& f) {
  TorusFn d = demazure_prime(rs, i, f);
  const Weight& alpha = rs.simple_root(i);
  TorusFn out = d;
  const VPoly v = VPoly::v();
  for (const auto& [mu, c] : d.terms()) out.add_term(mu + alpha, -(c * v));
  return out;
}

TorusFn op_T(const RootSystem& rs, int i, const TorusFn& f) { return op_D(rs, i, f) - f; }

TorusFn op_T_prime(const RootSystem& rs, int i, const TorusFn& f) {
  return op_D_prime(rs, i, f) - f;
}

TorusFn lusztig_op(const RootSystem& rs, int i, const TorusFn& f) {
  check_op_args(rs, i, f);
  const Weight rho = rs.rho();
  TorusFn shifted(f.rank());
  for (const auto& [mu, c] : f.terms()) shifted.add_term(mu - rho, c);
  TorusFn t = op_T(rs, i, shifted);
  TorusFn out(f.rank());
  for (const auto& [mu, c] : t.terms()) out.add_term(mu + rho, c);
  return out;
}

TorusFn apply_op(const RootSystem& rs, OpFamily fam, int i, const TorusFn& f) {
  switch (fam) {
    case OpFamily::Demazure: return demazure(rs, i, f);
    case OpFamily::DemazurePrime: return demazure_prime(rs, i, f);
    case OpFamily::D: return op_D(rs, i, f);
    case OpFamily::DPrime: return op_D_prime(rs, i, f);
    case OpFamily::T: return op_T(rs, i, f);
    case OpFamily::TPrime: return op_T_prime(rs, i, f);
    case OpFamily::LusztigPrime: return lusztig_op(rs, i, f);
  }
  throw std::logic_error("apply_op: unknown family");
}

TorusFn apply_word(const RootSystem& rs, OpFamily fam, const std::vector<int>& word, TorusFn f) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = apply_op(rs, fam, *it, f);
  return f;
}

bool is_dominant(const Weight& lambda) {
  for (long c : lambda)
    if (c < 0) return false;
  return true;
}

bool is_regular_dominant(const Weight& lambda) {
  for (long c : lambda)
    if (c < 1) return false;
  return true;
}

TorusFn demazure_character(const WeylGroup& g, int w, const Weight& lambda) {
  g.rs().check_weight(lambda);
  if (!is_dominant(lambda))
    throw std::invalid_argument("demazure_character requires a dominant weight, got " +
                                weight_str(lambda));
  return apply_word(g.rs(), OpFamily::Demazure, g.reduced_word(w),
                    TorusFn::monomial(lambda));
}

}  // namespace demwhit
