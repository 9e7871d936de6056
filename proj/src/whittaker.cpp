#include "whittaker.hpp"

#include "demazure.hpp"
#include "schubert.hpp"

#include <set>
#include <stdexcept>

namespace demwhit {

namespace {

void require_dominant(const WeylGroup& g, const Weight& lambda) {
  g.rs().check_weight(lambda);
  if (!is_dominant(lambda))
    throw std::invalid_argument("weight " + weight_str(lambda) + " is not dominant");
}

void require_regular_dominant(const WeylGroup& g, const Weight& lambda) {
  g.rs().check_weight(lambda);
  if (!is_regular_dominant(lambda))
    throw std::invalid_argument("weight " + weight_str(lambda) +
                                " is not regular dominant (all coords >= 1)");
}

void require_ascent(const WeylGroup& g, int w, int s) {
  if (g.is_left_descent(s, w))
    throw std::invalid_argument("expected an ascent: s_" + std::to_string(s) +
                                " is a left descent of the given element");
}

}  // namespace

WhittakerTable::WhittakerTable(const WeylGroup& g, Weight lambda) : g_(&g), lambda_(std::move(lambda)) {
  require_dominant(g, lambda_);
  const int n = g.size();
  y_.reserve(static_cast<std::size_t>(n));
  y_.push_back(TorusFn::monomial(lambda_));
  for (int w = 1; w < n; ++w) {
    int s = g.reduced_word(w)[0];
    y_.push_back(op_T(g.rs(), s, y_[static_cast<std::size_t>(g.left_mul(s, w))]));
  }
  x_.reserve(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w) {
    TorusFn acc(g.rs().rank());
    for (int u = 0; u <= w; ++u)
      if (g.bruhat_leq(u, w)) acc += y_[static_cast<std::size_t>(u)];
    x_.push_back(std::move(acc));
  }
}

TorusFn y_basis(const WeylGroup& g, int w, const Weight& lambda) {
  require_dominant(g, lambda);
  return t_basis_act(g, w, TorusFn::monomial(lambda));
}

TorusFn x_basis_hecke(const WeylGroup& g, int w, const Weight& lambda) {
  WhittakerTable t(g, lambda);
  return t.X(w);
}

std::vector<TorusFn> x_table_recursive(const WeylGroup& g, const Weight& lambda,
                                       const std::function<int(int)>& pick) {
  require_dominant(g, lambda);
  const int n = g.size();
  std::vector<TorusFn> x;
  x.reserve(static_cast<std::size_t>(n));
  x.push_back(TorusFn::monomial(lambda));
  const VPoly v = VPoly::v();
  for (int e = 1; e < n; ++e) {
    int s = pick ? pick(e) : g.reduced_word(e)[0];
    if (!g.is_left_descent(s, e))
      throw std::invalid_argument("x_table_recursive: picked index is not a descent");
    int w = g.left_mul(s, e);
    TorusFn acc = op_D(g.rs(), s, x[static_cast<std::size_t>(w)]);
    for (const auto& [u, cu] : correction_coeffs(g, w, s))
      acc -= x[static_cast<std::size_t>(u)].scaled(VPoly::monomial(1, Int(cu)));
    x.push_back(std::move(acc));
  }
  return x;
}

TorusFn x_basis_recursive(const WeylGroup& g, int w, const Weight& lambda) {
  return x_table_recursive(g, lambda)[static_cast<std::size_t>(w)];
}

TorusFn z_word(const WeylGroup& g, const std::vector<int>& word, const Weight& lambda) {
  require_dominant(g, lambda);
  for (int s : word) g.rs().check_index(s);
  return apply_word(g.rs(), OpFamily::D, word, TorusFn::monomial(lambda));
}

TorusFn z_partial(const WeylGroup& g, int s, int w, const Weight& lambda) {
  require_ascent(g, w, s);
  return op_D(g.rs(), s, x_basis_recursive(g, w, lambda));
}

namespace {

RationalFn signed_orbit_sum(const WeylGroup& g, int w, const Weight& lambda) {
  const Weight shifted = lambda + g.rs().rho();
  RationalFn out;
  for (int u = 0; u < g.size(); ++u) {
    if (!g.bruhat_leq(u, w)) continue;
    Weight mu = g.act(u, shifted) - g.rs().rho();
    Rational sgn(g.length(u) % 2 == 0 ? 1 : -1);
    auto [it, inserted] = out.emplace(mu, sgn);
    if (!inserted) {
      it->second += sgn;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

}  // namespace

bool check_v0(const WhittakerTable& t, int w) {
  RationalFn lhs = specialize_v(t.X(w), Rational(0));
  RationalFn rhs = specialize_v(demazure_character(t.group(), w, t.lambda()), Rational(0));
  return lhs == rhs;
}

bool check_v1(const WhittakerTable& t, int w) {
  RationalFn lhs = specialize_v(t.X(w), Rational(1));
  return lhs == signed_orbit_sum(t.group(), w, t.lambda());
}

bool check_v0(const WeylGroup& g, int w, const Weight& lambda) {
  return check_v0(WhittakerTable(g, lambda), w);
}

bool check_v1(const WeylGroup& g, int w, const Weight& lambda) {
  return check_v1(WhittakerTable(g, lambda), w);
}

TorusFn c_basis(const WeylGroup& g, const KLTable& kl, int w, const Weight& lambda) {
  require_dominant(g, lambda);
  return module_act(g, kl.D[static_cast<std::size_t>(w)], TorusFn::monomial(lambda));
}

std::map<int, bool> smoothness_census(const WeylGroup& g, const Weight& lambda) {
  require_regular_dominant(g, lambda);
  WhittakerTable t(g, lambda);
  KLTable kl = kl_table(g);
  std::map<int, bool> out;
  for (int w = 0; w < g.size(); ++w) {
    TorusFn c(g.rs().rank());
    for (const auto& [u, p] : kl.D[static_cast<std::size_t>(w)].terms())
      c += t.Y(u).scaled(p);
    out.emplace(w, c == t.X(w));
  }
  return out;
}

namespace {

// Exact Gaussian elimination.  Returns false when the system has no unique
// solution (rank < columns); throws std::domain_error when inconsistent.
bool solve_unique(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  std::vector<Rational>& out) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_row_of_col(cols, SIZE_MAX);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = SIZE_MAX;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p == SIZE_MAX) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_row_of_col[c] = r;
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) throw std::domain_error("extraction: inconsistent linear system");
  for (std::size_t c = 0; c < cols; ++c)
    if (pivot_row_of_col[c] == SIZE_MAX) return false;
  out.assign(cols, Rational(0));
  for (std::size_t c = 0; c < cols; ++c) out[c] = b[pivot_row_of_col[c]];
  return true;
}

}  // namespace

std::map<int, long> extract_correction_coeffs(const WhittakerTable& t, int w, int s) {
  const WeylGroup& g = t.group();
  require_ascent(g, w, s);
  require_regular_dominant(g, t.lambda());
  const int n = g.size();
  int sw = g.left_mul(s, w);
  TorusFn residue = op_D(g.rs(), s, t.X(w)) - t.X(sw);
  if (residue.is_zero()) return {};
  TorusFn target = residue.divided_by_v(1);

  std::set<Weight> support;
  for (const auto& [mu, c] : target.terms()) support.insert(mu);
  for (int u = 0; u < n; ++u)
    for (const auto& [mu, c] : t.X(u).terms()) support.insert(mu);

  std::vector<Rational> solution;
  bool solved = false;
  for (long sample : {2L, 3L, 5L, 7L}) {
    Rational v0(sample);
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    a.reserve(support.size());
    b.reserve(support.size());
    for (const Weight& mu : support) {
      std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
      for (int u = 0; u < n; ++u) row[static_cast<std::size_t>(u)] = t.X(u).coeff(mu).eval(v0);
      a.push_back(std::move(row));
      b.push_back(target.coeff(mu).eval(v0));
    }
    if (solve_unique(std::move(a), std::move(b), solution)) {
      solved = true;
      break;
    }
  }
  if (!solved)
    throw std::domain_error("extraction: X family rank-deficient at all sample points");

  std::map<int, long> out;
  TorusFn recon(g.rs().rank());
  for (int u = 0; u < n; ++u) {
    const Rational& c = solution[static_cast<std::size_t>(u)];
    if (c == 0) continue;
    if (boost::multiprecision::denominator(c) != 1)
      throw std::domain_error("extraction: non-integer coefficient on X component");
    Int num = boost::multiprecision::numerator(c);
    out.emplace(u, num.convert_to<long>());
    recon += t.X(u).scaled(VPoly(num));
  }
  if (recon != target)
    throw std::domain_error("extraction: candidate solution failed exact recheck");
  return out;
}

}  // namespace demwhit
