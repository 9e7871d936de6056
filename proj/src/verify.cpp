#include "verify.hpp"

#include "demazure.hpp"
#include "hecke.hpp"
#include "schubert.hpp"
#include "torus.hpp"
#include "whittaker.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace demwhit {

namespace {

struct Reporter {
  VerifyResult out;

  void check(bool ok, const std::string& name, const std::string& witness = "") {
    if (ok) {
      out.lines.push_back("PASS " + name);
    } else {
      out.lines.push_back("FAIL " + name + (witness.empty() ? "" : ": " + witness));
      ++out.failures;
    }
  }
};

const char* family_name(OpFamily fam) {
  switch (fam) {
    case OpFamily::Demazure: return "partial";
    case OpFamily::DemazurePrime: return "partial'";
    case OpFamily::D: return "D";
    case OpFamily::DPrime: return "D'";
    case OpFamily::T: return "T";
    case OpFamily::TPrime: return "T'";
    case OpFamily::LusztigPrime: return "L'";
  }
  return "?";
}

Weight random_weight(std::mt19937_64& rng, int rank) {
  Weight mu(static_cast<std::size_t>(rank));
  for (auto& c : mu) c = static_cast<long>(rng() % 7) - 3;
  return mu;
}

Weight probe_weight(const WeylGroup& g, const Weight* weight) {
  if (!weight) return g.rs().rho();
  g.rs().check_weight(*weight);
  return *weight;
}

std::vector<int> alternating_word(int i, int j, int m) {
  std::vector<int> word;
  for (int k = 0; k < m; ++k) word.push_back(k % 2 == 0 ? i : j);
  return word;
}

void suite_braid(const WeylGroup& g, Reporter& rep, std::uint64_t seed, int trials) {
  const RootSystem& rs = g.rs();
  for (OpFamily fam :
       {OpFamily::Demazure, OpFamily::DemazurePrime, OpFamily::T, OpFamily::TPrime,
        OpFamily::LusztigPrime}) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    bool ok = true;
    std::string witness;
    for (int i = 1; i <= rs.rank() && ok; ++i)
      for (int j = i + 1; j <= rs.rank() && ok; ++j) {
        int m = rs.coxeter_m(i, j);
        for (int t = 0; t < trials && ok; ++t) {
          TorusFn f = TorusFn::monomial(random_weight(rng, rs.rank()));
          if (apply_word(rs, fam, alternating_word(i, j, m), f) !=
              apply_word(rs, fam, alternating_word(j, i, m), f)) {
            ok = false;
            std::ostringstream os;
            os << "(i,j) = (" << i << "," << j << "), f = " << f.to_string();
            witness = os.str();
          }
        }
      }
    rep.check(ok, std::string("braid relations for ") + family_name(fam), witness);
  }
}

void suite_quadratic(const WeylGroup& g, Reporter& rep, std::uint64_t seed, int trials) {
  const RootSystem& rs = g.rs();
  std::mt19937_64 rng(seed ^ 0xbf58476d1ce4e5b9ULL);
  VPoly v = VPoly::v();
  VPoly one(1);

  auto scan = [&](const std::string& name,
                  const std::function<bool(int, const TorusFn&)>& holds) {
    bool ok = true;
    std::string witness;
    for (int t = 0; t < trials && ok; ++t) {
      TorusFn f = TorusFn::monomial(random_weight(rng, rs.rank()));
      for (int i = 1; i <= rs.rank() && ok; ++i)
        if (!holds(i, f)) {
          ok = false;
          witness = "i = " + std::to_string(i) + ", f = " + f.to_string();
        }
    }
    rep.check(ok, name, witness);
  };

  scan("partial_i is idempotent", [&](int i, const TorusFn& f) {
    TorusFn d = demazure(rs, i, f);
    return demazure(rs, i, d) == d;
  });
  scan("s_i fixes the image of partial_i", [&](int i, const TorusFn& f) {
    TorusFn d = demazure(rs, i, f);
    return weyl_twist(g, g.from_word({i}), d) == d;
  });
  scan("partial'_i z^alpha partial'_i = -partial'_i", [&](int i, const TorusFn& f) {
    TorusFn d = demazure_prime(rs, i, f);
    return demazure_prime(rs, i, TorusFn::monomial(rs.simple_root(i)) * d) == -d;
  });
  scan("D_i^2 = (1+v) D_i", [&](int i, const TorusFn& f) {
    TorusFn d = op_D(rs, i, f);
    return op_D(rs, i, d) == d.scaled(one + v);
  });
  scan("D'_i^2 = (1+v) D'_i", [&](int i, const TorusFn& f) {
    TorusFn d = op_D_prime(rs, i, f);
    return op_D_prime(rs, i, d) == d.scaled(one + v);
  });
  for (OpFamily fam : {OpFamily::T, OpFamily::TPrime, OpFamily::LusztigPrime}) {
    scan(std::string(family_name(fam)) + "_i^2 = (v-1) " + family_name(fam) + "_i + v",
         [&](int i, const TorusFn& f) {
           TorusFn d = apply_op(rs, fam, i, f);
           return apply_op(rs, fam, i, d) == d.scaled(v - one) + f.scaled(v);
         });
  }
  scan("T_i = theta T'_i theta", [&](int i, const TorusFn& f) {
    return op_T_prime(rs, i, f.inverted_z()).inverted_z() == op_T(rs, i, f);
  });
}

void suite_recursion_vs_hecke(const WeylGroup& g, Reporter& rep, const Weight& lam,
                              std::uint64_t seed) {
  WhittakerTable table(g, lam);
  std::vector<TorusFn> rec = x_table_recursive(g, lam);

  bool ok = true;
  std::string witness;
  for (int w = 0; w < g.size() && ok; ++w)
    if (rec[static_cast<std::size_t>(w)] != table.X(w)) {
      ok = false;
      witness = "w index " + std::to_string(w);
    }
  rep.check(ok, "recursive X table matches the Hecke route", witness);

  std::mt19937_64 rng(seed ^ 0x94d049bb133111ebULL);
  std::vector<TorusFn> picked = x_table_recursive(g, lam, [&](int w) {
    std::vector<int> ds = g.left_descents(w);
    return ds[rng() % ds.size()];
  });
  ok = true;
  witness.clear();
  for (int w = 0; w < g.size() && ok; ++w)
    if (picked[static_cast<std::size_t>(w)] != table.X(w)) {
      ok = false;
      witness = "w index " + std::to_string(w);
    }
  rep.check(ok, "recursive X table is independent of the descent choice", witness);

  ok = true;
  witness.clear();
  for (int w = 0; w < g.size() && ok; ++w) {
    TorusFn acc(g.rs().rank());
    for (int u = 0; u < g.size(); ++u) {
      int mu = g.mobius(u, w);
      if (mu) acc += table.X(u).scaled(VPoly(mu));
    }
    if (acc != table.Y(w)) {
      ok = false;
      witness = "w index " + std::to_string(w);
    }
  }
  rep.check(ok, "Moebius inversion recovers Y from X", witness);
}

void suite_specialization(const WeylGroup& g, Reporter& rep, const Weight& lam, bool at_zero) {
  WhittakerTable table(g, lam);
  bool ok = true;
  std::string witness;
  for (int w = 0; w < g.size() && ok; ++w)
    if (!(at_zero ? check_v0(table, w) : check_v1(table, w))) {
      ok = false;
      witness = "w index " + std::to_string(w);
    }
  rep.check(ok,
            at_zero ? "X at v = 0 is the Demazure character"
                    : "X at v = 1 is the signed orbit sum",
            witness);
}

void suite_bernstein(const WeylGroup& g, Reporter& rep, std::uint64_t seed, int trials) {
  const RootSystem& rs = g.rs();
  std::mt19937_64 rng(seed ^ 0xd6e8feb86659fd93ULL);

  std::vector<Weight> lambdas;
  for (int i = 1; i <= rs.rank(); ++i) lambdas.push_back(rs.fundamental_weight(i));
  lambdas.push_back(rs.rho());
  lambdas.push_back(-rs.fundamental_weight(1));

  bool ok = true;
  std::string witness;
  for (const Weight& lam : lambdas)
    for (int i = 1; i <= rs.rank() && ok; ++i)
      for (int t = 0; t < trials && ok; ++t) {
        Weight mu = random_weight(rng, rs.rank());
        if (!bernstein_residual(rs, i, lam, mu).is_zero()) {
          ok = false;
          witness = "i = " + std::to_string(i) + ", lambda = " + weight_str(lam) +
                    ", mu = " + weight_str(mu);
        }
      }
  rep.check(ok, "Bernstein presentation relation", witness);
}

void suite_fibers(const WeylGroup& g, Reporter& rep, const Weight& lam) {
  bool geo_ok = true;
  std::string geo_witness;
  for (int w = 0; w < g.size(); ++w)
    for (int s = 1; s <= g.rs().rank(); ++s) {
      if (g.is_left_descent(s, w)) continue;
      if (!verify_fiber_decomposition(g, s, w)) {
        geo_ok = false;
        geo_witness = "s = " + std::to_string(s) + ", w index " + std::to_string(w);
      }
    }
  rep.check(geo_ok, "fiber Euler characteristics match the correction coefficients",
            geo_witness);

  WhittakerTable table(g, lam);
  bool alg_ok = true;
  std::string alg_witness;
  for (int w = 0; w < g.size() && alg_ok; ++w)
    for (int s = 1; s <= g.rs().rank() && alg_ok; ++s) {
      if (g.is_left_descent(s, w)) continue;
      if (extract_correction_coeffs(table, w, s) != correction_coeffs(g, w, s)) {
        alg_ok = false;
        alg_witness = "s = " + std::to_string(s) + ", w index " + std::to_string(w);
      }
    }
  rep.check(alg_ok, "extracted correction coefficients match the combinatorial ones",
            alg_witness);
}

void suite_sign_rep(const WeylGroup& g, Reporter& rep, std::uint64_t seed, int trials) {
  const RootSystem& rs = g.rs();
  TorusFn sgn = TorusFn::monomial(-rs.rho());

  bool ok = true;
  std::string witness;
  for (int i = 1; i <= rs.rank(); ++i)
    if (!op_D(rs, i, sgn).is_zero()) {
      ok = false;
      witness = "i = " + std::to_string(i);
    }
  rep.check(ok, "D_i annihilates z^{-rho}", witness);

  ok = true;
  witness.clear();
  for (int i = 1; i <= rs.rank(); ++i)
    if (op_T(rs, i, sgn) != -sgn) {
      ok = false;
      witness = "i = " + std::to_string(i);
    }
  rep.check(ok, "T_i acts by -1 on z^{-rho}", witness);

  std::mt19937_64 rng(seed ^ 0x2545f4914f6cdd1dULL);
  ok = true;
  witness.clear();
  for (int t = 0; t < trials && ok; ++t) {
    Weight lam = random_weight(rng, rs.rank());
    if (zeta_act(lam, sgn) != TorusFn::monomial(-lam - rs.rho())) {
      ok = false;
      witness = "lambda = " + weight_str(lam);
    }
  }
  rep.check(ok, "zeta^lambda shifts z^{-rho} to z^{-lambda-rho}", witness);
}

void suite_lusztig_conjugation(const WeylGroup& g, Reporter& rep, std::uint64_t seed,
                               int trials) {
  const RootSystem& rs = g.rs();
  std::mt19937_64 rng(seed ^ 0x853c49e6748fea9bULL);
  bool ok = true;
  std::string witness;
  for (int t = 0; t < trials && ok; ++t) {
    TorusFn f = TorusFn::monomial(random_weight(rng, rs.rank()));
    for (int i = 1; i <= rs.rank() && ok; ++i) {
      TorusFn numer = f.scaled(VPoly(1) - VPoly::v()) +
                      (TorusFn::monomial(Weight(static_cast<std::size_t>(rs.rank()), 0),
                                         VPoly::v()) -
                       TorusFn::monomial(rs.simple_root(i))) *
                          weyl_twist(g, g.from_word({i}), f);
      TorusFn direct = divide_by_root_minus_one(rs, i, numer);
      if (direct != lusztig_op(rs, i, f)) {
        ok = false;
        witness = "i = " + std::to_string(i) + ", f = " + f.to_string();
      }
    }
  }
  rep.check(ok, "closed rational form of L'_i matches the conjugated operator", witness);
}

void suite_kl(const WeylGroup& g, Reporter& rep, const Weight& lam) {
  KLTable kl = kl_table(g);

  bool ok = true;
  std::string witness;
  for (int w = 0; w < g.size(); ++w) {
    HeckeElt barred = bar_involution(g, kl.D[static_cast<std::size_t>(w)]);
    if (barred.scaled(VPoly::v(g.length(w))) != kl.D[static_cast<std::size_t>(w)]) {
      ok = false;
      witness = "w index " + std::to_string(w);
    }
  }
  rep.check(ok, "D_w is bar-invariant up to v^{l(w)}", witness);

  ok = true;
  witness.clear();
  for (int w = 0; w < g.size(); ++w)
    if (kl.P(w, w) != VPoly(1)) {
      ok = false;
      witness = "w index " + std::to_string(w);
    }
  rep.check(ok, "P_{w,w} = 1", witness);

  ok = true;
  witness.clear();
  for (int w = 0; w < g.size(); ++w)
    for (const auto& [u, p] : kl.D[static_cast<std::size_t>(w)].terms()) {
      if (u == w) continue;
      if (p.lo() < 0 || 2 * p.degree() > g.length(w) - g.length(u) - 1) {
        ok = false;
        witness = "u index " + std::to_string(u) + ", w index " + std::to_string(w);
      }
    }
  rep.check(ok, "deg P_{u,w} <= (l(w) - l(u) - 1)/2 for u < w", witness);

  ok = true;
  witness.clear();
  for (int w = 0; w < g.size(); ++w)
    for (const auto& [u, p] : kl.D[static_cast<std::size_t>(w)].terms())
      for (const Int& c : p.coeffs())
        if (c < 0) {
          ok = false;
          witness = "u index " + std::to_string(u) + ", w index " + std::to_string(w);
        }
  rep.check(ok, "P_{u,w} has nonnegative coefficients", witness);

  WhittakerTable table(g, lam);
  ok = true;
  witness.clear();
  for (int w = 0; w < g.size(); ++w) {
    bool all_one = true;
    for (const auto& [u, p] : kl.D[static_cast<std::size_t>(w)].terms())
      if (p != VPoly(1)) all_one = false;
    bool equal = c_basis(g, kl, w, lam) == table.X(w);
    if (equal != all_one) {
      ok = false;
      witness = "w index " + std::to_string(w);
    }
  }
  rep.check(ok, "X_w = C_w exactly when every P_{u,w} = 1", witness);
}

}  // namespace

VerifyResult run_suite(const WeylGroup& g, const std::string& suite, const Weight* weight,
                       std::uint64_t seed, int trials) {
  Reporter rep;
  Weight lam = probe_weight(g, weight);
  bool known = false;

  auto want = [&](const char* name) {
    bool hit = suite == name || suite == "all";
    if (suite == name) known = true;
    return hit;
  };

  if (want("braid")) suite_braid(g, rep, seed, trials);
  if (want("quadratic")) suite_quadratic(g, rep, seed, trials);
  if (want("recursion-vs-hecke")) suite_recursion_vs_hecke(g, rep, lam, seed);
  if (want("v0")) suite_specialization(g, rep, lam, true);
  if (want("v1")) suite_specialization(g, rep, lam, false);
  if (want("bernstein")) suite_bernstein(g, rep, seed, trials);
  if (want("fibers")) suite_fibers(g, rep, lam);
  if (want("sign-rep")) suite_sign_rep(g, rep, seed, trials);
  if (want("lusztig-conjugation")) suite_lusztig_conjugation(g, rep, seed, trials);
  if (want("kl")) suite_kl(g, rep, lam);

  if (!known && suite != "all")
    throw std::invalid_argument(
        "unknown suite '" + suite +
        "' (expected braid, quadratic, recursion-vs-hecke, v0, v1, bernstein, fibers, "
        "sign-rep, lusztig-conjugation, kl or all)");
  return rep.out;
}

}  // namespace demwhit
