#pragma once

#include "root_weyl.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace demwhit {

struct VerifyResult {
  std::vector<std::string> lines;  // "PASS <identity>" or "FAIL <identity>: <witness>"
  int failures = 0;
};

// Runs one named property suite against a fully enumerated group.  `weight`
// overrides the probe weight (rho when null); `seed` and `trials` drive the
// randomized checks, which are deterministic for a fixed seed.  Suites:
// braid, quadratic, recursion-vs-hecke, v0, v1, bernstein, fibers, sign-rep,
// lusztig-conjugation, kl, all.  Throws std::invalid_argument on an unknown
// suite name.
VerifyResult run_suite(const WeylGroup& g, const std::string& suite, const Weight* weight,
                       std::uint64_t seed, int trials);

}  // namespace demwhit
