#pragma once

#include "root_weyl.hpp"

#include <map>
#include <string>
#include <vector>

namespace demwhit {

// H(w,s) = { u : u <= w and su <= w }, defined for ascents (sw > w);
// downward closed in Bruhat order and stable under left multiplication by s.
std::vector<int> h_set(const WeylGroup& g, int w, int s);

// H'(w,s) = { u : u >= w and su >= w }, defined for descents (sw < w);
// upward closed and stable under left multiplication by s.
std::vector<int> h_prime_set(const WeylGroup& g, int w, int s);

// c_{w,s}(u) = sum_{t in H(w,s), t >= u} (-1)^(l(t)-l(u)); zero values dropped
std::map<int, long> correction_coeffs(const WeylGroup& g, int w, int s);

// c'_{w,s}(u) = sum_{t in H'(w,s), t <= u} (-1)^(l(t)-l(u)); zero values dropped
std::map<int, long> correction_coeffs_prime(const WeylGroup& g, int w, int s);

// Euler characteristic of the fiber of Z_{s,w} -> X_{sw} over the cell of t:
// 2 when t and st both lie below w (a projective line), else 1 (a point).
int fiber_euler(const WeylGroup& g, int s, int w, int t);

// For every t, sum_{u in H(w,s), u >= t} c_{w,s}(u) must equal 1 when the
// fiber over t is a projective line and 0 otherwise.
bool verify_fiber_decomposition(const WeylGroup& g, int s, int w);

struct CensusEntry {
  int w = 0;
  int s = 0;
  std::map<int, long> cprime;
  std::string pattern;  // "zero" | "single" | "triple" | "other"
};

struct Census {
  std::vector<CensusEntry> entries;  // one per descent pair, ordered by (l(w), word(w), s)
  std::map<std::string, int> summary;
};

// classification of c'_{w,s} over all descent pairs (sw < w)
Census census_prime(const WeylGroup& g);

}  // namespace demwhit
