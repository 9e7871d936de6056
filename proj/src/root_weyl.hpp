#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace demwhit {

// Integral weight in fundamental-weight coordinates: coords[i] = <lambda, alpha_i^vee>.
using Weight = std::vector<long>;

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(long c, const Weight& a);
std::string weight_str(const Weight& w);

// Cartan data for one of the finite families A, B, C, D, G, F.
// cartan(i, j) = <alpha_j, alpha_i^vee>, so column j holds the weight
// coordinates of the simple root alpha_j.
class RootSystem {
public:
  static RootSystem build(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  long cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }
  const Weight& simple_root(int i) const;
  const Weight& rho() const { return rho_; }
  Weight fundamental_weight(int i) const;
  // order m(i, j) of s_i s_j, with m(i, i) = 1
  int coxeter_m(int i, int j) const;
  // |W| by the closed product formula
  std::uint64_t weyl_order() const;

  // <lambda, alpha_i^vee>
  long pairing(const Weight& lambda, int i) const;
  // s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i
  Weight reflect_simple(int i, const Weight& lambda) const;

  void check_weight(const Weight& lambda) const;
  void check_index(int i) const;

private:
  RootSystem() = default;
  char type_ = 'A';
  int rank_ = 0;
  std::vector<long> cartan_;          // row-major rank x rank
  std::vector<Weight> simple_roots_;  // column i of the Cartan matrix
  Weight rho_;
};

// Finite Weyl group, fully enumerated.  Elements are dense indices
// 0..size()-1 sorted by (length, lexicographically minimal reduced word);
// index 0 is the identity.  Element identity is the action matrix on the
// weight lattice, so two routes to the same element yield the same index.
class WeylGroup {
public:
  // Enumerates by closure over the simple reflections; throws std::domain_error
  // naming |W| when it exceeds `bound`.
  static WeylGroup enumerate(const RootSystem& rs, std::size_t bound = 10000);

  const RootSystem& rs() const { return rs_; }
  int size() const { return static_cast<int>(length_.size()); }
  int identity() const { return 0; }
  int longest() const { return w0_; }
  int length(int w) const { return length_[check(w)]; }

  int left_mul(int s, int w) const;   // index of s_s * w
  int right_mul(int w, int s) const;  // index of w * s_s
  int mul(int a, int b) const;
  int inverse(int w) const { return inverse_[check(w)]; }
  int from_word(const std::vector<int>& word) const;

  // row-major action matrix of w on weight coordinates
  const std::vector<long>& matrix(int w) const { return matrices_[check(w)]; }
  Weight act(int w, const Weight& lambda) const;

  bool is_left_descent(int s, int w) const { return length(left_mul(s, w)) < length(w); }
  bool is_right_descent(int w, int s) const { return length(right_mul(w, s)) < length(w); }
  std::vector<int> left_descents(int w) const;

  // lexicographically minimal reduced word, built by stripping the smallest
  // left descent; identity gives the empty word
  const std::vector<int>& reduced_word(int w) const { return words_[check(w)]; }
  std::vector<std::vector<int>> all_reduced_words(int w) const;

  bool bruhat_leq(int u, int w) const;
  // (-1)^(l(w)-l(u)) when u <= w, else 0
  int mobius(int u, int w) const;

private:
  WeylGroup(const RootSystem& rs) : rs_(rs) {}
  int check(int w) const;

  RootSystem rs_;
  std::vector<std::vector<long>> matrices_;
  std::vector<int> length_;
  std::vector<std::vector<int>> words_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> left_;   // left_[s][w] = s_s * w
  std::vector<std::vector<int>> right_;  // right_[s][w] = w * s_s
  std::vector<std::vector<bool>> leq_;   // leq_[w][u] = (u <= w)
  int w0_ = 0;
};

}  // namespace demwhit
