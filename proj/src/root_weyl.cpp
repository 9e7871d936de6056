#include "root_weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace demwhit {

Weight operator+(const Weight& a, const Weight& b) {
  Weight r(a);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight r(a);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}

Weight operator-(const Weight& a) {
  Weight r(a);
  for (auto& c : r) c = -c;
  return r;
}

Weight operator*(long c, const Weight& a) {
  Weight r(a);
  for (auto& x : r) x *= c;
  return r;
}

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << ",";
    os << w[k];
  }
  os << ")";
  return os.str();
}

RootSystem RootSystem::build(char type, int rank) {
  auto bad = [&](const std::string& need) {
    std::ostringstream os;
    os << "root system " << type << rank << " invalid: " << need;
    throw std::invalid_argument(os.str());
  };
  switch (type) {
    case 'A': if (rank < 1) bad("type A requires rank >= 1"); break;
    case 'B': if (rank < 2) bad("type B requires rank >= 2"); break;
    case 'C': if (rank < 2) bad("type C requires rank >= 2"); break;
    case 'D': if (rank < 4) bad("type D requires rank >= 4"); break;
    case 'G': if (rank != 2) bad("type G requires rank = 2"); break;
    case 'F': if (rank != 4) bad("type F requires rank = 4"); break;
    default:
      throw std::invalid_argument(std::string("unknown Cartan type '") + type +
                                  "' (expected one of A, B, C, D, G, F)");
  }

  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.cartan_.assign(static_cast<std::size_t>(rank) * rank, 0);
  auto at = [&](int i, int j) -> long& {
    return rs.cartan_[static_cast<std::size_t>((i - 1) * rank + (j - 1))];
  };
  for (int i = 1; i <= rank; ++i) at(i, i) = 2;
  auto chain = [&](int upto) {
    for (int i = 1; i < upto; ++i) { at(i, i + 1) = -1; at(i + 1, i) = -1; }
  };
  switch (type) {
    case 'A': chain(rank); break;
    case 'B': chain(rank); at(rank, rank - 1) = -2; break;
    case 'C': chain(rank); at(rank - 1, rank) = -2; break;
    case 'D': chain(rank - 1); at(rank - 2, rank) = -1; at(rank, rank - 2) = -1; break;
    case 'G': at(1, 2) = -3; at(2, 1) = -1; break;
    case 'F': chain(rank); at(3, 2) = -2; at(2, 3) = -1; break;
  }

  rs.simple_roots_.resize(static_cast<std::size_t>(rank));
  for (int j = 1; j <= rank; ++j) {
    Weight col(static_cast<std::size_t>(rank));
    for (int i = 1; i <= rank; ++i) col[static_cast<std::size_t>(i - 1)] = rs.cartan(i - 1, j - 1);
    rs.simple_roots_[static_cast<std::size_t>(j - 1)] = std::move(col);
  }
  rs.rho_.assign(static_cast<std::size_t>(rank), 1);
  return rs;
}

const Weight& RootSystem::simple_root(int i) const {
  check_index(i);
  return simple_roots_[static_cast<std::size_t>(i - 1)];
}

Weight RootSystem::fundamental_weight(int i) const {
  check_index(i);
  Weight w(static_cast<std::size_t>(rank_), 0);
  w[static_cast<std::size_t>(i - 1)] = 1;
  return w;
}

int RootSystem::coxeter_m(int i, int j) const {
  check_index(i);
  check_index(j);
  if (i == j) return 1;
  long p = cartan(i - 1, j - 1) * cartan(j - 1, i - 1);
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw std::logic_error("coxeter_m: unexpected Cartan product");
}

std::uint64_t RootSystem::weyl_order() const {
  auto fact = [](int n) {
    std::uint64_t r = 1;
    for (int k = 2; k <= n; ++k) r *= static_cast<std::uint64_t>(k);
    return r;
  };
  switch (type_) {
    case 'A': return fact(rank_ + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << rank_) * fact(rank_);
    case 'D': return (std::uint64_t{1} << (rank_ - 1)) * fact(rank_);
    case 'G': return 12;
    case 'F': return 1152;
  }
  throw std::logic_error("weyl_order: unknown type");
}

long RootSystem::pairing(const Weight& lambda, int i) const {
  check_weight(lambda);
  check_index(i);
  return lambda[static_cast<std::size_t>(i - 1)];
}

Weight RootSystem::reflect_simple(int i, const Weight& lambda) const {
  check_weight(lambda);
  check_index(i);
  long k = lambda[static_cast<std::size_t>(i - 1)];
  Weight r(lambda);
  const Weight& alpha = simple_roots_[static_cast<std::size_t>(i - 1)];
  for (std::size_t j = 0; j < r.size(); ++j) r[j] -= k * alpha[j];
  return r;
}

void RootSystem::check_weight(const Weight& lambda) const {
  if (static_cast<int>(lambda.size()) != rank_)
    throw std::invalid_argument("weight has " + std::to_string(lambda.size()) +
                                " coordinates, root system has rank " + std::to_string(rank_));
}

void RootSystem::check_index(int i) const {
  if (i < 1 || i > rank_)
    throw std::invalid_argument("simple reflection index " + std::to_string(i) +
                                " out of range 1.." + std::to_string(rank_));
}

namespace {

// row-major product a*b of r x r matrices
std::vector<long> mat_mul(const std::vector<long>& a, const std::vector<long>& b, int r) {
  std::vector<long> c(static_cast<std::size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      long aik = a[static_cast<std::size_t>(i * r + k)];
      if (aik == 0) continue;
      for (int j = 0; j < r; ++j)
        c[static_cast<std::size_t>(i * r + j)] += aik * b[static_cast<std::size_t>(k * r + j)];
    }
  return c;
}

}  // namespace

WeylGroup WeylGroup::enumerate(const RootSystem& rs, std::size_t bound) {
  std::uint64_t order = rs.weyl_order();
  if (order > bound) {
    std::ostringstream os;
    os << "Weyl group of " << rs.type() << rs.rank() << " has order " << order
       << ", exceeding the enumeration bound " << bound;
    throw std::domain_error(os.str());
  }

  const int r = rs.rank();
  std::vector<std::vector<long>> gen(static_cast<std::size_t>(r));
  for (int s = 1; s <= r; ++s) {
    std::vector<long> m(static_cast<std::size_t>(r) * r, 0);
    for (int j = 0; j < r; ++j) m[static_cast<std::size_t>(j * r + j)] = 1;
    // S_i = I - (column i of Cartan) e_i^T, acting on coordinate columns
    for (int j = 0; j < r; ++j) m[static_cast<std::size_t>(j * r + (s - 1))] -= rs.cartan(j, s - 1);
    gen[static_cast<std::size_t>(s - 1)] = std::move(m);
  }

  std::vector<std::vector<long>> mats;
  std::vector<int> len;
  std::map<std::vector<long>, int> index_of;
  std::vector<long> id(static_cast<std::size_t>(r) * r, 0);
  for (int j = 0; j < r; ++j) id[static_cast<std::size_t>(j * r + j)] = 1;
  mats.push_back(id);
  len.push_back(0);
  index_of[id] = 0;
  for (std::size_t head = 0; head < mats.size(); ++head) {
    for (int s = 0; s < r; ++s) {
      auto m = mat_mul(gen[static_cast<std::size_t>(s)], mats[head], r);
      if (index_of.emplace(m, static_cast<int>(mats.size())).second) {
        mats.push_back(std::move(m));
        len.push_back(len[head] + 1);
      }
    }
  }
  const int n = static_cast<int>(mats.size());

  std::vector<std::vector<int>> left0(static_cast<std::size_t>(r), std::vector<int>(n));
  for (int s = 0; s < r; ++s)
    for (int w = 0; w < n; ++w)
      left0[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)] =
          index_of.at(mat_mul(gen[static_cast<std::size_t>(s)], mats[static_cast<std::size_t>(w)], r));

  // canonical words by stripping the smallest left descent, in length order
  std::vector<int> by_len(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w) by_len[static_cast<std::size_t>(w)] = w;
  std::sort(by_len.begin(), by_len.end(), [&](int a, int b) {
    return len[static_cast<std::size_t>(a)] < len[static_cast<std::size_t>(b)];
  });
  std::vector<std::vector<int>> words0(static_cast<std::size_t>(n));
  for (int w : by_len) {
    if (len[static_cast<std::size_t>(w)] == 0) continue;
    for (int s = 0; s < r; ++s) {
      int sw = left0[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)];
      if (len[static_cast<std::size_t>(sw)] < len[static_cast<std::size_t>(w)]) {
        auto& word = words0[static_cast<std::size_t>(w)];
        word.push_back(s + 1);
        word.insert(word.end(), words0[static_cast<std::size_t>(sw)].begin(),
                    words0[static_cast<std::size_t>(sw)].end());
        break;
      }
    }
  }

  std::vector<int> perm(by_len);  // raw index at each sorted position
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (len[static_cast<std::size_t>(a)] != len[static_cast<std::size_t>(b)])
      return len[static_cast<std::size_t>(a)] < len[static_cast<std::size_t>(b)];
    return words0[static_cast<std::size_t>(a)] < words0[static_cast<std::size_t>(b)];
  });
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])] = p;

  WeylGroup g(rs);
  g.matrices_.resize(static_cast<std::size_t>(n));
  g.length_.resize(static_cast<std::size_t>(n));
  g.words_.resize(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    int w = perm[static_cast<std::size_t>(p)];
    g.matrices_[static_cast<std::size_t>(p)] = mats[static_cast<std::size_t>(w)];
    g.length_[static_cast<std::size_t>(p)] = len[static_cast<std::size_t>(w)];
    g.words_[static_cast<std::size_t>(p)] = words0[static_cast<std::size_t>(w)];
  }
  g.left_.assign(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(n)));
  g.right_.assign(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(n)));
  for (int s = 0; s < r; ++s)
    for (int p = 0; p < n; ++p) {
      int w = perm[static_cast<std::size_t>(p)];
      g.left_[static_cast<std::size_t>(s)][static_cast<std::size_t>(p)] =
          pos[static_cast<std::size_t>(left0[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)])];
      g.right_[static_cast<std::size_t>(s)][static_cast<std::size_t>(p)] = pos[static_cast<std::size_t>(
          index_of.at(mat_mul(mats[static_cast<std::size_t>(w)], gen[static_cast<std::size_t>(s)], r)))];
    }
  g.inverse_.resize(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    int x = 0;
    const auto& word = g.words_[static_cast<std::size_t>(p)];
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      x = g.right_[static_cast<std::size_t>(*it - 1)][static_cast<std::size_t>(x)];
    g.inverse_[static_cast<std::size_t>(p)] = x;
  }
  g.w0_ = n - 1;

  // Bruhat order by the lifting recursion, filled in length order (indices
  // are already length-sorted, so plain index order works).
  g.leq_.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  g.leq_[0][0] = true;
  for (int w = 1; w < n; ++w) {
    int s = g.words_[static_cast<std::size_t>(w)][0];
    int sw = g.left_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(w)];
    const auto& lower = g.leq_[static_cast<std::size_t>(sw)];
    auto& row = g.leq_[static_cast<std::size_t>(w)];
    for (int u = 0; u < n; ++u) {
      int su = g.left_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(u)];
      row[static_cast<std::size_t>(u)] =
          g.length_[static_cast<std::size_t>(su)] < g.length_[static_cast<std::size_t>(u)]
              ? lower[static_cast<std::size_t>(su)]
              : lower[static_cast<std::size_t>(u)];
    }
  }
  return g;
}

int WeylGroup::check(int w) const {
  if (w < 0 || w >= size())
    throw std::out_of_range("Weyl element index " + std::to_string(w) +
                            " out of range (mismatched root system?)");
  return w;
}

int WeylGroup::left_mul(int s, int w) const {
  rs_.check_index(s);
  return left_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(check(w))];
}

int WeylGroup::right_mul(int w, int s) const {
  rs_.check_index(s);
  return right_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(check(w))];
}

int WeylGroup::mul(int a, int b) const {
  check(a);
  int x = check(b);
  const auto& word = words_[static_cast<std::size_t>(a)];
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = left_mul(*it, x);
  return x;
}

int WeylGroup::from_word(const std::vector<int>& word) const {
  int x = 0;
  for (int s : word) x = right_mul(x, s);
  return x;
}

Weight WeylGroup::act(int w, const Weight& lambda) const {
  rs_.check_weight(lambda);
  const auto& m = matrices_[static_cast<std::size_t>(check(w))];
  const int r = rs_.rank();
  Weight out(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      out[static_cast<std::size_t>(i)] += m[static_cast<std::size_t>(i * r + j)] * lambda[static_cast<std::size_t>(j)];
  return out;
}

std::vector<int> WeylGroup::left_descents(int w) const {
  check(w);
  std::vector<int> out;
  for (int s = 1; s <= rs_.rank(); ++s)
    if (is_left_descent(s, w)) out.push_back(s);
  return out;
}

std::vector<std::vector<int>> WeylGroup::all_reduced_words(int w) const {
  check(w);
  if (w == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int s : left_descents(w)) {
    for (auto& tail : all_reduced_words(left_mul(s, w))) {
      std::vector<int> word;
      word.reserve(tail.size() + 1);
      word.push_back(s);
      word.insert(word.end(), tail.begin(), tail.end());
      out.push_back(std::move(word));
    }
  }
  return out;
}

bool WeylGroup::bruhat_leq(int u, int w) const {
  return leq_[static_cast<std::size_t>(check(w))][static_cast<std::size_t>(check(u))];
}

int WeylGroup::mobius(int u, int w) const {
  if (!bruhat_leq(u, w)) return 0;
  return (length(w) - length(u)) % 2 == 0 ? 1 : -1;
}

}  // namespace demwhit
