#pragma once
// Brute-force reference implementations used only by the tests.

#include <cstdint>
#include <functional>
#include <ostream>
#include <random>

#include "monoloc/linalg.hpp"
#include "monoloc/monoid.hpp"
#include "monoloc/rational.hpp"

namespace monoloc {
inline void PrintTo(const MonoidElement& x, std::ostream* os) {
  if (x.is_index()) *os << "#" << x.idx();
  else *os << to_string(x.vec());
}
}  // namespace monoloc

namespace oracle {

using namespace monoloc;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long range(long lo, long hi) { return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }
  IntVector vec(std::size_t d, long lo, long hi) {
    IntVector v(d);
    for (auto& x : v) x = range(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

inline void for_each_subset(std::size_t n, std::size_t max_size,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    f(cur);
    if (cur.size() == max_size) return;
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// Caratheodory: x is in cone(gens) iff it is a nonnegative combination of some linearly
// independent subfamily, which is then the unique solution of a square-ish system.
inline bool in_cone(const std::vector<IntVector>& gens, const RatVector& x) {
  if (is_zero(x)) return true;
  const std::size_t d = x.size();
  bool found = false;
  for_each_subset(gens.size(), d, [&](const std::vector<std::size_t>& s) {
    if (found || s.empty()) return;
    RatMatrix cols;
    for (auto i : s) cols.push_back(to_rational(gens[i]));
    if (rank(cols, d) != s.size()) return;
    const RatMatrix a = transpose(cols, d);
    auto sol = solve_linear(a, x, s.size());
    if (!sol) return;
    for (const auto& q : *sol)
      if (q < 0) return;
    found = true;
  });
  return found;
}

inline Integer brute_determinant(const std::vector<IntVector>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Integer total = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Integer p = sign;
    for (std::size_t i = 0; i < n; ++i) p *= m[i][perm[i]];
    total += p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// gcd of all k x k minors.
inline Integer determinantal_divisor(const IntMatrix& a, std::size_t cols, std::size_t k) {
  Integer g = 0;
  for_each_subset(a.size(), k, [&](const std::vector<std::size_t>& rs) {
    if (rs.size() != k) return;
    for_each_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
      if (cs.size() != k) return;
      std::vector<IntVector> sub(k, IntVector(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[rs[i]][cs[j]];
      g = gcd(g, brute_determinant(sub));
    });
  });
  return g;
}

}  // namespace oracle
