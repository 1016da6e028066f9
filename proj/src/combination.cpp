#include "monoloc/combination.hpp"

#include "monoloc/errors.hpp"

namespace monoloc {

Integer default_combination_bound(const std::vector<IntVector>& gens, const IntVector& x) {
  Integer sx = 0, mg = 0;
  for (const auto& v : x) sx += abs(v);
  for (const auto& g : gens) {
    Integer s = 0;
    for (const auto& v : g) s += abs(v);
    if (s > mg) mg = s;
  }
  return 1 + sx * mg;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

struct Search {
  const std::vector<IntVector>& gens;
  const Integer& bound;
  std::size_t dim;
  // lo[i][c], hi[i][c]: range of coordinate c reachable by generators i.. with coefficients in [0, bound].
  std::vector<IntVector> lo, hi;
  IntVector coeffs;

  bool run(std::size_t i, IntVector& rest) {
    if (i == gens.size()) return is_zero(rest);
    Integer nmin = 0, nmax = bound;
    for (std::size_t c = 0; c < dim; ++c) {
      const Integer& g = gens[i][c];
      const Integer& l = lo[i + 1][c];
      const Integer& h = hi[i + 1][c];
      if (g > 0) {
        nmax = std::min(nmax, floor_div(rest[c] - l, g));
        nmin = std::max(nmin, ceil_div(rest[c] - h, g));
      } else if (g < 0) {
        nmax = std::min(nmax, floor_div(h - rest[c], Integer(-g)));
        nmin = std::max(nmin, ceil_div(l - rest[c], Integer(-g)));
      } else if (rest[c] < l || rest[c] > h) {
        return false;
      }
    }
    for (Integer n = nmin; n <= nmax; ++n) {
      for (std::size_t c = 0; c < dim; ++c) rest[c] -= n * gens[i][c];
      coeffs[i] = n;
      const bool ok = run(i + 1, rest);
      for (std::size_t c = 0; c < dim; ++c) rest[c] += n * gens[i][c];
      if (ok) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<IntVector> bounded_nonneg_combination(const std::vector<IntVector>& gens, const IntVector& x,
                                                    const Integer& bound) {
  for (const auto& g : gens) require_input(g.size() == x.size(), "dimension mismatch in combination search");
  require_input(bound >= 0, "combination bound must be nonnegative");
  const std::size_t m = gens.size(), d = x.size();
  Search s{gens, bound, d, std::vector<IntVector>(m + 1, IntVector(d, Integer(0))),
           std::vector<IntVector>(m + 1, IntVector(d, Integer(0))), IntVector(m, Integer(0))};
  for (std::size_t i = m; i-- > 0;)
    for (std::size_t c = 0; c < d; ++c) {
      const Integer t = bound * gens[i][c];
      s.lo[i][c] = s.lo[i + 1][c] + (t < 0 ? t : Integer(0));
      s.hi[i][c] = s.hi[i + 1][c] + (t > 0 ? t : Integer(0));
    }
  IntVector rest = x;
  if (!s.run(0, rest)) return std::nullopt;
  return s.coeffs;
}

}  // namespace monoloc
