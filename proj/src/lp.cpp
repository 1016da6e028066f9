#include "monoloc/lp.hpp"

#include "monoloc/errors.hpp"

namespace monoloc {

std::optional<RatVector> nonneg_combination(const std::vector<RatVector>& columns, const RatVector& target) {
  const std::size_t m = target.size();
  const std::size_t n = columns.size();
  for (const auto& c : columns) require_input(c.size() == m, "dimension mismatch in nonneg_combination");
  if (is_zero(target)) return zero_vector(n);
  if (n == 0) return std::nullopt;

  // Tableau over n original and m artificial columns.
  const std::size_t width = n + m;
  RatMatrix t(m, zero_vector(width));
  RatVector rhs(m);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = target[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * columns[j][i];
    t[i][n + i] = 1;
    rhs[i] = sign * target[i];
    basis[i] = n + i;
  }
  // Objective z = sum of artificials = z0 - sum_j reduced[j] x_j.
  RatVector reduced = zero_vector(width);
  Rational z0 = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) reduced[j] += t[i][j];
    z0 += rhs[i];
  }

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j)
      if (reduced[j] > 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = rhs[i] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    require_internal(leave != m, "phase-I simplex unbounded");
    const Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    rhs[leave] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    const Rational f = reduced[enter];
    for (std::size_t j = 0; j < width; ++j) reduced[j] -= f * t[leave][j];
    z0 -= f * rhs[leave];
    basis[leave] = enter;
  }
  if (z0 != 0) return std::nullopt;
  RatVector lambda = zero_vector(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) lambda[basis[i]] = rhs[i];
  return lambda;
}

}  // namespace monoloc
