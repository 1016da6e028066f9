#include "monoloc/linalg.hpp"

#include "monoloc/errors.hpp"

namespace monoloc {

EchelonForm reduced_row_echelon(RatMatrix m, std::size_t cols) {
  EchelonForm out;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[row][j];
    }
    out.pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const RatMatrix& m, std::size_t cols) { return reduced_row_echelon(m, cols).rows.size(); }

RatMatrix nullspace(const RatMatrix& m, std::size_t cols) {
  const EchelonForm e = reduced_row_echelon(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RatMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v = zero_vector(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b, std::size_t cols) {
  RatMatrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  const EchelonForm e = reduced_row_echelon(std::move(aug), cols + 1);
  RatVector x = zero_vector(cols);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == cols) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][cols];
  }
  return x;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& x) {
  RatVector out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) out[r] = dot(m[r], x);
  return out;
}

RatMatrix transpose(const RatMatrix& m, std::size_t cols) {
  RatMatrix t(cols, RatVector(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) t[c][r] = m[r][c];
  return t;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(to_rational(row));
  return out;
}

Subspace::Subspace(std::size_t ambient_dim, const RatMatrix& spanning)
    : dim_(ambient_dim), echelon_(reduced_row_echelon(spanning, ambient_dim)) {}

RatVector Subspace::reduce(const RatVector& x) const {
  require_input(x.size() == dim_, "dimension mismatch in subspace reduction");
  RatVector y = x;
  for (std::size_t r = 0; r < echelon_.rows.size(); ++r) {
    const Rational f = y[echelon_.pivots[r]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) y[j] -= f * echelon_.rows[r][j];
  }
  return y;
}

bool Subspace::contains(const RatVector& x) const { return is_zero(reduce(x)); }

RatMatrix Subspace::annihilator() const { return nullspace(echelon_.rows, dim_); }

RatVector Subspace::coordinates(const RatVector& x) const {
  require_internal(contains(x), "coordinates requested for a vector outside the subspace");
  RatVector c(echelon_.rows.size());
  for (std::size_t r = 0; r < c.size(); ++r) c[r] = x[echelon_.pivots[r]];
  return c;
}

}  // namespace monoloc
