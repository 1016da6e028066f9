#include "monoloc/normal_form.hpp"

#include <algorithm>

#include "monoloc/errors.hpp"
#include "monoloc/linalg.hpp"

namespace monoloc {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void check_shape(const IntMatrix& a, std::size_t cols) {
  for (const auto& row : a) require_input(row.size() == cols, "ragged integer matrix");
}

void row_axpy(IntVector& dst, const Integer& f, const IntVector& src) {
  for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= f * src[j];
}

}  // namespace

IntVector SmithForm::diagonal() const {
  IntVector out;
  for (std::size_t i = 0; i < d.size() && i < (d.empty() ? 0 : d[0].size()); ++i) out.push_back(d[i][i]);
  return out;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner, std::size_t cols) {
  IntMatrix out(a.size(), IntVector(cols, Integer(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

SmithForm smith_normal_form(const IntMatrix& input, std::size_t cols) {
  require_input(!input.empty() && cols > 0, "smith_normal_form needs a nonempty matrix");
  check_shape(input, cols);
  const std::size_t m = input.size(), n = cols;
  IntMatrix a = input;
  IntMatrix u = identity_matrix(m), v = identity_matrix(n);
  auto swap_cols = [](IntMatrix& x, std::size_t i, std::size_t j) {
    for (auto& row : x) std::swap(row[i], row[j]);
  };
  auto col_axpy = [](IntMatrix& x, std::size_t dst, const Integer& f, std::size_t src) {
    for (auto& row : x) row[dst] -= f * row[src];
  };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    while (true) {
      std::size_t pr = m, pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pr == m || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == m) goto done;
      std::swap(a[t], a[pr]);
      std::swap(u[t], u[pr]);
      swap_cols(a, t, pc);
      swap_cols(v, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const Integer q = floor_div(a[i][t], a[t][t]);
        row_axpy(a[i], q, a[t]);
        row_axpy(u[i], q, u[t]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const Integer q = floor_div(a[t][j], a[t][t]);
        col_axpy(a, j, q, t);
        col_axpy(v, j, q, t);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      for (std::size_t j = 0; j < n; ++j) a[t][j] += a[bad][j];
      for (std::size_t j = 0; j < m; ++j) u[t][j] += u[bad][j];
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : u[t]) x = -x;
    }
  }
done:
  SmithForm out{std::move(u), std::move(a), std::move(v), t};
  return out;
}

HermiteForm hermite_normal_form(const IntMatrix& rows, std::size_t cols) {
  check_shape(rows, cols);
  const std::size_t m = rows.size();
  IntMatrix a = rows;
  IntMatrix tr = identity_matrix(m);
  HermiteForm out;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m; ++c) {
    bool found = false;
    while (true) {
      std::size_t p = m;
      for (std::size_t r = row; r < m; ++r)
        if (a[r][c] != 0 && (p == m || abs(a[r][c]) < abs(a[p][c]))) p = r;
      if (p == m) break;
      found = true;
      std::swap(a[p], a[row]);
      std::swap(tr[p], tr[row]);
      bool clean = true;
      for (std::size_t r = row + 1; r < m; ++r) {
        if (a[r][c] == 0) continue;
        const Integer q = floor_div(a[r][c], a[row][c]);
        row_axpy(a[r], q, a[row]);
        row_axpy(tr[r], q, tr[row]);
        if (a[r][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (a[row][c] < 0) {
      for (auto& x : a[row]) x = -x;
      for (auto& x : tr[row]) x = -x;
    }
    for (std::size_t r = 0; r < row; ++r) {
      const Integer q = floor_div(a[r][c], a[row][c]);
      if (q == 0) continue;
      row_axpy(a[r], q, a[row]);
      row_axpy(tr[r], q, tr[row]);
    }
    out.pivots.push_back(c);
    ++row;
  }
  a.resize(row);
  tr.resize(row);
  out.basis = std::move(a);
  out.transform = std::move(tr);
  return out;
}

Integer determinant(const IntMatrix& square) {
  const std::size_t n = square.size();
  if (n == 0) return 1;
  IntMatrix a = square;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix unimodular_inverse(const IntMatrix& square) {
  const std::size_t n = square.size();
  RatMatrix aug(n, zero_vector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = square[i][j];
    aug[i][n + i] = 1;
  }
  const EchelonForm e = reduced_row_echelon(std::move(aug), 2 * n);
  require_input(e.rows.size() == n && (n == 0 || e.pivots[n - 1] == n - 1), "matrix is not invertible");
  IntMatrix inv(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      require_input(e.rows[i][n + j].get_den() == 1, "matrix is not unimodular");
      inv[i][j] = e.rows[i][n + j].get_num();
    }
  return inv;
}

IntegerLattice IntegerLattice::from_generators(const std::vector<IntVector>& gens, std::size_t dim) {
  for (const auto& g : gens) require_input(g.size() == dim, "lattice generator dimension mismatch");
  IntegerLattice l;
  l.dim_ = dim;
  l.gens_ = gens;
  l.form_ = hermite_normal_form(gens, dim);
  return l;
}

std::optional<IntVector> IntegerLattice::coordinates(const RatVector& x) const {
  require_input(x.size() == dim_, "lattice membership dimension mismatch");
  if (!is_integral(x)) return std::nullopt;
  IntVector y = to_integer(x);
  IntVector c(rank());
  for (std::size_t r = 0; r < rank(); ++r) {
    const std::size_t p = form_.pivots[r];
    if (y[p] % form_.basis[r][p] != 0) return std::nullopt;
    c[r] = y[p] / form_.basis[r][p];
    if (c[r] != 0) row_axpy(y, c[r], form_.basis[r]);
  }
  if (!is_zero(y)) return std::nullopt;
  return c;
}

bool IntegerLattice::contains(const RatVector& x) const { return coordinates(x).has_value(); }

std::optional<IntVector> IntegerLattice::generator_coefficients(const RatVector& x) const {
  auto c = coordinates(x);
  if (!c) return std::nullopt;
  IntVector z(gens_.size(), Integer(0));
  for (std::size_t r = 0; r < c->size(); ++r)
    for (std::size_t j = 0; j < gens_.size(); ++j) z[j] += (*c)[r] * form_.transform[r][j];
  return z;
}

}  // namespace monoloc
