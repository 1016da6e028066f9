#pragma once

#include <optional>

#include "monoloc/rational.hpp"

namespace monoloc {

struct EchelonForm {
  RatMatrix rows;                   // nonzero rows only, reduced
  std::vector<std::size_t> pivots;  // pivot column of each row
};

EchelonForm reduced_row_echelon(RatMatrix m, std::size_t cols);
std::size_t rank(const RatMatrix& m, std::size_t cols);

/// Basis of {x : m x = 0}, one vector per free column.
RatMatrix nullspace(const RatMatrix& m, std::size_t cols);

/// Some x with a x = b, if any.
std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b, std::size_t cols);

RatVector mat_vec(const RatMatrix& m, const RatVector& x);
RatMatrix transpose(const RatMatrix& m, std::size_t cols);
RatMatrix to_rational(const IntMatrix& m);

/// Rational linear subspace of Q^n stored as an RREF basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient_dim, const RatMatrix& spanning);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dimension() const { return echelon_.rows.size(); }
  const RatMatrix& basis() const { return echelon_.rows; }
  const std::vector<std::size_t>& pivots() const { return echelon_.pivots; }

  /// Canonical coset representative: pivot coordinates eliminated.
  RatVector reduce(const RatVector& x) const;
  bool contains(const RatVector& x) const;
  /// Rows spanning the functionals that vanish on the subspace.
  RatMatrix annihilator() const;
  /// Coordinates of a member in the RREF basis.
  RatVector coordinates(const RatVector& x) const;

 private:
  std::size_t dim_ = 0;
  EchelonForm echelon_;
};

}  // namespace monoloc
