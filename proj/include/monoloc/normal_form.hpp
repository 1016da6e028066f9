#pragma once

#include <optional>

#include "monoloc/rational.hpp"

namespace monoloc {

struct SmithForm {
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix d;  // rows x cols, diagonal with d_i | d_{i+1}
  IntMatrix v;  // cols x cols, unimodular
  std::size_t rank = 0;
  IntVector diagonal() const;
};

/// U A V = D. Throws InputError on an empty or ragged matrix.
SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols);

struct HermiteForm {
  IntMatrix basis;      // nonzero rows in row-style Hermite normal form
  IntMatrix transform;  // basis = transform * input
  std::vector<std::size_t> pivots;
};

HermiteForm hermite_normal_form(const IntMatrix& rows, std::size_t cols);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner, std::size_t cols);
IntMatrix identity_matrix(std::size_t n);
Integer determinant(const IntMatrix& square);
/// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& square);

/// Z-lattice in Z^d with a Hermite basis.
class IntegerLattice {
 public:
  IntegerLattice() = default;
  static IntegerLattice from_generators(const std::vector<IntVector>& gens, std::size_t dim);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return form_.basis.size(); }
  const IntMatrix& basis() const { return form_.basis; }
  const std::vector<IntVector>& generators() const { return gens_; }

  bool contains(const RatVector& x) const;
  /// Integer coordinates in the Hermite basis.
  std::optional<IntVector> coordinates(const RatVector& x) const;
  /// Some integer combination of the original generators.
  std::optional<IntVector> generator_coefficients(const RatVector& x) const;

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> gens_;
  HermiteForm form_;
};

}  // namespace monoloc
