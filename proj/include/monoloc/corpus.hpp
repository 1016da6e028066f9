#pragma once

#include <string>

#include "monoloc/monoid.hpp"

namespace monoloc::corpus {

using Carrier = std::shared_ptr<const MonoidInstance>;

Carrier free_monoid(std::size_t n);
/// {(x, y) : x > 0} together with 0, inside Q^2.
Carrier open_half_plane();
Carrier finite(FiniteMonoid m);

BiadditiveOp elementwise(std::size_t n);
/// 2x2 matrices with entries in N0, coordinates (m11, m12, m21, m22), matrix product.
BiadditiveOp nonnegative_matrices();
/// mu((x,y),(x',y')) = (x x', x y') on the open half plane.
BiadditiveOp half_plane_scaling();
BiadditiveOp zero_op(const Carrier& c);

struct NamedFinite {
  std::string name;
  FiniteMonoid monoid;
};

/// Cyclic monoids, small products, max-chains, the union semilattice on two atoms and relabelings;
/// every entry has at most six elements.
std::vector<NamedFinite> small_finite_monoids();

}  // namespace monoloc::corpus
