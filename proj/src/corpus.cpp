#include "monoloc/corpus.hpp"

namespace monoloc::corpus {

Carrier free_monoid(std::size_t n) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, Integer(0));
    e[i] = 1;
    gens.push_back(e);
  }
  return std::make_shared<const MonoidInstance>(LatticeMonoid(n, gens));
}

Carrier open_half_plane() {
  const IntVector x{Integer(1), Integer(0)};
  return std::make_shared<const MonoidInstance>(
      OpenConeMonoid(RationalCone::from_inequalities({x}, {}, 2), {x}));
}

Carrier finite(FiniteMonoid m) { return std::make_shared<const MonoidInstance>(std::move(m)); }

BiadditiveOp elementwise(std::size_t n) { return BiadditiveOp::from_tensor(free_monoid(n), Tensor::elementwise(n)); }

BiadditiveOp nonnegative_matrices() { return BiadditiveOp::from_tensor(free_monoid(4), Tensor::matrix2()); }

BiadditiveOp half_plane_scaling() {
  Tensor t(2);
  t.at(0, 0, 0) = 1;  // x x'
  t.at(0, 1, 1) = 1;  // x y'
  return BiadditiveOp::from_tensor(open_half_plane(), t);
}

BiadditiveOp zero_op(const Carrier& c) {
  if (c->kind() == MonoidKind::finite)
    return BiadditiveOp::from_table(c, Table(c->finite().size(), std::vector<std::size_t>(c->finite().size(), 0)));
  return BiadditiveOp::from_tensor(c, Tensor(c->dim()));
}

std::vector<NamedFinite> small_finite_monoids() {
  std::vector<NamedFinite> out;
  for (std::size_t index = 0; index <= 5; ++index)
    for (std::size_t period = 1; index + period <= 6; ++period)
      out.push_back({"cyclic(" + std::to_string(index) + "," + std::to_string(period) + ")",
                     cyclic_monoid(index, period)});
  for (std::size_t n = 2; n <= 4; ++n) out.push_back({"max-chain(" + std::to_string(n) + ")", max_chain(n)});
  out.push_back({"union-semilattice(2)", product(max_chain(2), max_chain(2))});
  out.push_back({"Z2xZ2", product(cyclic_group(2), cyclic_group(2))});
  out.push_back({"Z2xZ3", product(cyclic_group(2), cyclic_group(3))});
  out.push_back({"Z3xchain(2)", product(cyclic_group(3), max_chain(2))});
  out.push_back({"cyclic(1,2)xchain(2)", product(cyclic_monoid(1, 2), max_chain(2))});
  out.push_back({"cyclic(1,1)xZ2", product(cyclic_monoid(1, 1), cyclic_group(2))});
  out.push_back({"relabel cyclic(2,3)", relabel(cyclic_monoid(2, 3), {0, 4, 2, 1, 3})});
  out.push_back({"relabel Z2xZ3", relabel(product(cyclic_group(2), cyclic_group(3)), {0, 5, 3, 1, 4, 2})});
  return out;
}

}  // namespace monoloc::corpus
