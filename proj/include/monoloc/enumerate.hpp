#pragma once

#include <cstdint>
#include <optional>

#include "monoloc/monoid.hpp"

namespace monoloc {

struct EnumerationOptions {
  std::optional<std::size_t> unit;  // require mu(u, a) = a = mu(a, u)
  std::uint64_t budget = 20'000'000;
};

struct EnumerationStats {
  std::size_t generators = 0;
  std::size_t homomorphisms = 0;
  std::uint64_t nodes = 0;
};

/// Additive maps phi: M -> M (phi(a+b) = phi(a)+phi(b)), determined by the greedy generating set.
std::vector<std::vector<std::size_t>> additive_endomorphisms(const FiniteMonoid& m, std::uint64_t budget,
                                                             std::uint64_t* nodes = nullptr);

/// Every biadditive table on M, obtained as additive maps a -> mu(a, .) into the additive maps of M.
/// Throws ResourceError once the node budget is exceeded.
std::vector<Table> enumerate_biadditive_tables(const FiniteMonoid& m, const EnumerationOptions& opts = {},
                                               EnumerationStats* stats = nullptr);

std::vector<BiadditiveOp> enumerate_biadditive_ops(const std::shared_ptr<const MonoidInstance>& carrier,
                                                   const EnumerationOptions& opts = {},
                                                   EnumerationStats* stats = nullptr);

}  // namespace monoloc
