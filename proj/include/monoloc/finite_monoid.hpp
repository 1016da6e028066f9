#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace monoloc {

using Table = std::vector<std::vector<std::size_t>>;

/// Finite commutative monoid on {0, ..., n-1} with 0 neutral.
class FiniteMonoid {
 public:
  /// Validates associativity, commutativity and neutrality exhaustively.
  explicit FiniteMonoid(Table add_table, std::vector<std::string> names = {});

  std::size_t size() const { return table_.size(); }
  std::size_t add(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t multiple(std::size_t k, std::size_t a) const;
  const Table& table() const { return table_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(const std::string& name) const;

  /// Bound n + n^2 on k and l that makes Eqs. of the canonical order decidable.
  std::size_t default_bound() const { return size() + size() * size(); }

  /// exists c, t with x + c + t = y + t
  bool shifted_below(std::size_t x, std::size_t y) const { return shifted_[x][y]; }

  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  bool leq(std::size_t a, std::size_t b, std::size_t k_bound) const;
  bool approx(std::size_t a, std::size_t b) const { return approx(a, b, default_bound()); }
  bool approx(std::size_t a, std::size_t b, std::size_t l_bound) const;

  bool is_group() const;
  std::vector<std::size_t> idempotents() const;
  /// Greedy generating set in index order (0 omitted).
  std::vector<std::size_t> generating_set() const;

 private:
  Table table_;
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> shifted_;
  std::vector<std::vector<bool>> leq_;
};

/// {0, 1, ..., cap}^n with saturating addition; elements ordered by coordinate sum, then
/// lexicographically, so the unit vectors follow 0 directly.
struct TruncatedFree {
  FiniteMonoid monoid;
  std::vector<std::vector<unsigned>> points;
  std::size_t index_of(const std::vector<unsigned>& p) const;
  std::size_t all_ones() const;
};

TruncatedFree truncated_free_monoid(std::size_t n, unsigned cap = 2);
FiniteMonoid cyclic_group(std::size_t n);
/// Monoid generated by one element with a + ... (index + period times) = index-th multiple.
FiniteMonoid cyclic_monoid(std::size_t index, std::size_t period);
/// {0, ..., n-1} with max as addition.
FiniteMonoid max_chain(std::size_t n);
FiniteMonoid product(const FiniteMonoid& a, const FiniteMonoid& b);
/// Same monoid with element i renamed perm[i] (perm[0] must be 0).
FiniteMonoid relabel(const FiniteMonoid& m, const std::vector<std::size_t>& perm);

}  // namespace monoloc
