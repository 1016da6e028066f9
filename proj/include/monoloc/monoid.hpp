#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "monoloc/cone.hpp"
#include "monoloc/finite_monoid.hpp"
#include "monoloc/normal_form.hpp"

namespace monoloc {

/// N0-span of finitely many integer vectors.
class LatticeMonoid {
 public:
  LatticeMonoid(std::size_t dim, std::vector<IntVector> generators);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& generators() const { return gens_; }
  const RationalCone& cone() const { return cone_; }
  const IntegerLattice& lattice() const { return lattice_; }

  /// Coefficients of x as an N0-combination of the generators, if x is in the monoid.
  std::optional<IntVector> decompose(const RatVector& x) const;
  bool contains(const RatVector& x) const { return decompose(x).has_value(); }
  /// Per-coefficient bound that makes decompose exhaustive (pointed case) or the default envelope.
  Integer search_bound(const IntVector& x) const;

 private:
  std::size_t dim_;
  std::vector<IntVector> gens_;
  RationalCone cone_;
  IntegerLattice lattice_;
  IntVector positive_functional_;  // strictly positive on the pointed cone minus 0, or empty
};

/// {x : closed facets >= 0, open facets > 0} together with 0.
class OpenConeMonoid {
 public:
  OpenConeMonoid(RationalCone closed_cone, std::vector<IntVector> open_normals);

  std::size_t dim() const { return closed_.ambient_dim(); }
  const RationalCone& closed_cone() const { return closed_; }
  const std::vector<IntVector>& open_normals() const { return open_; }
  bool contains(const RatVector& x) const;
  MembershipResult member(const RatVector& x) const;

 private:
  RationalCone closed_;
  std::vector<IntVector> open_;
};

/// An element index (finite carriers) or an exact vector (lattice and cone carriers).
class MonoidElement {
 public:
  MonoidElement() = default;
  static MonoidElement index(std::size_t i) { return MonoidElement(i); }
  static MonoidElement vector(RatVector v) { return MonoidElement(std::move(v)); }

  bool is_index() const { return std::holds_alternative<std::size_t>(value_); }
  std::size_t idx() const { return std::get<std::size_t>(value_); }
  const RatVector& vec() const { return std::get<RatVector>(value_); }
  bool operator==(const MonoidElement& o) const { return value_ == o.value_; }
  bool operator<(const MonoidElement& o) const { return value_ < o.value_; }

 private:
  explicit MonoidElement(std::size_t i) : value_(i) {}
  explicit MonoidElement(RatVector v) : value_(std::move(v)) {}
  std::variant<std::size_t, RatVector> value_;
};

enum class MonoidKind { finite, lattice, open_cone };
const char* to_string(MonoidKind k);

class MonoidInstance {
 public:
  explicit MonoidInstance(FiniteMonoid m) : rep_(std::move(m)) {}
  explicit MonoidInstance(LatticeMonoid m) : rep_(std::move(m)) {}
  explicit MonoidInstance(OpenConeMonoid m) : rep_(std::move(m)) {}

  MonoidKind kind() const { return static_cast<MonoidKind>(rep_.index()); }
  const FiniteMonoid& finite() const { return std::get<FiniteMonoid>(rep_); }
  const LatticeMonoid& lattice() const { return std::get<LatticeMonoid>(rep_); }
  const OpenConeMonoid& open_cone() const { return std::get<OpenConeMonoid>(rep_); }
  /// Ambient dimension (0 for finite carriers).
  std::size_t dim() const;
  /// Closed cone of the carrier: cone of the generators, or the closure of the open cone.
  const RationalCone& closed_cone() const;

  bool contains(const MonoidElement& a) const;
  void require_member(const MonoidElement& a, const std::string& what = "element") const;
  MonoidElement zero() const;
  MonoidElement add(const MonoidElement& a, const MonoidElement& b) const;
  MonoidElement multiple(std::size_t k, const MonoidElement& a) const;

  /// Canonical quasi-order: exists k, c, t with ka + c + t = kb + t.
  bool leq(const MonoidElement& a, const MonoidElement& b) const;
  /// Equivalence: exists d with la <= lb + d and lb <= la + d for every l.
  bool approx(const MonoidElement& a, const MonoidElement& b) const;

  /// Finite greedy generating set, nonzero lattice generators, or conic generators of the closed cone
  /// (the latter need not lie in an open carrier).
  std::vector<MonoidElement> generators() const;
  /// All elements (finite) or distinct generator sums with coefficient sum <= max_sum, in a fixed order.
  std::vector<MonoidElement> sample_elements(unsigned max_sum) const;

  std::string format(const MonoidElement& a) const;
  MonoidElement parse(const std::string& text) const;

 private:
  std::variant<FiniteMonoid, LatticeMonoid, OpenConeMonoid> rep_;
};

/// Bilinear map on Q^d given by T[i][j] = mu(e_i, e_j).
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::size_t dim);
  std::size_t dim() const { return dim_; }
  Integer& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }
  const Integer& at(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * dim_ + j) * dim_ + k]; }
  RatVector apply(const RatVector& a, const RatVector& b) const;
  /// Matrix of x -> mu(s, x) (left) or x -> mu(x, s) (right), rows indexed by output coordinate.
  RatMatrix left_matrix(const RatVector& s) const;
  RatMatrix right_matrix(const RatVector& s) const;
  Tensor transposed() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool operator==(const Tensor& o) const { return dim_ == o.dim_ && data_ == o.data_; }

  static Tensor elementwise(std::size_t dim);
  /// 2x2 matrix product on Q^4 with coordinates (m11, m12, m21, m22).
  static Tensor matrix2();

 private:
  std::size_t dim_ = 0;
  std::vector<Integer> data_;
};

class BiadditiveOp {
 public:
  static BiadditiveOp from_table(std::shared_ptr<const MonoidInstance> carrier, Table mu);
  static BiadditiveOp from_tensor(std::shared_ptr<const MonoidInstance> carrier, Tensor mu);

  const MonoidInstance& carrier() const { return *carrier_; }
  std::shared_ptr<const MonoidInstance> carrier_ptr() const { return carrier_; }
  bool is_table() const { return std::holds_alternative<Table>(body_); }
  const Table& table() const { return std::get<Table>(body_); }
  const Tensor& tensor() const { return std::get<Tensor>(body_); }

  MonoidElement apply(const MonoidElement& a, const MonoidElement& b) const;
  /// mu^op(a, b) = mu(b, a).
  BiadditiveOp opposite() const;
  bool is_commutative_exactly() const;

 private:
  std::shared_ptr<const MonoidInstance> carrier_;
  std::variant<Table, Tensor> body_;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> issues;
  std::optional<std::array<std::size_t, 3>> offending_triple;  // finite distributivity failure
  std::optional<std::pair<MonoidElement, MonoidElement>> offending_pair;  // closure failure
  bool zero_idempotent = true;       // mu(0,c) + mu(0,c) = mu(0,c) for all c (finite)
  std::string closure = "checked";   // checked | certified-open | unverified | violated
  std::size_t pairs_checked = 0;
};

ValidationReport validate_biadditive(const BiadditiveOp& op);

struct MonotoneReport {
  std::size_t triples = 0;
  std::size_t comparable = 0;
  std::vector<std::string> violations;
};

/// For sampled (a, a', b) with a <= a': mu(a,b) <= mu(a',b) and mu(b,a) <= mu(b,a').
MonotoneReport mu_monotone_check(const BiadditiveOp& op, const std::vector<MonoidElement>& samples);

}  // namespace monoloc
