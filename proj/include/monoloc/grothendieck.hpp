#pragma once

#include <memory>
#include <optional>

#include "monoloc/linalg.hpp"
#include "monoloc/monoid.hpp"

namespace monoloc {

/// Class index (finite groups) or exact coordinate vector (lattice and rational quotients).
using GroupElement = MonoidElement;

/// Finite abelian group given by its addition table; 0 is neutral.
struct FiniteGroup {
  Table add;
  std::vector<std::size_t> neg;
  std::size_t size() const { return add.size(); }
  std::size_t multiple(std::size_t k, std::size_t x) const;
  std::size_t exponent() const;
  /// Invariant factors > 1, from the Smith form of the relation matrix.
  IntVector invariant_factors() const;
};

/// Points of a lattice (or of Q^d when no lattice is set) inside a cone, strict on `strict` away from 0.
struct LinearSet {
  std::optional<IntegerLattice> lattice;
  RationalCone cone;
  std::vector<IntVector> strict;
  bool contains(const RatVector& x) const;
};

enum class ClosureKind { up, ddagger, up_ddagger };
const char* to_string(ClosureKind k);

struct SubmonoidClosure {
  ClosureKind kind = ClosureKind::up;
  std::variant<std::vector<bool>, LinearSet> base;
  std::variant<std::vector<bool>, LinearSet> result;
  bool contains(const GroupElement& x) const;
  bool base_contains(const GroupElement& x) const;
};

/// S^up = {a : ka in S for some k}.
SubmonoidClosure up_closure(const FiniteGroup& g, const std::vector<bool>& s);
/// N0-span of s_gens inside the lattice g: g meets the rational cone.
SubmonoidClosure up_closure(const IntegerLattice& g, const std::vector<IntVector>& s_gens);
/// Rational cone sets are already up-closed.
SubmonoidClosure up_closure(const LinearSet& s);
/// S^ddagger = {a : exists e with la + e in S for every l}.
SubmonoidClosure ddagger_closure(const FiniteGroup& g, const std::vector<bool>& s);
/// Closed polyhedral case: Z-span of s_gens meets the cone.
SubmonoidClosure ddagger_closure(const IntegerLattice& g, const std::vector<IntVector>& s_gens);
/// Partially open rational cone: its topological closure.
SubmonoidClosure ddagger_closure(const LinearSet& s);

/// L / (L meet W) for a lattice L, or V / W for rational subspaces W in V.
/// Lattice quotients use Smith-form coordinates; the kernel L meet W is saturated, so the quotient is free.
class LinearQuotient {
 public:
  static LinearQuotient of_lattice(const IntegerLattice& l, const Subspace& w);
  static LinearQuotient of_space(const Subspace& v, const Subspace& w);

  std::size_t rank() const { return reps_.size(); }
  std::size_t ambient_dim() const { return dim_; }
  bool integral() const { return integral_; }
  /// Linear map from span(L) (or V) to Q^rank; integral on L.
  RatVector coordinates(const RatVector& x) const;
  const std::vector<RatVector>& representatives() const { return reps_; }
  const std::vector<RatVector>& kernel_basis() const { return kernel_; }
  const std::vector<RatVector>& source_basis() const { return source_; }

 private:
  std::size_t dim_ = 0;
  bool integral_ = false;
  std::vector<RatVector> source_, kernel_, reps_;
  // Lattice mode: coordinates = (hermite coordinates of x) * v, last columns.
  RatMatrix basis_t_;
  IntMatrix v_;
  std::size_t k_ = 0;
  // Space mode.
  Subspace w_, vred_;
};

class GrothGroup {
 public:
  static std::shared_ptr<const GrothGroup> build(std::shared_ptr<const MonoidInstance> m);

  const MonoidInstance& carrier() const { return *carrier_; }
  MonoidKind kind() const { return carrier_->kind(); }
  const FiniteGroup& group() const { return group_; }
  std::size_t pair_class(std::size_t a, std::size_t b) const { return pair_class_[a * carrier_->finite().size() + b]; }
  const IntegerLattice& lattice() const { return lattice_; }
  const Subspace& span() const { return span_; }

  GroupElement iota(const MonoidElement& a) const;
  /// [a, b] = iota(a) - iota(b).
  GroupElement difference(const MonoidElement& a, const MonoidElement& b) const;
  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement negate(const GroupElement& x) const;
  bool contains(const GroupElement& x) const;
  /// iota(M)^up and iota(M)^{up ddagger} inside the group.
  const SubmonoidClosure& up() const { return up_; }
  const SubmonoidClosure& up_ddagger() const { return up_ddagger_; }

 private:
  std::shared_ptr<const MonoidInstance> carrier_;
  FiniteGroup group_;
  std::vector<std::size_t> pair_class_;
  IntegerLattice lattice_;
  Subspace span_;
  SubmonoidClosure up_, up_ddagger_;
};

/// First (level 1) or second (level 2) reduced Grothendieck group.
class ReducedGroup {
 public:
  static std::shared_ptr<const ReducedGroup> build(std::shared_ptr<const MonoidInstance> m, int level);
  static std::shared_ptr<const ReducedGroup> build(std::shared_ptr<const GrothGroup> g, int level);

  int level() const { return level_; }
  const GrothGroup& groth() const { return *groth_; }
  const MonoidInstance& carrier() const { return groth_->carrier(); }
  MonoidKind kind() const { return groth_->kind(); }

  // Finite carriers.
  std::size_t size() const { return group_.size(); }
  const FiniteGroup& group() const { return group_; }
  std::size_t class_of(std::size_t groth_class) const { return class_of_[groth_class]; }
  const std::vector<bool>& positive_classes() const { return positive_; }

  // Lattice and cone carriers.
  const LinearQuotient& quotient() const { return quotient_; }
  std::size_t rank() const { return quotient_.rank(); }
  /// Image of the positive part in quotient coordinates (only when rank() > 0).
  const RationalCone& positive_cone() const { return cone_; }
  const std::vector<IntVector>& strict_normals() const { return strict_; }

  GroupElement project(const GroupElement& groth_element) const;
  GroupElement iota(const MonoidElement& a) const;
  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement sub(const GroupElement& x, const GroupElement& y) const;
  bool is_positive(const GroupElement& x) const;
  bool leq(const GroupElement& x, const GroupElement& y) const { return is_positive(sub(y, x)); }
  bool equal(const GroupElement& x, const GroupElement& y) const { return x == y; }
  std::string format(const GroupElement& x) const;

 private:
  std::shared_ptr<const GrothGroup> groth_;
  int level_ = 1;
  FiniteGroup group_;
  std::vector<std::size_t> class_of_;
  std::vector<bool> positive_;
  LinearQuotient quotient_;
  RationalCone cone_;
  std::vector<IntVector> strict_;
};

/// Lift of mu to a reduced group.
class LiftedOp {
 public:
  const ReducedGroup& group() const { return *group_; }
  GroupElement apply(const GroupElement& x, const GroupElement& y) const;
  /// structure()[i * rank + j] = mu(rep_i, rep_j) in quotient coordinates.
  const std::vector<RatVector>& structure() const { return structure_; }
  std::size_t checks() const { return checks_; }

 private:
  friend LiftedOp lift_mu(const BiadditiveOp&, std::shared_ptr<const ReducedGroup>, const std::vector<MonoidElement>&);
  std::shared_ptr<const ReducedGroup> group_;
  Table table_;
  std::vector<RatVector> structure_;
  std::size_t checks_ = 0;
};

/// Throws InternalError if the lift is not well defined on the checked representatives.
LiftedOp lift_mu(const BiadditiveOp& op, std::shared_ptr<const ReducedGroup> g,
                 const std::vector<MonoidElement>& samples);

struct Pi12 {
  std::shared_ptr<const ReducedGroup> from, to;
  RatMatrix matrix;                   // to.rank() x from.rank()
  std::vector<std::size_t> class_map; // finite
  bool triangle = true;
  bool surjective = true;
  bool injective = true;
  GroupElement apply(const GroupElement& x) const;
};

Pi12 pi12(std::shared_ptr<const ReducedGroup> first, std::shared_ptr<const ReducedGroup> second);

struct LemmaReport {
  std::size_t pairs = 0;
  std::vector<std::string> discrepancies;
};

/// leq(a,b) iff iota1(a) <= iota1(b).
LemmaReport check_lemma_canleq(const ReducedGroup& first,
                               const std::vector<std::pair<MonoidElement, MonoidElement>>& pairs);
/// approx(a,b) iff iota2(a) = iota2(b).
LemmaReport check_lemma_canequiv(const ReducedGroup& second,
                                 const std::vector<std::pair<MonoidElement, MonoidElement>>& pairs);

}  // namespace monoloc
