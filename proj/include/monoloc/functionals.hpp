#pragma once

#include <optional>
#include <string>

#include "monoloc/grothendieck.hpp"
#include "monoloc/localizability.hpp"

namespace monoloc {

/// Subgroup of Q^dim generated by finitely many vectors, ordered by an ambient cone.
struct OrderedSubgroup {
  std::size_t dim = 0;
  RationalCone ambient_cone;
  std::vector<RatVector> generating_set;
  Integer denominator = 1;     // denominator * generators are integral
  IntegerLattice span;         // Z-span of the scaled generators
  RationalCone positive_cone;  // span meet ambient cone, in span coordinates (rank() > 0 only)

  std::size_t rank() const { return span.rank(); }
  /// Coordinates in the Hermite basis of the span; throws for vectors outside the span.
  RatVector coordinates(const RatVector& x) const;
};

OrderedSubgroup ordered_subgroup(const RationalCone& ambient, std::vector<RatVector> gens);

/// Linear functional on span coordinates.
struct AdditiveFunctional {
  RatVector coefficients;
  Rational operator()(const OrderedSubgroup& h, const RatVector& x) const;
};

std::string to_string(const AdditiveFunctional& f);
bool is_positive(const OrderedSubgroup& h, const AdditiveFunctional& f);
/// Positive and tight on a set of positive-cone generators of rank one less than the span.
bool is_extremal(const OrderedSubgroup& h, const AdditiveFunctional& f);

/// Extreme rays of the cone of positive functionals, primitive and sorted; empty for a trivial dual.
std::vector<AdditiveFunctional> positive_functionals(const OrderedSubgroup& h);

/// H generated by the images of F and mu(F, F) inside the first reduced group.
struct ProductSubgroup {
  std::shared_ptr<const ReducedGroup> group;
  std::vector<MonoidElement> f;
  std::size_t s_index = 0;
  OrderedSubgroup h;
  RatVector image(const MonoidElement& a) const { return group->iota(a).vec(); }
  const MonoidElement& s() const { return f[s_index]; }
};

ProductSubgroup product_subgroup(const BiadditiveOp& op, std::vector<MonoidElement> f, const MonoidElement& s);

struct MultIdentityReport {
  std::vector<std::string> precondition_failures;
  std::vector<std::string> violations;
  std::size_t checked = 0;
  bool holds() const { return precondition_failures.empty() && violations.empty(); }
};

/// phi(s) phi(mu(f,f')) = phi(mu(f,s)) phi(f') for all f, f' (op_side: the same identity for mu^op).
MultIdentityReport check_mult_identity(const BiadditiveOp& op, const ProductSubgroup& p, const AdditiveFunctional& phi,
                                       bool op_side = false);

enum class NormalizationCase { normalized, vanishes_on_f, vanishes_on_products };
const char* to_string(NormalizationCase c);

struct NormalizationResult {
  NormalizationCase kind = NormalizationCase::normalized;
  AdditiveFunctional psi;
  bool multiplicative = false;
  std::vector<std::string> failures;  // mismatching (f, f') when not multiplicative
};

/// psi = phi(mu(s,s)) phi(s)^-2 phi, checked for exact multiplicativity on F x F.
NormalizationResult normalize_multiplicative(const BiadditiveOp& op, const ProductSubgroup& p,
                                             const AdditiveFunctional& phi);

struct PositivstellensatzResult {
  std::optional<Integer> k;                   // k a <= k b
  std::optional<AdditiveFunctional> refuter;  // extremal with phi(a) >= phi(b)
};

/// a, b given in ambient coordinates of h.
PositivstellensatzResult positivstellensatz(const OrderedSubgroup& h, const RatVector& a, const RatVector& b);

enum class CheckStatus { pass, fail, refused, observed };
const char* to_string(CheckStatus s);

struct TheoremReport {
  CheckStatus status = CheckStatus::refused;
  WeakCertificate hypothesis;
  std::size_t pairs = 0, triples = 0;
  std::size_t commutativity_failure_count = 0, associativity_failure_count = 0;
  std::vector<std::string> commutativity_failures, associativity_failures;  // first few instances
  bool exact_commutative = true, exact_associative = true;
  std::optional<std::string> first_inexact;
};

struct SampleOptions {
  unsigned max_sum = 3;  // generator sums with coefficient sum <= max_sum (ignored for finite carriers)
  WeakOptions weak;
};

/// approx-commutativity and approx-associativity on all sampled pairs and triples.
TheoremReport verify_theorem_main(const BiadditiveOp& op, const SampleOptions& opts = {});

enum class AuditStatus { confirmed, discrepancy, vacuous, skipped };
const char* to_string(AuditStatus s);

struct AuditReport {
  AuditStatus status = AuditStatus::skipped;
  std::string reason;
  WeakCertificate weak;
  std::optional<StrongVerdict> strong;
};

/// Weak implies strong localizability on archimedean directed carriers.
AuditReport weak_implies_strong_audit(const BiadditiveOp& op, const WeakOptions& opts = {});

}  // namespace monoloc
