#pragma once

#include <array>
#include <optional>
#include <string>

#include "monoloc/functionals.hpp"
#include "monoloc/localizability.hpp"
#include "monoloc/monoid.hpp"

namespace monoloc {

enum class ScalarKind { integer, rational };

/// Z^d or Q^d with the coordinatewise order.
struct LatticeGroup {
  std::size_t dim = 0;
  ScalarKind scalars = ScalarKind::integer;
  bool contains(const RatVector& x) const;
};

RatVector meet(const RatVector& x, const RatVector& y);
RatVector join(const RatVector& x, const RatVector& y);
RatVector pos_part(const RatVector& x);
/// a_- = (-a) join 0, so that a + a_- = a_+.
RatVector neg_part(const RatVector& x);
bool coordinatewise_leq(const RatVector& x, const RatVector& y);

/// All vectors with coordinates in [lo, hi].
std::vector<RatVector> integer_box(std::size_t dim, long lo, long hi);

struct RieszReport {
  std::size_t samples = 0;
  std::size_t applicable = 0;  // a <= b + c with a, b, c >= 0
  std::vector<std::string> violations;
};

/// a <= (b meet a) + (c meet a) whenever 0 <= a, b, c and a <= b + c.
RieszReport check_riesz_lemma(const std::vector<std::array<RatVector, 3>>& samples);

struct FRingCandidate {
  LatticeGroup group;
  Tensor mu;
  /// mu(G+, G+) within G+, i.e. a nonnegative tensor.
  bool is_positive() const;
};

struct FRingVerdict {
  Verdict verdict = Verdict::unknown;
  std::optional<std::array<RatVector, 3>> witness;  // (a, b, c): a meet b = 0, mu(c,a) or mu(a,c) meets b
  std::size_t box_checked = 0;
  bool box_agrees = true;
};

/// Disjointness preserved by multiplication with positives. On coordinatewise carriers this holds iff
/// mu(e_k, e_i) = mu(e_i, e_k) = 0 for k != i and mu(e_i, e_i) is a multiple of e_i; the box
/// {0, ..., box_side - 1}^d re-checks the reduction.
FRingVerdict is_extended_f_ring(const FRingCandidate& cand, unsigned box_side = 3);

/// First (a, b, c) of the box with a meet b = 0 and mu(c,a) meet b or mu(a,c) meet b nonzero.
std::optional<std::array<RatVector, 3>> fring_violation(const Tensor& mu, const std::vector<RatVector>& positives);

/// The carrier G+ of a candidate: N0^d or the closed rational orthant.
std::shared_ptr<const MonoidInstance> positive_cone_carrier(const LatticeGroup& g);

struct TripleSearch {
  std::size_t checked = 0;
  std::optional<std::array<RatVector, 3>> counterexample;
};

TripleSearch find_nonassociative(const Tensor& mu, const std::vector<RatVector>& box);
TripleSearch find_noncommutative(const Tensor& mu, const std::vector<RatVector>& box);

struct FRingReport {
  CheckStatus status = CheckStatus::refused;
  std::string reason;
  FRingVerdict fring;
  std::optional<StrongVerdict> strong;
  std::optional<TheoremReport> theorem;
  TripleSearch associativity, commutativity;  // exact, over the signed box {-1, 0, 1}^d
};

FRingReport fring_strong_localizability(const FRingCandidate& cand);

struct AlmostFRingReport {
  Tensor mu;
  std::size_t axiom_checked = 0;
  std::vector<std::string> axiom_violations;    // a meet b = 0 but mu(a,b) != 0
  std::size_t archimedean_checked = 0;
  std::vector<std::string> archimedean_violations;
  TripleSearch associativity;  // must find a counterexample
  TripleSearch commutativity;  // must not
  bool quoted_triple_associative = false;  // (1,0,0), (1,0,1), (0,0,1)
};

/// Q^3 as functions on {0, 1/2, 1} with mu(a,b) the constant a_0 b_0 + a_2 b_2.
AlmostFRingReport almost_fring_counterexample(long box_lo = -1, long box_hi = 1);
Tensor almost_fring_tensor();

struct ArchimedeanInstance {
  RatVector a, b;
  std::size_t premise_holds_up_to = 0;  // largest l <= L with 0 <= k a + b for every k <= l
  bool conclusion = true;               // -b_+ <= l a_- <= b_+ for those l
};

struct ArchimedeanReport {
  std::vector<ArchimedeanInstance> instances;
  bool all_hold() const;
};

ArchimedeanReport weakly_archimedean_is_archimedean_check(const LatticeGroup& g,
                                                          const std::vector<std::pair<RatVector, RatVector>>& samples,
                                                          std::size_t max_l = 64);

}  // namespace monoloc
