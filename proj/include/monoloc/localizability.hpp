#pragma once

#include <optional>
#include <string>

#include "monoloc/grothendieck.hpp"
#include "monoloc/monoid.hpp"

namespace monoloc {

enum class Verdict { yes, no, unknown };
/// exhaustive: every pair or element checked; structural: decided by a cone computation; sampled: only tested.
enum class Scope { exhaustive, structural, sampled };
enum class Side { left, full };

const char* to_string(Verdict v);
const char* to_string(Scope s);

struct WitnessPair {
  MonoidElement a, b;
};

struct LocalizabilityVerdict {
  MonoidElement subject;
  Side kind = Side::left;
  Verdict verdict = Verdict::unknown;
  Scope scope = Scope::structural;
  /// For a "no": mu(s,a)+a <= mu(s,b)+b while a <= b fails (on the op side if op_side).
  std::optional<WitnessPair> witness;
  bool op_side = false;
  std::string note;
};

LocalizabilityVerdict is_left_localizable(const BiadditiveOp& op, const MonoidElement& s);
/// Left localizable for mu and for mu^op.
LocalizabilityVerdict is_localizable(const BiadditiveOp& op, const MonoidElement& s);
/// Re-checks a refutation through the canonical order of the carrier.
bool witness_is_valid(const BiadditiveOp& op, const MonoidElement& s, const WitnessPair& w, bool op_side = false);

struct WeakOptions {
  unsigned budget = 8;       // candidate s: generator sums with coefficient sum <= budget
  unsigned query_sum = 3;    // queried a: generator sums with coefficient sum <= query_sum
  std::vector<MonoidElement> queries;  // overrides the generated queries when non-empty
};

struct WeakCertificate {
  Verdict verdict = Verdict::unknown;
  Scope scope = Scope::sampled;
  /// (a, s) with s localizable and a <= s.
  std::vector<std::pair<MonoidElement, MonoidElement>> certificate;
  /// A query no localizable element dominates (proven for "no").
  std::optional<MonoidElement> refuted;
  std::string note;
};

WeakCertificate is_weakly_localizable(const BiadditiveOp& op, const WeakOptions& opts = {});

struct StrongVerdict {
  Verdict verdict = Verdict::unknown;
  Scope scope = Scope::sampled;
  std::optional<LocalizabilityVerdict> counterexample;
  std::size_t checked = 0;
};

/// Finite: every element. Otherwise generators and generator sums up to sample_sum; a "no" is always sound.
StrongVerdict is_strongly_localizable(const BiadditiveOp& op, unsigned sample_sum = 2);

struct OrderUnitResult {
  bool applied = false;
  std::string refusal;
  WeakCertificate certificate;
};

/// Certificate a -> k_a e when e is a two-sided unit of mu and an order unit; refuses otherwise.
OrderUnitResult order_unit_fast_path(const BiadditiveOp& op, const MonoidElement& e, const WeakOptions& opts = {});

/// Closed carriers: the subspace D of the first reduced group on which every extreme ray of the
/// positive cone is an eigenvector of mu(s, .) and mu(., s). The localizable elements are exactly D meet the cone.
struct LocalizableDirections {
  std::shared_ptr<const ReducedGroup> group;
  Subspace directions;          // in reduced coordinates
  RationalCone localizable;     // directions meet the positive cone
  /// Some localizable element whose image is in the relative interior, if one exists.
  std::optional<MonoidElement> dominating;
  std::optional<IntVector> blocking_facet;  // facet containing every localizable element otherwise
};

/// Empty for carriers with open faces.
std::optional<LocalizableDirections> localizable_directions(const BiadditiveOp& op);

}  // namespace monoloc
