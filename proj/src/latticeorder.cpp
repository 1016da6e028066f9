#include "monoloc/latticeorder.hpp"

#include <algorithm>

#include "monoloc/errors.hpp"

namespace monoloc {

namespace {

std::string triple_text(const RatVector& a, const RatVector& b, const RatVector& c) {
  return "(" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) + ")";
}

std::vector<RatVector> units(std::size_t d) {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < d; ++i) out.push_back(unit_vector(d, i));
  return out;
}

}  // namespace

bool LatticeGroup::contains(const RatVector& x) const {
  return x.size() == dim && (scalars == ScalarKind::rational || is_integral(x));
}

RatVector meet(const RatVector& x, const RatVector& y) {
  require_input(x.size() == y.size(), "meet: dimension mismatch");
  RatVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::min(x[i], y[i]);
  return out;
}

RatVector join(const RatVector& x, const RatVector& y) {
  require_input(x.size() == y.size(), "join: dimension mismatch");
  RatVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::max(x[i], y[i]);
  return out;
}

RatVector pos_part(const RatVector& x) { return join(x, zero_vector(x.size())); }
RatVector neg_part(const RatVector& x) { return join(negate(x), zero_vector(x.size())); }

bool coordinatewise_leq(const RatVector& x, const RatVector& y) {
  require_input(x.size() == y.size(), "order: dimension mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

std::vector<RatVector> integer_box(std::size_t dim, long lo, long hi) {
  require_input(lo <= hi, "empty box");
  std::vector<RatVector> out;
  RatVector cur(dim, Rational(lo));
  while (true) {
    out.push_back(cur);
    std::size_t i = dim;
    while (i > 0 && cur[i - 1] == hi) cur[--i] = lo;
    if (i == 0) break;
    cur[i - 1] += 1;
  }
  return out;
}

RieszReport check_riesz_lemma(const std::vector<std::array<RatVector, 3>>& samples) {
  RieszReport rep;
  for (const auto& [a, b, c] : samples) {
    ++rep.samples;
    const RatVector z = zero_vector(a.size());
    if (!coordinatewise_leq(z, a) || !coordinatewise_leq(z, b) || !coordinatewise_leq(z, c)) continue;
    if (!coordinatewise_leq(a, add(b, c))) continue;
    ++rep.applicable;
    if (!coordinatewise_leq(a, add(meet(b, a), meet(c, a)))) rep.violations.push_back(triple_text(a, b, c));
  }
  return rep;
}

bool FRingCandidate::is_positive() const {
  for (std::size_t i = 0; i < mu.dim(); ++i)
    for (std::size_t j = 0; j < mu.dim(); ++j)
      for (std::size_t k = 0; k < mu.dim(); ++k)
        if (mu.at(i, j, k) < 0) return false;
  return true;
}

std::optional<std::array<RatVector, 3>> fring_violation(const Tensor& mu, const std::vector<RatVector>& positives) {
  const RatVector z = zero_vector(mu.dim());
  for (const auto& a : positives)
    for (const auto& b : positives) {
      if (meet(a, b) != z) continue;
      for (const auto& c : positives)
        if (meet(mu.apply(c, a), b) != z || meet(mu.apply(a, c), b) != z) return std::array<RatVector, 3>{a, b, c};
    }
  return std::nullopt;
}

FRingVerdict is_extended_f_ring(const FRingCandidate& cand, unsigned box_side) {
  require_input(cand.mu.dim() == cand.group.dim, "tensor and group dimensions differ");
  require_input(cand.is_positive(), "candidate tensor is not positive on the positive cone");
  require_input(box_side >= 2, "box side must be at least 2");
  const std::size_t d = cand.group.dim;
  FRingVerdict v;
  v.verdict = Verdict::yes;
  // Basis scan: a = e_i, b = e_j with j != i, c = e_k.
  for (std::size_t i = 0; i < d && v.verdict == Verdict::yes; ++i)
    for (std::size_t j = 0; j < d && v.verdict == Verdict::yes; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < d; ++k)
        if (cand.mu.at(k, i, j) != 0 || cand.mu.at(i, k, j) != 0) {
          v.verdict = Verdict::no;
          v.witness = std::array<RatVector, 3>{unit_vector(d, i), unit_vector(d, j), unit_vector(d, k)};
          break;
        }
    }
  const auto box = integer_box(d, 0, static_cast<long>(box_side) - 1);
  std::size_t disjoint = 0;
  const RatVector z = zero_vector(d);
  for (const auto& a : box)
    for (const auto& b : box)
      if (meet(a, b) == z) ++disjoint;
  v.box_checked = disjoint * box.size();
  const bool box_violation = fring_violation(cand.mu, box).has_value();
  v.box_agrees = box_violation == (v.verdict == Verdict::no);
  return v;
}

std::shared_ptr<const MonoidInstance> positive_cone_carrier(const LatticeGroup& g) {
  require_input(g.dim >= 1, "lattice group must have positive dimension");
  if (g.scalars == ScalarKind::rational)
    return std::make_shared<const MonoidInstance>(OpenConeMonoid(RationalCone::orthant(g.dim), {}));
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < g.dim; ++i) {
    IntVector e(g.dim, Integer(0));
    e[i] = 1;
    gens.push_back(e);
  }
  return std::make_shared<const MonoidInstance>(LatticeMonoid(g.dim, gens));
}

TripleSearch find_nonassociative(const Tensor& mu, const std::vector<RatVector>& box) {
  TripleSearch out;
  for (const auto& a : box)
    for (const auto& b : box) {
      const RatVector ab = mu.apply(a, b);
      for (const auto& c : box) {
        ++out.checked;
        if (mu.apply(ab, c) != mu.apply(a, mu.apply(b, c))) {
          out.counterexample = std::array<RatVector, 3>{a, b, c};
          return out;
        }
      }
    }
  return out;
}

TripleSearch find_noncommutative(const Tensor& mu, const std::vector<RatVector>& box) {
  TripleSearch out;
  for (const auto& a : box)
    for (const auto& b : box) {
      ++out.checked;
      if (mu.apply(a, b) != mu.apply(b, a)) {
        out.counterexample = std::array<RatVector, 3>{a, b, zero_vector(a.size())};
        return out;
      }
    }
  return out;
}

FRingReport fring_strong_localizability(const FRingCandidate& cand) {
  FRingReport rep;
  if (!cand.is_positive()) {
    rep.reason = "tensor is not positive";
    return rep;
  }
  rep.fring = is_extended_f_ring(cand);
  if (rep.fring.verdict != Verdict::yes) {
    rep.reason = "not an extended f-ring";
    return rep;
  }
  const auto op = BiadditiveOp::from_tensor(positive_cone_carrier(cand.group), cand.mu);
  rep.strong = is_strongly_localizable(op);
  rep.theorem = verify_theorem_main(op);
  const auto signed_box = integer_box(cand.group.dim, -1, 1);
  rep.associativity = find_nonassociative(cand.mu, signed_box);
  rep.commutativity = find_noncommutative(cand.mu, signed_box);
  const bool ok = rep.strong->verdict == Verdict::yes && rep.theorem->status == CheckStatus::pass &&
                  !rep.associativity.counterexample && !rep.commutativity.counterexample;
  rep.status = ok ? CheckStatus::pass : CheckStatus::fail;
  rep.reason = ok ? "strongly localizable, associative and commutative" : "f-ring consequence violated";
  return rep;
}

Tensor almost_fring_tensor() {
  Tensor t(3);
  for (std::size_t k = 0; k < 3; ++k) {
    t.at(0, 0, k) = 1;
    t.at(2, 2, k) = 1;
  }
  return t;
}

AlmostFRingReport almost_fring_counterexample(long box_lo, long box_hi) {
  AlmostFRingReport rep;
  rep.mu = almost_fring_tensor();
  const auto box = integer_box(3, box_lo, box_hi);
  const RatVector z = zero_vector(3);
  for (const auto& a : box)
    for (const auto& b : box) {
      if (meet(a, b) != z) continue;
      ++rep.axiom_checked;
      if (rep.mu.apply(a, b) != z) rep.axiom_violations.push_back(to_string(a) + ", " + to_string(b));
    }
  // Archimedean: l a <= b for l = 1..L forces a <= 0.
  const long scale_bound = 2 * std::max(std::abs(box_lo), std::abs(box_hi)) + 2;
  for (const auto& a : box)
    for (const auto& b : box) {
      bool bounded = true;
      for (long l = 1; l <= scale_bound && bounded; ++l) bounded = coordinatewise_leq(scale(Rational(l), a), b);
      if (!bounded) continue;
      ++rep.archimedean_checked;
      if (!coordinatewise_leq(a, z)) rep.archimedean_violations.push_back(to_string(a) + ", " + to_string(b));
    }
  std::vector<RatVector> search = units(3);
  search.insert(search.end(), box.begin(), box.end());
  rep.associativity = find_nonassociative(rep.mu, search);
  rep.commutativity = find_noncommutative(rep.mu, box);
  const RatVector qa{1, 0, 0}, qb{1, 0, 1}, qc{0, 0, 1};
  rep.quoted_triple_associative = rep.mu.apply(rep.mu.apply(qa, qb), qc) == rep.mu.apply(qa, rep.mu.apply(qb, qc));
  return rep;
}

bool ArchimedeanReport::all_hold() const {
  return std::all_of(instances.begin(), instances.end(), [](const ArchimedeanInstance& i) { return i.conclusion; });
}

ArchimedeanReport weakly_archimedean_is_archimedean_check(const LatticeGroup& g,
                                                          const std::vector<std::pair<RatVector, RatVector>>& samples,
                                                          std::size_t max_l) {
  ArchimedeanReport rep;
  for (const auto& [a, b] : samples) {
    require_input(g.contains(a) && g.contains(b), "sample outside the lattice group");
    ArchimedeanInstance inst{a, b, 0, true};
    const RatVector z = zero_vector(g.dim);
    for (std::size_t l = 1; l <= max_l; ++l) {
      const RatVector la = scale(Rational(static_cast<long>(l)), a);
      if (!coordinatewise_leq(z, add(la, b))) break;
      inst.premise_holds_up_to = l;
      const RatVector lam = scale(Rational(static_cast<long>(l)), neg_part(a));
      const RatVector bp = pos_part(b);
      if (!coordinatewise_leq(negate(bp), lam) || !coordinatewise_leq(lam, bp)) inst.conclusion = false;
    }
    rep.instances.push_back(std::move(inst));
  }
  return rep;
}

}  // namespace monoloc
