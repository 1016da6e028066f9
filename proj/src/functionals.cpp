#include "monoloc/functionals.hpp"

#include <algorithm>

#include "monoloc/errors.hpp"

namespace monoloc {

namespace {

constexpr std::size_t kept_failures = 10;

IntVector pulled(const IntVector& normal, const IntMatrix& basis) {
  IntVector row(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) row[i] = dot(normal, basis[i]);
  return row;
}

MonoidElement mu_side(const BiadditiveOp& op, const MonoidElement& a, const MonoidElement& b, bool op_side) {
  return op_side ? op.apply(b, a) : op.apply(a, b);
}

std::string pair_text(const MonoidInstance& m, const MonoidElement& a, const MonoidElement& b) {
  return "(" + m.format(a) + ", " + m.format(b) + ")";
}

}  // namespace

RatVector OrderedSubgroup::coordinates(const RatVector& x) const {
  require_input(x.size() == dim, "subgroup coordinates: dimension mismatch");
  const auto c = span.coordinates(scale(Rational(denominator), x));
  require_input(c.has_value(), "vector " + to_string(x) + " is not in the subgroup");
  return to_rational(*c);
}

OrderedSubgroup ordered_subgroup(const RationalCone& ambient, std::vector<RatVector> gens) {
  OrderedSubgroup h;
  h.dim = ambient.ambient_dim();
  h.ambient_cone = ambient;
  for (const auto& g : gens) {
    require_input(g.size() == h.dim, "subgroup generator has the wrong dimension");
    h.denominator = lcm(h.denominator, common_denominator(g));
  }
  std::vector<IntVector> scaled;
  for (const auto& g : gens) scaled.push_back(to_integer(scale(Rational(h.denominator), g)));
  h.generating_set = std::move(gens);
  h.span = IntegerLattice::from_generators(scaled, h.dim);
  if (h.rank() == 0) return h;
  std::vector<IntVector> ineqs, eqs;
  for (const auto& f : ambient.facets()) ineqs.push_back(pulled(f, h.span.basis()));
  for (const auto& e : ambient.equations()) eqs.push_back(pulled(e, h.span.basis()));
  h.positive_cone = RationalCone::from_inequalities(ineqs, eqs, h.rank());
  return h;
}

Rational AdditiveFunctional::operator()(const OrderedSubgroup& h, const RatVector& x) const {
  return dot(coefficients, h.coordinates(x));
}

std::string to_string(const AdditiveFunctional& f) { return to_string(f.coefficients); }

bool is_positive(const OrderedSubgroup& h, const AdditiveFunctional& f) {
  if (h.rank() == 0) return true;
  for (const auto& g : h.positive_cone.conic_generators())
    if (dot(g, f.coefficients) < 0) return false;
  return true;
}

bool is_extremal(const OrderedSubgroup& h, const AdditiveFunctional& f) {
  if (h.rank() == 0 || is_zero(f.coefficients) || !is_positive(h, f)) return false;
  if (!h.positive_cone.is_full_dimensional()) return false;
  RatMatrix tight;
  for (const auto& g : h.positive_cone.conic_generators())
    if (dot(g, f.coefficients) == 0) tight.push_back(to_rational(g));
  return rank(tight, h.rank()) + 1 == h.rank();
}

std::vector<AdditiveFunctional> positive_functionals(const OrderedSubgroup& h) {
  std::vector<AdditiveFunctional> out;
  // The dual of a full-dimensional cone is pointed and its extreme rays are the facets.
  if (h.rank() == 0 || !h.positive_cone.is_full_dimensional()) return out;
  std::vector<IntVector> facets = h.positive_cone.facets();
  std::sort(facets.begin(), facets.end());
  for (const auto& f : facets) out.push_back({to_rational(f)});
  return out;
}

ProductSubgroup product_subgroup(const BiadditiveOp& op, std::vector<MonoidElement> f, const MonoidElement& s) {
  const MonoidInstance& m = op.carrier();
  require_input(m.kind() != MonoidKind::finite, "ordered subgroups need a lattice or cone carrier");
  for (const auto& x : f) m.require_member(x, "element of F");
  const auto it = std::find(f.begin(), f.end(), s);
  require_input(it != f.end(), "s must belong to F");
  ProductSubgroup p;
  p.group = ReducedGroup::build(op.carrier_ptr(), 1);
  p.s_index = static_cast<std::size_t>(it - f.begin());
  p.f = std::move(f);
  std::vector<RatVector> gens;
  for (const auto& x : p.f) gens.push_back(p.image(x));
  for (const auto& x : p.f)
    for (const auto& y : p.f) gens.push_back(p.image(op.apply(x, y)));
  if (p.group->rank() == 0) {
    // trivial reduced group: H = 0
    p.h.generating_set = std::move(gens);
    return p;
  }
  p.h = ordered_subgroup(p.group->positive_cone(), gens);
  return p;
}

MultIdentityReport check_mult_identity(const BiadditiveOp& op, const ProductSubgroup& p, const AdditiveFunctional& phi,
                                       bool op_side) {
  const MonoidInstance& m = op.carrier();
  MultIdentityReport rep;
  const MonoidElement& s = p.s();
  auto value = [&](const MonoidElement& x) { return phi(p.h, p.image(x)); };
  const LocalizabilityVerdict loc = op_side ? is_left_localizable(op.opposite(), s) : is_left_localizable(op, s);
  if (loc.verdict != Verdict::yes) rep.precondition_failures.push_back("s is not left localizable");
  for (const auto& f : p.f)
    if (!m.leq(f, s)) rep.precondition_failures.push_back(m.format(f) + " is not below s");
  if (value(s) <= 0) rep.precondition_failures.push_back("phi(s) is not positive");
  if (value(op.apply(s, s)) <= 0) rep.precondition_failures.push_back("phi(mu(s,s)) is not positive");
  const Rational ps = value(s);
  for (const auto& f : p.f)
    for (const auto& g : p.f) {
      ++rep.checked;
      const Rational lhs = ps * value(mu_side(op, f, g, op_side));
      const Rational rhs = value(mu_side(op, f, s, op_side)) * value(g);
      if (lhs != rhs)
        rep.violations.push_back("f, f' = " + pair_text(m, f, g) + ": " + to_string(lhs) + " != " + to_string(rhs));
    }
  return rep;
}

const char* to_string(NormalizationCase c) {
  switch (c) {
    case NormalizationCase::normalized: return "normalized";
    case NormalizationCase::vanishes_on_f: return "vanishes-on-F";
    case NormalizationCase::vanishes_on_products: return "vanishes-on-products";
  }
  return "?";
}

NormalizationResult normalize_multiplicative(const BiadditiveOp& op, const ProductSubgroup& p,
                                             const AdditiveFunctional& phi) {
  const MonoidInstance& m = op.carrier();
  NormalizationResult res;
  const MonoidElement& s = p.s();
  const Rational ps = phi(p.h, p.image(s));
  const Rational pss = phi(p.h, p.image(op.apply(s, s)));
  res.psi.coefficients = zero_vector(phi.coefficients.size());
  if (ps == 0 || pss == 0) {
    res.kind = ps == 0 ? NormalizationCase::vanishes_on_f : NormalizationCase::vanishes_on_products;
    res.multiplicative = true;
    return res;
  }
  res.psi.coefficients = scale(pss / (ps * ps), phi.coefficients);
  for (const auto& f : p.f)
    for (const auto& g : p.f) {
      const Rational lhs = res.psi(p.h, p.image(op.apply(f, g)));
      const Rational rhs = res.psi(p.h, p.image(f)) * res.psi(p.h, p.image(g));
      if (lhs != rhs)
        res.failures.push_back("psi(mu" + pair_text(m, f, g) + ") = " + to_string(lhs) + ", product " + to_string(rhs));
    }
  res.multiplicative = res.failures.empty();
  return res;
}

PositivstellensatzResult positivstellensatz(const OrderedSubgroup& h, const RatVector& a, const RatVector& b) {
  PositivstellensatzResult res;
  if (h.rank() == 0) {
    res.k = 1;
    return res;
  }
  require_input(h.positive_cone.is_full_dimensional(), "the positive cone must generate the subgroup");
  const RatVector ca = h.coordinates(a), cb = h.coordinates(b);
  for (const auto& phi : positive_functionals(h))
    if (dot(phi.coefficients, ca) >= dot(phi.coefficients, cb)) {
      res.refuter = phi;
      return res;
    }
  require_internal(h.positive_cone.contains(sub(cb, ca)), "strictly dominated difference is outside the cone");
  res.k = 1;
  return res;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::refused: return "refused";
    case CheckStatus::observed: return "observed";
  }
  return "?";
}

TheoremReport verify_theorem_main(const BiadditiveOp& op, const SampleOptions& opts) {
  const MonoidInstance& m = op.carrier();
  TheoremReport rep;
  rep.hypothesis = is_weakly_localizable(op, opts.weak);
  const auto xs = m.sample_elements(opts.max_sum);
  for (const auto& a : xs)
    for (const auto& b : xs) {
      ++rep.pairs;
      const MonoidElement ab = op.apply(a, b), ba = op.apply(b, a);
      if (!(ab == ba)) {
        rep.exact_commutative = false;
        if (!rep.first_inexact) rep.first_inexact = "mu" + pair_text(m, a, b) + " != mu" + pair_text(m, b, a);
      }
      if (!m.approx(ab, ba)) {
        ++rep.commutativity_failure_count;
        if (rep.commutativity_failures.size() < kept_failures) rep.commutativity_failures.push_back(pair_text(m, a, b));
      }
      for (const auto& c : xs) {
        ++rep.triples;
        const MonoidElement left = op.apply(ab, c), right = op.apply(a, op.apply(b, c));
        if (left == right) continue;
        rep.exact_associative = false;
        if (!m.approx(left, right)) {
          ++rep.associativity_failure_count;
          if (rep.associativity_failures.size() < kept_failures)
            rep.associativity_failures.push_back("(" + m.format(a) + ", " + m.format(b) + ", " + m.format(c) + ")");
        }
      }
    }
  const bool clean = rep.commutativity_failure_count == 0 && rep.associativity_failure_count == 0;
  if (rep.hypothesis.verdict == Verdict::no) rep.status = CheckStatus::refused;
  else if (rep.hypothesis.verdict == Verdict::yes && rep.hypothesis.scope != Scope::sampled)
    rep.status = clean ? CheckStatus::pass : CheckStatus::fail;
  else rep.status = CheckStatus::observed;
  return rep;
}

const char* to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::confirmed: return "confirmed";
    case AuditStatus::discrepancy: return "discrepancy";
    case AuditStatus::vacuous: return "vacuous";
    case AuditStatus::skipped: return "skipped";
  }
  return "?";
}

AuditReport weak_implies_strong_audit(const BiadditiveOp& op, const WeakOptions& opts) {
  const MonoidInstance& m = op.carrier();
  AuditReport rep;
  if (m.kind() == MonoidKind::open_cone) {
    rep.reason = "carrier has open faces, so its order is not archimedean";
    return rep;
  }
  if (m.kind() == MonoidKind::lattice && !m.closed_cone().is_pointed()) {
    rep.reason = "closed cone is not pointed";
    return rep;
  }
  rep.weak = is_weakly_localizable(op, opts);
  if (rep.weak.verdict != Verdict::yes) {
    rep.status = AuditStatus::vacuous;
    rep.reason = rep.weak.verdict == Verdict::no ? "not weakly localizable" : "weak localizability undecided";
    return rep;
  }
  rep.strong = is_strongly_localizable(op);
  rep.status = rep.strong->verdict == Verdict::yes ? AuditStatus::confirmed : AuditStatus::discrepancy;
  rep.reason = m.kind() == MonoidKind::finite ? "reduced group is trivial" : "pointed closed cone";
  return rep;
}

}  // namespace monoloc
