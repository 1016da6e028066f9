#include "monoloc/localizability.hpp"

#include <map>

#include "monoloc/errors.hpp"
#include "monoloc/lp.hpp"

namespace monoloc {

namespace {

constexpr std::size_t order_unit_search = 1024;

MonoidElement mu_side(const BiadditiveOp& op, const MonoidElement& s, const MonoidElement& a, bool op_side) {
  return op_side ? op.apply(a, s) : op.apply(s, a);
}

std::vector<IntVector> open_normals(const MonoidInstance& m) {
  if (m.kind() == MonoidKind::open_cone) return m.open_cone().open_normals();
  return {};
}

// I + mu(s, .) (or I + mu(., s)) as a matrix acting on column vectors.
RatMatrix shifted_matrix(const BiadditiveOp& op, const RatVector& s, bool op_side) {
  RatMatrix m = op_side ? op.tensor().right_matrix(s) : op.tensor().left_matrix(s);
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] += 1;
  return m;
}

// Functional n o L as a primitive integer vector.
IntVector pullback(const RatMatrix& l, const IntVector& n) {
  const std::size_t d = l.size();
  RatVector out = zero_vector(d);
  for (std::size_t k = 0; k < d; ++k)
    if (n[k] != 0)
      for (std::size_t j = 0; j < d; ++j) out[j] += Rational(n[k]) * l[k][j];
  if (is_zero(out)) return IntVector(d, Integer(0));
  return primitive_direction(out);
}

bool in_positive_set(const MonoidInstance& m, const RatVector& x) { return m.leq(m.zero(), MonoidElement::vector(x)); }

RatVector sum_of(const std::vector<IntVector>& vs, std::size_t d) {
  RatVector out = zero_vector(d);
  for (const auto& v : vs) out = add(out, to_rational(v));
  return out;
}

// Some x in the span with L x in the positive set while x is not, or nothing.
std::optional<RatVector> linear_violation(const BiadditiveOp& op, const RatVector& s, bool op_side, std::string& note) {
  const MonoidInstance& m = op.carrier();
  const RationalCone& c = m.closed_cone();
  const std::size_t d = m.dim();
  const RatMatrix l = shifted_matrix(op, s, op_side);
  const auto opens = open_normals(m);

  // Kernel of L on the span.
  std::vector<RatVector> span_basis;
  for (const auto& g : c.conic_generators()) span_basis.push_back(to_rational(g));
  const Subspace span(d, span_basis);
  RatMatrix lb;  // columns: L applied to the span basis
  for (std::size_t k = 0; k < d; ++k) {
    RatVector row(span.dimension());
    for (std::size_t i = 0; i < span.dimension(); ++i) row[i] = dot(l[k], span.basis()[i]);
    lb.push_back(std::move(row));
  }
  for (const auto& y : nullspace(lb, span.dimension())) {
    RatVector x = zero_vector(d);
    for (std::size_t i = 0; i < y.size(); ++i) x = add(x, scale(y[i], span.basis()[i]));
    for (const RatVector& cand : {x, negate(x)})
      if (!in_positive_set(m, cand)) {
        note = "kernel element outside the positive set";
        return cand;
      }
  }

  std::vector<IntVector> ineqs, eqs = c.equations();
  for (const auto& f : c.facets()) ineqs.push_back(pullback(l, f));
  for (const auto& e : c.equations()) eqs.push_back(pullback(l, e));
  const RationalCone p = RationalCone::from_inequalities(ineqs, eqs, d);
  const auto pgens = p.conic_generators();

  if (opens.empty()) {
    for (const auto& g : pgens)
      if (!c.contains(to_rational(g))) {
        note = "preimage of the cone leaves the cone";
        return to_rational(g);
      }
    return std::nullopt;
  }

  std::vector<IntVector> pulled_open;
  for (const auto& o : opens) pulled_open.push_back(pullback(l, o));
  auto strictly_reached = [&](const std::vector<IntVector>& gens) {
    for (const auto& g : pulled_open) {
      bool hit = false;
      for (const auto& r : gens) hit = hit || dot(g, r) > 0;
      if (!hit) return false;
    }
    return true;
  };
  if (!strictly_reached(pgens)) return std::nullopt;
  const RatVector inner = sum_of(pgens, d);
  for (const auto& g : pgens) {
    const RatVector r = to_rational(g);
    const MembershipResult mr = cone_member(c, r);
    if (mr.status == ConeStatus::outside) {
      const IntVector& f = *mr.violated;
      const Rational ratio = dot(f, inner) / (-dot(f, r));
      const Integer n = Integer(ratio.get_num() / ratio.get_den()) + 1;
      note = "preimage of the cone leaves the closed cone";
      return add(scale(Rational(n < 1 ? Integer(1) : n), r), inner);
    }
  }
  for (const auto& o : opens) {
    auto face_eqs = p.equations();
    face_eqs.push_back(o);
    const RationalCone face = RationalCone::from_inequalities(p.facets(), face_eqs, d);
    const auto fgens = face.conic_generators();
    if (!fgens.empty() && strictly_reached(fgens)) {
      note = "preimage reaches an excluded face";
      return sum_of(fgens, d);
    }
  }
  return std::nullopt;
}

// a, b in M with b - a a positive multiple of x.
WitnessPair witness_from_direction(const MonoidInstance& m, RatVector x) {
  const std::size_t d = m.dim();
  if (m.kind() == MonoidKind::lattice) {
    const auto& gens = m.lattice().generators();
    RatMatrix cols(d, RatVector(gens.size()));
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t k = 0; k < d; ++k) cols[k][i] = gens[i][k];
    auto z = solve_linear(cols, x, gens.size());
    require_internal(z.has_value(), "violation direction outside the span");
    const Integer den = common_denominator(*z);
    x = scale(Rational(den), x);
    Integer shift = 1;
    for (auto& zi : *z) {
      zi *= den;
      if (-zi > shift) shift = Integer(-zi);
    }
    RatVector a = zero_vector(d);
    for (const auto& g : gens) a = add(a, scale(Rational(shift), to_rational(g)));
    return {MonoidElement::vector(a), MonoidElement::vector(add(a, x))};
  }
  const RationalCone& c = m.closed_cone();
  RatVector inner = c.interior_point();
  if (is_zero(x)) return {m.zero(), m.zero()};
  x = to_rational(primitive_direction(x));
  for (Integer k = 1;; ++k) {
    const RatVector a = scale(Rational(k), inner);
    const RatVector b = add(a, x);
    if (m.contains(MonoidElement::vector(a)) && m.contains(MonoidElement::vector(b)))
      return {MonoidElement::vector(a), MonoidElement::vector(b)};
    require_internal(k < 1'000'000, "no witness pair found along the interior direction");
  }
}

LocalizabilityVerdict left_side(const BiadditiveOp& op, const MonoidElement& s, bool op_side) {
  const MonoidInstance& m = op.carrier();
  m.require_member(s, "subject");
  LocalizabilityVerdict v;
  v.subject = s;
  v.op_side = op_side;
  if (m.kind() == MonoidKind::finite) {
    v.scope = Scope::exhaustive;
    const std::size_t n = m.finite().size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const WitnessPair w{MonoidElement::index(a), MonoidElement::index(b)};
        if (witness_is_valid(op, s, w, op_side)) {
          v.verdict = Verdict::no;
          v.witness = w;
          return v;
        }
      }
    v.verdict = Verdict::yes;
    return v;
  }
  v.scope = Scope::structural;
  const auto x = linear_violation(op, s.vec(), op_side, v.note);
  if (!x) {
    v.verdict = Verdict::yes;
    return v;
  }
  const WitnessPair w = witness_from_direction(m, *x);
  require_internal(witness_is_valid(op, s, w, op_side), "constructed witness does not refute localizability");
  v.verdict = Verdict::no;
  v.witness = w;
  return v;
}

std::vector<MonoidElement> queries_for(const MonoidInstance& m, const WeakOptions& opts) {
  if (!opts.queries.empty()) {
    for (const auto& a : opts.queries) m.require_member(a, "query");
    return opts.queries;
  }
  return m.sample_elements(opts.query_sum);
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

const char* to_string(Scope s) {
  switch (s) {
    case Scope::exhaustive: return "exhaustive";
    case Scope::structural: return "structural";
    case Scope::sampled: return "sampled";
  }
  return "?";
}

bool witness_is_valid(const BiadditiveOp& op, const MonoidElement& s, const WitnessPair& w, bool op_side) {
  const MonoidInstance& m = op.carrier();
  if (!m.contains(w.a) || !m.contains(w.b) || !m.contains(s)) return false;
  const MonoidElement lhs = m.add(mu_side(op, s, w.a, op_side), w.a);
  const MonoidElement rhs = m.add(mu_side(op, s, w.b, op_side), w.b);
  return m.leq(lhs, rhs) && !m.leq(w.a, w.b);
}

LocalizabilityVerdict is_left_localizable(const BiadditiveOp& op, const MonoidElement& s) {
  return left_side(op, s, false);
}

LocalizabilityVerdict is_localizable(const BiadditiveOp& op, const MonoidElement& s) {
  LocalizabilityVerdict v = left_side(op, s, false);
  if (v.verdict == Verdict::yes) v = left_side(op, s, true);
  v.kind = Side::full;
  return v;
}

std::optional<LocalizableDirections> localizable_directions(const BiadditiveOp& op) {
  const MonoidInstance& m = op.carrier();
  if (m.kind() == MonoidKind::finite || !open_normals(m).empty()) return std::nullopt;
  LocalizableDirections out;
  out.group = ReducedGroup::build(op.carrier_ptr(), 1);
  const ReducedGroup& g = *out.group;
  const std::size_t q = g.rank();
  if (q == 0) {
    out.directions = Subspace(0, {});
    out.dominating = m.zero();
    return out;
  }
  const LiftedOp lift = lift_mu(op, out.group, {});
  const auto& st = lift.structure();
  RatMatrix constraints;
  for (const auto& ray : g.positive_cone().extreme_rays()) {
    const RatVector r = to_rational(ray);
    const RatMatrix ann = Subspace(q, {r}).annihilator();
    for (bool op_side : {false, true}) {
      // Column i: mu(e_i, r) (or mu(r, e_i)).
      std::vector<RatVector> cols(q, zero_vector(q));
      for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
          if (r[j] == 0) continue;
          const RatVector& t = op_side ? st[j * q + i] : st[i * q + j];
          cols[i] = add(cols[i], scale(r[j], t));
        }
      for (const auto& n : ann) {
        RatVector row(q);
        for (std::size_t i = 0; i < q; ++i) row[i] = dot(n, cols[i]);
        constraints.push_back(std::move(row));
      }
    }
  }
  out.directions = Subspace(q, nullspace(constraints, q));
  std::vector<IntVector> eqs = g.positive_cone().equations();
  for (const auto& a : out.directions.annihilator()) eqs.push_back(primitive_direction(a));
  out.localizable = RationalCone::from_inequalities(g.positive_cone().facets(), eqs, q);
  const RatVector sigma = sum_of(out.localizable.extreme_rays(), q);
  for (const auto& f : g.positive_cone().facets())
    if (dot(f, sigma) <= 0) {
      out.blocking_facet = f;
      return out;
    }
  const auto gens = m.generators();
  std::vector<RatVector> images;
  for (const auto& x : gens) images.push_back(g.iota(x).vec());
  auto coeffs = nonneg_combination(images, sigma);
  require_internal(coeffs.has_value(), "interior localizable direction is not reached by generators");
  const Integer den = common_denominator(*coeffs);
  RatVector s = zero_vector(m.dim());
  for (std::size_t i = 0; i < gens.size(); ++i) s = add(s, scale((*coeffs)[i] * den, gens[i].vec()));
  out.dominating = MonoidElement::vector(s);
  return out;
}

WeakCertificate is_weakly_localizable(const BiadditiveOp& op, const WeakOptions& opts) {
  const MonoidInstance& m = op.carrier();
  const auto queries = queries_for(m, opts);
  WeakCertificate cert;
  if (m.kind() == MonoidKind::finite) {
    cert.scope = Scope::exhaustive;
    const std::size_t n = m.finite().size();
    std::vector<bool> good(n);
    for (std::size_t s = 0; s < n; ++s)
      good[s] = is_localizable(op, MonoidElement::index(s)).verdict == Verdict::yes;
    for (std::size_t a = 0; a < n; ++a) {
      std::optional<std::size_t> found;
      for (std::size_t s = 0; s < n && !found; ++s)
        if (good[s] && m.finite().leq(a, s)) found = s;
      if (!found) {
        cert.verdict = Verdict::no;
        cert.refuted = MonoidElement::index(a);
        cert.note = "no localizable element dominates " + m.format(MonoidElement::index(a));
        return cert;
      }
      cert.certificate.emplace_back(MonoidElement::index(a), MonoidElement::index(*found));
    }
    cert.verdict = Verdict::yes;
    return cert;
  }
  if (const auto dirs = localizable_directions(op)) {
    cert.scope = Scope::structural;
    if (!dirs->dominating) {
      RatVector a0 = zero_vector(m.dim());
      for (const auto& g : m.generators()) a0 = add(a0, g.vec());
      cert.verdict = Verdict::no;
      cert.refuted = MonoidElement::vector(a0);
      cert.note = "every localizable element lies on the face " + to_string(*dirs->blocking_facet) +
                  " of the reduced cone";
      return cert;
    }
    const ReducedGroup& g = *dirs->group;
    const MonoidElement s0 = *dirs->dominating;
    for (const auto& a : queries) {
      Integer k = 1;
      if (g.rank() > 0) {
        const RatVector ia = g.iota(a).vec(), is = g.iota(s0).vec();
        for (const auto& f : g.positive_cone().facets()) {
          const Rational ratio = dot(f, ia) / dot(f, is);
          Integer c = ratio.get_num() / ratio.get_den();
          if (Rational(c) < ratio) c += 1;
          if (c > k) k = c;
        }
      }
      const MonoidElement s = MonoidElement::vector(scale(Rational(k), s0.vec()));
      require_internal(m.leq(a, s), "dominating multiple does not dominate");
      cert.certificate.emplace_back(a, s);
    }
    cert.verdict = Verdict::yes;
    cert.note = "localizable element " + m.format(s0) + " lies in the relative interior of the reduced cone";
    return cert;
  }
  cert.scope = Scope::sampled;
  const auto candidates = m.sample_elements(opts.budget);
  std::map<MonoidElement, bool> cache;
  auto localizable = [&](const MonoidElement& s) {
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, is_localizable(op, s).verdict == Verdict::yes).first;
    return it->second;
  };
  for (const auto& a : queries) {
    std::optional<MonoidElement> found;
    for (const auto& s : candidates)
      if (m.leq(a, s) && localizable(s)) {
        found = s;
        break;
      }
    if (!found) {
      cert.verdict = Verdict::unknown;
      cert.refuted = a;
      cert.note = "no localizable candidate within budget dominates " + m.format(a);
      return cert;
    }
    cert.certificate.emplace_back(a, *found);
  }
  cert.verdict = Verdict::yes;
  cert.note = "certified on the sampled queries only";
  return cert;
}

StrongVerdict is_strongly_localizable(const BiadditiveOp& op, unsigned sample_sum) {
  const MonoidInstance& m = op.carrier();
  StrongVerdict out;
  auto check = [&](const MonoidElement& s) {
    ++out.checked;
    LocalizabilityVerdict v = is_localizable(op, s);
    if (v.verdict == Verdict::no) {
      out.verdict = Verdict::no;
      out.counterexample = std::move(v);
      return false;
    }
    return true;
  };
  if (m.kind() == MonoidKind::finite) {
    out.scope = Scope::exhaustive;
    for (const auto& s : m.sample_elements(0))
      if (!check(s)) return out;
    out.verdict = Verdict::yes;
    return out;
  }
  if (const auto dirs = localizable_directions(op)) {
    out.scope = Scope::structural;
    for (const auto& g : m.generators()) {
      ++out.checked;
      if (dirs->group->rank() > 0 && !dirs->directions.contains(dirs->group->iota(g).vec())) {
        --out.checked;
        check(g);
        require_internal(out.verdict == Verdict::no, "generator outside the localizable directions passed the check");
        return out;
      }
    }
    out.verdict = Verdict::yes;
    return out;
  }
  out.scope = Scope::sampled;
  for (const auto& s : m.sample_elements(sample_sum))
    if (!check(s)) return out;
  out.verdict = Verdict::yes;
  return out;
}

OrderUnitResult order_unit_fast_path(const BiadditiveOp& op, const MonoidElement& e, const WeakOptions& opts) {
  const MonoidInstance& m = op.carrier();
  OrderUnitResult out;
  auto refuse = [&](std::string why) {
    out.refusal = std::move(why);
    out.certificate = is_weakly_localizable(op, opts);
    return out;
  };
  if (!m.contains(e)) return refuse("unit candidate is not in the carrier");
  const auto gens = m.kind() == MonoidKind::finite ? m.sample_elements(0) : m.generators();
  for (const auto& g : gens)
    if (!(op.apply(e, g) == g) || !(op.apply(g, e) == g))
      return refuse("not a two-sided unit: mu(e, " + m.format(g) + ") differs from " + m.format(g));
  auto unit_multiple = [&](const MonoidElement& a) -> std::optional<std::size_t> {
    for (std::size_t k = 1; k <= order_unit_search; ++k)
      if (m.leq(a, m.multiple(k, e))) return k;
    return std::nullopt;
  };
  for (const auto& g : gens)
    if (!unit_multiple(g)) return refuse("not an order unit: " + m.format(g) + " exceeds every tested multiple");
  out.applied = true;
  out.certificate.scope = Scope::structural;
  for (const auto& a : queries_for(m, opts)) {
    const auto k = unit_multiple(a);
    require_internal(k.has_value(), "order unit fails to dominate a sum of generators");
    const MonoidElement s = m.multiple(*k, e);
    require_internal(is_localizable(op, s).verdict == Verdict::yes, "multiple of the unit is not localizable");
    out.certificate.certificate.emplace_back(a, s);
  }
  out.certificate.verdict = Verdict::yes;
  out.certificate.note = "multiples of the unit";
  return out;
}

}  // namespace monoloc
