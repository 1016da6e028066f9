#include <gtest/gtest.h>

#include <set>

#include "monoloc/corpus.hpp"
#include "monoloc/enumerate.hpp"
#include "monoloc/errors.hpp"
#include "monoloc/functionals.hpp"
#include "monoloc/lp.hpp"
#include "oracles.hpp"

using namespace monoloc;

namespace {

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

MonoidElement el(std::initializer_list<long> xs) { return MonoidElement::vector(rv(xs)); }

std::vector<RatVector> units(std::size_t d) {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < d; ++i) out.push_back(unit_vector(d, i));
  return out;
}

std::vector<IntVector> coefficient_list(const std::vector<AdditiveFunctional>& fs) {
  std::vector<IntVector> out;
  for (const auto& f : fs) out.push_back(to_integer(f.coefficients));
  return out;
}

// Integer functionals in [-6, 6]^d, positive on gens, tight on a rank d-1 subset, primitive.
std::set<IntVector> brute_extremals(const std::vector<IntVector>& gens, std::size_t d) {
  std::set<IntVector> out;
  IntVector phi(d, Integer(-6));
  while (true) {
    if (!is_zero(phi) && primitive(phi) == phi) {
      bool positive = true;
      RatMatrix tight;
      for (const auto& g : gens) {
        const Integer v = dot(phi, g);
        if (v < 0) positive = false;
        if (v == 0) tight.push_back(to_rational(g));
      }
      if (positive && rank(tight, d) + 1 == d) out.insert(phi);
    }
    std::size_t i = 0;
    while (i < d && phi[i] == 6) phi[i++] = -6;
    if (i == d) break;
    phi[i] += 1;
  }
  return out;
}

BiadditiveOp diagonal_op(std::size_t d, const std::vector<long>& c) {
  Tensor t(d);
  for (std::size_t i = 0; i < d; ++i) t.at(i, i, i) = c[i];
  return BiadditiveOp::from_tensor(corpus::free_monoid(d), t);
}

}  // namespace

TEST(Functionals, Examples) {
  const auto orth = ordered_subgroup(RationalCone::orthant(2), units(2));
  EXPECT_EQ(coefficient_list(positive_functionals(orth)), (std::vector<IntVector>{{0, 1}, {1, 0}}));

  const auto wedge = ordered_subgroup(RationalCone::from_generators(std::vector<IntVector>{{1, 0}, {1, 2}}, 2), units(2));
  EXPECT_EQ(coefficient_list(positive_functionals(wedge)), (std::vector<IntVector>{{0, 1}, {2, -1}}));

  const auto line = ordered_subgroup(RationalCone::whole_space(1), units(1));
  EXPECT_TRUE(positive_functionals(line).empty());
  for (const auto& f : positive_functionals(wedge)) {
    EXPECT_TRUE(is_extremal(wedge, f));
    EXPECT_TRUE(is_positive(wedge, f));
  }
  EXPECT_FALSE(is_extremal(wedge, {rv({1, 0})}));
}

TEST(Functionals, SubgroupCoordinates) {
  // <(1/2, 0), (0, 3)> inside the orthant.
  const auto h = ordered_subgroup(RationalCone::orthant(2), {{Rational(1, 2), 0}, rv({0, 3})});
  EXPECT_EQ(h.rank(), 2u);
  EXPECT_EQ(h.denominator, 2);
  EXPECT_THROW(h.coordinates(rv({0, 1})), InputError);
  EXPECT_EQ(positive_functionals(h).size(), 2u);
}

TEST(Functionals, BruteForceExtremals) {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 2 + rng.index(2);
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < d + 1; ++i) gens.push_back(rng.vec(d, -2, 3));
    const auto cone = RationalCone::from_generators(gens, d);
    if (!cone.is_full_dimensional()) continue;
    const auto h = ordered_subgroup(cone, units(d));
    const auto computed = coefficient_list(positive_functionals(h));
    const auto brute = brute_extremals(cone.conic_generators(), d);
    for (const auto& f : computed) {
      bool small = true;
      for (const auto& x : f) small = small && abs(x) <= 6;
      if (small) EXPECT_TRUE(brute.count(f)) << to_string(f);
    }
    for (const auto& f : brute) EXPECT_NE(std::find(computed.begin(), computed.end(), f), computed.end());
    // Random positive functionals decompose over the extremal ones.
    std::vector<RatVector> cols;
    for (const auto& f : computed) cols.push_back(to_rational(f));
    for (int k = 0; k < 5 && !cols.empty(); ++k) {
      RatVector phi = zero_vector(d);
      for (const auto& c : cols) phi = add(phi, scale(Rational(rng.range(0, 3)), c));
      EXPECT_TRUE(nonneg_combination(cols, phi).has_value());
    }
  }
}

TEST(MultIdentity, FreeMonoidElementwise) {
  const auto e = corpus::elementwise(2);
  const auto p = product_subgroup(e, {el({1, 0}), el({0, 1}), el({1, 1})}, el({1, 1}));
  const auto fs = positive_functionals(p.h);
  ASSERT_EQ(fs.size(), 2u);
  for (const auto& phi : fs) {
    for (bool op_side : {false, true}) {
      const auto r = check_mult_identity(e, p, phi, op_side);
      EXPECT_TRUE(r.holds());
      EXPECT_EQ(r.checked, 9u);
    }
    const auto scaled = check_mult_identity(e, p, {scale(Rational(3), phi.coefficients)});
    EXPECT_TRUE(scaled.holds());
    const auto n = normalize_multiplicative(e, p, phi);
    EXPECT_EQ(n.kind, NormalizationCase::normalized);
    EXPECT_TRUE(n.multiplicative);
    EXPECT_EQ(n.psi.coefficients, phi.coefficients);
  }
  const auto zero = check_mult_identity(e, p, {rv({0, 0})});
  EXPECT_FALSE(zero.precondition_failures.empty());
  const auto sum = normalize_multiplicative(e, p, {rv({1, 1})});
  EXPECT_FALSE(sum.multiplicative);
  EXPECT_FALSE(is_extremal(p.h, {rv({1, 1})}));
}

TEST(MultIdentity, TrivialF) {
  const auto e = corpus::elementwise(2);
  const auto p = product_subgroup(e, {el({0, 0})}, el({0, 0}));
  EXPECT_EQ(p.h.rank(), 0u);
  const auto n = normalize_multiplicative(e, p, {RatVector{}});
  EXPECT_EQ(n.kind, NormalizationCase::vanishes_on_f);
  EXPECT_THROW(product_subgroup(e, {el({1, 0})}, el({0, 1})), InputError);
}

TEST(MultIdentity, RandomSupportPreserving) {
  oracle::Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + rng.index(2);
    std::vector<long> c(d);
    for (auto& x : c) x = rng.range(0, 3);
    const auto op = diagonal_op(d, c);
    std::vector<MonoidElement> f;
    for (std::size_t i = 0; i < d; ++i) f.push_back(MonoidElement::vector(unit_vector(d, i)));
    const auto s = MonoidElement::vector(RatVector(d, Rational(1)));
    f.push_back(s);
    RatVector mixed = zero_vector(d);
    mixed[0] = 1;
    mixed[d - 1] = 1;
    if (!(MonoidElement::vector(mixed) == s)) f.push_back(MonoidElement::vector(mixed));
    const auto p = product_subgroup(op, f, s);
    for (const auto& phi : positive_functionals(p.h)) {
      if (phi(p.h, p.image(s)) <= 0 || phi(p.h, p.image(op.apply(s, s))) <= 0) continue;
      EXPECT_TRUE(check_mult_identity(op, p, phi).holds());
      EXPECT_TRUE(normalize_multiplicative(op, p, phi).multiplicative);
    }
  }
}

TEST(Positivstellensatz, Examples) {
  const auto orth = ordered_subgroup(RationalCone::orthant(2), units(2));
  const auto r1 = positivstellensatz(orth, rv({1, 1}), rv({2, 2}));
  ASSERT_TRUE(r1.k.has_value());
  EXPECT_EQ(*r1.k, 1);
  const auto r2 = positivstellensatz(orth, rv({1, 0}), rv({0, 1}));
  ASSERT_TRUE(r2.refuter.has_value());
  EXPECT_GE((*r2.refuter)(orth, rv({1, 0})), (*r2.refuter)(orth, rv({0, 1})));
  const auto wedge = ordered_subgroup(RationalCone::from_generators(std::vector<IntVector>{{1, 0}, {1, 2}}, 2), units(2));
  const auto r3 = positivstellensatz(wedge, rv({1, 1}), rv({2, 1}));
  ASSERT_TRUE(r3.refuter.has_value());
  EXPECT_EQ(r3.refuter->coefficients, rv({0, 1}));
  oracle::Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const RatVector a = to_rational(rng.vec(2, 0, 4)), b = to_rational(rng.vec(2, 0, 4));
    const auto r = positivstellensatz(wedge, a, b);
    if (r.k) EXPECT_TRUE(wedge.positive_cone.contains(scale(Rational(*r.k), sub(b, a))));
    else EXPECT_GE((*r.refuter)(wedge, a), (*r.refuter)(wedge, b));
  }
}

TEST(TheoremMain, Examples) {
  const auto e = verify_theorem_main(corpus::elementwise(3));
  EXPECT_EQ(e.status, CheckStatus::pass);
  EXPECT_TRUE(e.exact_commutative && e.exact_associative);
  EXPECT_EQ(e.pairs, 400u);

  const auto h = verify_theorem_main(corpus::half_plane_scaling());
  EXPECT_EQ(h.status, CheckStatus::observed);
  EXPECT_FALSE(h.exact_commutative);
  EXPECT_EQ(h.commutativity_failure_count, 0u);
  EXPECT_EQ(h.associativity_failure_count, 0u);

  const auto mat = verify_theorem_main(corpus::nonnegative_matrices(), {2, {}});
  EXPECT_EQ(mat.status, CheckStatus::refused);
  EXPECT_GT(mat.commutativity_failure_count, 0u);
}

TEST(TheoremMain, FiniteEnumerated) {
  std::size_t instances = 0;
  for (const auto& [name, m] : corpus::small_finite_monoids()) {
    if (m.size() > 4) continue;
    const auto c = corpus::finite(m);
    for (const auto& op : enumerate_biadditive_ops(c, {}, nullptr)) {
      const auto r = verify_theorem_main(op);
      EXPECT_EQ(r.status, CheckStatus::pass) << name;
      ++instances;
    }
  }
  EXPECT_GE(instances, 20u);
}

TEST(Audit, Examples) {
  EXPECT_EQ(weak_implies_strong_audit(corpus::elementwise(3)).status, AuditStatus::confirmed);
  const auto mat = weak_implies_strong_audit(corpus::nonnegative_matrices());
  EXPECT_EQ(mat.status, AuditStatus::vacuous);
  EXPECT_EQ(mat.reason, "not weakly localizable");
  EXPECT_EQ(weak_implies_strong_audit(corpus::half_plane_scaling()).status, AuditStatus::skipped);
  EXPECT_EQ(weak_implies_strong_audit(diagonal_op(3, {2, 0, 1})).status, AuditStatus::confirmed);
}
