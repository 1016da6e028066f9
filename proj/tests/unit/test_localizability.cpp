#include <gtest/gtest.h>

#include "monoloc/corpus.hpp"
#include "monoloc/enumerate.hpp"
#include "monoloc/errors.hpp"
#include "monoloc/localizability.hpp"
#include "oracles.hpp"

using namespace monoloc;

namespace {

MonoidElement el(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return MonoidElement::vector(v);
}

// {x > 0, y >= 0} together with 0.
corpus::Carrier open_quadrant() {
  return std::make_shared<const MonoidInstance>(OpenConeMonoid(RationalCone::orthant(2), {{Integer(1), Integer(0)}}));
}

// Tensor from a list of (i, j, k, value) entries.
BiadditiveOp tensor_op(const corpus::Carrier& c, std::initializer_list<std::array<long, 4>> entries) {
  Tensor t(c->dim());
  for (const auto& e : entries) t.at(e[0], e[1], e[2]) = e[3];
  return BiadditiveOp::from_tensor(c, t);
}

// Definitional pair check: mu(s,a)+a <= mu(s,b)+b implies a <= b on the given pairs.
bool no_sampled_contradiction(const BiadditiveOp& op, const MonoidElement& s, const std::vector<MonoidElement>& xs) {
  const MonoidInstance& m = op.carrier();
  for (const auto& a : xs)
    for (const auto& b : xs)
      for (bool op_side : {false, true}) {
        const auto sa = op_side ? op.apply(a, s) : op.apply(s, a);
        const auto sb = op_side ? op.apply(b, s) : op.apply(s, b);
        if (m.leq(m.add(sa, a), m.add(sb, b)) && !m.leq(a, b)) return false;
      }
  return true;
}

}  // namespace

TEST(Localizable, ZeroOperation) {
  for (const auto& c : {corpus::free_monoid(2), corpus::open_half_plane(), corpus::finite(cyclic_monoid(2, 2))}) {
    const auto z = corpus::zero_op(c);
    for (const auto& s : c->sample_elements(2)) EXPECT_EQ(is_localizable(z, s).verdict, Verdict::yes);
  }
}

TEST(Localizable, ElementwiseUnit) {
  const auto e = corpus::elementwise(3);
  EXPECT_EQ(is_left_localizable(e, el({1, 1, 1})).verdict, Verdict::yes);
  for (const auto& s : e.carrier().sample_elements(2)) {
    const auto v = is_localizable(e, s);
    EXPECT_EQ(v.verdict, Verdict::yes);
    EXPECT_EQ(v.scope, Scope::structural);
    EXPECT_EQ(is_left_localizable(e, s).verdict, v.verdict);
  }
}

TEST(Localizable, MatrixAntidiagonalRefuted) {
  const auto mat = corpus::nonnegative_matrices();
  const auto s = el({0, 1, 1, 0});
  const auto v = is_left_localizable(mat, s);
  ASSERT_EQ(v.verdict, Verdict::no);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_TRUE(witness_is_valid(mat, s, *v.witness));
  EXPECT_EQ(v.witness->a, el({1, 1, 1, 1}));
  // b - a lies in the kernel of x -> e x + x.
  const RatVector diff = sub(v.witness->b.vec(), v.witness->a.vec());
  EXPECT_TRUE(is_zero(add(mat.tensor().apply(s.vec(), diff), diff)));
  EXPECT_EQ(is_localizable(mat, s).verdict, Verdict::no);
  // (e + 1)(e - 1) = 0: the shifted map is singular.
  RatMatrix l = mat.tensor().left_matrix(s.vec());
  for (std::size_t i = 0; i < 4; ++i) l[i][i] += 1;
  EXPECT_EQ(rank(l, 4), 2u);
}

TEST(Localizable, OpenFaces) {
  const auto q = open_quadrant();
  // mu(a, b) = (x x', x y' + y x')
  const auto op = tensor_op(q, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}});
  ASSERT_TRUE(validate_biadditive(op).valid);
  EXPECT_EQ(is_localizable(op, el({1, 0})).verdict, Verdict::yes);
  const auto v = is_left_localizable(op, el({1, 1}));
  ASSERT_EQ(v.verdict, Verdict::no);
  EXPECT_TRUE(witness_is_valid(op, el({1, 1}), *v.witness));

  // mu(a, b) = (x x' + x y', x y')
  const auto op2 = tensor_op(q, {{0, 0, 0, 1}, {0, 1, 0, 1}, {0, 1, 1, 1}});
  ASSERT_TRUE(validate_biadditive(op2).valid);
  const auto v2 = is_left_localizable(op2, el({1, 0}));
  ASSERT_EQ(v2.verdict, Verdict::no);
  EXPECT_TRUE(witness_is_valid(op2, el({1, 0}), *v2.witness));

  const auto h = corpus::half_plane_scaling();
  for (const auto& s : h.carrier().sample_elements(3)) EXPECT_EQ(is_localizable(h, s).verdict, Verdict::yes);
}

TEST(Localizable, FiniteExhaustive) {
  for (const auto& [name, m] : corpus::small_finite_monoids()) {
    if (m.size() > 4) continue;
    SCOPED_TRACE(name);
    const auto c = corpus::finite(m);
    for (const auto& op : enumerate_biadditive_ops(c, {}, nullptr)) {
      const auto strong = is_strongly_localizable(op);
      EXPECT_EQ(strong.scope, Scope::exhaustive);
      if (strong.verdict == Verdict::yes) EXPECT_EQ(is_weakly_localizable(op).verdict, Verdict::yes);
      const auto a = is_localizable(op, MonoidElement::index(m.size() - 1));
      const auto b = is_localizable(op, MonoidElement::index(m.size() - 1));
      EXPECT_EQ(a.verdict, b.verdict);
    }
  }
}

TEST(Localizable, RandomTensorsAgreeWithPairs) {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t d = 2 + rng.index(2);
    const auto c = corpus::free_monoid(d);
    Tensor t(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          if (rng.index(3) == 0) t.at(i, j, k) = rng.range(1, 2);
    const auto op = BiadditiveOp::from_tensor(c, t);
    const auto pairs = c->sample_elements(2);
    const auto dirs = localizable_directions(op);
    ASSERT_TRUE(dirs.has_value());
    for (const auto& s : c->sample_elements(2)) {
      const auto v = is_localizable(op, s);
      if (v.verdict == Verdict::yes) EXPECT_TRUE(no_sampled_contradiction(op, s, pairs));
      else EXPECT_TRUE(witness_is_valid(op, s, *v.witness, v.op_side));
      // Eigenvector characterization on the reduced cone.
      EXPECT_EQ(v.verdict == Verdict::yes, dirs->directions.contains(dirs->group->iota(s).vec()));
    }
  }
}

TEST(Weak, Elementwise) {
  const auto e = corpus::elementwise(3);
  const auto w = is_weakly_localizable(e);
  ASSERT_EQ(w.verdict, Verdict::yes);
  EXPECT_EQ(w.scope, Scope::structural);
  for (const auto& [a, s] : w.certificate) {
    EXPECT_TRUE(e.carrier().leq(a, s));
    EXPECT_EQ(is_localizable(e, s).verdict, Verdict::yes);
    // (sum a_i + 1) * 1 also works.
    Rational total = 1;
    for (const auto& x : a.vec()) total += x;
    const auto alt = MonoidElement::vector(RatVector(3, total));
    EXPECT_TRUE(e.carrier().leq(a, alt));
    EXPECT_EQ(is_localizable(e, alt).verdict, Verdict::yes);
  }
}

TEST(Weak, MatrixRefuted) {
  const auto mat = corpus::nonnegative_matrices();
  const auto w = is_weakly_localizable(mat);
  EXPECT_EQ(w.verdict, Verdict::no);
  ASSERT_TRUE(w.refuted.has_value());
  // Every sampled s above the refuted element fails.
  for (const auto& s : mat.carrier().sample_elements(3))
    if (mat.carrier().leq(*w.refuted, s)) EXPECT_EQ(is_localizable(mat, s).verdict, Verdict::no);
  EXPECT_EQ(is_strongly_localizable(mat).verdict, Verdict::no);
}

TEST(Weak, TrivialMonoids) {
  const auto t = corpus::finite(cyclic_group(1));
  const auto w = is_weakly_localizable(corpus::zero_op(t));
  ASSERT_EQ(w.verdict, Verdict::yes);
  EXPECT_EQ(w.certificate.front().second, MonoidElement::index(0));
  const auto z = std::make_shared<const MonoidInstance>(LatticeMonoid(1, {{Integer(0)}}));
  EXPECT_EQ(is_weakly_localizable(corpus::zero_op(z)).verdict, Verdict::yes);
}

TEST(Weak, OpenConeSampled) {
  const auto h = corpus::half_plane_scaling();
  const auto w = is_weakly_localizable(h);
  EXPECT_EQ(w.verdict, Verdict::yes);
  EXPECT_EQ(w.scope, Scope::sampled);
  for (const auto& [a, s] : w.certificate) EXPECT_TRUE(h.carrier().leq(a, s));
}

TEST(Strong, Examples) {
  EXPECT_EQ(is_strongly_localizable(corpus::elementwise(2)).verdict, Verdict::yes);
  EXPECT_EQ(is_strongly_localizable(corpus::zero_op(corpus::free_monoid(3))).verdict, Verdict::yes);
  const auto mat = is_strongly_localizable(corpus::nonnegative_matrices());
  ASSERT_EQ(mat.verdict, Verdict::no);
  EXPECT_TRUE(mat.counterexample->witness.has_value());
}

TEST(OrderUnit, Elementwise) {
  const auto e = corpus::elementwise(3);
  const auto r = order_unit_fast_path(e, el({1, 1, 1}));
  ASSERT_TRUE(r.applied);
  for (const auto& [a, s] : r.certificate.certificate) {
    Rational mx = 1;
    for (const auto& x : a.vec()) mx = std::max(mx, x);
    EXPECT_EQ(s, MonoidElement::vector(RatVector(3, mx)));
  }
}

TEST(OrderUnit, MatrixIdentityRefused) {
  const auto mat = corpus::nonnegative_matrices();
  const auto r = order_unit_fast_path(mat, el({1, 0, 0, 1}));
  EXPECT_FALSE(r.applied);
  EXPECT_NE(r.refusal.find("not an order unit"), std::string::npos);
  EXPECT_EQ(r.certificate.verdict, Verdict::no);
  const auto t = corpus::finite(cyclic_group(1));
  EXPECT_TRUE(order_unit_fast_path(corpus::zero_op(t), MonoidElement::index(0)).applied);
}
