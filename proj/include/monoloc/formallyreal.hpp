#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "monoloc/rational.hpp"

namespace monoloc {

/// Polynomial over Q, coefficients from the constant term up, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RatVector coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial x();

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const RatVector& coefficients() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

 private:
  RatVector c_;
};

struct DivMod {
  Polynomial quotient, remainder;
};
DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial power(const Polynomial& p, unsigned e);
std::string to_string(const Polynomial& p);

/// p = c * prod factors[i]^(i+1) with monic square-free, pairwise coprime factors (Yun).
struct SquareFreeDecomposition {
  Rational content;
  std::vector<Polynomial> factors;
  Polynomial odd_part() const;
};
SquareFreeDecomposition square_free_decomposition(const Polynomial& p);

class SturmChain {
 public:
  /// Throws InputError for the zero polynomial.
  explicit SturmChain(const Polynomial& p);
  const std::vector<Polynomial>& sequence() const { return seq_; }
  /// Sign variations at x; nullopt stands for -inf (lower) or +inf (upper) via the flag.
  std::size_t variations(const std::optional<Rational>& x, bool upper) const;
  /// Distinct real roots in (lo, hi]; missing endpoints are infinite.
  std::size_t count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const;

 private:
  std::vector<Polynomial> seq_;
};

std::size_t sturm_root_count(const Polynomial& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi);

/// Numerator over monic denominator with gcd 1.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction constant(const Rational& c) { return {Polynomial::constant(c), Polynomial::constant(1)}; }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Value at x, when the denominator does not vanish.
  std::optional<Rational> operator()(const Rational& x) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  Polynomial num_, den_;
};

std::string to_string(const RationalFunction& f);
/// Grammar: sums, products, quotients, unary signs, parentheses, x, integers, '^' with a
/// nonnegative integer exponent; juxtaposition multiplies ("3x^2"). Throws InputError with the position.
RationalFunction parse_rational_function(std::string_view text);

struct SosVerdict {
  bool member = false;
  /// For non-members: a point of definition where f is negative.
  std::optional<Rational> witness;
  std::optional<Rational> witness_value;
};

/// f in Q(x)** iff f is nonnegative wherever it is defined.
SosVerdict is_sos_membership(const RationalFunction& f);

struct SkewHypothesis {
  Integer k;
  Rational witness, witness_value;  // f - k at the witness is negative
  Integer search_bound;
};

/// Least k >= 1 with f - k outside Q(x)**.
SkewHypothesis theorem_skew_hypothesis(const RationalFunction& f);

struct CategoryReport {
  std::string field;
  int category = 3;
  bool minus_one_excluded = false;  // -1 is not a sum of products of squares
  std::vector<std::pair<std::string, SkewHypothesis>> evidence;
  std::string note;
};

/// Supported fields: "Q" and "Q(x)". Throws InputError for anything else.
CategoryReport categorize(const std::string& field, const std::vector<RationalFunction>& samples);

}  // namespace monoloc
