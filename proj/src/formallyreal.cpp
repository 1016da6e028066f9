#include "monoloc/formallyreal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "monoloc/errors.hpp"

namespace monoloc {

namespace {

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

int sign_of(const Rational& q) { return sgn(q); }

}  // namespace

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RatVector coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(RatVector{c}); }
Polynomial Polynomial::x() { return Polynomial(RatVector{0, 1}); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  RatVector d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  RatVector d = c_;
  const Rational lc = c_.back();
  for (auto& v : d) v /= lc;
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  RatVector r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a) {
  RatVector r = a.c_;
  for (auto& v : r) v = -v;
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RatVector r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  require_input(!b.is_zero(), "polynomial division by zero");
  RatVector rem = a.coefficients();
  const long db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  RatVector q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational lc = b.leading();
  for (long i = a.degree(); i >= db; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] / lc;
    q[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(static_cast<std::size_t>(j));
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial power(const Polynomial& p, unsigned e) {
  Polynomial r = Polynomial::constant(1), base = p;
  while (e > 0) {
    if (e & 1U) r = r * base;
    base = base * base;
    e >>= 1U;
  }
  return r;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    const bool unit = c == 1 && i > 0;
    if (!unit) {
      const bool frac = c.get_den() != 1;
      if (frac && i > 0) os << "(" << to_string(c) << ")";
      else os << to_string(c);
    }
    if (i > 0) os << "x";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

// ------------------------------------------------------- square-free parts

Polynomial SquareFreeDecomposition::odd_part() const {
  Polynomial r = Polynomial::constant(1);
  for (std::size_t i = 0; i < factors.size(); i += 2) r = r * factors[i];
  return r;
}

SquareFreeDecomposition square_free_decomposition(const Polynomial& p) {
  require_input(!p.is_zero(), "square-free decomposition of the zero polynomial");
  SquareFreeDecomposition out;
  out.content = p.leading();
  const Polynomial f = p.monic();
  if (f.degree() == 0) return out;
  Polynomial a = gcd(f, f.derivative());
  Polynomial b = divmod(f, a).quotient;
  Polynomial c = divmod(f.derivative(), a).quotient;
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    out.factors.push_back(g);
    b = divmod(b, g).quotient;
    c = divmod(d, g).quotient;
    d = c - b.derivative();
  }
  while (!out.factors.empty() && out.factors.back().degree() == 0) out.factors.pop_back();
  return out;
}

// ---------------------------------------------------------------- Sturm

SturmChain::SturmChain(const Polynomial& p) {
  require_input(!p.is_zero(), "Sturm chain of the zero polynomial");
  seq_.push_back(p);
  Polynomial prev = p, cur = p.derivative();
  while (!cur.is_zero()) {
    seq_.push_back(cur);
    Polynomial next = -divmod(prev, cur).remainder;
    prev = std::move(cur);
    cur = std::move(next);
  }
}

std::size_t SturmChain::variations(const std::optional<Rational>& x, bool upper) const {
  // The chain is divided by its last member so multiple roots do not disturb the count.
  const Polynomial& g = seq_.back();
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : seq_) {
    const Polynomial r = divmod(q, g).quotient;
    int s;
    if (x) {
      s = sign_of(r(*x));
    } else {
      s = sign_of(r.leading());
      if (!upper && (r.degree() % 2 == 1)) s = -s;
    }
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t SturmChain::count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
  if (lo && hi && *hi <= *lo) return 0;
  const std::size_t a = variations(lo, false), b = variations(hi, true);
  require_internal(a >= b, "Sturm variations increased");
  return a - b;
}

std::size_t sturm_root_count(const Polynomial& p, const std::optional<Rational>& lo,
                             const std::optional<Rational>& hi) {
  return SturmChain(p).count(lo, hi);
}

// -------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  require_input(!den.is_zero(), "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = {};
    den_ = Polynomial::constant(1);
    return;
  }
  const Polynomial g = gcd(num, den);
  num = divmod(num, g).quotient;
  den = divmod(den, g).quotient;
  const Rational lc = den.leading();
  num_ = num * Polynomial::constant(1 / lc);
  den_ = den.monic();
}

std::optional<Rational> RationalFunction::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (d == 0) return std::nullopt;
  return num_(x) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}
RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_}; }
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  require_input(!b.is_zero(), "division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::string to_string(const RationalFunction& f) {
  if (f.denominator().degree() == 0) return to_string(f.numerator());
  auto wrap = [](const Polynomial& p) {
    const std::string s = to_string(p);
    const bool single = p.degree() <= 0 || (p.coefficients().size() >= 1 &&
                                            std::count_if(p.coefficients().begin(), p.coefficients().end(),
                                                          [](const Rational& c) { return c != 0; }) == 1);
    return single ? s : "(" + s + ")";
  };
  return wrap(f.numerator()) + "/" + wrap(f.denominator());
}

// ------------------------------------------------------------------ parser

namespace {

constexpr unsigned max_exponent = 256;

class Parser {
 public:
  explicit Parser(std::string_view t) : t_(t) {}

  RationalFunction parse() {
    skip();
    if (pos_ >= t_.size()) fail("expression");
    RationalFunction r = expr();
    skip();
    if (pos_ < t_.size()) fail("operator or end of input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    std::ostringstream os;
    os << "column " << pos_ + 1 << ": expected " << expected;
    if (pos_ < t_.size()) os << ", found '" << t_[pos_] << "'";
    else os << ", found end of input";
    throw InputError(os.str());
  }
  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < t_.size() && t_[pos_] == c;
  }
  bool starts_primary() {
    skip();
    if (pos_ >= t_.size()) return false;
    const char c = t_[pos_];
    return c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  RationalFunction expr() {
    RationalFunction r = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        r = r + term();
      } else if (peek('-')) {
        ++pos_;
        r = r - term();
      } else {
        return r;
      }
    }
  }

  RationalFunction term() {
    RationalFunction r = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        r = r * unary();
      } else if (peek('/')) {
        ++pos_;
        const std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) {
          pos_ = at;
          skip();
          fail("nonzero divisor");
        }
        r = r / d;
      } else if (starts_primary()) {
        r = r * powered();
      } else {
        return r;
      }
    }
  }

  RationalFunction unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return powered();
  }

  RationalFunction powered() {
    RationalFunction base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
      if (start == pos_) fail("nonnegative integer exponent");
      const std::string digits(t_.substr(start, pos_ - start));
      if (digits.size() > 3 || std::stoul(digits) > max_exponent) {
        pos_ = start;
        fail("exponent at most " + std::to_string(max_exponent));
      }
      const auto e = static_cast<unsigned>(std::stoul(digits));
      return {power(base.numerator(), e), power(base.denominator(), e)};
    }
    return base;
  }

  RationalFunction primary() {
    skip();
    if (pos_ >= t_.size()) fail("number, 'x' or '('");
    const char c = t_[pos_];
    if (c == 'x') {
      ++pos_;
      return {Polynomial::x(), Polynomial::constant(1)};
    }
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!peek(')')) fail("')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
      return RationalFunction::constant(Rational(Integer(std::string(t_.substr(start, pos_ - start)))));
    }
    fail("number, 'x' or '('");
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text) { return Parser(text).parse(); }

// -------------------------------------------------------------- membership

namespace {

struct Isolation {
  // root j lies in (lo[j], hi[j]]
  std::vector<Rational> lo, hi;
};

Rational cauchy_bound(const Polynomial& p) {
  Rational m = 0;
  const Rational lc = abs(p.leading());
  for (long i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(static_cast<std::size_t>(i))) / lc));
  return m + 1;
}

Isolation isolate(const Polynomial& q) {
  Isolation out;
  if (q.degree() <= 0) return out;
  const SturmChain chain(q);
  const Rational b = cauchy_bound(q);
  std::vector<std::pair<Rational, Rational>> stack{{-b, b}};
  std::vector<std::pair<Rational, Rational>> found;
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const std::size_t n = chain.count(lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      while (hi - lo > Rational(1, 64)) {
        const Rational mid = (lo + hi) / 2;
        if (chain.count(lo, mid) == 1) hi = mid;
        else lo = mid;
      }
      found.emplace_back(lo, hi);
      continue;
    }
    const Rational mid = (lo + hi) / 2;
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(found.begin(), found.end());
  for (auto& [l, h] : found) {
    out.lo.push_back(l);
    out.hi.push_back(h);
  }
  return out;
}

// Smallest-denominator rational (then smallest absolute value, negatives first) where p < 0.
Rational negative_point(const Polynomial& p) {
  const Polynomial odd = square_free_decomposition(p).odd_part();
  const Isolation iso = isolate(odd);
  const std::size_t m = iso.lo.size();
  const int lead = sign_of(p.leading());
  const Integer slack = p.degree() + 1;
  // Gap j sits between roots j-1 and j; its sign flips at every odd root.
  struct Range {
    std::optional<Rational> lo, hi;
  };
  std::vector<Range> negative;
  for (std::size_t j = 0; j <= m; ++j) {
    const int s = ((m - j) % 2 == 0) ? lead : -lead;
    if (s >= 0) continue;
    Range r;
    if (j > 0) r.lo = iso.lo[j - 1];
    if (j < m) r.hi = iso.hi[j];
    negative.push_back(r);
  }
  require_internal(!negative.empty(), "no negative region for a non-member");
  for (Integer d = 1;; ++d) {
    std::vector<Integer> nums;
    for (const auto& r : negative) {
      Integer from = -slack, to = slack;
      const Integer reach = (slack + 1) * d;
      if (r.lo && r.hi) {
        from = floor_of(*r.lo * d);
        to = floor_of(*r.hi * d) + 1;
      } else if (r.hi) {
        from = std::min(Integer(-reach), Integer(floor_of(*r.hi * d) - slack - d));
        to = floor_of(*r.hi * d) + 1;
      } else if (r.lo) {
        from = floor_of(*r.lo * d);
        to = std::max(reach, Integer(floor_of(*r.lo * d) + slack + d + 1));
      }
      for (Integer n = from; n <= to; ++n) nums.push_back(n);
    }
    std::sort(nums.begin(), nums.end(), [](const Integer& a, const Integer& b) {
      const Integer aa = abs(a), bb = abs(b);
      if (aa != bb) return aa < bb;
      return a < b;
    });
    nums.erase(std::unique(nums.begin(), nums.end()), nums.end());
    for (const auto& n : nums) {
      const Rational q = make_rational(n, d);
      if (q.get_den() != d) continue;
      if (p(q) < 0) return q;
    }
  }
}

}  // namespace

SosVerdict is_sos_membership(const RationalFunction& f) {
  SosVerdict v;
  if (f.is_zero()) {
    v.member = true;
    return v;
  }
  const Polynomial p = f.numerator() * f.denominator();
  const Polynomial odd = square_free_decomposition(p).odd_part();
  const bool sign_change = odd.degree() > 0 && sturm_root_count(odd, std::nullopt, std::nullopt) > 0;
  if (p.leading() > 0 && !sign_change) {
    v.member = true;
    return v;
  }
  const Rational x0 = negative_point(p);
  const auto value = f(x0);
  require_internal(value && *value < 0, "membership witness is not negative");
  v.witness = x0;
  v.witness_value = *value;
  return v;
}

SkewHypothesis theorem_skew_hypothesis(const RationalFunction& f) {
  // Sample point: the first of 0, -1, 1, -2, 2, ... where f is defined.
  Rational x0 = 0;
  std::optional<Rational> fx0 = f(x0);
  for (long i = 1; !fx0; ++i) {
    x0 = (i % 2 == 1) ? -(i + 1) / 2 : i / 2;
    fx0 = f(x0);
  }
  SkewHypothesis out;
  out.search_bound = std::max(Integer(1), Integer(floor_of(*fx0) + 1));
  for (Integer k = 1; k <= out.search_bound; ++k) {
    const SosVerdict v = is_sos_membership(f - RationalFunction::constant(Rational(k)));
    if (v.member) continue;
    out.k = k;
    out.witness = *v.witness;
    out.witness_value = *v.witness_value;
    return out;
  }
  throw InternalError("skew hypothesis search exceeded its bound");
}

CategoryReport categorize(const std::string& field, const std::vector<RationalFunction>& samples) {
  CategoryReport r;
  r.field = field;
  if (field == "Q") {
    for (const auto& s : samples)
      require_input(s.numerator().degree() <= 0 && s.denominator().degree() == 0,
                    "sample " + to_string(s) + " is not an element of Q");
    r.note = "sign test";
  } else if (field == "Q(x)") {
    r.note = "membership via nonnegativity where defined (Pourchet: positive semidefinite elements of Q(x) are sums of squares)";
  } else {
    throw InputError("unsupported field instance '" + field + "' (supported: Q, Q(x))");
  }
  r.minus_one_excluded = !is_sos_membership(RationalFunction::constant(-1)).member;
  r.evidence.emplace_back("-1", theorem_skew_hypothesis(RationalFunction::constant(-1)));
  for (const auto& s : samples) r.evidence.emplace_back(to_string(s), theorem_skew_hypothesis(s));
  r.category = 3;
  require_internal(r.minus_one_excluded, "-1 reported as a sum of squares");
  return r;
}

}  // namespace monoloc
