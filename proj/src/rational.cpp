#include "monoloc/rational.hpp"

#include <cctype>

#include "monoloc/errors.hpp"

namespace monoloc {

Rational make_rational(const Integer& num, const Integer& den) {
  require_input(den != 0, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  out = Integer(std::string(s.substr(i)), 10);
  if (neg) out = -out;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  Integer num, den = 1;
  bool ok = slash == std::string_view::npos
                ? parse_integer(text, num)
                : parse_integer(text.substr(0, slash), num) && parse_integer(text.substr(slash + 1), den);
  if (ok && slash != std::string_view::npos && (text[slash + 1] == '-' || text[slash + 1] == '+')) ok = false;
  if (!ok) throw InputError("not a rational number: '" + std::string(text) + "'");
  require_input(den != 0, "zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const Integer& z) { return z.get_str(); }
std::string to_string(const Rational& q) { return q.get_str(); }

template <class V>
static std::string vector_string(const V& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

std::string to_string(const IntVector& v) { return vector_string(v); }
std::string to_string(const RatVector& v) { return vector_string(v); }

RatVector to_rational(const IntVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

bool is_integral(const RatVector& v) {
  for (const auto& q : v)
    if (q.get_den() != 1) return false;
  return true;
}

IntVector to_integer(const RatVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    require_input(v[i].get_den() == 1, "expected an integer vector, got " + to_string(v));
    out[i] = v[i].get_num();
  }
  return out;
}

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

Integer common_denominator(const RatVector& v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, q.get_den());
  return l;
}

IntVector primitive_direction(const RatVector& v) {
  const Integer l = common_denominator(v);
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational t = v[i] * l;
    out[i] = t.get_num();
  }
  return primitive(std::move(out));
}

IntVector sign_normalized(IntVector v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class V, class Op>
static V zip(const V& a, const V& b, Op op) {
  V out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return out;
}

RatVector add(const RatVector& a, const RatVector& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}
RatVector sub(const RatVector& a, const RatVector& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}
IntVector add(const IntVector& a, const IntVector& b) {
  return zip(a, b, [](const Integer& x, const Integer& y) { return Integer(x + y); });
}
IntVector sub(const IntVector& a, const IntVector& b) {
  return zip(a, b, [](const Integer& x, const Integer& y) { return Integer(x - y); });
}

RatVector scale(const Rational& c, const RatVector& a) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}
IntVector scale(const Integer& c, const IntVector& a) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}
RatVector negate(const RatVector& a) { return scale(Rational(-1), a); }
IntVector negate(const IntVector& a) { return scale(Integer(-1), a); }

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}
bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RatVector zero_vector(std::size_t n) { return RatVector(n, Rational(0)); }

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector v = zero_vector(n);
  v[i] = 1;
  return v;
}

}  // namespace monoloc
