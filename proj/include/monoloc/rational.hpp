#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace monoloc {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<RatVector>;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "7", "-3/4" or "+2". Throws InputError on anything else.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);
std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

RatVector to_rational(const IntVector& v);
bool is_integral(const RatVector& v);
IntVector to_integer(const RatVector& v);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(IntVector v);
/// Positive multiple of v with integer, coprime entries.
IntVector primitive_direction(const RatVector& v);
/// Flips the sign so the first nonzero entry is positive.
IntVector sign_normalized(IntVector v);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);
Rational dot(const RatVector& a, const RatVector& b);

RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const Rational& c, const RatVector& a);
RatVector negate(const RatVector& a);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const Integer& c, const IntVector& a);
IntVector negate(const IntVector& a);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);
RatVector zero_vector(std::size_t n);
RatVector unit_vector(std::size_t n, std::size_t i);

/// Least common multiple of the denominators.
Integer common_denominator(const RatVector& v);

}  // namespace monoloc
