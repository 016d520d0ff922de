#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const IntVector& a, const RatVector& b);

Integer gcd_of(const IntVector& v);
Integer lcm_of_denominators(const RatVector& v);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(IntVector v);
bool is_primitive(const IntVector& v);
bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

/// Smallest positive multiple of `v` with integer entries, made primitive.
IntVector primitive_integral(const RatVector& v);

RatVector to_rational(const IntVector& v);
/// Throws InputError if some entry is not an integer.
IntVector to_integral(const RatVector& v);
bool is_integral(const RatVector& v);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector operator*(const Integer& k, const IntVector& a);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

}  // namespace toric
