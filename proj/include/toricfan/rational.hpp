#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace toricfan {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;          // row-major
using RationalMatrix = std::vector<RationalVector>; // row-major

Rational dot(const RationalVector& a, const RationalVector& b);
std::int64_t dot(const IntVector& a, const IntVector& b);

RationalVector to_rational(const IntVector& v);
bool is_zero(const RationalVector& v);

// Scales v by a positive rational so that its entries are coprime integers.
// The zero vector maps to the zero vector.
IntVector primitive(const RationalVector& v);
IntVector primitive(const IntVector& v);

// Canonical direction used for normals and lineality where sign is free:
// primitive, first nonzero entry positive.
IntVector primitive_unsigned(const RationalVector& v);

std::string to_string(const Rational& q);
std::string to_string(const RationalVector& v);
std::string to_string(const IntVector& v);

// Exact rational value of a finite double (every double is a dyadic rational).
Rational from_double(double x);

// Lexicographic comparison on exact values.
bool lex_less(const RationalVector& a, const RationalVector& b);

} // namespace toricfan
