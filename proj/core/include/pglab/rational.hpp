#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace pglab {

// Exact coefficient arithmetic. cpp_rational keeps gcd(num,den)=1 and den>0,
// which is exactly the canonical form the rest of the library relies on.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

inline BigInt to_integer(const Rational& q) { return num(q); }

// Narrowing helper for serialization; values in this library stay tiny.
std::int64_t to_i64(const BigInt& n);
std::int64_t to_i64(const Rational& q);

std::string to_string(const Rational& q);

} // namespace pglab
