#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace dgla {

// All coefficients are exact rationals: lowest terms, positive denominator,
// arbitrary-precision integer parts. No floating point anywhere in the core.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" (when q == 1) or "p/q", lowest terms, q > 0.
std::string to_fraction_string(const Rational& r);

// Accepts "p" and "p/q". Throws DomainError on malformed input or q == 0.
Rational rational_from_string(std::string_view s);

Rational factorial(int n);

// B_0, B_1, ... with B_1 = -1/2 (the x/(e^x-1) convention), computed by the
// defining recurrence and cached.
const Rational& bernoulli(int n);

}  // namespace dgla
