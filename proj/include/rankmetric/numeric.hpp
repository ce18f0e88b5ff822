#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace rankmetric {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_100;

BigInt ipow(std::int64_t base, unsigned exp);

// q^e for any integer e; a proper fraction when e < 0.
Rational qpow(int q, long e);

// Floor/ceil of an exact rational.
BigInt floor_div(const Rational& x);
BigInt ceil_div(const Rational& x);

bool is_integer(const Rational& x);
BigInt to_integer(const Rational& x);  // throws NonIntegral

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

// Fits in uint64 (for enumeration sizes)?
bool fits_u64(const BigInt& x);

bool is_prime(int p);

}  // namespace rankmetric
