#include "rankmetric/numeric.hpp"

#include "rankmetric/errors.hpp"

namespace rankmetric {

BigInt ipow(std::int64_t base, unsigned exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

Rational qpow(int q, long e) {
  if (e >= 0) return Rational(ipow(q, static_cast<unsigned>(e)));
  return Rational(BigInt(1), ipow(q, static_cast<unsigned>(-e)));
}

BigInt floor_div(const Rational& x) {
  BigInt n = numerator(x), d = denominator(x);
  BigInt f = n / d;
  if (n % d != 0 && n < 0) f -= 1;
  return f;
}

BigInt ceil_div(const Rational& x) {
  BigInt n = numerator(x), d = denominator(x);
  BigInt f = n / d;
  if (n % d != 0 && n > 0) f += 1;
  return f;
}

bool is_integer(const Rational& x) { return denominator(x) == 1; }

BigInt to_integer(const Rational& x) {
  if (!is_integer(x)) throw NonIntegral("non-integral value " + to_string(x));
  return numerator(x);
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

bool fits_u64(const BigInt& x) {
  return x >= 0 && x <= BigInt(std::numeric_limits<std::uint64_t>::max());
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace rankmetric
