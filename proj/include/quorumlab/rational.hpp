#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "quorumlab/errors.hpp"

namespace quorumlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

// Canonical rendering: "p" for integers, "p/q" in lowest terms otherwise.
inline std::string to_string(const Rational& r) {
  const BigInt den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

inline std::string to_string(const BigInt& v) { return v.str(); }

// Accepts "p", "-p", "p/q". Whitespace is not allowed.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) -> BigInt {
    std::size_t i = 0;
    if (!part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw input_error("malformed rational: '" + std::string(text) + "'");
    for (std::size_t k = i; k < part.size(); ++k) {
      if (part[k] < '0' || part[k] > '9') {
        throw input_error("malformed rational: '" + std::string(text) + "'");
      }
    }
    return BigInt(std::string(part));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const BigInt num = parse_int(text.substr(0, slash));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw input_error("zero denominator in rational: '" + std::string(text) + "'");
  return Rational(num, den);
}

namespace detail {
inline long bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return static_cast<long>(boost::multiprecision::msb(v)) + 1;
}
}  // namespace detail

// Converts without overflowing when numerator and denominator are both huge
// (b(2n+1)/b(1) at n in the thousands).
inline double to_double(const Rational& r) {
  BigInt num = numerator_of(r);
  const BigInt den = denominator_of(r);
  if (num == 0) return 0.0;
  const bool negative = num < 0;
  if (negative) num = -num;
  const long shift = 64 + detail::bit_length(den) - detail::bit_length(num);
  BigInt scaled = shift >= 0 ? BigInt(num << shift) : BigInt(num >> -shift);
  scaled /= den;
  const double value = std::ldexp(scaled.convert_to<double>(), static_cast<int>(-shift));
  return negative ? -value : value;
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline BigInt factorial(long n) {
  BigInt result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

inline BigInt pow2(long e) { return BigInt(1) << e; }

// Decimal rendering with a fixed number of significant figures.
inline std::string format_significant(double value, int digits) {
  digits = std::clamp(digits, 1, 17);
  auto print = [](int decimals, double v) {
    const int len = std::snprintf(nullptr, 0, "%.*f", decimals, v);
    std::string out(static_cast<std::size_t>(len), '\0');
    std::snprintf(out.data(), out.size() + 1, "%.*f", decimals, v);
    return out;
  };
  if (value == 0.0 || !std::isfinite(value)) return print(digits - 1, value);
  int magnitude = static_cast<int>(std::floor(std::log10(std::fabs(value))));
  // Rounding can carry into the next decade (0.09996 -> 0.1000).
  const double scale = std::pow(10.0, digits - 1 - magnitude);
  if (std::fabs(std::round(value * scale)) >= std::pow(10.0, digits)) ++magnitude;
  const int decimals = digits - 1 - magnitude;
  if (decimals >= 0) return print(decimals, value);
  const double unit = std::pow(10.0, -decimals);
  return print(0, std::round(value / unit) * unit);
}

}  // namespace quorumlab
