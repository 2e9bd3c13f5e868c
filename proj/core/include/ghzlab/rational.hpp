#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ghzlab {

// Exact rational number. Always stored reduced with a positive denominator,
// so equality is plain field comparison.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num(n), den(1) {}

  constexpr Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) {
      throw std::invalid_argument("Rational: zero denominator");
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend constexpr Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend constexpr Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend constexpr Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend constexpr Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) {
      throw std::invalid_argument("Rational: division by zero");
    }
    return Rational(a.num * b.den, a.den * b.num);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.num << '/' << r.den;
  }
};

}  // namespace ghzlab
