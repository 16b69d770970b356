#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bolzano {

/// Exact rational scalar backed by GMP. Always canonical: the denominator
/// is positive and coprime to the numerator, zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(mpq_class value);

  /// Accepts `p`, `p/q`, and decimal literals such as `-1.25` (converted
  /// exactly). Throws Error(InvalidArgument) on malformed text.
  static Rational parse(std::string_view text);

  /// Exact value of a finite binary double.
  static Rational from_double(double value);

  /// 10^-digits, a common tolerance shape.
  static Rational ten_to_minus(unsigned digits);

  const mpq_class& raw() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const { return Rational(::abs(value_)); }
  Rational inverse() const;
  /// Integer power; negative exponents invert (zero base throws).
  Rational pow(long long exponent) const;

  double to_double() const { return value_.get_d(); }

  /// Interchange form `p/q`, always with an explicit denominator.
  std::string str() const;
  /// `p` when the denominator is 1, otherwise `p/q`.
  std::string pretty() const;
  /// Fixed-point decimal approximation, truncated toward zero.
  std::string decimal(unsigned digits) const;

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Binomial coefficient C(n, k) as an exact rational (0 outside 0..n).
Rational binomial(long long n, long long k);

}  // namespace bolzano
