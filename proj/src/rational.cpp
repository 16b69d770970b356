#include "bolzano/rational.hpp"

#include <cmath>
#include <ostream>

#include "bolzano/error.hpp"

namespace bolzano {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw Error(ErrorKind::InvalidArgument, "rational", std::nullopt,
              "malformed rational literal '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  mpq_class value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(text);
    mpz_class d{std::string(den), 10};
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "rational");
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) bad_literal(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    value = mpq_class(digits, scale);
  } else {
    if (!all_digits(body)) bad_literal(text);
    value = mpq_class(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(std::move(value));
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value))
    throw Error(ErrorKind::InvalidArgument, "rational", std::nullopt, "non-finite double");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return Rational(std::move(q));
}

Rational Rational::ten_to_minus(unsigned digits) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, digits);
  return Rational(mpq_class(mpz_class(1), den));
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "rational");
  return Rational(mpq_class(value_.get_den(), value_.get_num()));
}

Rational Rational::pow(long long exponent) const {
  if (exponent == 0) return Rational(1);
  if (exponent < 0) return inverse().pow(-exponent);
  // num and den stay coprime under powers, so no canonicalization pass.
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r;
  r.value_ = std::move(out);
  return r;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::pretty() const {
  if (is_integer()) return value_.get_num().get_str();
  return str();
}

std::string Rational::decimal(unsigned digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class scaled = ::abs(value_.get_num()) * scale;
  mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), value_.get_den_mpz_t());
  std::string s = scaled.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (sign() < 0) s.insert(0, "-");
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(out));
}

}  // namespace bolzano
