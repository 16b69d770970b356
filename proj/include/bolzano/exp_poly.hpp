#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "bolzano/error.hpp"
#include "bolzano/rational.hpp"

namespace bolzano {

/// One summand c * n^k * b^n of an exponential polynomial.
struct ExpPolyTerm {
  Rational coeff;
  int power = 0;
  Rational base{1};

  friend bool operator==(const ExpPolyTerm&, const ExpPolyTerm&) = default;
};

/// Identifies a term slot: the pair (base, power).
struct TermKey {
  Rational base;
  int power = 0;

  friend bool operator==(const TermKey&, const TermKey&) = default;
};

/// Orders keys by |base| descending, then power descending, then base
/// descending. This is both the rendering order and the asymptotic
/// dominance order, and it places the +B / -B pair of a group next to
/// each other.
struct DominanceOrder {
  bool operator()(const TermKey& a, const TermKey& b) const;
};

/// Canonical finite sum of terms c * n^k * b^n with pairwise distinct
/// (base, power) keys and nonzero coefficients. Empty means the zero
/// sequence.
class ExpPoly {
 public:
  using TermMap = std::map<TermKey, Rational, DominanceOrder>;

  ExpPoly() = default;

  /// Merges equal keys, drops zero coefficients. Throws Error(ZeroBase).
  static ExpPoly canonicalize(std::span<const ExpPolyTerm> terms);
  static ExpPoly constant(const Rational& c);
  static ExpPoly monomial(const Rational& coeff, int power, const Rational& base);
  /// The sequence n -> n.
  static ExpPoly identity();

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::vector<ExpPolyTerm> term_list() const;

  /// Coefficient stored at (base, power), zero when absent.
  Rational coefficient(const Rational& base, int power) const;
  /// Coefficient of the constant slot (base 1, power 0).
  Rational constant_term() const { return coefficient(Rational(1), 0); }

  bool all_powers_nonnegative() const;

  /// Exact value at index n >= 1.
  Rational eval(Index n) const;

  ExpPoly& operator+=(const ExpPoly& rhs);
  ExpPoly& operator-=(const ExpPoly& rhs);
  friend ExpPoly operator+(ExpPoly lhs, const ExpPoly& rhs) { return lhs += rhs; }
  friend ExpPoly operator-(ExpPoly lhs, const ExpPoly& rhs) { return lhs -= rhs; }
  friend ExpPoly operator*(const ExpPoly& lhs, const ExpPoly& rhs);
  ExpPoly operator-() const;
  ExpPoly scaled(const Rational& factor) const;

  friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

  /// Interchange text `c*n^k*b^n + ...` with rationals as p/q and negative
  /// bases parenthesized; the empty polynomial renders as `0`.
  std::string render() const;

 private:
  void accumulate(const TermKey& key, const Rational& coeff);

  TermMap terms_;
};

}  // namespace bolzano
