#pragma once

#include <vector>

#include "bolzano/quantity.hpp"

namespace bolzano {

/// A series term(start) + term(start+1) + ..., with the term rule written
/// as an exponential polynomial in the summation variable k.
struct Series {
  ExpPoly term;
  Index start = 1;
};

struct SeriesConfig {
  int degree_cap = 16;
};

/// B_0 .. B_cap from sum_{j=0..m} C(m+1, j) B_j = 0 with B_0 = 1
/// (so B_1 = -1/2).
class BernoulliTable {
 public:
  explicit BernoulliTable(int cap);

  const Rational& operator[](int i) const { return values_.at(static_cast<std::size_t>(i)); }
  int cap() const noexcept { return static_cast<int>(values_.size()) - 1; }
  const std::vector<Rational>& values() const noexcept { return values_; }

 private:
  std::vector<Rational> values_;
};

/// sum_{k=1..n} k^j as a base-1 polynomial in n of degree j + 1.
ExpPoly faulhaber_sum(int j, const SeriesConfig& config = {});

/// sum_{k=1..n} k^j b^k = P(n) b^n + C with deg P <= j. Throws
/// Error(BaseOne) for b = 1 and Error(ZeroBase) for b = 0.
ExpPoly geometric_power_sum(int j, const Rational& base, const SeriesConfig& config = {});

/// Closed-form partial sums s_n; s_n = 0 for n < start.
Quantity partial_sums(const Series& s, const SeriesConfig& config = {});

/// Partial sums with the first m terms dropped: 0 for n <= m, S(n) - S(m)
/// beyond.
Quantity omit_first(const Series& s, Index m, const SeriesConfig& config = {});

/// 1 + e + e^2 + ..., i.e. term e^(k-1), so s_n = (1 - e^n) / (1 - e).
Series geometric_series(const Rational& ratio);

}  // namespace bolzano
