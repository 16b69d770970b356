#include "bolzano/series.hpp"

namespace bolzano {

BernoulliTable::BernoulliTable(int cap) {
  if (cap < 0) throw Error(ErrorKind::InvalidArgument, "bernoulli", std::nullopt, "negative cap");
  values_.reserve(static_cast<std::size_t>(cap) + 1);
  values_.emplace_back(1);
  for (int m = 1; m <= cap; ++m) {
    // C(m+1, m) B_m = -sum_{j<m} C(m+1, j) B_j
    Rational acc;
    for (int j = 0; j < m; ++j) acc += binomial(m + 1, j) * values_[static_cast<std::size_t>(j)];
    values_.push_back(-acc / Rational(m + 1));
  }
}

namespace {

const BernoulliTable& bernoulli_for(int cap) {
  static const BernoulliTable default_table(16);
  if (cap <= default_table.cap()) return default_table;
  thread_local BernoulliTable extended(0);
  if (extended.cap() < cap) extended = BernoulliTable(cap);
  return extended;
}

void check_cap(int j, const SeriesConfig& config, const char* operation) {
  if (j < 0) throw Error(ErrorKind::NegativePowerTerm, operation);
  if (j > config.degree_cap)
    throw Error(ErrorKind::DegreeCapExceeded, operation, std::nullopt,
                "degree " + std::to_string(j) + " > cap " + std::to_string(config.degree_cap));
}

}  // namespace

ExpPoly faulhaber_sum(int j, const SeriesConfig& config) {
  check_cap(j, config, "faulhaber_sum");
  const auto& bernoulli = bernoulli_for(j);
  // sum_{k=1..n} k^j = 1/(j+1) sum_i C(j+1, i) B+_i n^(j+1-i), B+_i = (-1)^i B_i
  std::vector<ExpPolyTerm> terms;
  const Rational scale = Rational(1) / Rational(j + 1);
  for (int i = 0; i <= j; ++i) {
    Rational b = bernoulli[i];
    if (i == 1) b = -b;
    terms.push_back({scale * binomial(j + 1, i) * b, j + 1 - i, Rational(1)});
  }
  return ExpPoly::canonicalize(terms);
}

ExpPoly geometric_power_sum(int j, const Rational& base, const SeriesConfig& config) {
  check_cap(j, config, "geometric_power_sum");
  if (base.is_zero()) throw Error(ErrorKind::ZeroBase, "geometric_power_sum");
  if (base == Rational(1)) throw Error(ErrorKind::BaseOne, "geometric_power_sum");

  // G(n) = P(n) b^n + C with G(n) - G(n-1) = n^j b^n and G(0) = 0, so
  // P(n) - P(n-1)/b = n^j. Matching the n^m coefficient:
  //   p_m (1 - 1/b) - (1/b) sum_{i>m} p_i C(i, m) (-1)^(i-m) = [m == j]
  // which is triangular; solve from the top degree down.
  const Rational inv = base.inverse();
  const Rational diag = Rational(1) - inv;
  std::vector<Rational> p(static_cast<std::size_t>(j) + 1);
  for (int m = j; m >= 0; --m) {
    Rational rhs = m == j ? Rational(1) : Rational(0);
    for (int i = m + 1; i <= j; ++i) {
      const Rational sign = (i - m) % 2 == 0 ? Rational(1) : Rational(-1);
      rhs += inv * p[static_cast<std::size_t>(i)] * binomial(i, m) * sign;
    }
    p[static_cast<std::size_t>(m)] = rhs / diag;
  }

  std::vector<ExpPolyTerm> terms;
  for (int m = 0; m <= j; ++m) terms.push_back({p[static_cast<std::size_t>(m)], m, base});
  terms.push_back({-p[0], 0, Rational(1)});
  return ExpPoly::canonicalize(terms);
}

Quantity partial_sums(const Series& s, const SeriesConfig& config) {
  if (s.start < 1) throw Error(ErrorKind::InvalidArgument, "partial_sums", std::nullopt, "start < 1");
  ExpPoly body;
  for (const auto& [key, coeff] : s.term.terms()) {
    if (key.power < 0) throw Error(ErrorKind::NegativePowerTerm, "partial_sums");
    const ExpPoly piece = key.base == Rational(1) ? faulhaber_sum(key.power, config)
                                                  : geometric_power_sum(key.power, key.base, config);
    body += piece.scaled(coeff);
  }
  if (s.start == 1) return Quantity::closed(std::move(body));

  const Rational before_start = body.eval(s.start - 1);
  body -= ExpPoly::constant(before_start);
  PrefixPatch zeros;
  for (Index n = 1; n < s.start; ++n) zeros.set(n, Rational(0));
  return Quantity::closed(std::move(body), std::move(zeros));
}

Quantity omit_first(const Series& s, Index m, const SeriesConfig& config) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "omit_first", std::nullopt, "negative count");
  Quantity sums = partial_sums(s, config);
  if (m == 0) return sums;
  const Rational dropped = sums.at(m);
  const auto& cf = sums.closed_form("omit_first");
  PrefixPatch p;
  for (Index n = 1; n <= m; ++n) p.set(n, Rational(0));
  for (const auto& [n, v] : cf.patch.overrides())
    if (n > m) p.set(n, v - dropped);
  return Quantity::closed(cf.body - ExpPoly::constant(dropped), std::move(p));
}

Series geometric_series(const Rational& ratio) {
  if (ratio.is_zero()) throw Error(ErrorKind::ZeroBase, "geom");
  return Series{ExpPoly::monomial(ratio.inverse(), 0, ratio), 1};
}

}  // namespace bolzano
