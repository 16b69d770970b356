#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bolzano/frechet.hpp"

namespace bolzano {

/// Real function evaluated at rational points. Float-backed functions
/// convert their double result exactly, so their accuracy floor is about
/// 1e-15 relative.
class RealFunction {
 public:
  using Evaluator = std::function<Rational(const Rational&)>;
  using DomainPredicate = std::function<bool(const Rational&)>;

  RealFunction(std::string name, Evaluator evaluator, DomainPredicate domain = {});

  const std::string& name() const noexcept { return name_; }
  bool in_domain(const Rational& x) const { return !domain_ || domain_(x); }

  /// Throws Error(DomainViolation) for points outside the domain.
  Rational operator()(const Rational& x) const;

 private:
  std::string name_;
  Evaluator evaluator_;
  DomainPredicate domain_;
};

namespace functions {

RealFunction sin();
RealFunction cos();
RealFunction exp();
RealFunction log();
RealFunction sqrt();
RealFunction abs();
/// 0 for x < 0, 1 for x >= 0.
RealFunction step();
/// sum_i coeffs[i] x^i, exact.
RealFunction polynomial(std::vector<Rational> coeffs, std::string name = "poly");
/// Registry lookup for the names above (except polynomial); nullopt if unknown.
std::optional<RealFunction> builtin(std::string_view name);

}  // namespace functions

struct StEstimate {
  Rational value;
  Index achieved_window = 0;
  Rational achieved_spread;
};

struct CalculusConfig {
  Index horizon = 10'000;
  Index window = 50;
  Rational tol = Rational::ten_to_minus(6);
};

/// f*(q): the lazy quantity n -> f(q(n)). Out-of-domain points raise
/// Error(DomainViolation, n) when that index is evaluated.
Quantity extend(const RealFunction& f, const Quantity& q);

/// Exact standard part of a closed form. Throws Error(NotFinite) when q is
/// infinitely great or oscillating.
Rational standard_part(const Quantity& q);

/// Median of q at horizon-window+1 .. horizon, with the largest deviation
/// of those samples from it.
StEstimate standard_part_estimate(const Quantity& q, const CalculusConfig& config = {});

/// The infinitesimal 1/N.
Quantity reciprocal_n();

/// Standard part estimate of (f(x + h) - f(x)) / h.
StEstimate derivative(const RealFunction& f, const Rational& x, const Quantity& probe = reciprocal_n(),
                      const CalculusConfig& config = {});

/// 1/n, 1/n^2, (-1)^n/n and three fixed pseudo-random multiples c/n.
std::vector<Quantity> default_continuity_probes();

/// Probes x + h -> f(x) for each infinitesimal h. See gap_verdict for the
/// tail rule.
Verdict continuity_probe(const RealFunction& f, const Rational& x, const std::vector<Quantity>& probes,
                         const CalculusConfig& config = {});

/// Probes f(x_n) vs f(y_n) for an infinitely close pair.
Verdict uniform_continuity_probe(const RealFunction& f, const Quantity& xs, const Quantity& ys,
                                 const CalculusConfig& config = {});

/// Tail rule shared by the continuity probes. With T the last `window`
/// indices up to the horizon and E the `window` indices ending at
/// horizon/2: Holds if max gap on T < tol, or if it has shrunk to at most
/// 3/4 of the max gap on E; otherwise Fails at the first index of T whose
/// gap is >= tol.
Verdict gap_verdict(const std::function<Rational(Index)>& gap, const CalculusConfig& config);

}  // namespace bolzano
