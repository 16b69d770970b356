#include "bolzano/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace bolzano {

RealFunction::RealFunction(std::string name, Evaluator evaluator, DomainPredicate domain)
    : name_(std::move(name)), evaluator_(std::move(evaluator)), domain_(std::move(domain)) {}

Rational RealFunction::operator()(const Rational& x) const {
  if (!in_domain(x))
    throw Error(ErrorKind::DomainViolation, name_, std::nullopt, "point " + x.str() + " outside domain");
  return evaluator_(x);
}

namespace functions {

namespace {

RealFunction float_backed(std::string name, double (*fn)(double), RealFunction::DomainPredicate domain = {}) {
  return RealFunction(
      std::move(name), [fn](const Rational& x) { return Rational::from_double(fn(x.to_double())); },
      std::move(domain));
}

}  // namespace

RealFunction sin() { return float_backed("sin", [](double x) { return std::sin(x); }); }
RealFunction cos() { return float_backed("cos", [](double x) { return std::cos(x); }); }
RealFunction exp() {
  // Beyond ~709 the double overflows.
  return float_backed("exp", [](double x) { return std::exp(x); },
                      [](const Rational& x) { return x < Rational(709); });
}
RealFunction log() {
  return float_backed("log", [](double x) { return std::log(x); }, [](const Rational& x) { return x.sign() > 0; });
}
RealFunction sqrt() {
  return float_backed("sqrt", [](double x) { return std::sqrt(x); }, [](const Rational& x) { return x.sign() >= 0; });
}
RealFunction abs() {
  return RealFunction("abs", [](const Rational& x) { return x.abs(); });
}
RealFunction step() {
  return RealFunction("step", [](const Rational& x) { return x.sign() < 0 ? Rational(0) : Rational(1); });
}

RealFunction polynomial(std::vector<Rational> coeffs, std::string name) {
  return RealFunction(std::move(name), [coeffs = std::move(coeffs)](const Rational& x) {
    Rational acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  });
}

std::optional<RealFunction> builtin(std::string_view name) {
  if (name == "sin") return sin();
  if (name == "cos") return cos();
  if (name == "exp") return exp();
  if (name == "log") return log();
  if (name == "sqrt") return sqrt();
  if (name == "abs") return abs();
  if (name == "step") return step();
  return std::nullopt;
}

}  // namespace functions

Quantity extend(const RealFunction& f, const Quantity& q) {
  return Quantity::lazy(
      [f, q](Index n) {
        const Rational x = q.at(n);
        if (!f.in_domain(x))
          throw Error(ErrorKind::DomainViolation, "extend", n, f.name() + " undefined at " + x.str());
        return f(x);
      },
      f.name() + "*(" + q.description() + ")");
}

Rational standard_part(const Quantity& q) {
  const Classification c = classify(q);
  switch (c.kind()) {
    case Classification::Kind::Zero:
    case Classification::Kind::Infinitesimal: return Rational(0);
    case Classification::Kind::Finite: return *c.standard_part();
    default: throw Error(ErrorKind::NotFinite, "standard_part", std::nullopt, std::string(to_string(c.kind())));
  }
}

namespace {

Index window_start(const CalculusConfig& config) {
  if (config.horizon < 1 || config.window < 1)
    throw Error(ErrorKind::InvalidArgument, "standard_part", std::nullopt, "horizon and window must be >= 1");
  return std::max<Index>(1, config.horizon - config.window + 1);
}

StEstimate estimate_from(std::vector<Rational> samples) {
  std::vector<Rational> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  StEstimate out;
  out.value = sorted[(sorted.size() - 1) / 2];
  out.achieved_window = static_cast<Index>(samples.size());
  for (const auto& v : samples) out.achieved_spread = std::max(out.achieved_spread, (v - out.value).abs());
  return out;
}

void require_infinitesimal_probe(const Quantity& probe, const char* operation) {
  if (probe.is_closed() && !is_infinitely_small(probe))
    throw Error(ErrorKind::InvalidProbe, operation, std::nullopt, "probe " + probe.render() + " is not infinitely small");
}

}  // namespace

StEstimate standard_part_estimate(const Quantity& q, const CalculusConfig& config) {
  std::vector<Rational> samples;
  for (Index n = window_start(config); n <= config.horizon; ++n) samples.push_back(q.at(n));
  return estimate_from(std::move(samples));
}

Quantity reciprocal_n() { return Quantity::closed(ExpPoly::monomial(Rational(1), -1, Rational(1))); }

StEstimate derivative(const RealFunction& f, const Rational& x, const Quantity& probe, const CalculusConfig& config) {
  require_infinitesimal_probe(probe, "derivative");
  if (!f.in_domain(x)) throw Error(ErrorKind::DomainViolation, "derivative", std::nullopt, f.name() + " undefined at " + x.str());
  const Rational fx = f(x);
  std::vector<Rational> samples;
  for (Index n = window_start(config); n <= config.horizon; ++n) {
    const Rational h = probe.at(n);
    if (h.is_zero()) throw Error(ErrorKind::ZeroProbeValue, "derivative", n);
    const Rational point = x + h;
    if (!f.in_domain(point)) throw Error(ErrorKind::DomainViolation, "derivative", n);
    samples.push_back((f(point) - fx) / h);
  }
  return estimate_from(std::move(samples));
}

std::vector<Quantity> default_continuity_probes() {
  std::vector<Quantity> probes;
  probes.push_back(reciprocal_n());
  probes.push_back(Quantity::closed(ExpPoly::monomial(Rational(1), -2, Rational(1))));
  probes.push_back(Quantity::closed(ExpPoly::monomial(Rational(1), -1, Rational(-1))));
  std::mt19937 rng(20260101u);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  while (probes.size() < 6) {
    const int p = num(rng);
    if (p == 0) continue;
    probes.push_back(Quantity::closed(ExpPoly::monomial(Rational(p, den(rng)), -1, Rational(1))));
  }
  return probes;
}

Verdict gap_verdict(const std::function<Rational(Index)>& gap, const CalculusConfig& config) {
  const Index tail_begin = window_start(config);
  const Index early_end = std::max<Index>(1, config.horizon / 2);
  const Index early_begin = std::max<Index>(1, early_end - config.window + 1);

  Rational tail_max;
  std::optional<Index> first_over;
  for (Index n = tail_begin; n <= config.horizon; ++n) {
    const Rational g = gap(n);
    if (g >= config.tol && !first_over) first_over = n;
    tail_max = std::max(tail_max, g);
  }
  if (!first_over) return Verdict::holds(config.horizon);

  Rational early_max;
  for (Index n = early_begin; n <= early_end; ++n) early_max = std::max(early_max, gap(n));
  if (tail_max * Rational(4) <= early_max * Rational(3)) return Verdict::holds(config.horizon);
  return Verdict::fails(*first_over);
}

Verdict continuity_probe(const RealFunction& f, const Rational& x, const std::vector<Quantity>& probes,
                         const CalculusConfig& config) {
  if (!f.in_domain(x)) throw Error(ErrorKind::DomainViolation, "continuity_probe", std::nullopt, f.name() + " undefined at " + x.str());
  const Rational fx = f(x);
  std::optional<Verdict> worst;
  for (const auto& h : probes) {
    require_infinitesimal_probe(h, "continuity_probe");
    const Verdict v = gap_verdict(
        [&](Index n) {
          const Rational point = x + h.at(n);
          if (!f.in_domain(point)) throw Error(ErrorKind::DomainViolation, "continuity_probe", n);
          return (f(point) - fx).abs();
        },
        config);
    if (v.is_fails() && (!worst || !worst->is_fails() || v.index() < worst->index())) worst = v;
  }
  return worst.value_or(Verdict::holds(config.horizon));
}

Verdict uniform_continuity_probe(const RealFunction& f, const Quantity& xs, const Quantity& ys,
                                 const CalculusConfig& config) {
  const bool close = xs.is_closed() && ys.is_closed()
                         ? infinitely_close(xs, ys)
                         : infinitely_close(xs, ys, LazyConfig{config.horizon, 100}).is_holds();
  if (!close) throw Error(ErrorKind::NotInfinitelyClose, "uniform_continuity_probe");
  const Quantity fx = extend(f, xs);
  const Quantity fy = extend(f, ys);
  return gap_verdict([&](Index n) { return (fx.at(n) - fy.at(n)).abs(); }, config);
}

}  // namespace bolzano
