#include "bolzano/frechet.hpp"

#include <algorithm>
#include <vector>

namespace bolzano {

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::Neg: return "neg";
    case Sign::Zero: return "zero";
    case Sign::Pos: return "pos";
  }
  return "?";
}

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "less";
    case Comparison::Equal: return "equal";
    case Comparison::Greater: return "greater";
    case Comparison::Incomparable: return "incomparable";
  }
  return "?";
}

std::string_view to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Holds: return "holds";
    case Verdict::Kind::Fails: return "fails";
    case Verdict::Kind::Unknown: return "unknown";
  }
  return "?";
}

std::string_view to_string(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::Zero: return "zero";
    case Classification::Kind::Infinitesimal: return "infinitesimal";
    case Classification::Kind::Finite: return "finite";
    case Classification::Kind::InfinitelyGreatPositive: return "inf+";
    case Classification::Kind::InfinitelyGreatNegative: return "inf-";
    case Classification::Kind::Oscillating: return "oscillating";
  }
  return "?";
}

Index tolerance_window(Index horizon) { return (horizon + 9) / 10; }

namespace {

enum class Parity { Even, Odd };

// Restriction of an exponential polynomial to one parity class, as a
// positive-base exponential polynomial: (c+ +- c-) n^k B^n per group.
struct Group {
  Rational abs_base;
  int power;
  Rational coeff;
};

bool dominates(const Group& a, const Group& b) {
  if (a.abs_base != b.abs_base) return a.abs_base > b.abs_base;
  return a.power > b.power;
}

std::optional<Group> leading_group(const ExpPoly& e, Parity parity) {
  const auto& terms = e.terms();
  for (auto it = terms.begin(); it != terms.end();) {
    Group g{it->first.base.abs(), it->first.power, Rational(0)};
    // DominanceOrder keeps +B ahead of -B within one (|B|, k) slot.
    for (; it != terms.end() && it->first.power == g.power && it->first.base.abs() == g.abs_base; ++it) {
      const bool negative_base = it->first.base.sign() < 0;
      if (negative_base && parity == Parity::Odd)
        g.coeff -= it->second;
      else
        g.coeff += it->second;
    }
    if (!g.coeff.is_zero()) return g;
  }
  return std::nullopt;
}

Sign sign_of(const std::optional<Group>& g) {
  if (!g) return Sign::Zero;
  return g->coeff.sign() > 0 ? Sign::Pos : Sign::Neg;
}

bool vanishes_at_infinity(const TermKey& key) {
  const Rational magnitude = key.base.abs();
  return magnitude < Rational(1) || (magnitude == Rational(1) && key.power <= -1);
}

bool grows_without_bound(const Group& g) {
  return g.abs_base > Rational(1) || (g.abs_base == Rational(1) && g.power >= 1);
}

bool all_terms_vanish(const ExpPoly& e) {
  return std::all_of(e.terms().begin(), e.terms().end(),
                     [](const auto& kv) { return vanishes_at_infinity(kv.first); });
}

template <typename Pred>
Verdict tail_check(Index horizon, Pred holds_at) {
  if (horizon < 1) throw Error(ErrorKind::InvalidArgument, "compare_lazy", std::nullopt, "horizon < 1");
  for (Index n = tolerance_window(horizon) + 1; n <= horizon; ++n)
    if (!holds_at(n)) return Verdict::fails(n);
  return Verdict::holds(horizon);
}

}  // namespace

ParitySign eventual_sign(const ExpPoly& e) {
  return ParitySign{sign_of(leading_group(e, Parity::Even)), sign_of(leading_group(e, Parity::Odd))};
}

Comparison compare(const Quantity& a, const Quantity& b) {
  const ExpPoly d = b.body("compare") - a.body("compare");
  if (d.empty()) return Comparison::Equal;
  const ParitySign s = eventual_sign(d);
  if (s.even == Sign::Pos && s.odd == Sign::Pos) return Comparison::Less;
  if (s.even == Sign::Neg && s.odd == Sign::Neg) return Comparison::Greater;
  return Comparison::Incomparable;
}

Verdict compare_lazy(const Quantity& a, const Quantity& b, Comparison claim, Index horizon) {
  if (claim == Comparison::Incomparable)
    throw Error(ErrorKind::InvalidArgument, "compare_lazy", std::nullopt, "claim must be less, equal or greater");
  return tail_check(horizon, [&](Index n) {
    const auto va = a.at(n);
    const auto vb = b.at(n);
    switch (claim) {
      case Comparison::Less: return va < vb;
      case Comparison::Equal: return va == vb;
      default: return va > vb;
    }
  });
}

bool is_infinitely_small(const Quantity& q) { return all_terms_vanish(q.body("is_infinitely_small")); }

Verdict is_infinitely_small(const Quantity& q, const LazyConfig& config) {
  const Rational bound = Rational(1) / Rational(config.probe_bound);
  return tail_check(config.horizon, [&](Index n) { return q.at(n).abs() < bound; });
}

Greatness is_infinitely_great(const Quantity& q) {
  const ExpPoly& e = q.body("is_infinitely_great");
  const auto even = leading_group(e, Parity::Even);
  const auto odd = leading_group(e, Parity::Odd);
  if (!even || !odd || !grows_without_bound(*even) || !grows_without_bound(*odd)) return Greatness::No;
  const Sign se = sign_of(even);
  if (se != sign_of(odd)) return Greatness::No;
  return se == Sign::Pos ? Greatness::PositiveYes : Greatness::NegativeYes;
}

Verdict is_infinitely_great(const Quantity& q, Sign sign, const LazyConfig& config) {
  if (sign == Sign::Zero) throw Error(ErrorKind::InvalidArgument, "is_infinitely_great", std::nullopt, "sign must be pos or neg");
  const Rational bound(config.probe_bound);
  return tail_check(config.horizon, [&](Index n) {
    const Rational v = q.at(n);
    return sign == Sign::Pos ? v > bound : v < -bound;
  });
}

bool infinitely_greater(const Quantity& a, const Quantity& b) {
  const ExpPoly& ea = a.body("infinitely_greater");
  const ExpPoly& eb = b.body("infinitely_greater");
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    const auto lead_b = leading_group(eb, parity);
    const auto lead_a = leading_group(ea, parity);
    switch (sign_of(lead_b)) {
      case Sign::Zero:
        if (sign_of(lead_a) != Sign::Pos) return false;
        break;
      case Sign::Neg:
        // a - k b = (a - b) + (k - 1)|b| binds at k = 1.
        if (sign_of(leading_group(ea - eb, parity)) != Sign::Pos) return false;
        break;
      case Sign::Pos:
        // The leading coefficient of a - k b turns negative for large k
        // unless a's leading group strictly dominates b's.
        if (sign_of(lead_a) != Sign::Pos || !dominates(*lead_a, *lead_b)) return false;
        break;
    }
  }
  return true;
}

bool infinitely_close(const Quantity& a, const Quantity& b) {
  if (a.is_lazy() || b.is_lazy()) throw Error(ErrorKind::LazyInput, "infinitely_close");
  return is_infinitely_small(sub(a, b));
}

Verdict infinitely_close(const Quantity& a, const Quantity& b, const LazyConfig& config) {
  return is_infinitely_small(sub(a, b), config);
}

Classification classify(const Quantity& q) {
  const ExpPoly& e = q.body("classify");
  if (e.empty()) return Classification::zero();
  if (all_terms_vanish(e)) return Classification::infinitesimal();
  const bool rest_vanishes = std::all_of(e.terms().begin(), e.terms().end(), [](const auto& kv) {
    return (kv.first.base == Rational(1) && kv.first.power == 0) || vanishes_at_infinity(kv.first);
  });
  if (rest_vanishes) return Classification::finite(e.constant_term());
  switch (is_infinitely_great(q)) {
    case Greatness::PositiveYes: return Classification::infinitely_great(true);
    case Greatness::NegativeYes: return Classification::infinitely_great(false);
    case Greatness::No: break;
  }
  return Classification::oscillating();
}

std::optional<Classification> classify(const Quantity& q, const LazyConfig& config, const Rational& tol) {
  const Index window = std::min<Index>(50, config.horizon);
  std::vector<Rational> tail;
  tail.reserve(static_cast<std::size_t>(window));
  for (Index n = config.horizon - window + 1; n <= config.horizon; ++n) tail.push_back(q.at(n));

  const Rational small = Rational(1) / Rational(config.probe_bound);
  const Rational big(config.probe_bound);
  auto all = [&](auto pred) { return std::all_of(tail.begin(), tail.end(), pred); };
  if (all([](const Rational& v) { return v.is_zero(); })) return Classification::zero();
  if (all([&](const Rational& v) { return v.abs() < small; })) return Classification::infinitesimal();
  if (all([&](const Rational& v) { return v > big; })) return Classification::infinitely_great(true);
  if (all([&](const Rational& v) { return v < -big; })) return Classification::infinitely_great(false);
  auto sorted = tail;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.back() - sorted.front() <= tol) return Classification::finite(sorted[(sorted.size() - 1) / 2]);
  return std::nullopt;
}

std::optional<Rational> proportionality_constant(const Quantity& a, const Quantity& b) {
  const ExpPoly& ea = a.body("proportionality_constant");
  const ExpPoly& eb = b.body("proportionality_constant");
  if (eb.empty()) throw Error(ErrorKind::ZeroDivisor, "proportionality_constant");
  if (ea.empty()) return Rational(0);
  const auto& [key, coeff_b] = *eb.terms().begin();
  const Rational coeff_a = ea.coefficient(key.base, key.power);
  if (coeff_a.is_zero()) return std::nullopt;
  Rational c = coeff_a / coeff_b;
  if (compare(a, Quantity::closed(eb.scaled(c))) != Comparison::Equal) return std::nullopt;
  return c;
}

}  // namespace bolzano
