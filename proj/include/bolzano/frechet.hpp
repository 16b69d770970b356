#pragma once

#include <optional>
#include <string_view>

#include "bolzano/quantity.hpp"

namespace bolzano {

enum class Sign { Neg, Zero, Pos };

/// Eventual signs of a sequence restricted to even and to odd indices.
struct ParitySign {
  Sign even = Sign::Zero;
  Sign odd = Sign::Zero;

  friend bool operator==(const ParitySign&, const ParitySign&) = default;
};

enum class Comparison { Less, Equal, Greater, Incomparable };

/// Outcome of a horizon-bounded check on a lazy quantity. Fails carries a
/// concrete counterexample index; Holds and Unknown carry the horizon.
class Verdict {
 public:
  enum class Kind { Holds, Fails, Unknown };

  static Verdict holds(Index checked_up_to) { return {Kind::Holds, checked_up_to}; }
  static Verdict fails(Index witness) { return {Kind::Fails, witness}; }
  static Verdict unknown(Index horizon) { return {Kind::Unknown, horizon}; }

  Kind kind() const noexcept { return kind_; }
  bool is_holds() const noexcept { return kind_ == Kind::Holds; }
  bool is_fails() const noexcept { return kind_ == Kind::Fails; }
  /// Horizon for Holds/Unknown, witness index for Fails.
  Index index() const noexcept { return index_; }

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  Verdict(Kind kind, Index index) : kind_(kind), index_(index) {}

  Kind kind_;
  Index index_;
};

class Classification {
 public:
  enum class Kind { Zero, Infinitesimal, Finite, InfinitelyGreatPositive, InfinitelyGreatNegative, Oscillating };

  static Classification zero() { return Classification(Kind::Zero); }
  static Classification infinitesimal() { return Classification(Kind::Infinitesimal); }
  static Classification finite(Rational standard_part) {
    Classification c(Kind::Finite);
    c.standard_part_ = std::move(standard_part);
    return c;
  }
  static Classification infinitely_great(bool positive) {
    return Classification(positive ? Kind::InfinitelyGreatPositive : Kind::InfinitelyGreatNegative);
  }
  static Classification oscillating() { return Classification(Kind::Oscillating); }

  Kind kind() const noexcept { return kind_; }
  /// Set only for Finite.
  const std::optional<Rational>& standard_part() const noexcept { return standard_part_; }

  friend bool operator==(const Classification&, const Classification&) = default;

 private:
  explicit Classification(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::optional<Rational> standard_part_;
};

enum class Greatness { No, PositiveYes, NegativeYes };

/// Parameters for horizon-bounded checks on lazy quantities.
struct LazyConfig {
  Index horizon = 10'000;
  /// Largest k used when testing |q| < 1/k or |q| > k.
  Index probe_bound = 100;
};

/// Leading index exempt from a horizon check: ceil(horizon / 10).
Index tolerance_window(Index horizon);

std::string_view to_string(Sign s);
std::string_view to_string(Comparison c);
std::string_view to_string(Verdict::Kind k);
std::string_view to_string(Classification::Kind k);

ParitySign eventual_sign(const ExpPoly& e);

/// Exact Fréchet comparison of two closed forms; patches are ignored.
/// Throws Error(LazyInput).
Comparison compare(const Quantity& a, const Quantity& b);

/// Semi-decision of `a claim b` on indices tolerance_window(horizon)+1 ..
/// horizon. Works on any representation. Fails reports the smallest
/// violating index.
Verdict compare_lazy(const Quantity& a, const Quantity& b, Comparison claim, Index horizon);

/// Exact on closed forms (zero counts as infinitely small). Throws
/// Error(LazyInput); use the Verdict overload for lazy values.
bool is_infinitely_small(const Quantity& q);
Verdict is_infinitely_small(const Quantity& q, const LazyConfig& config);

Greatness is_infinitely_great(const Quantity& q);
/// Tests sign * q(n) > probe_bound on the tail.
Verdict is_infinitely_great(const Quantity& q, Sign sign, const LazyConfig& config);

/// a >> b: a exceeds every natural multiple of b in the Fréchet order.
bool infinitely_greater(const Quantity& a, const Quantity& b);

bool infinitely_close(const Quantity& a, const Quantity& b);
Verdict infinitely_close(const Quantity& a, const Quantity& b, const LazyConfig& config);

Classification classify(const Quantity& q);
/// Tail-sampling estimate for lazy quantities; nullopt means Unknown.
std::optional<Classification> classify(const Quantity& q, const LazyConfig& config,
                                       const Rational& tol);

/// Constant c with a =F c*b, if one exists. Throws Error(ZeroDivisor) when
/// b =F 0.
std::optional<Rational> proportionality_constant(const Quantity& a, const Quantity& b);

}  // namespace bolzano
