#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>

#include "bolzano/exp_poly.hpp"

namespace bolzano {

/// Finite set of index overrides applied on top of a closed form. Finite
/// edits never change Fréchet equality or order.
class PrefixPatch {
 public:
  using Map = std::map<Index, Rational>;

  PrefixPatch() = default;
  explicit PrefixPatch(Map overrides);

  void set(Index n, Rational value);
  const Rational* find(Index n) const;
  bool empty() const noexcept { return overrides_.empty(); }
  std::size_t size() const noexcept { return overrides_.size(); }
  const Map& overrides() const noexcept { return overrides_; }

  /// Entries of `newer` win over this patch's entries.
  PrefixPatch merged(const PrefixPatch& newer) const;

  friend bool operator==(const PrefixPatch&, const PrefixPatch&) = default;

 private:
  Map overrides_;
};

/// Black-box sequence. The evaluator must be pure and total on n >= 1.
struct LazySeq {
  std::function<Rational(Index)> evaluator;
  std::string description;
};

/// A Bolzano quantity: an exact closed form with a finite prefix patch, or
/// a lazy black-box sequence. Immutable; lazy payloads are shared.
class Quantity {
 public:
  struct ClosedForm {
    ExpPoly body;
    PrefixPatch patch;
  };

  Quantity() = default;  // the zero quantity
  static Quantity closed(ExpPoly body, PrefixPatch patch = {});
  static Quantity lazy(std::function<Rational(Index)> evaluator, std::string description);

  bool is_closed() const noexcept { return std::holds_alternative<ClosedForm>(rep_); }
  bool is_lazy() const noexcept { return !is_closed(); }

  /// Closed-form accessors; throw Error(LazyInput, operation) on lazy values.
  const ClosedForm& closed_form(std::string_view operation) const;
  const ExpPoly& body(std::string_view operation = "body") const {
    return closed_form(operation).body;
  }
  const PrefixPatch& patch(std::string_view operation = "patch") const {
    return closed_form(operation).patch;
  }

  /// Exact n-th element, n >= 1. Patch overrides take precedence.
  Rational at(Index n) const;

  /// Canonical text; a nonempty patch renders as `patch(<body>, {i: v, ...})`.
  std::string render() const;
  /// Lazy label, or the canonical rendering for closed forms.
  std::string description() const;

 private:
  std::variant<ClosedForm, std::shared_ptr<const LazySeq>> rep_;
};

Quantity embed_scalar(const Rational& r);
/// The quantity N = (1, 2, 3, ...).
Quantity natural_numbers();

Rational eval_at(const Quantity& q, Index n);

Quantity add(const Quantity& a, const Quantity& b);
Quantity neg(const Quantity& q);
Quantity sub(const Quantity& a, const Quantity& b);
Quantity mul(const Quantity& a, const Quantity& b);
Quantity scale(const Quantity& q, const Rational& factor);

/// Shifts q right by m places, filling the vacated prefix with zeros.
/// Closed forms are re-expanded binomially; throws
/// Error(NegativePowerDelay) if a term has negative power.
Quantity delay(const Quantity& q, Index m);

/// Merges overrides into a closed form (new entries win). Throws
/// Error(LazyPatchUnsupported) for lazy input.
Quantity patch(const Quantity& q, const PrefixPatch& overrides);

/// Views any quantity as a lazy sequence with the same values.
Quantity lower_to_lazy(const Quantity& q);

inline Quantity operator+(const Quantity& a, const Quantity& b) { return add(a, b); }
inline Quantity operator-(const Quantity& a, const Quantity& b) { return sub(a, b); }
inline Quantity operator*(const Quantity& a, const Quantity& b) { return mul(a, b); }
inline Quantity operator-(const Quantity& q) { return neg(q); }

}  // namespace bolzano
