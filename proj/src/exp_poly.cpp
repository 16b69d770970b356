#include "bolzano/exp_poly.hpp"

#include <sstream>

namespace bolzano {

bool DominanceOrder::operator()(const TermKey& a, const TermKey& b) const {
  const auto abs_a = a.base.abs();
  const auto abs_b = b.base.abs();
  if (abs_a != abs_b) return abs_a > abs_b;
  if (a.power != b.power) return a.power > b.power;
  return a.base > b.base;
}

void ExpPoly::accumulate(const TermKey& key, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

ExpPoly ExpPoly::canonicalize(std::span<const ExpPolyTerm> terms) {
  ExpPoly out;
  for (const auto& t : terms) {
    if (t.base.is_zero()) throw Error(ErrorKind::ZeroBase, "canonicalize");
    out.accumulate(TermKey{t.base, t.power}, t.coeff);
  }
  return out;
}

ExpPoly ExpPoly::constant(const Rational& c) { return monomial(c, 0, Rational(1)); }

ExpPoly ExpPoly::monomial(const Rational& coeff, int power, const Rational& base) {
  const ExpPolyTerm term{coeff, power, base};
  return canonicalize(std::span(&term, 1));
}

ExpPoly ExpPoly::identity() { return monomial(Rational(1), 1, Rational(1)); }

std::vector<ExpPolyTerm> ExpPoly::term_list() const {
  std::vector<ExpPolyTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, coeff] : terms_) out.push_back({coeff, key.power, key.base});
  return out;
}

Rational ExpPoly::coefficient(const Rational& base, int power) const {
  auto it = terms_.find(TermKey{base, power});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool ExpPoly::all_powers_nonnegative() const {
  for (const auto& [key, coeff] : terms_)
    if (key.power < 0) return false;
  return true;
}

Rational ExpPoly::eval(Index n) const {
  if (n < 1) throw Error(ErrorKind::InvalidIndex, "eval_at", n);
  const Rational index(n);
  Rational total;
  // Keys sharing a base are adjacent only when their |base| ties, so cache
  // the last base power rather than relying on grouping.
  const Rational* cached_base = nullptr;
  Rational base_power;
  for (const auto& [key, coeff] : terms_) {
    if (cached_base == nullptr || *cached_base != key.base) {
      base_power = key.base.pow(n);
      cached_base = &key.base;
    }
    total += coeff * index.pow(key.power) * base_power;
  }
  return total;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& rhs) {
  for (const auto& [key, coeff] : rhs.terms_) accumulate(key, coeff);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& rhs) {
  for (const auto& [key, coeff] : rhs.terms_) accumulate(key, -coeff);
  return *this;
}

ExpPoly operator*(const ExpPoly& lhs, const ExpPoly& rhs) {
  ExpPoly out;
  for (const auto& [ka, ca] : lhs.terms_)
    for (const auto& [kb, cb] : rhs.terms_)
      out.accumulate(TermKey{ka.base * kb.base, ka.power + kb.power}, ca * cb);
  return out;
}

ExpPoly ExpPoly::operator-() const { return scaled(Rational(-1)); }

ExpPoly ExpPoly::scaled(const Rational& factor) const {
  ExpPoly out;
  if (factor.is_zero()) return out;
  for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * factor);
  return out;
}

std::string ExpPoly::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << coeff.str() << "*n^" << key.power << '*';
    if (key.base.sign() < 0)
      os << '(' << key.base.str() << ")^n";
    else
      os << key.base.str() << "^n";
  }
  return os.str();
}

}  // namespace bolzano
