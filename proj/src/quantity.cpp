#include "bolzano/quantity.hpp"

#include <set>
#include <sstream>

namespace bolzano {

PrefixPatch::PrefixPatch(Map overrides) {
  for (auto& [n, v] : overrides) set(n, std::move(v));
}

void PrefixPatch::set(Index n, Rational value) {
  if (n < 1) throw Error(ErrorKind::InvalidIndex, "patch", n);
  overrides_.insert_or_assign(n, std::move(value));
}

const Rational* PrefixPatch::find(Index n) const {
  auto it = overrides_.find(n);
  return it == overrides_.end() ? nullptr : &it->second;
}

PrefixPatch PrefixPatch::merged(const PrefixPatch& newer) const {
  PrefixPatch out = *this;
  for (const auto& [n, v] : newer.overrides_) out.overrides_.insert_or_assign(n, v);
  return out;
}

Quantity Quantity::closed(ExpPoly body, PrefixPatch patch) {
  Quantity q;
  q.rep_ = ClosedForm{std::move(body), std::move(patch)};
  return q;
}

Quantity Quantity::lazy(std::function<Rational(Index)> evaluator, std::string description) {
  Quantity q;
  q.rep_ = std::make_shared<const LazySeq>(LazySeq{std::move(evaluator), std::move(description)});
  return q;
}

const Quantity::ClosedForm& Quantity::closed_form(std::string_view operation) const {
  if (const auto* cf = std::get_if<ClosedForm>(&rep_)) return *cf;
  throw Error(ErrorKind::LazyInput, std::string(operation));
}

Rational Quantity::at(Index n) const {
  if (n < 1) throw Error(ErrorKind::InvalidIndex, "eval_at", n);
  if (const auto* cf = std::get_if<ClosedForm>(&rep_)) {
    if (const Rational* v = cf->patch.find(n)) return *v;
    return cf->body.eval(n);
  }
  return std::get<std::shared_ptr<const LazySeq>>(rep_)->evaluator(n);
}

std::string Quantity::render() const {
  if (const auto* cf = std::get_if<ClosedForm>(&rep_)) {
    if (cf->patch.empty()) return cf->body.render();
    std::ostringstream os;
    os << "patch(" << cf->body.render() << ", {";
    bool first = true;
    for (const auto& [n, v] : cf->patch.overrides()) {
      if (!first) os << ", ";
      first = false;
      os << n << ": " << v.str();
    }
    os << "})";
    return os.str();
  }
  return "lazy<" + std::get<std::shared_ptr<const LazySeq>>(rep_)->description + ">";
}

std::string Quantity::description() const {
  if (is_closed()) return render();
  return std::get<std::shared_ptr<const LazySeq>>(rep_)->description;
}

Quantity embed_scalar(const Rational& r) { return Quantity::closed(ExpPoly::constant(r)); }

Quantity natural_numbers() { return Quantity::closed(ExpPoly::identity()); }

Rational eval_at(const Quantity& q, Index n) { return q.at(n); }

Quantity lower_to_lazy(const Quantity& q) {
  if (q.is_lazy()) return q;
  return Quantity::lazy([q](Index n) { return q.at(n); }, q.render());
}

namespace {

// Recomputes the pointwise combination on the union of both patch supports.
template <typename Op>
PrefixPatch combine_patches(const Quantity& a, const Quantity& b, Op op) {
  std::set<Index> support;
  for (const auto& [n, v] : a.patch().overrides()) support.insert(n);
  for (const auto& [n, v] : b.patch().overrides()) support.insert(n);
  PrefixPatch out;
  for (Index n : support) out.set(n, op(a.at(n), b.at(n)));
  return out;
}

std::string describe(const Quantity& q) { return q.description(); }

}  // namespace

Quantity add(const Quantity& a, const Quantity& b) {
  if (a.is_closed() && b.is_closed()) {
    return Quantity::closed(a.body() + b.body(),
                            combine_patches(a, b, std::plus<Rational>{}));
  }
  return Quantity::lazy([a, b](Index n) { return a.at(n) + b.at(n); },
                        "(" + describe(a) + ") + (" + describe(b) + ")");
}

Quantity neg(const Quantity& q) {
  if (q.is_closed()) {
    PrefixPatch p;
    for (const auto& [n, v] : q.patch().overrides()) p.set(n, -v);
    return Quantity::closed(-q.body(), std::move(p));
  }
  return Quantity::lazy([q](Index n) { return -q.at(n); }, "-(" + describe(q) + ")");
}

Quantity sub(const Quantity& a, const Quantity& b) {
  if (a.is_closed() && b.is_closed()) {
    return Quantity::closed(a.body() - b.body(),
                            combine_patches(a, b, std::minus<Rational>{}));
  }
  return Quantity::lazy([a, b](Index n) { return a.at(n) - b.at(n); },
                        "(" + describe(a) + ") - (" + describe(b) + ")");
}

Quantity mul(const Quantity& a, const Quantity& b) {
  if (a.is_closed() && b.is_closed()) {
    return Quantity::closed(a.body() * b.body(),
                            combine_patches(a, b, std::multiplies<Rational>{}));
  }
  return Quantity::lazy([a, b](Index n) { return a.at(n) * b.at(n); },
                        "(" + describe(a) + ") * (" + describe(b) + ")");
}

Quantity scale(const Quantity& q, const Rational& factor) {
  return mul(embed_scalar(factor), q);
}

Quantity delay(const Quantity& q, Index m) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "delay", std::nullopt, "negative shift");
  if (m == 0) return q;
  if (q.is_lazy()) {
    return Quantity::lazy([q, m](Index n) { return n <= m ? Rational(0) : q.at(n - m); },
                          "delay(" + describe(q) + ", " + std::to_string(m) + ")");
  }
  const auto& cf = q.closed_form("delay");
  if (!cf.body.all_powers_nonnegative()) throw Error(ErrorKind::NegativePowerDelay, "delay");

  // c (n-m)^k b^(n-m) = c b^-m sum_i C(k,i) (-m)^(k-i) n^i b^n
  std::vector<ExpPolyTerm> terms;
  const Rational shift(-m);
  for (const auto& [key, coeff] : cf.body.terms()) {
    const Rational lead = coeff * key.base.pow(-m);
    for (int i = 0; i <= key.power; ++i)
      terms.push_back({lead * binomial(key.power, i) * shift.pow(key.power - i), i, key.base});
  }

  PrefixPatch p;
  for (Index n = 1; n <= m; ++n) p.set(n, Rational(0));
  for (const auto& [n, v] : cf.patch.overrides()) p.set(n + m, v);
  return Quantity::closed(ExpPoly::canonicalize(terms), std::move(p));
}

Quantity patch(const Quantity& q, const PrefixPatch& overrides) {
  if (q.is_lazy()) throw Error(ErrorKind::LazyPatchUnsupported, "patch");
  const auto& cf = q.closed_form("patch");
  return Quantity::closed(cf.body, cf.patch.merged(overrides));
}

}  // namespace bolzano
