// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "bolzano/calculus.hpp"
#include "bolzano/frechet.hpp"
#include "bolzano/series.hpp"
#include "support/oracles.hpp"
#include "support/process.hpp"

using namespace bolzano;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  int failures = 0;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (failures++ < 3) detail += (detail.empty() ? "" : "; ") + what;
    ok = false;
  }
};

Quantity N() { return natural_numbers(); }
Quantity embed(const Rational& r) { return embed_scalar(r); }
Quantity mono(Rational c, int k, Rational b = Rational(1)) { return Quantity::closed(ExpPoly::monomial(c, k, b)); }
bool eq(const Quantity& a, const Quantity& b) { return compare(a, b) == Comparison::Equal; }
bool lt(const Quantity& a, const Quantity& b) { return compare(a, b) == Comparison::Less; }

// 1: m + N_m = N, with N_m the tail of the all-ones series after m terms
Outcome tail_recombination() {
  Outcome o;
  const Series ones{ExpPoly::constant(Rational(1))};
  for (Index m : {1, 5, 50}) {
    const Quantity lhs = add(embed(Rational(m)), omit_first(ones, m));
    o.expect(compare(lhs, partial_sums(ones)) == Comparison::Equal, "m=" + std::to_string(m));
    o.expect(eq(partial_sums(ones), N()), "sum of ones is N");
  }
  o.detail = o.ok ? "m in {1, 5, 50}" : o.detail;
  return o;
}

// 2: partial sums of geom(e) are finite with standard part 1/(1-e)
Outcome geometric_limits() {
  Outcome o;
  for (const Rational e : {Rational(1, 2), Rational(3, 4), Rational(9, 10)}) {
    const Quantity s = partial_sums(geometric_series(e));
    const Rational limit = (Rational(1) - e).inverse();
    const Classification c = classify(s);
    o.expect(c.kind() == Classification::Kind::Finite && c.standard_part() == limit, "classify e=" + e.str());
    o.expect(infinitely_close(s, embed(limit)), "close e=" + e.str());
  }
  if (o.ok) o.detail = "e in {1/2, 3/4, 9/10}";
  return o;
}

// 3: P < S and S >> P with both built by summation
Outcome squares_outgrow_integers() {
  Outcome o;
  const Quantity P = partial_sums(Series{ExpPoly::identity()});
  const Quantity S = partial_sums(Series{ExpPoly::monomial(Rational(1), 2, Rational(1))});
  o.expect(compare(P, S) == Comparison::Less, "P < S");
  o.expect(infinitely_greater(S, P), "S >> P");
  o.expect(!infinitely_greater(P, S), "not P >> S");
  if (o.ok) o.detail = "P = " + P.render() + ", S = " + S.render();
  return o;
}

// 4: proportions of multiples of N, powers of N, 1/N
Outcome proportions() {
  Outcome o;
  oracle::Generator gen(4004);
  for (int i = 0; i < 20; ++i) {
    const Rational r = gen.nonzero_rational(50, 50), s = gen.nonzero_rational(50, 50);
    o.expect(proportionality_constant(scale(N(), r), scale(N(), s)) == r / s, "ratio " + r.str() + ":" + s.str());
  }
  o.expect(infinitely_greater(N() * N(), N()), "N^2 >> N");
  o.expect(infinitely_greater(N() * N() * N(), N() * N()), "N^3 >> N^2");
  o.expect(is_infinitely_small(mono(Rational(1), -1)), "1/N infinitesimal");
  o.detail = o.ok ? "20 random ratios" : o.detail;
  return o;
}

// 5: ring and order axioms on 10^4 random triples, plus the zero divisor
Outcome ring_axioms() {
  Outcome o;
  oracle::Generator gen(5005);
  const Quantity zero, one = embed(Rational(1));
  int chains = 0;
  for (int i = 0; i < 10000; ++i) {
    const Quantity a = gen.closed_form(), b = gen.closed_form(), c = gen.closed_form();
    const std::string tag = " #" + std::to_string(i);
    o.expect(eq((a + b) + c, a + (b + c)), "1 associativity of +" + tag);
    o.expect(eq(a + b, b + a), "2 commutativity of +" + tag);
    o.expect(eq(a + zero, a), "3 additive identity" + tag);
    o.expect(eq(a + (-a), zero), "4 additive inverse" + tag);
    o.expect(eq((a * b) * c, a * (b * c)), "5 associativity of *" + tag);
    o.expect(eq(a * b, b * a), "6 commutativity of *" + tag);
    o.expect(eq(a * one, a), "7 multiplicative identity" + tag);
    o.expect(eq(a * (b + c), a * b + a * c), "8 distributivity" + tag);
    o.expect(!lt(a, a), "9 irreflexivity" + tag);
    if (lt(a, b) && lt(b, c)) {
      ++chains;
      o.expect(lt(a, c), "10 transitivity" + tag);
    }
    // a guaranteed chain a < a + p < a + p + p with p = b^2 + 1 eventually positive
    const Quantity p = b * b + one;
    o.expect(lt(a, a + p) && lt(a + p, a + p + p) && lt(a, a + p + p), "10 transitivity (built chain)" + tag);
    // congruence: patching a finite prefix changes nothing
    const Quantity a2 = patch(a, PrefixPatch({{1, gen.rational()}, {7, gen.rational()}}));
    o.expect(eq(a2, a) && eq(a2 + b, a + b) && eq(a2 * b, a * b) && compare(a2, b) == compare(a, b),
             "congruence" + tag);
  }
  const Quantity osc = mono(Rational(-1), 0, Rational(-1));
  const Quantity evens = scale(one + mono(Rational(1), 0, Rational(-1)), Rational(1, 2));
  const Quantity odds = scale(one + osc, Rational(1, 2));
  const Quantity product = evens * odds;
  o.expect(product.body().empty() && eq(product, zero), "oscillator product is zero");
  o.expect(compare(evens, zero) == Comparison::Incomparable && compare(odds, zero) == Comparison::Incomparable,
           "oscillator factors are nonzero and unordered");
  o.expect(infinitely_greater(N(), one), "non-Archimedean: N >> 1");
  if (o.ok) o.detail = "10^4 triples, " + std::to_string(chains) + " random chains, zero divisor exhibited";
  return o;
}

// 6: polynomials are linearly ordered lexicographically, without zero divisors
Outcome polynomial_subring() {
  Outcome o;
  oracle::Generator gen(6006);
  auto lex = [](const Quantity& a, const Quantity& b) {
    for (int k = 8; k >= 0; --k) {
      const Rational ca = a.body().coefficient(Rational(1), k), cb = b.body().coefficient(Rational(1), k);
      if (ca < cb) return Comparison::Less;
      if (ca > cb) return Comparison::Greater;
    }
    return Comparison::Equal;
  };
  for (int i = 0; i < 10000; ++i) {
    const Quantity a = gen.polynomial(), b = gen.coin() ? gen.polynomial() : a + embed(gen.rational());
    const Comparison c = compare(a, b);
    const std::string tag = " #" + std::to_string(i);
    o.expect(c != Comparison::Incomparable, "incomparable" + tag);
    o.expect(c == lex(a, b), "lexicographic" + tag);
    if (!a.body().empty() && !b.body().empty()) o.expect(!eq(a * b, Quantity()), "zero divisor" + tag);
  }
  if (o.ok) o.detail = "10^4 pairs";
  return o;
}

// Exact value of 2^n * L * q(n) as an integer, for bases with 2|b| in {1, 2, 3, 4}.
// Grouping by 2|b| leaves four small rational coefficients per index.
class ScaledEvaluator {
 public:
  mpz_class operator()(const ExpPoly& e, Index n) {
    std::map<long, mpq_class> groups;
    for (const auto& t : e.term_list()) {
      const mpq_class doubled = abs(t.base.raw()) * 2;
      if (doubled.get_den() != 1 || doubled.get_num() > 4) throw std::logic_error("unsupported base " + t.base.str());
      mpq_class c = t.coeff.raw();
      if (t.base.sign() < 0 && n % 2 == 1) c = -c;
      mpz_class nk;
      mpz_ui_pow_ui(nk.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(std::abs(t.power)));
      if (t.power >= 0)
        c *= nk;
      else
        c /= nk;
      groups[doubled.get_num().get_si()] += c;
    }
    mpz_class lcm = 1;
    for (const auto& [g, c] : groups) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_class total = 0;
    for (const auto& [g, c] : groups) {
      const mpz_class k = c.get_num() * (lcm / c.get_den());
      mpz_class big;
      switch (g) {
        case 1: big = k; break;
        case 2: mpz_mul_2exp(big.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(n)); break;
        case 4: mpz_mul_2exp(big.get_mpz_t(), k.get_mpz_t(), 2 * static_cast<unsigned long>(n)); break;
        case 3: big = k * three_to(n); break;
      }
      total += big;
    }
    return total;
  }

 private:
  const mpz_class& three_to(Index n) {
    auto it = cache_.find(n);
    if (it == cache_.end()) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(n));
      it = cache_.emplace(n, std::move(p)).first;
    }
    return it->second;
  }
  std::map<Index, mpz_class> cache_;
};

// 7: decided verdicts agree with exact evaluation at large sampled indices
Outcome oracle_equivalence() {
  Outcome o;
  oracle::Generator gen(7007);
  ScaledEvaluator eval;
  std::vector<Index> pool;
  for (int i = 0; i < 200; ++i) pool.push_back(std::uniform_int_distribution<Index>(1 << 10, 1 << 20)(gen.engine()));
  std::map<Comparison, int> seen;
  int decided = 0, attempts = 0;
  while (decided < 1000 && attempts < 100000) {
    ++attempts;
    const Quantity a = gen.closed_form();
    Quantity b = gen.closed_form();
    // some pairs differ only by cancelling terms and a prefix patch
    if (gen.integer(0, 9) == 0) b = patch(a + b - b, PrefixPatch({{3, Rational(1)}}));
    const Comparison c = compare(a, b);
    if (c == Comparison::Incomparable) continue;
    ++decided;
    ++seen[c];
    const ExpPoly diff = b.body() - a.body();
    for (int s = 0; s < 100; ++s) {
      const Index n = pool[static_cast<std::size_t>(gen.integer(0, static_cast<int>(pool.size()) - 1))];
      const int sign = sgn(eval(diff, n));
      const int want = c == Comparison::Less ? 1 : c == Comparison::Greater ? -1 : 0;
      o.expect(sign == want, a.render() + " vs " + b.render() + " at n=" + std::to_string(n));
    }
  }
  o.expect(decided == 1000, "too few decided pairs");
  if (o.ok)
    o.detail = "1000 pairs x 100 indices (less " + std::to_string(seen[Comparison::Less]) + ", equal " +
               std::to_string(seen[Comparison::Equal]) + ", greater " + std::to_string(seen[Comparison::Greater]) + ")";
  return o;
}

// 8: partial sums agree with direct addition for n <= 200
Outcome summation() {
  Outcome o;
  oracle::Generator gen(8008);
  const std::vector<Rational> bases{Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2),
                                    Rational(3, 4), Rational(3), Rational(-2, 3)};
  for (int trial = 0; trial < 200; ++trial) {
    const ExpPoly term = gen.exp_poly(bases, 0, 4);
    const Index start = gen.integer(1, 5);
    const Quantity s = partial_sums(Series{term, start});
    const auto terms = term.term_list();
    mpq_class running = 0;
    for (Index n = 1; n <= 200; ++n) {
      if (n >= start) running += oracle::value(terms, n);
      o.expect(s.at(n).raw() == running, term.render() + " from " + std::to_string(start) + " at " + std::to_string(n));
    }
  }
  if (o.ok) o.detail = "200 random series, n <= 200";
  return o;
}

// 9: derivative, continuity and uniform continuity probes
Outcome cheap_nsa() {
  Outcome o;
  const CalculusConfig cfg;
  const RealFunction square = functions::polynomial({Rational(0), Rational(0), Rational(1)}, "x^2");
  const StEstimate d = derivative(square, Rational(3), reciprocal_n(), cfg);
  o.expect((d.value - Rational(6)).abs() <= Rational(1, 1000), "x^2 at 3: " + d.value.decimal(9));
  const StEstimate s = derivative(functions::sin(), Rational(0), reciprocal_n(), cfg);
  o.expect((s.value - Rational(1)).abs() <= Rational::ten_to_minus(6), "sin at 0: " + s.value.decimal(12));
  const Quantity alt = mono(Rational(1), -1, Rational(-1));
  const Verdict step = continuity_probe(functions::step(), Rational(0), {alt}, cfg);
  o.expect(step.is_fails(), "step not refuted");
  if (step.is_fails())
    o.expect(functions::step()(alt.at(step.index())) != functions::step()(Rational(0)), "step witness is not a jump");
  const Quantity xs = N(), ys = N() + mono(Rational(1), -1);
  const Verdict u = uniform_continuity_probe(square, xs, ys, cfg);
  o.expect(u.is_fails(), "x^2 not refuted");
  Rational gap;
  if (u.is_fails()) {
    gap = (square(ys.at(u.index())) - square(xs.at(u.index()))).abs();
    o.expect(gap >= Rational(2) - Rational::ten_to_minus(6), "tail gap " + gap.decimal(9));
  }
  if (o.ok)
    o.detail = "d/dx x^2 = " + d.value.decimal(6) + ", sin'(0) = " + s.value.decimal(9) + ", step witness " +
               std::to_string(step.index()) + ", gap " + gap.decimal(6);
  return o;
}

// 10: batch script, fuzzed token strings, byte-stable JSON
Outcome cli() {
  Outcome o;
  const std::string fixture = proc::quote(std::string(BOLZANO_FIXTURES) + "/infinite_sums.bolz");
  const auto batch = proc::run("--batch " + fixture);
  o.expect(batch.exit_code == 0, "batch script exit " + std::to_string(batch.exit_code));
  std::mt19937_64 rng(1010);
  std::map<int, int> codes;
  for (int i = 0; i < 1000; ++i) {
    const std::string line = proc::fuzz_statement(rng);
    const auto r = proc::run_script(line + "\n", i % 2 ? "--json" : "");
    ++codes[r.crashed ? -1 : r.exit_code];
    o.expect(!r.crashed && r.exit_code >= 0 && r.exit_code <= 3, "fuzz '" + line + "'");
  }
  const std::string mixed = "let P = series(k)\ncmp(P, N)\nclassify(geom(3/4))\nderiv(sin, 0)\n"
                            "cont(step, 0)\nucont(x -> x*x, N, N + n^-1)\nst(geom(1/2))\ndelay(N^-1, 1)\n";
  const auto j1 = proc::run_script(mixed, "--json"), j2 = proc::run_script(mixed, "--json");
  const auto f1 = proc::run("--json --batch " + fixture), f2 = proc::run("--json --batch " + fixture);
  o.expect(!j1.out.empty() && j1.out == j2.out && f1.out == f2.out, "JSON differs between runs");
  if (o.ok) {
    std::ostringstream os;
    os << "batch exit 0, 1000 fuzz runs (exit codes";
    for (const auto& [code, count] : codes) os << " " << code << ":" << count;
    os << "), JSON byte-stable";
    o.detail = os.str();
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"m + N_m equals N", tail_recombination},
      {"geometric partial sums are finite with standard part 1/(1-e)", geometric_limits},
      {"P < S and S infinitely greater than P", squares_outgrow_integers},
      {"proportions and orders of magnitude", proportions},
      {"ordered ring axioms and zero divisor", ring_axioms},
      {"polynomial subring is lexicographically ordered", polynomial_subring},
      {"verdicts agree with exact evaluation", oracle_equivalence},
      {"partial sums agree with brute force", summation},
      {"derivative and continuity probes", cheap_nsa},
      {"command line tool", cli},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failed;
    std::printf("%s criterion %zu: %s [%s] (%.2fs)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
