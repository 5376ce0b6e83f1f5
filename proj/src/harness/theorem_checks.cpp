#include <algorithm>
#include <cmath>

#include "check_support.hpp"
#include "infothermo/engine/engine.hpp"

namespace infothermo::harness {

using namespace detail;

namespace {

constexpr double kDecimalTolerance = 1e-28;  // 10^-(30 - 2)
constexpr double kDecompositionTolerance = 1e-12;

CaseOutcome t3(const ModelOracle& o, const SuiteConfig&, Rng& rng) {
  const Eidostate i = random_information_state(rng, o, 64);
  const Eidostate j = random_information_state(rng, o, 64);
  const bool expect = i.size() <= j.size();
  if (o.arrow(i, j) != expect) {
    return violation("I -> J disagrees with |I| <= |J| (" + std::to_string(i.size()) + " vs " +
                         std::to_string(j.size()) + ")",
                     {o.describe(i), o.describe(j)});
  }
  return pass();
}

CaseOutcome t5(const ModelOracle& o, const SuiteConfig& c, Rng& rng) {
  const StateExpr a = o.random_state(rng, c.max_state_depth);
  auto pick = [&] {
    return coin(rng, 4) ? o.random_state(rng, c.max_state_depth) : o.random_state_like(rng, a, c.max_state_depth);
  };
  const StateExpr b = pick();
  const StateExpr d = pick();
  if (possible(o, single(a), single(b)) && possible(o, single(a), single(d)) &&
      !possible(o, single(b), single(d))) {
    return violation("<a,b> and <a,c> possible but <b,c> is not", {o.describe(a), o.describe(b), o.describe(d)});
  }
  return pass();
}

CaseOutcome t6(const ModelOracle& o, const SuiteConfig& c, Rng& rng) {
  const StateExpr a = o.random_state(rng, c.max_state_depth);
  const StateExpr b = coin(rng, 4) ? o.random_state(rng, c.max_state_depth)
                                   : o.random_state_like(rng, a, c.max_state_depth);
  if (!possible(o, single(a), single(b))) return pass();
  const Eidostate i = random_information_state(rng, o, 16);
  const Eidostate j = random_information_state(rng, o, 16);
  const ExactEntropy lhs = o.state_entropy(a) + ExactEntropy::log2_of(i.size());
  const ExactEntropy rhs = o.state_entropy(b) + ExactEntropy::log2_of(j.size());
  const bool expect = o.components(a) == o.components(b) && compare(lhs, rhs) != Ordering::Greater;
  if (o.arrow(single(a) + i, single(b) + j) != expect) {
    return violation("alpha + Gamma natural disagrees with I(alpha) + I(Gamma) >= 0",
                     {o.describe(a), o.describe(b), o.describe(i), o.describe(j)});
  }
  return pass();
}

CaseOutcome t8(const ModelOracle& o, const SuiteConfig& c, Rng& rng) {
  const StateExpr a = o.random_state(rng, std::min<std::size_t>(c.max_state_depth, 2));
  const StateExpr b = o.random_state_like(rng, a, std::min<std::size_t>(c.max_state_depth, 2));
  if (!possible(o, single(a), single(b))) return pass();
  const auto coarse = engine::irreversibility_estimate(a, b, 4, o);
  const auto fine = engine::irreversibility_estimate(a, b, 8, o);
  const std::vector<std::string> in{o.describe(a), o.describe(b)};
  if (fine.lower < coarse.lower || fine.upper > coarse.upper) {
    return violation("brackets for qmax 4 and 8 are not nested", in);
  }
  const ExactEntropy sa = o.state_entropy(a);
  const ExactEntropy sb = o.state_entropy(b);
  if (compare(sa.shifted(fine.lower), sb) == Ordering::Greater ||
      compare(sb, sa.shifted(fine.upper)) == Ordering::Greater) {
    return violation("bracket [" + infothermo::to_string(fine.lower) + ", " + infothermo::to_string(fine.upper) +
                         "] misses S(b) - S(a)",
                     in);
  }
  if (fine.complete && fine.upper - fine.lower > Rational(2, 8)) {
    return violation("bracket wider than 2/qmax", in);
  }
  return pass();
}

CaseOutcome t9c(const ModelOracle& o, const SuiteConfig& c, Rng& rng) {
  const StateExpr a = o.random_state(rng, c.max_state_depth);
  const StateExpr b = coin(rng, 2) ? o.random_state(rng, c.max_state_depth)
                                   : o.random_state_like(rng, a, c.max_state_depth);
  const bool same = o.components(a) == o.components(b);
  const std::vector<std::string> in{o.describe(a), o.describe(b)};
  if (possible(o, single(a), single(b)) != same) {
    return violation("possibility disagrees with equal components", in);
  }
  if (same) {
    const bool expect = compare(o.state_entropy(a), o.state_entropy(b)) != Ordering::Greater;
    if (o.arrow(a, b) != expect) return violation("a -> b disagrees with S(a) <= S(b)", in);
  }
  return pass();
}

CaseOutcome t15(const ModelOracle& o, const SuiteConfig& c, Rng& rng) {
  const StateExpr ref = o.random_state(rng, c.max_state_depth);
  std::vector<StateExpr> states;
  const std::size_t k = uniform_size(rng, 2, std::max<std::size_t>(2, c.max_eidostate_size));
  for (std::size_t i = 0; i < k; ++i) states.push_back(o.random_state_like(rng, ref, c.max_state_depth));
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  if (states.size() < 2) return pass();
  std::shuffle(states.begin(), states.end(), rng);
  const auto cut = static_cast<std::ptrdiff_t>(uniform_size(rng, 1, states.size() - 1));
  const Eidostate e1 = Eidostate::of({states.begin(), states.begin() + cut});
  const Eidostate e2 = Eidostate::of({states.begin() + cut, states.end()});
  const Eidostate u = set_union(e1, e2);
  if (!engine::is_uniform(u, o)) return pass();
  const ExactEntropy joint = engine::entropy_uniform(u, o);
  const ExactEntropy parts = merge_union(engine::entropy_uniform(e1, o), engine::entropy_uniform(e2, o));
  if (!(joint == parts)) {
    return violation("S(E1 u E2) = " + joint.exact_string() + " but log(2^S(E1) + 2^S(E2)) = " +
                         parts.exact_string(),
                     {o.describe(e1), o.describe(e2)});
  }
  return pass();
}

CaseOutcome t17(const ModelOracle& o, const SuiteConfig& c, Rng& rng) {
  const Eidostate e = random_uniform(rng, o, c.max_eidostate_size, c.max_state_depth);
  const auto rep = engine::shannon_decomposition(e, o);
  if (rep.defect.to_double() > kDecompositionTolerance) {
    return violation("S(E) - (<S> + H) = " + rep.defect.to_decimal(6), {o.describe(e)});
  }
  if (std::abs(rep.probability_sum.to_double() - 1.0) > kDecompositionTolerance) {
    return violation("entropic probabilities do not sum to 1", {o.describe(e)});
  }
  return pass();
}

CaseOutcome cancellation(const ModelOracle& o, const SuiteConfig& c, Rng& rng) {
  const StateExpr ref = o.random_state(rng, c.max_state_depth);
  const Eidostate a = random_uniform(rng, o, 3, c.max_state_depth, ref);
  const Eidostate b = random_uniform(rng, o, 3, c.max_state_depth, ref);
  const Eidostate i = random_information_state(rng, o, 16);
  if (o.arrow(a + i, b + i) && !o.arrow(a, b)) {
    return violation("A + I -> B + I but A -/-> B", {o.describe(a), o.describe(b), o.describe(i)});
  }
  return pass();
}

CaseOutcome independence(const ModelOracle& o, const SuiteConfig& c, Rng& rng) {
  const std::size_t m = std::min<std::size_t>(3, c.max_eidostate_size);
  const Eidostate e = random_uniform(rng, o, m, c.max_state_depth);
  const Eidostate f = random_uniform(rng, o, m, c.max_state_depth);
  const auto ee = e.elements();
  const auto fe = f.elements();
  const StateExpr x = ee[uniform_size(rng, 0, ee.size() - 1)];
  const StateExpr y = fe[uniform_size(rng, 0, fe.size() - 1)];
  const auto pxy = engine::entropic_probability(x + y, e + f, o);
  const auto px = engine::entropic_probability(x, e, o);
  const auto py = engine::entropic_probability(y, f, o);
  const double diff = abs(pxy.value() - px.value() * py.value()).to_double();
  if (diff > kDecimalTolerance) {
    return violation("P(x+y|E+F) != P(x|E) P(y|F), off by " + std::to_string(diff),
                     {o.describe(e), o.describe(f), o.describe(x), o.describe(y)});
  }
  return pass();
}

CaseOutcome probability_rules(const ModelOracle& o, const SuiteConfig& c, Rng& rng) {
  const Eidostate e = random_uniform(rng, o, c.max_eidostate_size, c.max_state_depth);
  const auto all = e.elements();
  auto p = [&](const std::vector<StateExpr>& b, const std::vector<StateExpr>& a) {
    return engine::conditional_probability(b, a, e, o).value();
  };
  const std::vector<std::string> in{o.describe(e)};
  if (abs(p(all, all) - BigReal(Rational(1), 128)).to_double() > kDecimalTolerance) {
    return violation("P(E|E) != 1", in);
  }
  // Split E into disjoint A, B (and possibly a remainder).
  std::vector<StateExpr> a, b;
  for (const auto& x : all) {
    switch (uniform_size(rng, 0, 2)) {
      case 0: a.push_back(x); break;
      case 1: b.push_back(x); break;
      default: break;
    }
  }
  if (a.empty() || b.empty()) return pass();
  std::vector<StateExpr> ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  if (abs(p(ab, all) - (p(a, all) + p(b, all))).to_double() > kDecimalTolerance) {
    return violation("P(A u B|E) != P(A|E) + P(B|E) for disjoint A, B", in);
  }
  // Chain rule with overlapping events: P(C|A) P(A|E) = P(A n C|E).
  std::vector<StateExpr> cset = b;
  cset.push_back(a.front());
  const std::vector<StateExpr> a_and_c{a.front()};
  if (abs(p(cset, a) * p(a, all) - p(a_and_c, all)).to_double() > kDecimalTolerance) {
    return violation("conditional chain rule fails", in);
  }
  return pass();
}

CaseOutcome landauer(const ModelOracle& o, const SuiteConfig& c, Rng& rng) {
  const StateExpr a = o.random_state(rng, c.max_state_depth);
  const StateExpr b = o.random_state_like(rng, a, c.max_state_depth);
  const auto v = engine::landauer_check(a, b, o);
  if (v.applicable && !v.holds) {
    return violation("a + I_b -> b with S(b) - S(a) < 1", {o.describe(a), o.describe(b)});
  }
  return pass();
}

CaseOutcome gibbs(const ModelOracle& o, const SuiteConfig& c, Rng& rng) {
  const Eidostate e = random_uniform(rng, o, c.max_eidostate_size, c.max_state_depth);
  const auto rep = engine::shannon_decomposition(e, o);
  std::vector<double> entropic;
  for (const auto& [x, p] : rep.support) entropic.push_back(p.value().to_double());
  double s = 0;
  for (double v : entropic) s += v;
  for (double& v : entropic) v /= s;
  const std::vector<std::string> in{o.describe(e)};
  const double at_entropic = engine::gibbs_gap(e, entropic, o).to_double();
  if (std::abs(at_entropic) > kDecompositionTolerance) {
    return violation("gap at the entropic distribution is " + std::to_string(at_entropic), in);
  }
  // A random distribution: the gap is never negative.
  std::vector<double> q(entropic.size());
  double total = 0;
  for (double& v : q) total += (v = std::uniform_real_distribution<double>(0.0, 1.0)(rng));
  for (double& v : q) v /= total;
  double tv = 0;
  for (std::size_t i = 0; i < q.size(); ++i) tv += std::abs(q[i] - entropic[i]) / 2;
  const double gap = engine::gibbs_gap(e, q, o).to_double();
  if (gap < -kDecompositionTolerance) return violation("negative Gibbs gap", in);
  if (tv >= 1e-3 && gap <= 0) return violation("zero gap away from the entropic distribution", in);
  return pass();
}

CaseOutcome demon(const ModelOracle& o, const SuiteConfig& c, Rng& rng) {
  const StateExpr a = o.random_state(rng, c.max_state_depth);
  const StateExpr b = coin(rng, 2) ? o.random_state(rng, c.max_state_depth)
                                   : o.random_state_like(rng, a, c.max_state_depth);
  const bool direct = possible(o, single(a), single(b));
  if (engine::demonically_possible(a, b, 1024, o) != direct) {
    return violation("demonic possibility disagrees with possibility", {o.describe(a), o.describe(b)});
  }
  return pass();
}

CaseOutcome content_shift(const ModelOracle& o, const SuiteConfig& c, Rng& rng) {
  const Eidostate e = random_uniform(rng, o, c.max_eidostate_size, c.max_state_depth);
  const auto elems = e.elements();
  if (o.components(elems.front()).empty()) return pass();
  // Shift every state entropy by c times its first component.
  const Rational shift(static_cast<long>(uniform_size(rng, 0, 8)) - 4, static_cast<long>(uniform_size(rng, 1, 4)));
  auto shifted = [&](const StateExpr& x) { return o.state_entropy(x).shifted(shift * o.components(x).front()); };
  std::optional<ExactEntropy> se;
  for (const auto& x : elems) se = se ? merge_union(*se, shifted(x)) : shifted(x);
  const ExactEntropy base = engine::entropy_uniform(e, o);
  for (const auto& x : elems) {
    const BigReal p0 = exp2(o.state_entropy(x).approx(160) - base.approx(160));
    const BigReal p1 = exp2(shifted(x).approx(160) - se->approx(160));
    if (abs(p0 - p1).to_double() > kDecimalTolerance) {
      return violation("entropic probability changes under S -> S + cQ", {o.describe(e), infothermo::to_string(shift)});
    }
  }
  return pass();
}

}  // namespace

const std::vector<Check>& theorem_checks() {
  static const std::vector<Check> checks = {
      {"T3", "information states: I -> J iff |I| <= |J|", t3},
      {"T5", "comparison of possible processes", t5},
      {"T6", "alpha + Gamma natural iff the irreversibilities sum to >= 0", t6},
      {"T8", "irreversibility bracket from bit processes contains S(b) - S(a)", t8},
      {"T9(c)", "possible iff equal components; then a -> b iff S(a) <= S(b)", t9c},
      {"T15", "entropy of a disjoint union of uniform eidostates", t15},
      {"T17", "S(E) = <S> + H under entropic probability", t17},
      {"cancellation", "A + I -> B + I implies A -> B", cancellation},
      {"independence", "P(x+y|E+F) = P(x|E) P(y|F)", independence},
      {"probability", "P(E|E) = 1, additivity, chain rule", probability_rules},
      {"landauer", "erasing a bit costs at least one unit of entropy", landauer},
      {"gibbs", "Gibbs gap is nonnegative and vanishes at the entropic distribution", gibbs},
      {"demon", "demonically possible iff possible", demon},
      {"content-shift", "entropic probability unchanged by S -> S + cQ", content_shift},
  };
  return checks;
}

}  // namespace infothermo::harness
