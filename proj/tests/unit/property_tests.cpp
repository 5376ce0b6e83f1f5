// Algebraic laws checked over hand-rolled random generators.

#include <cmath>
#include <random>

#include "doctest.h"
#include "infothermo/engine/engine.hpp"
#include "infothermo/macro/macro_model.hpp"
#include "infothermo/quantum/quantum_model.hpp"
#include "support.hpp"

using namespace infothermo;
using namespace testing;

namespace {

const macro::MacroModel m;

/// Random eidostate whose elements are macro states (so the model can judge it).
Eidostate macro_set(std::mt19937_64& rng, std::size_t max_size, std::size_t depth) {
  const auto k = std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
  std::vector<StateExpr> xs;
  for (std::size_t i = 0; i < k; ++i) xs.push_back(m.random_state(rng, depth));
  return set(xs);
}

std::vector<double> random_distribution(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> p(n);
  double total = 0;
  for (auto& x : p) total += x = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  for (auto& x : p) x /= total;
  return p;
}

}  // namespace

TEST_CASE("product cardinality") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 300; ++i) {
    const Eidostate a = random_set(rng, 6), b = random_set(rng, 6);
    CHECK((a + b).size() == a.size() * b.size());
    CHECK((a + b).elements().size() == a.size() * b.size());
  }
}

TEST_CASE("factors are prime and recombine to the original") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 300; ++i) {
    const Eidostate e = random_set(rng, 6) + (i % 3 ? random_set(rng, 3) : one(random_tree(rng, 2)));
    const auto f = prime_factorize(e);
    CHECK(recombine(f.factors, f.shape) == e);
    for (const auto& x : f.factors) CHECK_FALSE(x.is_product());
  }
}

TEST_CASE("similarity is an equivalence relation") {
  std::mt19937_64 rng(107);
  for (int i = 0; i < 300; ++i) {
    const Eidostate a = random_set(rng, 4), b = random_set(rng, 4), c = random_set(rng, 4);
    CHECK(similar(a, a));
    CHECK(similar(a + b, b + a));
    CHECK(similar((a + b) + c, a + (b + c)));
    // Symmetry and transitivity over the triple, plus the size consequence.
    const Eidostate xs[] = {a + b, b + a, (a + b) + c, c + (b + a), a, b};
    for (const auto& x : xs) {
      for (const auto& y : xs) {
        CHECK(similar(x, y) == similar(y, x));
        if (similar(x, y)) CHECK(x.size() == y.size());
        for (const auto& z : xs) {
          if (similar(x, y) && similar(y, z)) CHECK(similar(x, z));
        }
      }
    }
  }
}

TEST_CASE("copies split additively up to similarity") {
  std::mt19937_64 rng(109);
  for (int i = 0; i < 100; ++i) {
    const Eidostate a = random_set(rng, 3);
    const auto mm = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const auto nn = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    CHECK(similar(n_copies(a, mm + nn), n_copies(a, mm) + n_copies(a, nn)));
  }
}

TEST_CASE("subsets never follow from their supersets") {
  std::mt19937_64 rng(113);
  for (int i = 0; i < 200; ++i) {
    const Eidostate a = macro_set(rng, 5, 2);
    if (a.size() < 2) continue;
    for (const auto& b : subsets_of(a)) {
      if (b != a) CHECK_FALSE(m.arrow(a, b));
    }
  }
}

TEST_CASE("a common addend can be added and a singleton one removed") {
  std::mt19937_64 rng(127);
  int forward = 0;
  for (int i = 0; i < 400; ++i) {
    const Eidostate a = macro_set(rng, 3, 2), c = macro_set(rng, 2, 1);
    const Eidostate b = i % 2 ? macro_set(rng, 3, 2) : a;
    if (m.arrow(a, b)) {
      ++forward;
      CHECK(m.arrow(a + c, b + c));
    }
    const StateExpr s = m.random_state(rng, 2);
    if (m.arrow(a + one(s), b + one(s))) CHECK(m.arrow(a, b));
  }
  CHECK(forward > 100);
}

TEST_CASE("Gibbs gap is nonnegative and vanishes at the entropic distribution") {
  std::mt19937_64 rng(131);
  for (int i = 0; i < 200; ++i) {
    const Eidostate e = engine::information_state(1, m) + macro_set(rng, 4, 1);
    if (!engine::is_uniform(e, m)) continue;
    const auto elems = e.elements();
    const auto p = random_distribution(rng, elems.size());
    CHECK(engine::gibbs_gap(e, p, m).to_double() >= -1e-15);
    std::vector<double> q;
    for (const auto& a : elems) q.push_back(engine::entropic_probability(a, e, m).value().to_double());
    CHECK(std::fabs(engine::gibbs_gap(e, q, m).to_double()) <= 1e-12);
  }
}

TEST_CASE("probabilities of independent parts multiply") {
  std::mt19937_64 rng(137);
  for (int i = 0; i < 100; ++i) {
    const Eidostate e = macro_set(rng, 3, 1), f = macro_set(rng, 3, 1);
    if (!engine::is_uniform(e, m) || !engine::is_uniform(f, m)) continue;
    const StateExpr x = e.elements()[rng() % e.size()], y = f.elements()[rng() % f.size()];
    const auto joint = engine::entropic_probability(x + y, e + f, m);
    const auto px = engine::entropic_probability(x, e, m), py = engine::entropic_probability(y, f, m);
    if (joint.exact && px.exact && py.exact) {
      CHECK(*joint.exact == *px.exact * *py.exact);
    } else {
      CHECK(std::fabs(joint.value().to_double() - px.value().to_double() * py.value().to_double()) <= 1e-15);
    }
  }
}

TEST_CASE("probabilities ignore an entropy shift proportional to Q") {
  // Entropies stay inside [0, 1] after the shift, so both models are valid.
  const std::vector<Rational> lambdas{0, Rational(1, 8), Rational(1, 4), Rational(3, 8), Rational(1, 2)};
  std::mt19937_64 rng(139);
  for (const Rational c : {Rational(1, 8), Rational(1, 4), Rational(1, 2)}) {
    std::vector<macro::AtomDef> base{{"r", 0, Rational(0)}}, shifted{{"r", 0, Rational(0)}};
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      base.push_back({"a" + std::to_string(i), 1, lambdas[i]});
      shifted.push_back({"a" + std::to_string(i), 1, lambdas[i] + c});
    }
    const macro::MacroModel m1(base), m2(shifted);
    // Registered atoms only: synthetic ones would mean different things in the two models.
    auto draw = [&](std::size_t q) {
      StateExpr x = atom(1 + rng() % lambdas.size());
      for (std::size_t k = 1; k < q; ++k) x = x + atom(1 + rng() % lambdas.size());
      return rng() % 2 ? x + atom(0) : x;
    };
    for (int i = 0; i < 60; ++i) {
      const std::size_t q = 1 + rng() % 3;
      std::vector<StateExpr> xs;
      for (int k = 0; k < 4; ++k) xs.push_back(draw(q));
      const Eidostate e = set(xs);
      if (!engine::is_uniform(e, m1)) continue;
      REQUIRE(engine::is_uniform(e, m2));
      for (const auto& a : e.elements()) {
        const auto p1 = engine::entropic_probability(a, e, m1), p2 = engine::entropic_probability(a, e, m2);
        CHECK(p1.exact.has_value() == p2.exact.has_value());
        if (p1.exact && p2.exact) CHECK(*p1.exact == *p2.exact);
        CHECK(p1.to_decimal(30) == p2.to_decimal(30));
      }
    }
  }
}

TEST_CASE("quantum entropy agrees with log2 of the dimension") {
  const quantum::QuantumModel qm;
  std::mt19937_64 rng(149);
  for (int i = 0; i < 200; ++i) {
    std::vector<StateExpr> xs;
    const auto k = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int j = 0; j < k; ++j) xs.push_back(qm.random_state(rng, 2));
    const Eidostate e = set(xs);
    if (e.size_exceeds(64)) continue;
    CHECK(engine::entropy_uniform(e, qm) == ExactEntropy::log2_of(qm.q_dim(e)));
  }
}

TEST_CASE("factorwise and pairwise uniformity agree") {
  std::mt19937_64 rng(151);
  for (int i = 0; i < 300; ++i) {
    const Eidostate e = i % 2 ? macro_set(rng, 4, 2) : macro_set(rng, 3, 1) + macro_set(rng, 2, 1);
    CHECK(engine::is_uniform(e, m) == m.is_uniform(e));
  }
}
