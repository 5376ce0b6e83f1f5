#include <random>

#include "doctest.h"
#include "infothermo/core/errors.hpp"
#include "infothermo/engine/engine.hpp"
#include "infothermo/macro/macro_model.hpp"
#include "support.hpp"

using namespace infothermo;
using namespace infothermo::macro;
using namespace testing;

namespace {

const MacroModel m;
const StateExpr r = atom(0), s0 = atom(1), sq = atom(2), sh = atom(3), s1 = atom(5);
const Eidostate Ib = set({r, r + r});

}  // namespace

TEST_CASE("default registry") {
  CHECK(m.atom_name(AtomId{0}) == "r");
  CHECK(m.find("s1/2") == AtomId{3});
  CHECK(m.record_atom() == AtomId{0});
  CHECK(m.mechanical_atom() == AtomId{1});
  CHECK(m.s_atom(Rational(1)) == AtomId{5});
  // A lambda outside the registry gets a synthetic atom with the same semantics.
  const StateExpr s17 = StateExpr::atom(m.s_atom(Rational(1, 7)));
  CHECK(m.s_value(s17) == Rational(1, 7));
  CHECK(m.q_value(s17) == 1);
  CHECK_THROWS_AS(m.atom(AtomId{40}), UnknownAtom);
}

TEST_CASE("atom validation") {
  CHECK_THROWS_AS(validate(AtomDef{"x", 1, Rational(3, 2)}), DomainError);
  CHECK_THROWS_AS(validate(AtomDef{"x", 0, Rational(1, 2)}), DomainError);
  CHECK_THROWS_AS(validate(AtomDef{"x", -1, Rational(0)}), DomainError);
  CHECK_THROWS_AS(validate(AtomDef{"x", 1, Rational(1, 65537)}), DomainError);
  CHECK_NOTHROW(validate(AtomDef{"x", 1, Rational(1, 65536)}));
}

TEST_CASE("Q and S are additive") {
  CHECK(m.q_value(r) == 0);
  CHECK(m.q_value(s1 + s0) == 2);
  CHECK(m.q_value(r + r) == 0);
  CHECK(m.s_value(s1 + s0) == 1);
  CHECK(m.s_value(sh + sh) == 1);
  CHECK(m.s_value(r) == 0);
}

TEST_CASE("uniformity and NU-decomposition") {
  CHECK(m.is_uniform(set({s0, s1})));
  CHECK_FALSE(m.is_uniform(set({r, s0})));
  CHECK(m.is_uniform(one(s1 + (r + sh))));

  CHECK(m.nu_decompose(set({s0, s1})).non_uniform.empty());
  const auto mixed = m.nu_decompose(set({r, s0}));
  CHECK(mixed.uniform.empty());
  CHECK(mixed.non_uniform == std::vector<Eidostate>{set({r, s0})});
  const auto both = m.nu_decompose(set({r, s0}) + set({s0, s1}));
  CHECK(both.non_uniform.size() == 1);
  CHECK(both.uniform.size() == 1);
}

TEST_CASE("exact entropy of uniform eidostates") {
  CHECK(m.entropy_exact(Ib) == ExactEntropy::single(1));
  CHECK(m.entropy_exact(set({s0, s1})) == ExactEntropy::of({0, 1}));
  CHECK(std::fabs(m.entropy_exact(set({s0, s1})).to_double() - 1.584962500721156) < 1e-14);
  CHECK(m.entropy_exact(one(sh + s1)) == ExactEntropy::single(Rational(3, 2)));
  CHECK_THROWS_AS(m.entropy_exact(set({r, s0})), DomainError);
}

TEST_CASE("arrow criteria") {
  CHECK(m.arrow(one(r), Ib));
  CHECK_FALSE(m.arrow(Ib, one(r)));
  CHECK(m.arrow(s0 + s1, sh + sh));
  CHECK(m.arrow(sh + sh, s0 + s1));
  CHECK_FALSE(m.arrow(one(r), one(s1)));
  CHECK_FALSE(m.arrow(one(s1), one(r)));
  CHECK(m.arrow(s0, s1));
  CHECK_FALSE(m.arrow(s1, s0));
  // Records come and go freely.
  CHECK(m.arrow(s1, s1 + r));
  CHECK(m.arrow(s1 + r, s1));
  // The non-uniform part must be carried along unchanged.
  const Eidostate n = set({r, s0});
  CHECK(m.arrow(n + one(s0), n + one(s1)));
  CHECK_FALSE(m.arrow(n + one(s0), set({r, s1}) + one(s0)));
}

TEST_CASE("records and mechanical states") {
  CHECK(m.is_record(r + r));
  CHECK_FALSE(m.is_record(r + s0));
  CHECK(m.is_mechanical(s0 + s0));
  CHECK_FALSE(m.is_mechanical(s1));
  CHECK_FALSE(m.is_record(s1));
  CHECK(m.make_bit_state() == Ib);
  for (const auto& x : m.mechanical_family(6)) CHECK(m.is_mechanical(x));
}

TEST_CASE("state equivalence construction") {
  SUBCASE("bit state") {
    const auto eq = m.state_equivalence(Ib);
    REQUIRE(eq);
    CHECK(eq->e == r);
    CHECK(eq->x == s0 + s0);
    CHECK(eq->y == sh + sh);
    CHECK_FALSE(eq->approximate);
    CHECK(m.arrow(eq->x, eq->y));
    CHECK(m.arrow(Ib + one(eq->x), one(eq->e + eq->y)));
    CHECK(m.arrow(one(eq->e + eq->y), Ib + one(eq->x)));
  }
  SUBCASE("singleton") {
    const auto eq = m.state_equivalence(one(s0));
    REQUIRE(eq);
    CHECK(m.arrow(one(s0 + eq->x), one(eq->e + eq->y)));
    CHECK(m.arrow(one(eq->e + eq->y), one(s0 + eq->x)));
  }
  SUBCASE("irrational entropy is flagged") {
    const Eidostate e = set({s0, s1});
    const auto eq = m.state_equivalence(e);
    REQUIRE(eq);
    CHECK(eq->approximate);
    CHECK(eq->tolerance > 0);
    // y is rounded up, so the forward direction holds and the reverse misses by < tolerance.
    CHECK(m.arrow(e + one(eq->x), one(eq->e + eq->y)));
    const double gap = m.s_value(eq->e + eq->y).get_d() - m.entropy_exact(e + one(eq->x)).to_double();
    CHECK(gap >= 0);
    CHECK(gap <= eq->tolerance);
  }
}

TEST_CASE("possibility between states is decided by Q, then S") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 400; ++i) {
    const StateExpr a = m.random_state(rng, 3);
    const StateExpr b = i % 2 ? m.random_state(rng, 3) : m.random_state_like(rng, a, 3);
    const bool possible = m.arrow(a, b) || m.arrow(b, a);
    CHECK(possible == (m.q_value(a) == m.q_value(b)));
    if (m.q_value(a) == m.q_value(b)) CHECK(m.arrow(a, b) == (m.s_value(a) <= m.s_value(b)));
  }
}

TEST_CASE("generators respect their contracts") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const StateExpr a = m.random_state(rng, 4);
    CHECK(a.depth() <= 4);
    const StateExpr b = m.random_state_like(rng, a, 4);
    CHECK(m.q_value(b) == m.q_value(a));
    CHECK(m.is_record(m.random_record(rng, 3)));
  }
}

TEST_CASE("mutations change the arrow") {
  const MacroModel drop = m.with_mutation(Mutation::DropQCriterion);
  CHECK(drop.arrow(r, s1));
  const MacroModel flip = m.with_mutation(Mutation::FlipEntropyCriterion);
  CHECK(flip.arrow(s1, s0));
  const MacroModel brk = m.with_mutation(Mutation::BreakRecordFreeness);
  CHECK_FALSE(brk.arrow(s1, s1 + r));
  CHECK(to_string(Mutation::DropQCriterion) == "drop-q-criterion");
}
