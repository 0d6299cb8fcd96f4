#include <doctest.h>

#include "fixtures.hpp"

using namespace csa;

TEST_CASE("dual algebra transcription") {
  CHECK(dual_algebra(Bialgebra(fixtures::field().constants(), T3::cube(1))) == Algebra::zero(1));
  const Algebra u = fixtures::upper_triangular2();
  const Bialgebra bg(T3::cube(3), u.constants());
  CHECK(dual_algebra(bg) == u);
  CHECK(Bialgebra(bg.f, bg.c).f == bg.c);
  CHECK_THROWS_AS(Bialgebra(T3::cube(2), T3::cube(3)), InputError);
}

TEST_CASE("coadjoint action") {
  for (const auto& m : coadjoint_action(fixtures::diagonal(3))) CHECK(m.is_zero());
  for (const auto& m : coadjoint_action(fixtures::field())) CHECK(m.is_zero());
  const Algebra a = fixtures::upper_triangular2();
  const auto co = coadjoint_action(a);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) CHECK(co[i](r, c) == -ad_op(a, i)(c, r));
    }
  }
  CHECK_THROWS_AS(coadjoint_action(fixtures::counterexample()), Refusal);
}

TEST_CASE("direct cocycle check") {
  SplitMix64 rng(3);
  const T3 f = fixtures::random_tensor(3, rng);
  CHECK(cocycle_check_direct(commutator_tensor(fixtures::matrices2()), T3::cube(4)).pass);
  CHECK(cocycle_check_direct(T3::cube(3), f).pass);
  const Bialgebra v = fixtures::verified_bialgebra();
  CHECK(cocycle_check_direct(commutator_tensor(Algebra(v.c)), v.f).pass);
  CHECK_FALSE(cocycle_check_direct(commutator_tensor(Algebra(v.c)), fixtures::with_entry(v.f, 1, 1, 1, 1)).pass);
}

TEST_CASE("structure-constant cocycle conditions") {
  SplitMix64 rng(11);
  const T3 c = fixtures::random_tensor(3, rng);
  for (auto side : {CocycleSide::Primal, CocycleSide::Dual}) {
    CHECK(cocycle_check_constants(c, T3::cube(3), side).pass);
    CHECK(cocycle_check_constants(T3::cube(3), c, side).pass);
  }
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(3);
    const T3 a = fixtures::random_tensor(n, rng, -1, 1, 40);
    const T3 b = fixtures::random_tensor(n, rng, -1, 1, 40);
    CHECK(cocycle_check_constants(a, b, CocycleSide::Primal).pass ==
          cocycle_check_direct(commutator_tensor(Algebra(a)), b).pass);
    CHECK(cocycle_check_constants(a, b, CocycleSide::Dual).pass ==
          cocycle_check_direct(commutator_tensor(Algebra(b)), a).pass);
  }
}

TEST_CASE("bialgebra check") {
  CHECK(check_bialgebra(Bialgebra(fixtures::matrices2().constants(), T3::cube(4))).verdict());
  CHECK(check_bialgebra(Bialgebra(T3::cube(2), T3::cube(2))).verdict());
  const Bialgebra v = fixtures::verified_bialgebra();
  CHECK(check_bialgebra(v).verdict());
  const Report r = check_bialgebra(Bialgebra(v.c, fixtures::with_entry(v.f, 1, 1, 1, 1)));
  CHECK_FALSE(r.verdict());
  CHECK_FALSE(r.passed("primal_cocycle"));
  CHECK_THROWS_AS(check_bialgebra(Bialgebra(T3::cube(3), T3::cube(3)), 2), InputError);
}

TEST_CASE("standard matched pair") {
  const CsMatchedPair p = standard_cs_matched_pair(Bialgebra(fixtures::field().constants(), T3::cube(1)));
  CHECK(p.la == std::vector<Mat>{Mat{{1}}});
  CHECK(p.ra == std::vector<Mat>{Mat{{1}}});
  CHECK(p.lb == std::vector<Mat>{Mat{{0}}});
  CHECK(p.rb == std::vector<Mat>{Mat{{0}}});
  CHECK(is_cs_matched_pair(standard_cs_matched_pair(fixtures::verified_bialgebra())));
  CHECK_THROWS_AS(standard_cs_matched_pair(Bialgebra(fixtures::counterexample().constants(), T3::cube(2))),
                  Refusal);
}

TEST_CASE("equivalence report") {
  SearchSpec s;
  s.dim = 2;
  s.filters.center_symmetric = true;
  for (const auto& a : enumerate_structures(s)) {
    CHECK(equivalence_report(Bialgebra(a.constants(), T3::cube(2))).all_true());
  }
  CHECK(equivalence_report(fixtures::verified_bialgebra()).all_true());

  const Bialgebra v = fixtures::verified_bialgebra();
  const EquivalenceReport mutated = equivalence_report(Bialgebra(v.c, fixtures::with_entry(v.f, 1, 1, 1, 1)));
  CHECK_FALSE(mutated.bialgebra);
  CHECK_FALSE(mutated.cs_matched_pair);
  CHECK_FALSE(mutated.manin_triple);
}

TEST_CASE("equivalence report disagrees on the field paired with itself") {
  // The sub-adjacent Lie algebra is abelian, so both cocycle conditions and
  // the Lie matched pair hold, while the bicrossed product e.(e*) = e + e* is
  // not center-symmetric: ass(e, e, e*) = -e but ass(e*, e, e) = e.
  const Algebra f = fixtures::field();
  const EquivalenceReport e = equivalence_report(Bialgebra(f.constants(), f.constants()));
  CHECK(e.bialgebra);
  CHECK(e.lie_matched_pair);
  CHECK_FALSE(e.cs_matched_pair);
  CHECK_FALSE(e.manin_triple);
  CHECK_FALSE(e.consistent());
}
