#include <random>

#include "betti4/betti.hpp"
#include "betti4/errors.hpp"
#include "betti4/oracle.hpp"
#include "betti4/random_ideal.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace betti4;
using betti4::test::ideal;
using betti4::test::mono;

TEST_CASE("worked example") {
  const auto t = full_table(ideal(test::kWorkedExample));
  CHECK(t.betti == BettiVector{1, 4, 3, 0, 0});
  CHECK(t.pd == 2);
  CHECK(betti2_formula(ideal(test::kWorkedExample)) == 3);
  CHECK(betti3_formula(ideal(test::kWorkedExample)) == 0);
  // pd is 2 without the pairwise-lcm condition holding.
  CHECK_FALSE(pd_two_condition(ideal(test::kWorkedExample)));
}

TEST_CASE("beta4 by dominant quadruples") {
  const auto m = ideal(test::kBetaFourExample);
  const auto q = dominant_quadruples(m);
  REQUIRE(q.lcms.size() == 1);
  CHECK(q.lcms.front() == mono("x1^2*x2^2*x3^2*x4^2"));
  CHECK(betti4::betti4(m) == 1);

  CHECK(betti4::betti4(ideal("x1, x2, x3, x4")) == 1);
  CHECK(betti4::betti4(ideal("x1, x2, x3")) == 0);
  CHECK(betti4::betti4(ideal(test::kEightGenerators)) == 9);
  // x1x2x3x4 strongly divides the lcm of the four squares, but each triple of
  // squares together with x1x2x3x4 is a surviving dominant quadruple.
  CHECK(betti4::betti4(ideal("x1^2, x2^2, x3^2, x4^2, x1*x2*x3*x4")) == 4);
  CHECK(betti4::betti4(ideal("x1^2, x2^2, x3^2, x4^2, x1*x2*x3*x4")) ==
        oracle_betti(ideal("x1^2, x2^2, x3^2, x4^2, x1*x2*x3*x4"), FieldSpec::rationals()).betti[4]);
}

TEST_CASE("eight generators") {
  const auto t = full_table(ideal(test::kEightGenerators));
  CHECK(t.betti[2] == 22);
  CHECK(t.betti[3] == 24);
  CHECK(t.betti[4] == 9);
  CHECK(t.pd == 4);
  CHECK(t == oracle_betti(ideal(test::kEightGenerators), FieldSpec::rationals()));
}

TEST_CASE("pd-two condition") {
  const auto m = ideal(test::kPdTwoExample);
  CHECK(pd_two_condition(m));
  const auto t = full_table(m);
  CHECK(t.betti[3] == 0);
  CHECK(t.betti[4] == 0);
  CHECK(t.pd == 2);

  CHECK(pd_two_condition(ideal("x1, x2")));
  CHECK_FALSE(pd_two_condition(ideal(test::kBetaFourExample)));
  CHECK_FALSE(pd_two_condition(ideal("x1^3")));
}

TEST_CASE("euler route to beta3") {
  CHECK(betti3_euler(ideal(test::kWorkedExample)) == 0);
  CHECK(betti3_euler(ideal(test::kEightGenerators)) == 24);
  CHECK(betti3_euler(ideal("x1, x2, x3, x4")) == 4);
  CHECK(betti3_euler(ideal(test::kBetaFourExample)) == betti3_formula(ideal(test::kBetaFourExample)));
}

TEST_CASE("koszul and degenerate ideals") {
  CHECK(full_table(ideal("x1, x2, x3, x4")).betti == BettiVector{1, 4, 6, 4, 1});
  CHECK(full_table(ideal("x1^5, x2^2, x3^7, x4")).betti == BettiVector{1, 4, 6, 4, 1});
  auto zero = full_table(MonomialIdeal{});
  CHECK(zero.betti == BettiVector{1, 0, 0, 0, 0});
  CHECK(zero.pd == 0);
  auto unit = full_table(MonomialIdeal::unit());
  CHECK(unit.betti == BettiVector{1, 1, 0, 0, 0});
  CHECK(unit.pd == 1);
  CHECK(full_table(ideal("x2^3*x4")).betti == BettiVector{1, 1, 0, 0, 0});
  CHECK(projective_dimension({1, 3, 2, 0, 0}) == 2);
  CHECK(euler_characteristic({1, 4, 6, 4, 1}) == 0);
}

TEST_CASE("generator cap") {
  std::vector<Monomial> gens;
  for (Exponent i = 0; i <= 20; ++i) gens.emplace_back(i, 20 - i, 0, 0);
  const auto m = MonomialIdeal::minimalize(gens);
  REQUIRE(m.size() == 21);
  CHECK_THROWS_AS(full_table(m), GeneratorCapExceeded);
  CHECK(full_table(m, false, 21).betti == BettiVector{1, 21, 20, 0, 0});
}

TEST_CASE("multigraded table of the worked example") {
  const auto t = full_table(ideal(test::kWorkedExample), true);
  REQUIRE(t.multigraded);
  const auto& mg = *t.multigraded;
  CHECK(mg.at(Monomial{}) == BettiVector{1, 0, 0, 0, 0});
  CHECK(mg.at(mono("x1^2*x2^2")) == BettiVector{0, 1, 0, 0, 0});
  CHECK(mg.at(mono("x1^2*x2^2*x3")) == BettiVector{0, 0, 1, 0, 0});
  CHECK(mg.at(mono("x1^2*x2*x3*x4^2")) == BettiVector{0, 0, 1, 0, 0});
  CHECK(mg.at(mono("x2*x3^2*x4^2")) == BettiVector{0, 0, 1, 0, 0});
  CHECK(mg.size() == 1 + 4 + 3);
}

TEST_CASE("property: formulas agree with the oracle in every characteristic") {
  std::mt19937_64 rng(20261014);
  const RandomIdealModel model{7, 3};
  for (int trial = 0; trial < 150; ++trial) {
    const auto m = model.sample(rng);
    const auto t = full_table(m, true);
    for (const auto& f : verification_fields()) {
      const auto o = oracle_betti(m, f, kDefaultGeneratorCap, true);
      CHECK_MESSAGE(t == o, m.to_string() << " char " << f.characteristic());
    }
  }
}

TEST_CASE("property: relabeling variables does not change the table") {
  std::mt19937_64 rng(7);
  const RandomIdealModel model;
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = model.sample(rng);
    const auto& p = test::random_permutation(rng);
    CHECK(full_table(m).betti == full_table(m.permuted(p)).betti);
  }
}

TEST_CASE("property: dominant ideals have the Taylor resolution") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t q = 1 + uniform_below(rng, 4);
    const auto m = sample_dominant_ideal(rng, q, 6);
    REQUIRE(is_dominant(m));
    const auto t = full_table(m);
    std::int64_t total = 0;
    for (const auto b : t.betti) total += b;
    CHECK(total == (std::int64_t{1} << q));
    // Binomial pattern of the Taylor complex.
    std::int64_t binom = 1;
    for (std::size_t i = 0; i <= q; ++i) {
      CHECK(t.betti[i] == binom);
      binom = binom * static_cast<std::int64_t>(q - i) / static_cast<std::int64_t>(i + 1);
    }
  }
}

TEST_CASE("property: pd-two condition forces pd two") {
  std::mt19937_64 rng(5);
  const RandomIdealModel model{6, 3};
  int hits = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto m = model.sample(rng);
    if (!pd_two_condition(m)) continue;
    ++hits;
    CHECK(oracle_betti(m, FieldSpec::rationals()).pd == 2);
    CHECK(full_table(m).pd == 2);
  }
  CHECK(hits > 0);
}

TEST_CASE("property: beta3 above beta2 only at projective dimension four") {
  std::mt19937_64 rng(3);
  const RandomIdealModel model;
  for (int trial = 0; trial < 500; ++trial) {
    const auto t = full_table(model.sample(rng));
    if (t.betti[3] > t.betti[2]) CHECK(t.pd == 4);
    CHECK(euler_characteristic(t.betti) == 0);
  }
}
