#include <random>
#include <set>

#include "betti4/errors.hpp"
#include "betti4/multidegrees.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace betti4;
using betti4::test::ideal;
using betti4::test::mono;

namespace {

// Straight 2^q walk over subsets, independent of the incremental closure.
std::set<Monomial> subset_lcms(const MonomialIdeal& m) {
  std::set<Monomial> out;
  const std::size_t q = m.size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << q); ++s) {
    Monomial acc;
    for (std::size_t i = 0; i < q; ++i)
      if (s & (std::uint64_t{1} << i)) acc = lcm(acc, m[i]);
    out.insert(acc);
  }
  return out;
}

}  // namespace

TEST_CASE("worked example has 11 distinct multidegrees") {
  const auto set = enumerate_multidegrees(ideal(test::kWorkedExample));
  CHECK(set.subset_count == 16);
  const std::vector<std::string> expected = {
      "1", "x1^2*x2^2", "x1^2*x2*x3", "x2*x3*x4^2", "x3^2*x4^2", "x1^2*x2^2*x3",
      "x1^2*x2^2*x3*x4^2", "x1^2*x2^2*x3^2*x4^2", "x1^2*x2*x3*x4^2", "x1^2*x2*x3^2*x4^2",
      "x2*x3^2*x4^2"};
  REQUIRE(set.degrees.size() == expected.size());
  for (const auto& text : expected) CHECK(set.contains(mono(text)));
}

TEST_CASE("small multidegree sets") {
  CHECK(enumerate_multidegrees(ideal("x1")).degrees == std::vector<Monomial>{Monomial{}, mono("x1")});
  const auto all = enumerate_multidegrees(ideal("x1, x2, x3, x4"));
  CHECK(all.degrees.size() == 16);
  for (unsigned mask = 0; mask < 16; ++mask) CHECK(all.contains(Monomial::from_mask(VariableMask(mask))));
  CHECK(enumerate_multidegrees(MonomialIdeal{}).degrees == std::vector<Monomial>{Monomial{}});
}

TEST_CASE("generator cap is enforced") {
  const auto m = ideal(test::kEightGenerators);
  CHECK_THROWS_AS(enumerate_multidegrees(m, 7), GeneratorCapExceeded);
  CHECK_NOTHROW(enumerate_multidegrees(m, 8));
}

TEST_CASE("property: matches the brute-force subset walk") {
  std::mt19937_64 rng(21);
  const RandomIdealModel model{10, 4};
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = model.sample(rng);
    const auto set = enumerate_multidegrees(m);
    const auto brute = subset_lcms(m);
    CHECK(std::set<Monomial>(set.degrees.begin(), set.degrees.end()) == brute);
    CHECK(set.degrees.size() == brute.size());
    CHECK(set.degrees.size() <= set.subset_count);
    CHECK(set.contains(Monomial{}));
    CHECK(set.contains(m.lcm()));
    for (const auto& d : set.degrees) CHECK(divides(d, m.lcm()));
  }
}

TEST_CASE("property: dominant ideals have 2^q distinct subset lcms") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t q = 1 + uniform_below(rng, 4);
    const auto m = sample_dominant_ideal(rng, q, 4);
    CHECK(enumerate_multidegrees(m).degrees.size() == (std::size_t{1} << m.size()));
  }
}

TEST_CASE("property: permutation equivariance") {
  std::mt19937_64 rng(23);
  const RandomIdealModel model{8, 3};
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = model.sample(rng);
    const auto& p = test::random_permutation(rng);
    auto expected = enumerate_multidegrees(m).degrees;
    for (auto& d : expected) d = d.permuted(p);
    std::sort(expected.begin(), expected.end());
    CHECK(enumerate_multidegrees(m.permuted(p)).degrees == expected);
  }
}
