// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
// All comparisons are exact integer equalities; the only tolerances are the
// wall-clock bounds below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "betti4/atlas.hpp"
#include "betti4/betti.hpp"
#include "betti4/errors.hpp"
#include "betti4/multidegrees.hpp"
#include "betti4/oracle.hpp"
#include "betti4/parse.hpp"
#include "betti4/random_ideal.hpp"
#include "betti4/twin.hpp"

using namespace betti4;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock bounds, in milliseconds. Zero means unbounded.
constexpr double kGoldenBoundMs = 1.0;
constexpr double kBetaFourBoundMs = 1.0;
constexpr double kEightGeneratorBoundMs = 100.0;
constexpr double kAtlasRegenerationBoundMs = 1000.0;
constexpr double kFormulaOracleBoundMs = 60000.0;
constexpr double kCharacteristicBoundMs = 60000.0;
constexpr double kCompletenessBoundMs = 10000.0;

// Seeds and sample sizes.
constexpr std::uint64_t kSeed = 20240601;
constexpr std::size_t kFormulaOracleSamples = 1000;
constexpr std::size_t kCharacteristicSamples = 200;
constexpr std::size_t kConsistencySamples = 10000;
constexpr std::size_t kPdTwoSamples = 3000;
constexpr std::size_t kTaylorSamples = 200;
constexpr std::size_t kTransferSamples = 500;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  const char* name;
  double bound_ms;
  std::function<Outcome()> run;
};

Outcome expect(bool ok, std::string detail) { return {ok, std::move(detail)}; }

std::string show(const BettiVector& b) {
  std::ostringstream os;
  os << '(' << b[0] << ',' << b[1] << ',' << b[2] << ',' << b[3] << ',' << b[4] << ')';
  return os.str();
}

Outcome golden_example() {
  const auto t = full_table(parse_ideal("x1^2*x2^2, x1^2*x2*x3, x2*x3*x4^2, x3^2*x4^2"));
  return expect(t.betti == BettiVector{1, 4, 3, 0, 0}, "table " + show(t.betti));
}

Outcome beta_four_golden() {
  const auto b4 = betti4::betti4(parse_ideal("x1^2, x2^2, x3^2, x1*x4^2, x2*x4^2"));
  return expect(b4 == 1, "beta4 = " + std::to_string(b4));
}

Outcome eight_generators() {
  const auto t = full_table(parse_ideal("x1^3, x1^2*x2, x1*x2^2, x2^3, x3^3, x3^2*x4, x3*x4^2, x4^3"));
  return expect(t.betti[2] == 22 && t.betti[3] == 24,
                "beta2 = " + std::to_string(t.betti[2]) + ", beta3 = " + std::to_string(t.betti[3]));
}

Outcome atlas_regeneration() {
  std::size_t equal = 0;
  std::string bad;
  for (const auto& e : atlas()) {
    const auto row = oracle_multigraded_at(e.ideal().to_monomial_ideal(), Monomial::from_mask(e.y_m),
                                           FieldSpec::rationals());
    equal += row[2] == e.beta2;
    equal += row[3] == e.beta3;
    if (row[2] != e.beta2 || row[3] != e.beta3) bad += " #" + std::to_string(e.id);
  }
  return expect(equal == 2 * kAtlasSize, std::to_string(equal) + "/132 equalities" + bad);
}

Outcome formula_vs_oracle() {
  std::mt19937_64 rng(kSeed);
  const RandomIdealModel model{8, 4};
  for (std::size_t i = 0; i < kFormulaOracleSamples; ++i) {
    const auto m = model.sample(rng);
    const auto formula = full_table(m);
    const auto oracle = oracle_betti(m, FieldSpec::rationals());
    if (formula.betti != oracle.betti)
      return expect(false, "sample " + std::to_string(i) + " " + m.to_string() + ": formula " +
                               show(formula.betti) + ", oracle " + show(oracle.betti));
  }
  return expect(true, std::to_string(kFormulaOracleSamples) + " ideals agree");
}

Outcome characteristic_independence() {
  std::vector<MonomialIdeal> ideals;
  for (const auto& e : atlas()) ideals.push_back(e.ideal().to_monomial_ideal());
  std::mt19937_64 rng(kSeed + 1);
  const RandomIdealModel model{8, 4};
  for (std::size_t i = 0; i < kCharacteristicSamples; ++i) ideals.push_back(model.sample(rng));
  for (const auto& m : ideals) {
    const auto base = oracle_betti(m, FieldSpec::rationals(), kDefaultGeneratorCap, true);
    for (const auto& f : verification_fields())
      if (oracle_betti(m, f, kDefaultGeneratorCap, true) != base)
        return expect(false, m.to_string() + " differs in characteristic " + std::to_string(f.characteristic()));
  }
  return expect(true, std::to_string(ideals.size()) + " ideals, characteristics 0/2/3/5");
}

Outcome formula_consistency() {
  std::mt19937_64 rng(kSeed + 2);
  const RandomIdealModel model{8, 4};
  for (std::size_t i = 0; i < kConsistencySamples; ++i) {
    const auto m = model.sample(rng);
    const auto direct = betti3_formula(m);
    const auto euler = betti3_euler(m);
    const auto t = full_table(m);
    if (direct != euler || euler_characteristic(t.betti) != 0)
      return expect(false, m.to_string() + ": formula " + std::to_string(direct) + ", euler " +
                               std::to_string(euler));
  }
  return expect(true, std::to_string(kConsistencySamples) + " ideals");
}

Outcome pd_two() {
  const auto example = parse_ideal(
      "x1^2*x2^2*x3, x1^2*x2^2*x4, x1*x3^2*x4^2, x2*x3^2*x4^2, x1*x2*x3*x4");
  const auto t = full_table(example);
  if (!pd_two_condition(example) || t.betti[3] != 0 || t.betti[4] != 0)
    return expect(false, "pd-two example gives " + show(t.betti));

  const auto converse = parse_ideal("x1^2*x2^2, x1^2*x2*x3, x2*x3*x4^2, x3^2*x4^2");
  if (pd_two_condition(converse) || full_table(converse).pd != 2)
    return expect(false, "converse example is not a counterexample");

  std::mt19937_64 rng(kSeed + 3);
  const RandomIdealModel model{6, 3};
  std::size_t hits = 0, nontrivial = 0;
  for (std::size_t i = 0; i < kPdTwoSamples; ++i) {
    const auto m = model.sample(rng);
    if (!pd_two_condition(m)) continue;
    ++hits;
    nontrivial += m.size() >= 3;
    if (oracle_betti(m, FieldSpec::rationals()).pd != 2)
      return expect(false, m.to_string() + " satisfies the condition but pd != 2");
  }
  return expect(nontrivial > 0, std::to_string(hits) + " random ideals satisfy the condition (" +
                                    std::to_string(nontrivial) + " with >= 3 generators), all pd 2");
}

std::int64_t total(const BettiVector& b) {
  std::int64_t s = 0;
  for (const auto v : b) s += v;
  return s;
}

Outcome taylor_minimality() {
  std::mt19937_64 rng(kSeed + 4);
  // A dominant ideal in four variables has at most four generators, so q <= 4 here.
  for (std::size_t i = 0; i < kTaylorSamples; ++i) {
    const std::size_t q = 1 + uniform_below(rng, kVariableCount);
    const auto m = sample_dominant_ideal(rng, q, 6);
    const auto sum = total(oracle_betti(m, FieldSpec::rationals()).betti);
    if (!is_dominant(m) || sum != (std::int64_t{1} << m.size()))
      return expect(false, "dominant " + m.to_string() + " has sum " + std::to_string(sum));
  }
  const RandomIdealModel model{8, 4};
  std::size_t nondominant = 0;
  while (nondominant < kTaylorSamples) {
    const auto m = model.sample(rng);
    if (is_dominant(m)) continue;
    ++nondominant;
    const auto sum = total(oracle_betti(m, FieldSpec::rationals()).betti);
    if (sum >= (std::int64_t{1} << m.size()))
      return expect(false, "nondominant " + m.to_string() + " has sum " + std::to_string(sum));
  }
  return expect(true, "200 dominant (q <= 4), 200 nondominant");
}

Outcome divisibility_transfer() {
  std::mt19937_64 rng(kSeed + 5);
  const RandomIdealModel model{8, 4};
  std::size_t implications = 0;
  for (std::size_t i = 0; i < kTransferSamples; ++i) {
    const auto m = model.sample(rng);
    const auto degrees = enumerate_multidegrees(m).degrees;
    const auto degree = degrees[uniform_below(rng, degrees.size())];
    const auto restricted = restrict_ideal(m, degree);
    const auto gens = restricted.generators();
    const auto images = squarefree_images(twin_images(gens, degree), degree);
    for (std::size_t a = 0; a < gens.size(); ++a)
      for (std::size_t b = 0; b < gens.size(); ++b)
        for (std::size_t k = 0; k < gens.size(); ++k) {
          if (a == b || !divides(gens[k], lcm(gens[a], gens[b]))) continue;
          ++implications;
          if ((images[k] & ~(images[a] | images[b])) != 0)
            return expect(false, "transfer fails for " + m.to_string() + " at " + degree.to_string());
        }
  }
  return expect(true, std::to_string(kTransferSamples) + " pairs, " + std::to_string(implications) +
                          " divisibilities transferred");
}

Outcome atlas_completeness() {
  std::size_t count = 0;
  for (std::uint32_t family = 1; family < (1u << 16); ++family) {
    std::vector<VariableMask> masks;
    for (unsigned s = 0; s < 16; ++s)
      if (family & (1u << s)) masks.push_back(VariableMask(s));
    bool antichain = true;
    for (const auto x : masks)
      for (const auto y : masks)
        if (x != y && (x & ~y) == 0) antichain = false;
    if (!antichain) continue;
    ++count;
    try {
      const int id = canonicalize(SquarefreeIdeal::minimalize(masks)).class_id;
      if (id < 1 || id > static_cast<int>(kAtlasSize)) return expect(false, "class id out of range");
    } catch (const NotInAtlas& e) {
      return expect(false, e.what());
    }
  }
  return expect(count == 167, std::to_string(count) + " antichains canonicalized");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden example table (1,4,3,0,0)", kGoldenBoundMs, golden_example},
      {2, "beta4 golden", kBetaFourBoundMs, beta_four_golden},
      {3, "eight-generator ideal beta2 = 22, beta3 = 24", kEightGeneratorBoundMs, eight_generators},
      {4, "atlas regeneration over Q", kAtlasRegenerationBoundMs, atlas_regeneration},
      {5, "formula tables equal oracle tables", kFormulaOracleBoundMs, formula_vs_oracle},
      {6, "characteristic independence", kCharacteristicBoundMs, characteristic_independence},
      {7, "beta3 formula equals Euler route", 0, formula_consistency},
      {8, "pd-two condition", 0, pd_two},
      {9, "Taylor minimality iff dominant", 0, taylor_minimality},
      {10, "divisibility transfer to squarefree twins", 0, divisibility_transfer},
      {11, "atlas completeness", kCompletenessBoundMs, atlas_completeness},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (c.bound_ms > 0 && ms >= c.bound_ms) {
      o.ok = false;
      o.detail += "; over the time bound";
    }
    failures += !o.ok;
    std::string bound = c.bound_ms > 0 ? " (bound " + std::to_string(static_cast<long>(c.bound_ms)) + " ms)" : "";
    std::printf("%s  %2d  %-46s %10.3f ms%s  %s\n", o.ok ? "PASS" : "FAIL", c.number, c.name, ms,
                bound.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
