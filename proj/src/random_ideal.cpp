#include "betti4/random_ideal.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace betti4 {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

MonomialIdeal RandomIdealModel::sample(std::mt19937_64& rng) const {
  if (max_generators == 0 || max_exponent == 0)
    throw std::invalid_argument("random model needs positive bounds");
  const std::size_t count = 1 + static_cast<std::size_t>(uniform_below(rng, max_generators));
  std::vector<Monomial> gens;
  gens.reserve(count);
  while (gens.size() < count) {
    std::array<Exponent, kVariableCount> e{};
    for (auto& x : e) x = static_cast<Exponent>(uniform_below(rng, std::uint64_t{max_exponent} + 1));
    const Monomial m(e);
    if (!m.is_one()) gens.push_back(m);
  }
  return MonomialIdeal::minimalize(std::move(gens));
}

MonomialIdeal sample_dominant_ideal(std::mt19937_64& rng, std::size_t generators, Exponent max_exponent) {
  if (generators == 0 || generators > kVariableCount)
    throw std::invalid_argument("dominant ideals in four variables have 1..4 generators");
  VariablePermutation vars = kIdentityPermutation;
  for (std::size_t i = kVariableCount - 1; i > 0; --i)
    std::swap(vars[i], vars[uniform_below(rng, i + 1)]);

  std::vector<std::array<Exponent, kVariableCount>> e(generators);
  for (auto& row : e)
    for (auto& x : row) x = static_cast<Exponent>(uniform_below(rng, std::uint64_t{max_exponent} + 1));
  // Generator i is made the strict maximum in variable vars[i].
  for (std::size_t i = 0; i < generators; ++i) {
    const std::size_t v = vars[i];
    Exponent others = 0;
    for (std::size_t j = 0; j < generators; ++j)
      if (j != i) others = std::max(others, e[j][v]);
    e[i][v] = others + 1 + static_cast<Exponent>(uniform_below(rng, 2));
  }
  std::vector<Monomial> gens(e.begin(), e.end());
  return MonomialIdeal::minimalize(std::move(gens));
}

}  // namespace betti4
