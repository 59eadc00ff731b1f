#include "betti4/multidegrees.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "betti4/errors.hpp"

namespace betti4 {

bool MultidegreeSet::contains(const Monomial& m) const {
  return std::binary_search(degrees.begin(), degrees.end(), m);
}

void check_generator_cap(const MonomialIdeal& ideal, std::size_t cap) {
  if (ideal.size() > cap)
    throw GeneratorCapExceeded("ideal has " + std::to_string(ideal.size()) +
                               " minimal generators; cap is " + std::to_string(cap));
}

MultidegreeSet enumerate_multidegrees(const MonomialIdeal& ideal, std::size_t cap) {
  check_generator_cap(ideal, cap);

  // Closing the set under lcm with one generator at a time visits every
  // subset lcm, but only ever stores the distinct ones.
  std::unordered_set<Monomial, MonomialHash> seen{Monomial{}};
  std::vector<Monomial> current{Monomial{}};
  for (const auto& g : ideal.generators()) {
    const std::size_t n = current.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Monomial next = lcm(current[i], g);
      if (seen.insert(next).second) current.push_back(next);
    }
  }

  MultidegreeSet out;
  out.degrees = std::move(current);
  std::sort(out.degrees.begin(), out.degrees.end());
  out.subset_count = std::uint64_t{1} << ideal.size();
  return out;
}

}  // namespace betti4
