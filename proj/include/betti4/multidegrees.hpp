#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "betti4/monomial.hpp"

namespace betti4 {

inline constexpr std::size_t kDefaultGeneratorCap = 20;

/// Distinct multidegrees of the Taylor resolution of S/M: the lcms of all
/// subsets of the minimal generators (the empty subset gives 1).
struct MultidegreeSet {
  std::vector<Monomial> degrees;  // duplicate-free, ascending
  std::uint64_t subset_count = 1; // 2^#G

  bool contains(const Monomial& m) const;
};

/// Throws GeneratorCapExceeded when #G > cap.
MultidegreeSet enumerate_multidegrees(const MonomialIdeal& ideal,
                                      std::size_t cap = kDefaultGeneratorCap);

/// Throws GeneratorCapExceeded when #G > cap; shared by every 2^q walk.
void check_generator_cap(const MonomialIdeal& ideal, std::size_t cap);

}  // namespace betti4
