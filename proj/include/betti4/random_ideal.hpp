#pragma once

#include <cstdint>
#include <random>

#include "betti4/monomial.hpp"

namespace betti4 {

/// Uniform integer in [0, bound) from the raw engine output, by rejection.
/// Unlike std::uniform_int_distribution the stream is the same on every
/// standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Random model: generator count uniform in [1, max_generators], each
/// exponent uniform in [0, max_exponent], the constant monomial resampled,
/// then minimalized.
struct RandomIdealModel {
  std::size_t max_generators = 8;
  Exponent max_exponent = 4;

  MonomialIdeal sample(std::mt19937_64& rng) const;
};

/// A dominant ideal with exactly `generators` (1..4) minimal generators.
MonomialIdeal sample_dominant_ideal(std::mt19937_64& rng, std::size_t generators, Exponent max_exponent);

}  // namespace betti4
