#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "betti4/monomial.hpp"
#include "betti4/multidegrees.hpp"

namespace betti4 {

using BettiVector = std::array<std::int64_t, 5>;

/// Betti numbers of S/M in homological degrees 0..4, optionally split by
/// multidegree. The multigraded map holds only multidegrees with a nonzero entry.
struct BettiTable {
  BettiVector betti{};
  int pd = 0;
  std::optional<std::map<Monomial, BettiVector>> multigraded;

  bool operator==(const BettiTable&) const = default;
};

/// Largest i with betti[i] > 0.
int projective_dimension(const BettiVector& betti);

/// alternating sum b0 - b1 + b2 - b3 + b4.
std::int64_t euler_characteristic(const BettiVector& betti);

/// The 4-element dominant subsets D of G such that no generator strongly
/// divides lcm(D), and the distinct lcms they produce.
struct DominantQuadrupleClass {
  std::vector<std::array<Monomial, 4>> quadruples;
  std::vector<Monomial> lcms;  // ascending, duplicate-free
};

DominantQuadrupleClass dominant_quadruples(const MonomialIdeal& ideal);

std::int64_t betti4(const MonomialIdeal& ideal);

/// Closed formula for beta_2 over the squarefree twins of all Taylor multidegrees.
std::int64_t betti2_formula(const MonomialIdeal& ideal, std::size_t cap = kDefaultGeneratorCap);

/// Closed formula for beta_3, counted independently of beta_2.
std::int64_t betti3_formula(const MonomialIdeal& ideal, std::size_t cap = kDefaultGeneratorCap);

/// beta_3 from the Euler characteristic: 1 + beta_2 + beta_4 - #G.
/// Throws NegativeBetti if that comes out negative.
std::int64_t betti3_euler(const MonomialIdeal& ideal, std::size_t cap = kDefaultGeneratorCap);

/// Full table: b0 = 1, b1 = #G, b2 by formula, b4 by dominant quadruples,
/// b3 by Euler, cross-checked against the direct beta_3 formula.
///
/// The zero ideal gets (1,0,0,0,0) and the unit ideal (1,1,0,0,0).
/// Throws InternalInconsistency when the two beta_3 routes disagree or the
/// multigraded map does not sum to the totals.
BettiTable full_table(const MonomialIdeal& ideal, bool want_multigraded = false,
                      std::size_t cap = kDefaultGeneratorCap);

/// True iff some generator divides lcm(m_i, m_j) for every pair i != j, which
/// forces pd(S/M) = 2. Ideals with fewer than two generators give false.
bool pd_two_condition(const MonomialIdeal& ideal);

}  // namespace betti4
