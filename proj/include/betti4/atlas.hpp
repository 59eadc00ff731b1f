#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "betti4/monomial.hpp"
#include "betti4/squarefree.hpp"

namespace betti4 {

inline constexpr std::size_t kAtlasSize = 66;

/// One of the 66 squarefree ideals in four variables, with its second and
/// third multigraded Betti numbers at y_m = lcm(gens).
struct AtlasEntry {
  int id = 0;                       // 1..66
  std::vector<VariableMask> gens;   // sorted ascending; {0} for the unit ideal
  VariableMask y_m = 0;
  int beta2 = 0;
  int beta3 = 0;

  SquarefreeIdeal ideal() const { return SquarefreeIdeal::minimalize(gens); }
};

/// Entries ordered by id; entry i has id i+1.
std::span<const AtlasEntry> atlas();

const AtlasEntry& atlas_entry(int id);

struct CanonicalForm {
  /// Smallest atlas id in the S4-orbit of the input; constant on orbits.
  int class_id = 0;
  /// Id of the atlas entry equal to the input as written, or 0 if the input
  /// is not listed verbatim.
  int listed_id = 0;
  /// Relabeling that sends the input ideal onto the generators of the atlas
  /// entry `class_id` exactly.
  VariablePermutation permutation = kIdentityPermutation;
  /// Lexicographically least sorted mask list over the S4-orbit of the input.
  std::vector<VariableMask> canonical_gens;
};

/// Lexicographically least sorted generator list over all 24 relabelings.
std::vector<VariableMask> orbit_representative(const SquarefreeIdeal& ideal);

/// Finds the atlas class of a squarefree ideal by minimizing over all 24
/// relabelings. Throws NotInAtlas for the zero ideal or corrupted data.
CanonicalForm canonicalize(const SquarefreeIdeal& ideal);

struct LayerBetti {
  int beta2 = 0;
  int beta3 = 0;
  bool operator==(const LayerBetti&) const = default;
};

/// (beta2, beta3) of T/I at multidegree y_m: zero unless lcm(I) == y_m.
LayerBetti lookup_multigraded(const SquarefreeIdeal& ideal, VariableMask y_m);

/// The features the beta2/beta3 closed formulas branch on.
struct ShapeDescriptor {
  std::size_t generator_count = 0;
  std::vector<int> degrees;  // descending
  std::size_t semidominance = 0;
  bool dominant = false;

  std::size_t count_of_degree(int d) const;
  bool operator==(const ShapeDescriptor&) const = default;
};

ShapeDescriptor shape_descriptor(const SquarefreeIdeal& ideal);

}  // namespace betti4
