#pragma once

#include <span>
#include <string>
#include <vector>

#include "betti4/monomial.hpp"

namespace betti4 {

/// A squarefree monomial ideal in y1..y4, one bitmask per minimal generator.
/// The unit ideal is {0}; the zero ideal has no generators.
class SquarefreeIdeal {
 public:
  SquarefreeIdeal() = default;

  /// Drops every mask that contains another one. Result is sorted ascending.
  static SquarefreeIdeal minimalize(std::vector<VariableMask> masks);

  std::span<const VariableMask> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  VariableMask operator[](std::size_t i) const { return gens_[i]; }
  bool is_zero() const { return gens_.empty(); }

  /// Union of the generator supports, i.e. lcm of the generators.
  VariableMask support() const;

  SquarefreeIdeal permuted(const VariablePermutation& perm) const;

  MonomialIdeal to_monomial_ideal() const;

  /// Generators in y-notation, e.g. "(y1y2, y3)".
  std::string to_string() const;

  bool operator==(const SquarefreeIdeal&) const = default;

 private:
  std::vector<VariableMask> gens_;
};

/// Four characters, leftmost = y1: mask 0b0001 -> "1000".
std::string to_bitstring(VariableMask mask);

/// "y1y2" style; "1" for the empty mask.
std::string mask_to_string(VariableMask mask);

}  // namespace betti4
