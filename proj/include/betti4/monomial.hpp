#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace betti4 {

inline constexpr std::size_t kVariableCount = 4;

using Exponent = std::uint32_t;

/// Hard library limit on any single exponent. Front ends apply a tighter cap.
inline constexpr Exponent kExponentLimit = Exponent{1} << 16;

/// Subset of {x1..x4} as a bitmask; bit i stands for variable i+1.
using VariableMask = std::uint8_t;

inline constexpr VariableMask kAllVariables = 0b1111;

/// A relabeling of the variables: variable i is sent to variable `perm[i]`.
using VariablePermutation = std::array<std::uint8_t, kVariableCount>;

inline constexpr VariablePermutation kIdentityPermutation{0, 1, 2, 3};

/// All 24 permutations of the four variables, identity first.
std::span<const VariablePermutation> all_permutations();

VariablePermutation inverse(const VariablePermutation& perm);

/// (outer ∘ inner)(i) = outer[inner[i]].
VariablePermutation compose(const VariablePermutation& outer, const VariablePermutation& inner);

VariableMask permute_mask(VariableMask mask, const VariablePermutation& perm);

/// A monomial x1^e1 x2^e2 x3^e3 x4^e4. Ordered lexicographically on the
/// exponent tuple.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(const std::array<Exponent, kVariableCount>& exps) : exps_(exps) {}
  constexpr Monomial(Exponent e1, Exponent e2, Exponent e3, Exponent e4) : exps_{e1, e2, e3, e4} {}

  /// The squarefree monomial whose support is `mask`.
  static constexpr Monomial from_mask(VariableMask mask) {
    Monomial m;
    for (std::size_t i = 0; i < kVariableCount; ++i) m.exps_[i] = (mask >> i) & 1u;
    return m;
  }

  constexpr Exponent operator[](std::size_t i) const { return exps_[i]; }
  constexpr const std::array<Exponent, kVariableCount>& exponents() const { return exps_; }

  constexpr bool is_one() const { return exps_ == std::array<Exponent, kVariableCount>{}; }

  constexpr Exponent degree() const { return exps_[0] + exps_[1] + exps_[2] + exps_[3]; }

  constexpr VariableMask support() const {
    VariableMask mask = 0;
    for (std::size_t i = 0; i < kVariableCount; ++i)
      if (exps_[i] != 0) mask |= VariableMask(1u << i);
    return mask;
  }

  Monomial permuted(const VariablePermutation& perm) const;

  /// Text form, e.g. "x1^2*x3" or "1".
  std::string to_string() const;

  constexpr auto operator<=>(const Monomial&) const = default;

 private:
  std::array<Exponent, kVariableCount> exps_{};
};

constexpr Monomial lcm(const Monomial& a, const Monomial& b) {
  std::array<Exponent, kVariableCount> e{};
  for (std::size_t i = 0; i < kVariableCount; ++i) e[i] = a[i] > b[i] ? a[i] : b[i];
  return Monomial(e);
}

constexpr bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kVariableCount; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// a strongly divides b when every variable of a's support has a strictly
/// smaller exponent in a than in b.
constexpr bool strongly_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kVariableCount; ++i)
    if (a[i] != 0 && a[i] >= b[i]) return false;
  return true;
}

Monomial lcm(std::span<const Monomial> monomials);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// A monomial ideal held by its minimal generating set, sorted lexicographically.
class MonomialIdeal {
 public:
  /// The zero ideal.
  MonomialIdeal() = default;

  /// Reduces `gens` to the minimal generating set of the ideal they generate.
  static MonomialIdeal minimalize(std::vector<Monomial> gens);

  static MonomialIdeal unit() { return minimalize({Monomial{}}); }

  std::span<const Monomial> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  const Monomial& operator[](std::size_t i) const { return gens_[i]; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const;

  /// lcm of all generators (1 for the zero ideal).
  Monomial lcm() const { return betti4::lcm(std::span<const Monomial>(gens_)); }

  MonomialIdeal permuted(const VariablePermutation& perm) const;

  /// Generators joined with ", ", or "0" for the zero ideal.
  std::string to_string() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::vector<Monomial> gens_;
};

/// Same as MonomialIdeal::minimalize.
inline MonomialIdeal minimalize(std::vector<Monomial> gens) {
  return MonomialIdeal::minimalize(std::move(gens));
}

/// dominant[i] is true iff gens[i] has a variable whose exponent is strictly
/// larger than in every other element of `gens`.
std::vector<bool> dominance_flags(std::span<const Monomial> gens);

std::vector<Monomial> dominant_generators(const MonomialIdeal& ideal);

/// Number of nondominant generators; zero exactly for dominant ideals.
std::size_t semidominance(const MonomialIdeal& ideal);

bool is_dominant_set(std::span<const Monomial> gens);

inline bool is_dominant(const MonomialIdeal& ideal) { return semidominance(ideal) == 0; }

}  // namespace betti4
