#include "betti4/monomial.hpp"

#include <algorithm>

namespace betti4 {

namespace {

std::array<VariablePermutation, 24> make_permutations() {
  std::array<VariablePermutation, 24> perms{};
  VariablePermutation p = kIdentityPermutation;
  std::size_t k = 0;
  do {
    perms[k++] = p;
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

}  // namespace

std::span<const VariablePermutation> all_permutations() {
  static const std::array<VariablePermutation, 24> perms = make_permutations();
  return perms;
}

VariablePermutation inverse(const VariablePermutation& perm) {
  VariablePermutation inv{};
  for (std::uint8_t i = 0; i < kVariableCount; ++i) inv[perm[i]] = i;
  return inv;
}

VariablePermutation compose(const VariablePermutation& outer, const VariablePermutation& inner) {
  VariablePermutation out{};
  for (std::size_t i = 0; i < kVariableCount; ++i) out[i] = outer[inner[i]];
  return out;
}

VariableMask permute_mask(VariableMask mask, const VariablePermutation& perm) {
  VariableMask out = 0;
  for (std::size_t i = 0; i < kVariableCount; ++i)
    if (mask & (1u << i)) out |= VariableMask(1u << perm[i]);
  return out;
}

Monomial Monomial::permuted(const VariablePermutation& perm) const {
  std::array<Exponent, kVariableCount> e{};
  for (std::size_t i = 0; i < kVariableCount; ++i) e[perm[i]] = exps_[i];
  return Monomial(e);
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < kVariableCount; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += char('1' + i);
    if (exps_[i] > 1) {
      out += '^';
      out += std::to_string(exps_[i]);
    }
  }
  return out;
}

Monomial lcm(std::span<const Monomial> monomials) {
  Monomial acc;
  for (const auto& m : monomials) acc = lcm(acc, m);
  return acc;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < kVariableCount; ++i) {
    h ^= m[i];
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

MonomialIdeal MonomialIdeal::minimalize(std::vector<Monomial> gens) {
  // Sorting by degree first means a divisor always precedes its multiples.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  MonomialIdeal ideal;
  for (const auto& g : gens) {
    const bool redundant = std::any_of(ideal.gens_.begin(), ideal.gens_.end(),
                                       [&](const Monomial& kept) { return divides(kept, g); });
    if (!redundant) ideal.gens_.push_back(g);
  }
  std::sort(ideal.gens_.begin(), ideal.gens_.end());
  return ideal;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

MonomialIdeal MonomialIdeal::permuted(const VariablePermutation& perm) const {
  MonomialIdeal out;
  out.gens_.reserve(gens_.size());
  for (const auto& g : gens_) out.gens_.push_back(g.permuted(perm));
  std::sort(out.gens_.begin(), out.gens_.end());
  return out;
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "0";
  std::string out;
  for (const auto& g : gens_) {
    if (!out.empty()) out += ", ";
    out += g.to_string();
  }
  return out;
}

std::vector<bool> dominance_flags(std::span<const Monomial> gens) {
  const std::size_t n = gens.size();
  std::vector<bool> flags(n, false);
  for (std::size_t var = 0; var < kVariableCount; ++var) {
    // A variable makes at most one generator dominant: the unique strict maximum.
    std::size_t arg = n;
    Exponent best = 0;
    bool unique = false;
    for (std::size_t i = 0; i < n; ++i) {
      const Exponent e = gens[i][var];
      if (arg == n || e > best) {
        arg = i;
        best = e;
        unique = true;
      } else if (e == best) {
        unique = false;
      }
    }
    if (arg != n && unique) flags[arg] = true;
  }
  return flags;
}

std::vector<Monomial> dominant_generators(const MonomialIdeal& ideal) {
  const auto flags = dominance_flags(ideal.generators());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < ideal.size(); ++i)
    if (flags[i]) out.push_back(ideal[i]);
  return out;
}

std::size_t semidominance(const MonomialIdeal& ideal) {
  const auto flags = dominance_flags(ideal.generators());
  return static_cast<std::size_t>(std::count(flags.begin(), flags.end(), false));
}

bool is_dominant_set(std::span<const Monomial> gens) {
  const auto flags = dominance_flags(gens);
  return std::all_of(flags.begin(), flags.end(), [](bool f) { return f; });
}

}  // namespace betti4
