#include "betti4/squarefree.hpp"

#include <algorithm>

namespace betti4 {

namespace {

bool is_subset(VariableMask a, VariableMask b) { return (a & ~b) == 0; }

}  // namespace

SquarefreeIdeal SquarefreeIdeal::minimalize(std::vector<VariableMask> masks) {
  for (auto& m : masks) m &= kAllVariables;
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  SquarefreeIdeal ideal;
  for (const VariableMask m : masks) {
    const bool redundant = std::any_of(masks.begin(), masks.end(), [&](VariableMask other) {
      return other != m && is_subset(other, m);
    });
    if (!redundant) ideal.gens_.push_back(m);
  }
  return ideal;
}

VariableMask SquarefreeIdeal::support() const {
  VariableMask s = 0;
  for (const VariableMask m : gens_) s |= m;
  return s;
}

SquarefreeIdeal SquarefreeIdeal::permuted(const VariablePermutation& perm) const {
  SquarefreeIdeal out;
  out.gens_.reserve(gens_.size());
  for (const VariableMask m : gens_) out.gens_.push_back(permute_mask(m, perm));
  std::sort(out.gens_.begin(), out.gens_.end());
  return out;
}

MonomialIdeal SquarefreeIdeal::to_monomial_ideal() const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const VariableMask m : gens_) gens.push_back(Monomial::from_mask(m));
  return MonomialIdeal::minimalize(std::move(gens));
}

std::string SquarefreeIdeal::to_string() const {
  if (gens_.empty()) return "0";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += mask_to_string(gens_[i]);
  }
  return out + ")";
}

std::string to_bitstring(VariableMask mask) {
  std::string s(kVariableCount, '0');
  for (std::size_t i = 0; i < kVariableCount; ++i)
    if (mask & (1u << i)) s[i] = '1';
  return s;
}

std::string mask_to_string(VariableMask mask) {
  if (mask == 0) return "1";
  std::string s;
  for (std::size_t i = 0; i < kVariableCount; ++i)
    if (mask & (1u << i)) {
      s += 'y';
      s += char('1' + i);
    }
  return s;
}

}  // namespace betti4
