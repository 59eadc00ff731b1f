#include "betti4/atlas.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string_view>

#include "betti4/errors.hpp"

namespace betti4 {

namespace {

struct RawEntry {
  int id;
  std::string_view gens;  // space-separated variable-index words, "0" = constant
  std::string_view y_m;   // variable indices, "0" = 1
  int beta2;
  int beta3;
};

// y1y2 is written "12"; (y1y2, y3) is "12 3".
constexpr RawEntry kRawAtlas[kAtlasSize] = {
    {1, "0", "0", 0, 0},
    {2, "1", "1", 0, 0},
    {3, "1 2", "12", 1, 0},
    {4, "1 2 3", "123", 0, 1},
    {5, "1 2 3 4", "1234", 0, 0},
    {6, "12", "12", 0, 0},
    {7, "12 13", "123", 1, 0},
    {8, "12 14", "124", 1, 0},
    {9, "12 23", "123", 1, 0},
    {10, "12 24", "124", 1, 0},
    {11, "12 34", "1234", 1, 0},
    {12, "12 3", "123", 1, 0},
    {13, "12 4", "124", 1, 0},
    {14, "12 13 14", "1234", 0, 1},
    {15, "12 13 23", "123", 2, 0},
    {16, "12 13 24", "1234", 0, 0},
    {17, "12 13 34", "1234", 0, 0},
    {18, "12 14 23", "1234", 0, 0},
    {19, "12 14 24", "124", 2, 0},
    {20, "12 14 34", "1234", 0, 0},
    {21, "12 23 24", "1234", 0, 1},
    {22, "12 23 34", "1234", 0, 0},
    {23, "12 24 34", "1234", 0, 0},
    {24, "12 13 4", "1234", 0, 1},
    {25, "12 23 4", "1234", 0, 1},
    {26, "12 14 3", "1234", 0, 1},
    {27, "12 24 3", "1234", 0, 1},
    {28, "12 3 4", "1234", 0, 1},
    {29, "12 13 14 23", "1234", 0, 1},
    {30, "12 13 14 24", "1234", 0, 1},
    {31, "12 13 14 34", "1234", 0, 1},
    {32, "12 13 23 24", "1234", 0, 1},
    {33, "12 13 23 34", "1234", 0, 1},
    {34, "12 13 24 34", "1234", 0, 1},
    {35, "12 14 23 24", "1234", 0, 1},
    {36, "12 14 23 34", "1234", 0, 1},
    {37, "12 14 24 34", "1234", 0, 1},
    {38, "12 23 24 34", "1234", 0, 1},
    {39, "12 13 23 4", "1234", 0, 2},
    {40, "12 14 24 3", "1234", 0, 2},
    {41, "12 13 14 23 24", "1234", 0, 2},
    {42, "12 13 14 23 34", "1234", 0, 2},
    {43, "12 13 14 24 34", "1234", 0, 2},
    {44, "12 13 23 24 34", "1234", 0, 2},
    {45, "12 14 23 24 34", "1234", 0, 2},
    {46, "12 13 14 23 24 34", "1234", 0, 3},
    {47, "123", "123", 0, 0},
    {48, "123 124", "1234", 1, 0},
    {49, "123 134", "1234", 1, 0},
    {50, "123 234", "1234", 1, 0},
    {51, "123 14", "1234", 1, 0},
    {52, "123 24", "1234", 1, 0},
    {53, "123 34", "1234", 1, 0},
    {54, "123 4", "1234", 1, 0},
    {55, "123 124 134", "1234", 2, 0},
    {56, "123 124 234", "1234", 2, 0},
    {57, "123 134 234", "1234", 2, 0},
    {58, "123 124 34", "1234", 2, 0},
    {59, "123 134 24", "1234", 2, 0},
    {60, "123 234 14", "1234", 2, 0},
    {61, "123 14 24", "1234", 1, 0},
    {62, "123 14 34", "1234", 1, 0},
    {63, "123 24 34", "1234", 1, 0},
    {64, "123 124 134 234", "1234", 3, 0},
    {65, "123 14 24 34", "1234", 1, 1},
    {66, "1234", "1234", 0, 0},
};

VariableMask parse_word(std::string_view word) {
  VariableMask mask = 0;
  for (const char c : word)
    if (c >= '1' && c <= '4') mask |= VariableMask(1u << (c - '1'));
  return mask;
}

std::vector<VariableMask> parse_words(std::string_view text) {
  std::vector<VariableMask> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find(' ', pos), text.size());
    out.push_back(parse_word(text.substr(pos, end - pos)));
    pos = end + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AtlasEntry> build_atlas() {
  std::vector<AtlasEntry> entries;
  entries.reserve(kAtlasSize);
  for (const auto& raw : kRawAtlas) {
    AtlasEntry e;
    e.id = raw.id;
    e.gens = parse_words(raw.gens);
    e.y_m = parse_word(raw.y_m);
    e.beta2 = raw.beta2;
    e.beta3 = raw.beta3;
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<VariableMask> sorted_image(std::span<const VariableMask> gens,
                                       const VariablePermutation& perm) {
  std::vector<VariableMask> out;
  out.reserve(gens.size());
  for (const VariableMask m : gens) out.push_back(permute_mask(m, perm));
  std::sort(out.begin(), out.end());
  return out;
}

struct OrbitWitness {
  std::vector<VariableMask> representative;
  VariablePermutation to_representative;
};

OrbitWitness least_relabeling(std::span<const VariableMask> gens) {
  OrbitWitness best{sorted_image(gens, kIdentityPermutation), kIdentityPermutation};
  for (const auto& perm : all_permutations()) {
    auto image = sorted_image(gens, perm);
    if (image < best.representative) best = {std::move(image), perm};
  }
  return best;
}

struct AtlasIndex {
  std::map<std::vector<VariableMask>, int> verbatim;
  // Orbit representative -> (smallest id, permutation taking that entry to the representative).
  std::map<std::vector<VariableMask>, std::pair<int, VariablePermutation>> orbits;
};

const AtlasIndex& atlas_index() {
  static const AtlasIndex index = [] {
    AtlasIndex idx;
    for (const auto& e : atlas()) {
      idx.verbatim.emplace(e.gens, e.id);
      auto w = least_relabeling(e.gens);
      idx.orbits.emplace(std::move(w.representative), std::make_pair(e.id, w.to_representative));
    }
    return idx;
  }();
  return index;
}

}  // namespace

std::span<const AtlasEntry> atlas() {
  static const std::vector<AtlasEntry> entries = build_atlas();
  return entries;
}

const AtlasEntry& atlas_entry(int id) {
  if (id < 1 || id > static_cast<int>(kAtlasSize))
    throw NotInAtlas("atlas id " + std::to_string(id) + " out of range");
  return atlas()[static_cast<std::size_t>(id - 1)];
}

std::vector<VariableMask> orbit_representative(const SquarefreeIdeal& ideal) {
  return least_relabeling(ideal.generators()).representative;
}

CanonicalForm canonicalize(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero()) throw NotInAtlas("the zero ideal has no atlas class");
  const auto& index = atlas_index();
  auto witness = least_relabeling(ideal.generators());

  CanonicalForm form;
  form.canonical_gens = witness.representative;

  const std::vector<VariableMask> gens(ideal.generators().begin(), ideal.generators().end());
  if (auto it = index.verbatim.find(gens); it != index.verbatim.end()) form.listed_id = it->second;

  const auto it = index.orbits.find(witness.representative);
  if (it == index.orbits.end())
    throw NotInAtlas("no atlas class for " + ideal.to_string());
  const auto& [id, entry_to_rep] = it->second;
  form.class_id = id;
  form.permutation = compose(inverse(entry_to_rep), witness.to_representative);
  return form;
}

LayerBetti lookup_multigraded(const SquarefreeIdeal& ideal, VariableMask y_m) {
  if (ideal.is_zero() || ideal.support() != y_m) return {};
  const auto& e = atlas_entry(canonicalize(ideal).class_id);
  return {e.beta2, e.beta3};
}

std::size_t ShapeDescriptor::count_of_degree(int d) const {
  return static_cast<std::size_t>(std::count(degrees.begin(), degrees.end(), d));
}

ShapeDescriptor shape_descriptor(const SquarefreeIdeal& ideal) {
  ShapeDescriptor s;
  s.generator_count = ideal.size();
  for (const VariableMask m : ideal.generators()) s.degrees.push_back(std::popcount(unsigned(m)));
  std::sort(s.degrees.rbegin(), s.degrees.rend());
  const MonomialIdeal as_monomials = ideal.to_monomial_ideal();
  s.semidominance = semidominance(as_monomials);
  s.dominant = s.semidominance == 0;
  return s;
}

}  // namespace betti4
