#include "betti4/twin.hpp"

#include "betti4/errors.hpp"

namespace betti4 {

MonomialIdeal restrict_ideal(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> kept;
  for (const auto& g : ideal.generators())
    if (divides(g, m)) kept.push_back(g);
  return MonomialIdeal::minimalize(std::move(kept));
}

std::vector<Monomial> twin_images(std::span<const Monomial> gens, const Monomial& m) {
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    if (!divides(g, m))
      throw RestrictionViolation(g.to_string() + " does not divide " + m.to_string());
    std::array<Exponent, kVariableCount> e{};
    for (std::size_t j = 0; j < kVariableCount; ++j) e[j] = g[j] == m[j] ? m[j] : 0;
    out.emplace_back(e);
  }
  return out;
}

MonomialIdeal twin(const MonomialIdeal& restricted, const Monomial& m) {
  return MonomialIdeal::minimalize(twin_images(restricted.generators(), m));
}

std::vector<VariableMask> squarefree_images(std::span<const Monomial> twin_gens, const Monomial& m) {
  std::vector<VariableMask> out;
  out.reserve(twin_gens.size());
  for (const auto& g : twin_gens) {
    for (std::size_t j = 0; j < kVariableCount; ++j)
      if (g[j] != 0 && g[j] != m[j])
        throw IllFormedTwin("variable x" + std::to_string(j + 1) + " appears in " + g.to_string() +
                            " with exponent " + std::to_string(g[j]) + ", expected " +
                            std::to_string(m[j]));
    out.push_back(g.support());
  }
  return out;
}

SquarefreeTwin squarefree_twin(const MonomialIdeal& twin_ideal, const Monomial& m) {
  SquarefreeTwin out;
  out.ideal = SquarefreeIdeal::minimalize(squarefree_images(twin_ideal.generators(), m));
  out.y_m = m.support();
  return out;
}

TwinBundle make_twin_bundle(const MonomialIdeal& ideal, const Monomial& m) {
  TwinBundle b;
  b.m = m;
  b.restricted = restrict_ideal(ideal, m);
  b.twin = twin(b.restricted, m);
  auto sq = squarefree_twin(b.twin, m);
  b.squarefree = std::move(sq.ideal);
  b.y_m = sq.y_m;
  return b;
}

}  // namespace betti4
