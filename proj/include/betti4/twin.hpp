#pragma once

#include <span>
#include <vector>

#include "betti4/monomial.hpp"
#include "betti4/squarefree.hpp"

namespace betti4 {

/// The ideal generated by the generators of `ideal` dividing `m`.
/// Zero ideal when none divides m.
MonomialIdeal restrict_ideal(const MonomialIdeal& ideal, const Monomial& m);

/// Generator-wise twin images, in input order and before minimalization:
/// exponent j of a generator is kept at m's exponent if it attains it, else
/// zeroed. Throws RestrictionViolation if a generator does not divide m.
std::vector<Monomial> twin_images(std::span<const Monomial> gens, const Monomial& m);

/// The twin ideal of a restriction M_m at m, minimalized.
MonomialIdeal twin(const MonomialIdeal& restricted, const Monomial& m);

/// Squarefree images of twin generators, in input order, under
/// x_j^{m_j} -> y_j. Throws IllFormedTwin if some generator uses variable j
/// with a nonzero exponent other than m_j.
std::vector<VariableMask> squarefree_images(std::span<const Monomial> twin_gens, const Monomial& m);

struct SquarefreeTwin {
  SquarefreeIdeal ideal;
  VariableMask y_m = 0;  // support of m
};

SquarefreeTwin squarefree_twin(const MonomialIdeal& twin_ideal, const Monomial& m);

/// Everything derived from one Taylor multidegree.
struct TwinBundle {
  Monomial m;
  MonomialIdeal restricted;
  MonomialIdeal twin;
  SquarefreeIdeal squarefree;
  VariableMask y_m = 0;

  /// lcm(G''_m) == y_m; when false every Betti number at m vanishes.
  bool lcm_matches() const { return !squarefree.is_zero() && squarefree.support() == y_m; }
};

/// m = 1 yields the zero ideal throughout and y_m = 0.
TwinBundle make_twin_bundle(const MonomialIdeal& ideal, const Monomial& m);

}  // namespace betti4
