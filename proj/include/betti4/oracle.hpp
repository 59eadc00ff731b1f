#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "betti4/betti.hpp"
#include "betti4/monomial.hpp"
#include "betti4/multidegrees.hpp"

namespace betti4 {

/// A simplicial complex on the vertex set {1,2,3,4}; faces are bitmasks.
/// The void complex has no faces at all, the irrelevant complex only the
/// empty face. They have different reduced homology.
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex() { return {}; }
  static SimplicialComplex irrelevant_complex() { return from_faces({0}); }

  /// Throws std::invalid_argument if `faces` is not closed under subsets.
  static SimplicialComplex from_faces(std::vector<VariableMask> faces);

  std::span<const VariableMask> faces() const { return faces_; }
  bool contains(VariableMask face) const;
  bool is_void() const { return faces_.empty(); }

  /// Faces of dimension d (that is, with d+1 vertices), ascending.
  std::vector<VariableMask> faces_of_dimension(int d) const;

 private:
  std::vector<VariableMask> faces_;
};

/// Base field: characteristic 0 (exact rationals) or a prime.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  /// Throws std::invalid_argument unless p is prime.
  static FieldSpec prime(unsigned p);

  unsigned characteristic() const { return characteristic_; }
  bool operator==(const FieldSpec&) const = default;

 private:
  explicit FieldSpec(unsigned c) : characteristic_(c) {}
  unsigned characteristic_;
};

/// Characteristics exercised by the verifier: 0, 2, 3, 5.
std::span<const FieldSpec> verification_fields();

/// Upper Koszul complex of M at b: squarefree tau with tau <= b and x^(b - tau) in M.
SimplicialComplex koszul_complex(const MonomialIdeal& ideal, const Monomial& b);

/// Rank of an integer matrix over the given field, computed exactly
/// (fraction-free elimination in characteristic 0, modular otherwise).
std::size_t matrix_rank(std::vector<std::vector<std::int64_t>> rows, FieldSpec field);

/// dim of reduced homology of K in dimension dim (-1 <= dim <= 3).
std::size_t reduced_homology_rank(const SimplicialComplex& complex, int dim, FieldSpec field);

/// beta_{i,b}(S/M) for i = 0..4: beta_{0,b} = [b == 1] and
/// beta_{i,b} = dim H~_{i-2}(K^b) for i >= 1.
BettiVector oracle_multigraded_at(const MonomialIdeal& ideal, const Monomial& b, FieldSpec field);

/// Betti table of S/M from reduced homology at every Taylor multidegree.
/// Throws GeneratorCapExceeded when #G > cap.
BettiTable oracle_betti(const MonomialIdeal& ideal, FieldSpec field,
                        std::size_t cap = kDefaultGeneratorCap, bool want_multigraded = false);

}  // namespace betti4
