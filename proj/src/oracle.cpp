#include "betti4/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace betti4 {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::size_t rank_fraction_free(std::vector<std::vector<std::int64_t>> a) {
  // Bareiss elimination: every intermediate value is a minor of the input,
  // so integer division below is exact.
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  std::int64_t prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a.front().size();
  for (auto& row : a)
    for (auto& v : row) v = ((v % p) + p) % p;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::int64_t inv = mod_pow(a[rank][col], p - 2, p);
    for (auto& v : a[rank]) v = v * inv % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const std::int64_t f = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] = ((a[r][c] - f * a[rank][c]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Matrix of the boundary map C_dim -> C_{dim-1}, one row per (dim-1)-face.
std::vector<std::vector<std::int64_t>> boundary_matrix(const SimplicialComplex& k, int dim) {
  const auto sources = k.faces_of_dimension(dim);
  const auto targets = k.faces_of_dimension(dim - 1);
  std::vector<std::vector<std::int64_t>> m(targets.size(), std::vector<std::int64_t>(sources.size(), 0));
  for (std::size_t c = 0; c < sources.size(); ++c) {
    const VariableMask face = sources[c];
    int position = 0;
    for (std::size_t v = 0; v < kVariableCount; ++v) {
      if (!(face & (1u << v))) continue;
      const VariableMask facet = VariableMask(face & ~(1u << v));
      const auto it = std::lower_bound(targets.begin(), targets.end(), facet);
      const auto r = static_cast<std::size_t>(it - targets.begin());
      m[r][c] = (position % 2 == 0) ? 1 : -1;
      ++position;
    }
  }
  return m;
}

std::size_t boundary_rank(const SimplicialComplex& k, int dim, FieldSpec field) {
  if (dim < 0 || dim > 3) return 0;  // C_{-2} = 0 and C_4 = 0
  const auto m = boundary_matrix(k, dim);
  if (m.empty() || m.front().empty()) return 0;
  return matrix_rank(m, field);
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(std::vector<VariableMask> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (const VariableMask f : faces) {
    if (f & ~kAllVariables) throw std::invalid_argument("face uses a vertex outside {1,2,3,4}");
    for (std::size_t v = 0; v < kVariableCount; ++v)
      if ((f & (1u << v)) &&
          !std::binary_search(faces.begin(), faces.end(), VariableMask(f & ~(1u << v))))
        throw std::invalid_argument("face set is not closed under taking subsets");
  }
  SimplicialComplex k;
  k.faces_ = std::move(faces);
  return k;
}

bool SimplicialComplex::contains(VariableMask face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face);
}

std::vector<VariableMask> SimplicialComplex::faces_of_dimension(int d) const {
  std::vector<VariableMask> out;
  for (const VariableMask f : faces_)
    if (std::popcount(unsigned(f)) == d + 1) out.push_back(f);
  return out;
}

FieldSpec FieldSpec::prime(unsigned p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return FieldSpec(p);
}

std::span<const FieldSpec> verification_fields() {
  static const std::array<FieldSpec, 4> fields{FieldSpec::rationals(), FieldSpec::prime(2),
                                               FieldSpec::prime(3), FieldSpec::prime(5)};
  return fields;
}

SimplicialComplex koszul_complex(const MonomialIdeal& ideal, const Monomial& b) {
  std::vector<VariableMask> faces;
  const VariableMask allowed = b.support();
  for (unsigned tau = 0; tau <= kAllVariables; ++tau) {
    if ((tau & ~unsigned(allowed)) != 0) continue;
    std::array<Exponent, kVariableCount> e = b.exponents();
    for (std::size_t i = 0; i < kVariableCount; ++i)
      if (tau & (1u << i)) e[i] -= 1;
    if (ideal.contains(Monomial(e))) faces.push_back(VariableMask(tau));
  }
  // Membership is closed downward: a smaller tau leaves a larger multiple.
  return SimplicialComplex::from_faces(std::move(faces));
}

std::size_t matrix_rank(std::vector<std::vector<std::int64_t>> rows, FieldSpec field) {
  if (field.characteristic() == 0) return rank_fraction_free(std::move(rows));
  return rank_mod_p(std::move(rows), field.characteristic());
}

std::size_t reduced_homology_rank(const SimplicialComplex& complex, int dim, FieldSpec field) {
  if (dim < -1 || dim > 3) throw std::invalid_argument("homology dimension out of range");
  const std::size_t chains = complex.faces_of_dimension(dim).size();
  const std::size_t outgoing = boundary_rank(complex, dim, field);
  const std::size_t incoming = boundary_rank(complex, dim + 1, field);
  return chains - outgoing - incoming;
}

BettiVector oracle_multigraded_at(const MonomialIdeal& ideal, const Monomial& b, FieldSpec field) {
  BettiVector row{};
  row[0] = b.is_one() ? 1 : 0;
  const SimplicialComplex k = koszul_complex(ideal, b);
  if (k.is_void()) return row;
  for (int i = 1; i <= 4; ++i)
    row[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(reduced_homology_rank(k, i - 2, field));
  return row;
}

BettiTable oracle_betti(const MonomialIdeal& ideal, FieldSpec field, std::size_t cap,
                        bool want_multigraded) {
  const auto degrees = enumerate_multidegrees(ideal, cap);
  BettiTable table;
  std::map<Monomial, BettiVector> graded;
  for (const auto& b : degrees.degrees) {
    const BettiVector row = oracle_multigraded_at(ideal, b, field);
    for (std::size_t i = 0; i < row.size(); ++i) table.betti[i] += row[i];
    if (want_multigraded && std::any_of(row.begin(), row.end(), [](std::int64_t v) { return v != 0; }))
      graded.emplace(b, row);
  }
  table.pd = projective_dimension(table.betti);
  if (want_multigraded) table.multigraded = std::move(graded);
  return table;
}

}  // namespace betti4
