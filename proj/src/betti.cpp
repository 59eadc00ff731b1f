#include "betti4/betti.hpp"

#include <algorithm>
#include <string>

#include "betti4/atlas.hpp"
#include "betti4/errors.hpp"
#include "betti4/twin.hpp"

namespace betti4 {

namespace {

struct LayerCounts {
  std::int64_t beta2 = 0;
  std::int64_t beta3 = 0;
};

// Contribution of one squarefree twin to beta_2 and beta_3. Only twins whose
// lcm equals y_m contribute.
LayerCounts formula_contribution(const TwinBundle& bundle) {
  if (!bundle.lcm_matches()) return {};
  const ShapeDescriptor shape = shape_descriptor(bundle.squarefree);
  const std::size_t n = shape.generator_count;
  const std::size_t cubics = shape.count_of_degree(3);
  const std::size_t quadratics = shape.count_of_degree(2);
  const std::size_t linears = shape.count_of_degree(1);

  LayerCounts c;
  if (n == 2) c.beta2 += 1;
  if (n == 3 && shape.semidominance == 2) c.beta2 += 1;
  if (n == 3 && shape.semidominance == 3) c.beta2 += 2;
  if (n == 4 && cubics == 1 && quadratics == 3) {
    c.beta2 += 1;
    c.beta3 += 1;
  }
  if (n == 4 && cubics == 4) c.beta2 += 3;

  if (n == 3 && shape.dominant) c.beta3 += 1;
  if (n == 4 && quadratics == 4) c.beta3 += 1;
  if (n == 4 && linears == 1 && quadratics == 3) c.beta3 += 2;
  if (n == 5) c.beta3 += 2;
  if (n == 6) c.beta3 += 3;
  return c;
}

LayerCounts formula_totals(const MonomialIdeal& ideal, std::size_t cap) {
  const auto degrees = enumerate_multidegrees(ideal, cap);
  LayerCounts total;
  for (const auto& m : degrees.degrees) {
    if (m.is_one()) continue;
    const auto c = formula_contribution(make_twin_bundle(ideal, m));
    total.beta2 += c.beta2;
    total.beta3 += c.beta3;
  }
  return total;
}

bool is_degenerate(const MonomialIdeal& ideal) { return ideal.is_zero() || ideal.is_unit(); }

}  // namespace

int projective_dimension(const BettiVector& betti) {
  for (int i = 4; i > 0; --i)
    if (betti[static_cast<std::size_t>(i)] > 0) return i;
  return 0;
}

std::int64_t euler_characteristic(const BettiVector& betti) {
  return betti[0] - betti[1] + betti[2] - betti[3] + betti[4];
}

DominantQuadrupleClass dominant_quadruples(const MonomialIdeal& ideal) {
  DominantQuadrupleClass out;
  const auto gens = ideal.generators();
  const std::size_t q = gens.size();
  if (q < 4 || is_degenerate(ideal)) return out;

  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b)
      for (std::size_t c = b + 1; c < q; ++c)
        for (std::size_t d = c + 1; d < q; ++d) {
          const std::array<Monomial, 4> set{gens[a], gens[b], gens[c], gens[d]};
          if (!is_dominant_set(set)) continue;
          const Monomial top = lcm(std::span<const Monomial>(set));
          const bool blocked = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) {
            return strongly_divides(g, top);
          });
          if (blocked) continue;
          out.quadruples.push_back(set);
          out.lcms.push_back(top);
        }
  std::sort(out.lcms.begin(), out.lcms.end());
  out.lcms.erase(std::unique(out.lcms.begin(), out.lcms.end()), out.lcms.end());
  return out;
}

std::int64_t betti4(const MonomialIdeal& ideal) {
  return static_cast<std::int64_t>(dominant_quadruples(ideal).lcms.size());
}

std::int64_t betti2_formula(const MonomialIdeal& ideal, std::size_t cap) {
  if (is_degenerate(ideal)) return 0;
  return formula_totals(ideal, cap).beta2;
}

std::int64_t betti3_formula(const MonomialIdeal& ideal, std::size_t cap) {
  if (is_degenerate(ideal)) return 0;
  return formula_totals(ideal, cap).beta3;
}

std::int64_t betti3_euler(const MonomialIdeal& ideal, std::size_t cap) {
  if (is_degenerate(ideal)) return 0;
  const std::int64_t value = 1 + betti2_formula(ideal, cap) + betti4(ideal) -
                             static_cast<std::int64_t>(ideal.size());
  if (value < 0)
    throw NegativeBetti("Euler characteristic gives beta_3 = " + std::to_string(value) + " for " +
                        ideal.to_string());
  return value;
}

BettiTable full_table(const MonomialIdeal& ideal, bool want_multigraded, std::size_t cap) {
  BettiTable table;
  if (ideal.is_zero()) {
    table.betti = {1, 0, 0, 0, 0};
    if (want_multigraded) table.multigraded = std::map<Monomial, BettiVector>{{Monomial{}, table.betti}};
    table.pd = 0;
    return table;
  }
  if (ideal.is_unit()) {
    table.betti = {1, 1, 0, 0, 0};
    if (want_multigraded) table.multigraded = std::map<Monomial, BettiVector>{{Monomial{}, table.betti}};
    table.pd = 1;
    return table;
  }

  const auto degrees = enumerate_multidegrees(ideal, cap);
  const DominantQuadrupleClass quads = dominant_quadruples(ideal);

  LayerCounts formula;
  std::map<Monomial, BettiVector> graded;
  BettiVector graded_sum{};
  for (const auto& m : degrees.degrees) {
    BettiVector row{};
    if (m.is_one()) {
      row[0] = 1;
    } else {
      const TwinBundle bundle = make_twin_bundle(ideal, m);
      const auto c = formula_contribution(bundle);
      formula.beta2 += c.beta2;
      formula.beta3 += c.beta3;
      if (want_multigraded) {
        const auto gens = ideal.generators();
        row[1] = std::binary_search(gens.begin(), gens.end(), m) ? 1 : 0;
        const LayerBetti layer = lookup_multigraded(bundle.squarefree, bundle.y_m);
        row[2] = layer.beta2;
        row[3] = layer.beta3;
        row[4] = std::binary_search(quads.lcms.begin(), quads.lcms.end(), m) ? 1 : 0;
      }
    }
    if (want_multigraded && std::any_of(row.begin(), row.end(), [](std::int64_t v) { return v != 0; })) {
      for (std::size_t i = 0; i < row.size(); ++i) graded_sum[i] += row[i];
      graded.emplace(m, row);
    }
  }

  const auto q = static_cast<std::int64_t>(ideal.size());
  const auto b4 = static_cast<std::int64_t>(quads.lcms.size());
  const std::int64_t b3_euler = 1 + formula.beta2 + b4 - q;
  if (b3_euler < 0)
    throw NegativeBetti("Euler characteristic gives beta_3 = " + std::to_string(b3_euler) +
                        " for " + ideal.to_string());
  if (b3_euler != formula.beta3)
    throw InternalInconsistency("beta_3 formula gives " + std::to_string(formula.beta3) +
                                " but Euler characteristic gives " + std::to_string(b3_euler) +
                                " for " + ideal.to_string());

  table.betti = {1, q, formula.beta2, b3_euler, b4};
  table.pd = projective_dimension(table.betti);
  if (want_multigraded) {
    if (graded_sum != table.betti)
      throw InternalInconsistency("multigraded Betti numbers do not sum to the totals for " +
                                  ideal.to_string());
    table.multigraded = std::move(graded);
  }
  return table;
}

bool pd_two_condition(const MonomialIdeal& ideal) {
  const auto gens = ideal.generators();
  const std::size_t q = gens.size();
  if (q < 2) return false;
  for (const auto& k : gens) {
    bool divides_all = true;
    for (std::size_t i = 0; i < q && divides_all; ++i)
      for (std::size_t j = i + 1; j < q; ++j)
        if (!divides(k, lcm(gens[i], gens[j]))) {
          divides_all = false;
          break;
        }
    if (divides_all) return true;
  }
  return false;
}

}  // namespace betti4
