#include "permpoly/experiment.hpp"

#include <chrono>
#include <random>

#include "permpoly/lift.hpp"
#include "permpoly/permutation.hpp"
#include "permpoly/transposition.hpp"

namespace permpoly {

namespace {

std::uint32_t draw(std::mt19937_64& rng, std::uint32_t bound) {
  // Plain modulo keeps the stream identical across standard libraries.
  return static_cast<std::uint32_t>(rng() % bound);
}

Polynomial random_polynomial(const Ring& ring, std::uint32_t max_degree, std::mt19937_64& rng) {
  std::vector<ElemIndex> coeffs(max_degree + 1);
  for (auto& c : coeffs) c = draw(rng, ring.size());
  return Polynomial(ring, std::move(coeffs));
}

}  // namespace

std::vector<Polynomial> unit_valued_polynomials(const Ring& ring, std::uint32_t max_degree) {
  std::vector<Polynomial> result;
  std::vector<ElemIndex> coeffs(max_degree + 1, 0);
  while (true) {
    Polynomial g(ring, coeffs);
    if (is_unit_valued(g)) result.push_back(std::move(g));
    // Odometer with the constant term as the slowest digit.
    std::size_t i = coeffs.size();
    while (i > 0 && ++coeffs[i - 1] == ring.size()) coeffs[--i] = 0;
    if (i == 0) break;
  }
  return result;
}

ExperimentReport question_experiment(const Ring& ring, const SamplingConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  if (ring.is_field()) {
    throw Error(ErrorCode::NotLocalRing, ring.name() + " has no nonzero maximal ideal");
  }
  if (ring.residue_order() <= 2) {
    throw Error(ErrorCode::ResidueFieldTooSmall,
                "the transposition polynomial needs a residue field with q > 2");
  }
  if (ring.size() > config.bound) {
    throw Error(ErrorCode::RingTooLarge, ring.name() + " exceeds the enumeration bound");
  }

  ExperimentReport report;
  report.ring = ring.name();
  report.sampling = config;

  TableSet distinct(ring.size());
  std::vector<PermutationTable> generators;
  auto record = [&](ElemIndex a, ElemIndex b, const Polynomial& g, const Polynomial& l) {
    Polynomial h = corollary_h(ring.element(a), ring.element(b), g, l);
    const PermutationTable perm = PermutationTable::of(h);
    const Ring field = ring.residue_field();
    const Polynomial hbar = residue_poly(h);
    SweepRow row{a, b, g, l, std::move(h), perm.sign(), perm.cycle_type(), false};
    row.residue_is_transposition =
        function_table(hbar) == transposition_table(field, ring.residue(a), ring.residue(b));
    if (distinct.insert(perm.image())) {
      generators.push_back(perm);
      if (row.sign < 0) ++report.odd_count;
    }
    report.rows.push_back(std::move(row));
  };

  if (config.mode == SamplingMode::Exhaustive) {
    const std::vector<Polynomial> gs = unit_valued_polynomials(ring, config.g_max_degree);
    std::vector<Polynomial> ls;
    for (const auto& coeffs : config.l_grid) {
      std::vector<ElemIndex> raw;
      for (std::int64_t c : coeffs) raw.push_back(ring.from_int(c));
      ls.emplace_back(ring, std::move(raw));
    }
    for (ElemIndex a = 0; a < ring.size(); ++a) {
      for (ElemIndex b = 0; b < ring.size(); ++b) {
        if (!ring.is_unit(ring.sub(b, a))) continue;
        for (const auto& g : gs) {
          for (const auto& l : ls) record(a, b, g, l);
        }
      }
    }
  } else {
    std::mt19937_64 rng(config.seed);
    for (std::uint32_t s = 0; s < config.samples; ++s) {
      ElemIndex a = 0, b = 0;
      do {
        a = draw(rng, ring.size());
        b = draw(rng, ring.size());
      } while (!ring.is_unit(ring.sub(b, a)));
      Polynomial g = random_polynomial(ring, config.g_max_degree, rng);
      while (!is_unit_valued(g)) g = random_polynomial(ring, config.g_max_degree, rng);
      const Polynomial l = random_polynomial(ring, config.l_max_degree, rng);
      record(a, b, g, l);
    }
  }

  report.candidates = report.rows.size();
  report.a_size = distinct.size();
  report.generated_order = generated_subgroup(ring, generators).order();
  report.group_order = polynomial_permutation_group(ring, config.bound).order();
  report.equals = report.generated_order == report.group_order;
  report.index = report.generated_order != 0 && report.group_order % report.generated_order == 0
                     ? report.group_order / report.generated_order
                     : 0;
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace permpoly
