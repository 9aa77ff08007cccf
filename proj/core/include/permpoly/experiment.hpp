#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permpoly/group.hpp"
#include "permpoly/polynomial.hpp"
#include "permpoly/ring.hpp"

namespace permpoly {

enum class SamplingMode { Exhaustive, Random };

/// Grid of (a, b, g, l) over which lifted transposition polynomials are built.
struct SamplingConfig {
  SamplingMode mode = SamplingMode::Exhaustive;
  /// g ranges over polynomials of degree <= this bound that are unit-valued
  /// on the residue system.
  std::uint32_t g_max_degree = 1;
  /// Exhaustive mode: l ranges over these integer coefficient lists.
  std::vector<std::vector<std::int64_t>> l_grid = {{}, {1}, {0, 1}, {0, 0, 1}};
  /// Random mode: number of sampled (a, b, g, l) and the degree bound of l.
  std::uint32_t samples = 2000;
  std::uint32_t l_max_degree = 2;
  std::uint64_t seed = 0;
  /// Enumeration bound forwarded to the P(R) computation.
  std::uint32_t bound = kDefaultEnumerationBound;
};

/// One constructed polynomial of the sweep and the permutation it induces.
struct SweepRow {
  ElemIndex a = 0;
  ElemIndex b = 0;
  Polynomial g;
  Polynomial l;
  Polynomial h;
  int sign = 0;
  std::vector<std::uint32_t> cycle_type;
  bool residue_is_transposition = false;
};

struct ExperimentReport {
  std::string ring;
  SamplingConfig sampling;
  std::size_t candidates = 0;   ///< polynomials built
  std::size_t a_size = 0;       ///< |A|, distinct permutations
  std::size_t odd_count = 0;    ///< members of A with sign -1
  std::size_t generated_order = 0;
  std::size_t group_order = 0;
  bool equals = false;
  /// |P(R)| / |<A>|; zero if the orders do not divide.
  std::size_t index = 0;
  double runtime_ms = 0.0;
  std::vector<SweepRow> rows;
};

/// Unit-valued polynomials of degree <= max_degree over R, in lexicographic
/// order of their coefficient indices.
std::vector<Polynomial> unit_valued_polynomials(const Ring& ring, std::uint32_t max_degree);

/// Builds A from the configured grid, its generated subgroup and P(R), and
/// reports how they compare. Throws ResidueFieldTooSmall, NotLocalRing,
/// RingTooLarge.
ExperimentReport question_experiment(const Ring& ring, const SamplingConfig& config);

}  // namespace permpoly
