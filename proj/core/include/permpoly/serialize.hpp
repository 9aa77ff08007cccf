#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "permpoly/experiment.hpp"
#include "permpoly/lift.hpp"
#include "permpoly/polynomial.hpp"
#include "permpoly/ring.hpp"
#include "permpoly/transposition.hpp"

namespace permpoly {

inline constexpr int kSchemaVersion = 1;

/// Parses `gf:p`, `gf:p^n`, `gf:p^n/c0,...,1`, `zmod:p^k`, `fqu:p^n,k` and
/// `fqu:p^n/c0,...,1,k`. Malformed text throws ParseError; well-formed specs
/// of invalid rings throw the matching domain error.
Ring parse_ring(std::string_view spec);

/// Z/p^k and prime fields encode as integers, GF(p^n) as its F_p coordinate
/// list (constant first), F_q[u]/(u^k) as the list of its u^j coefficients.
nlohmann::json to_json(const Element& e);
/// Accepts the encoding above; a bare integer v is also read as v * 1_R.
Element element_from_json(const Ring& ring, const nlohmann::json& j);

/// {"ring": ..., "coeffs": [...]} with index = degree.
nlohmann::json to_json(const Polynomial& f);
/// `ring` may be omitted from the object when `default_ring` is given; when
/// both are present they must agree (MixedRings otherwise).
Polynomial polynomial_from_json(const nlohmann::json& j,
                                const std::optional<Ring>& default_ring = std::nullopt);

nlohmann::json to_json(const FunctionTable& t);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const CriterionReport& r, const Ring& ring);
nlohmann::json to_json(const SamplingConfig& c);
/// runtime_ms is included only on request so default output is reproducible.
nlohmann::json to_json(const ExperimentReport& r, bool include_runtime);

/// Sweep table with one line per constructed polynomial.
void write_sweep_csv(std::ostream& out, const ExperimentReport& r, const Ring& ring);

}  // namespace permpoly
