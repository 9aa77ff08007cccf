#include "permpoly/serialize.hpp"

#include <charconv>
#include <sstream>
#include <vector>


namespace permpoly {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(std::string_view spec, std::string_view why) {
  throw Error(ErrorCode::ParseError,
              "malformed ring spec '" + std::string(spec) + "': " + std::string(why));
}

std::uint32_t parse_uint(std::string_view text, std::string_view spec) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    malformed(spec, "expected an unsigned integer, got '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::uint32_t> parse_list(std::string_view text, std::string_view spec) {
  std::vector<std::uint32_t> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_uint(text.substr(0, comma), spec));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

// "p", "p^n" or "p^n/c0,...,1"
FieldSpec parse_field(std::string_view text, std::string_view spec) {
  std::optional<std::vector<std::uint32_t>> irr;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    irr = parse_list(text.substr(slash + 1), spec);
    text = text.substr(0, slash);
  }
  std::uint32_t p = 0, n = 1;
  if (const auto caret = text.find('^'); caret != std::string_view::npos) {
    p = parse_uint(text.substr(0, caret), spec);
    n = parse_uint(text.substr(caret + 1), spec);
  } else {
    p = parse_uint(text, spec);
  }
  if (n == 0) malformed(spec, "extension degree must be at least 1");
  return make_field(p, n, irr);
}

json encode_index(const Ring& ring, ElemIndex x) {
  switch (ring.family()) {
    case RingFamily::IntegersModPrimePower:
      return x;
    case RingFamily::Field:
      if (ring.field_spec().n == 1) return x;
      return ring.coordinates(x);
    case RingFamily::TruncatedPolynomial: {
      const Ring field = ring.residue_field();
      json out = json::array();
      for (std::uint32_t c : ring.coordinates(x)) out.push_back(encode_index(field, c));
      return out;
    }
  }
  return nullptr;
}

ElemIndex decode_index(const Ring& ring, const json& j) {
  if (j.is_number_integer()) return ring.from_int(j.get<std::int64_t>());
  if (!j.is_array()) {
    throw Error(ErrorCode::ParseError, "element of " + ring.name() + " must be an integer or list");
  }
  switch (ring.family()) {
    case RingFamily::IntegersModPrimePower:
      throw Error(ErrorCode::ParseError, "elements of " + ring.name() + " are integers");
    case RingFamily::Field: {
      std::vector<std::uint32_t> coords;
      for (const auto& c : j) {
        if (!c.is_number_unsigned() && !(c.is_number_integer() && c.get<std::int64_t>() >= 0)) {
          throw Error(ErrorCode::ParseError, "field coordinates must be nonnegative integers");
        }
        coords.push_back(c.get<std::uint32_t>());
      }
      return ring.from_coordinates(coords);
    }
    case RingFamily::TruncatedPolynomial: {
      const Ring field = ring.residue_field();
      std::vector<std::uint32_t> coords;
      for (const auto& c : j) coords.push_back(decode_index(field, c));
      return ring.from_coordinates(coords);
    }
  }
  return 0;
}

std::string poly_text(const Polynomial& f) {
  json coeffs = json::array();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    coeffs.push_back(encode_index(f.ring(), f.coeffs()[i]));
  }
  return coeffs.dump();
}

}  // namespace

Ring parse_ring(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) malformed(spec, "missing family prefix");
  const std::string_view family = spec.substr(0, colon);
  const std::string_view body = spec.substr(colon + 1);
  if (family == "gf") return Ring::field(parse_field(body, spec));
  if (family == "zmod") {
    const auto caret = body.find('^');
    const std::uint32_t p = parse_uint(body.substr(0, caret), spec);
    const std::uint32_t k =
        caret == std::string_view::npos ? 1 : parse_uint(body.substr(caret + 1), spec);
    if (!is_prime(p)) {
      throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    }
    return Ring::local(zmod(p, k));
  }
  if (family == "fqu") {
    const auto comma = body.rfind(',');
    if (comma == std::string_view::npos) malformed(spec, "expected fqu:p^n,k");
    const FieldSpec field = parse_field(body.substr(0, comma), spec);
    return Ring::local(fqu(field, parse_uint(body.substr(comma + 1), spec)));
  }
  malformed(spec, "unknown family '" + std::string(family) + "'");
}

json to_json(const Element& e) { return encode_index(e.ring(), e.index()); }

Element element_from_json(const Ring& ring, const json& j) {
  return Element(ring, decode_index(ring, j));
}

json to_json(const Polynomial& f) {
  json coeffs = json::array();
  for (ElemIndex c : f.coeffs()) coeffs.push_back(encode_index(f.ring(), c));
  return json{{"ring", f.ring().name()}, {"coeffs", coeffs}};
}

Polynomial polynomial_from_json(const json& j, const std::optional<Ring>& default_ring) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) {
    throw Error(ErrorCode::ParseError, "polynomial JSON needs a \"coeffs\" array");
  }
  std::optional<Ring> ring = default_ring;
  if (j.contains("ring")) {
    if (!j.at("ring").is_string()) throw Error(ErrorCode::ParseError, "\"ring\" must be a string");
    Ring named = parse_ring(j.at("ring").get<std::string>());
    if (ring) require_same_ring(*ring, named);
    ring = std::move(named);
  }
  if (!ring) throw Error(ErrorCode::ParseError, "polynomial JSON does not name its ring");
  std::vector<ElemIndex> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(decode_index(*ring, c));
  return Polynomial(*ring, std::move(coeffs));
}

json to_json(const FunctionTable& t) {
  json out = json::array();
  for (ElemIndex y : t.map) out.push_back(encode_index(t.ring, y));
  return out;
}

json to_json(const VerificationReport& r) {
  json out{{"is_permutation", r.is_permutation},
           {"is_exact_transposition", r.is_exact_transposition},
           {"table", to_json(r.table)},
           {"degree", r.degree},
           {"counterexample", nullptr}};
  if (r.counterexample) {
    const Ring& ring = r.table.ring;
    out["counterexample"] = json{{"point", encode_index(ring, r.counterexample->point)},
                                 {"image", encode_index(ring, r.counterexample->image)},
                                 {"expected", encode_index(ring, r.counterexample->expected)}};
  }
  return out;
}

json to_json(const CriterionReport& r, const Ring& ring) {
  json out{{"condition1", r.condition1}, {"condition2", r.condition2}, {"verdict", r.verdict}};
  if (r.witness_residue) {
    out["witness_residue"] = encode_index(ring.residue_field(), *r.witness_residue);
  }
  if (r.witness_point) out["witness_point"] = encode_index(ring, *r.witness_point);
  return out;
}

json to_json(const SamplingConfig& c) {
  json out{{"mode", c.mode == SamplingMode::Exhaustive ? "exhaustive" : "random"},
           {"g_max_degree", c.g_max_degree},
           {"bound", c.bound}};
  if (c.mode == SamplingMode::Exhaustive) {
    out["l_grid"] = c.l_grid;
  } else {
    out["samples"] = c.samples;
    out["l_max_degree"] = c.l_max_degree;
  }
  return out;
}

json to_json(const ExperimentReport& r, bool include_runtime) {
  json out{{"schema", kSchemaVersion},
           {"ring", r.ring},
           {"sampling", to_json(r.sampling)},
           {"candidates", r.candidates},
           {"A_size", r.a_size},
           {"A_odd", r.odd_count},
           {"generated_order", r.generated_order},
           {"group_order", r.group_order},
           {"equals", r.equals},
           {"index", r.index},
           {"seed", r.sampling.seed}};
  if (include_runtime) out["runtime_ms"] = r.runtime_ms;
  return out;
}

void write_sweep_csv(std::ostream& out, const ExperimentReport& r, const Ring& ring) {
  out << "a,b,g,l,h,sign,cycle_type,residue_transposition\n";
  for (const auto& row : r.rows) {
    std::ostringstream cycle_type;
    for (std::size_t i = 0; i < row.cycle_type.size(); ++i) {
      cycle_type << (i ? " " : "") << row.cycle_type[i];
    }
    auto quoted = [](const std::string& s) {
      std::string q = "\"";
      for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
      return q + "\"";
    };
    out << quoted(encode_index(ring, row.a).dump()) << ',' << quoted(encode_index(ring, row.b).dump())
        << ',' << quoted(poly_text(row.g)) << ',' << quoted(poly_text(row.l)) << ','
        << quoted(poly_text(row.h)) << ',' << row.sign << ',' << cycle_type.str() << ','
        << (row.residue_is_transposition ? "true" : "false") << '\n';
  }
}

}  // namespace permpoly
