#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>

#include "permpoly/experiment.hpp"
#include "permpoly/group.hpp"
#include "permpoly/lift.hpp"
#include "permpoly/permutation.hpp"
#include "permpoly/serialize.hpp"
#include "permpoly/transposition.hpp"

namespace permpoly::cli {

namespace {

using nlohmann::json;

json parse_json_arg(const std::string& text, const char* flag) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string(flag) + " is not valid JSON: " + e.what());
  }
}

Element parse_element(const Ring& ring, const std::string& text, const char* flag) {
  return element_from_json(ring, parse_json_arg(text, flag));
}

Polynomial parse_poly(const Ring& ring, const std::string& text, const char* flag) {
  return polynomial_from_json(parse_json_arg(text, flag), ring);
}

void emit(std::ostream& out, json doc) {
  doc["schema"] = kSchemaVersion;
  out << doc.dump(2) << '\n';
}

json cycle_type_json(const PermutationTable& p) { return p.cycle_type(); }

json cycles_json(const PermutationTable& p) {
  json cycles = json::array();
  for (const auto& c : p.cycles()) {
    json cycle = json::array();
    for (ElemIndex x : c) cycle.push_back(to_json(p.ring().element(x)));
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

struct Options {
  std::string ring;
  std::string a;
  std::string b;
  std::string poly;
  std::vector<std::string> polys;
  std::string f;
  std::string g = R"({"coeffs":[1]})";
  std::string l = R"({"coeffs":[]})";
  std::uint64_t seed = 0;
  std::string mode = "exhaustive";
  std::uint32_t samples = 2000;
  std::uint32_t g_degree = 1;
  std::uint32_t l_degree = 2;
  std::uint32_t bound = kDefaultEnumerationBound;
  bool csv = false;
  bool timing = false;
  bool pointwise = false;
};

void field_table(const Options& o, std::ostream& out) {
  const Ring ring = parse_ring(o.ring);
  json elements = json::array(), units = json::array();
  for (ElemIndex x = 0; x < ring.size(); ++x) {
    elements.push_back(to_json(ring.element(x)));
    units.push_back(ring.is_unit(x));
  }
  json doc{{"ring", ring.name()},
           {"size", ring.size()},
           {"residue_order", ring.residue_order()},
           {"ideal_order", ring.ideal_order()},
           {"elements", elements},
           {"is_unit", units}};
  if (ring.size() <= 64) {
    json add = json::array(), mul = json::array();
    for (ElemIndex x = 0; x < ring.size(); ++x) {
      json add_row = json::array(), mul_row = json::array();
      for (ElemIndex y = 0; y < ring.size(); ++y) {
        add_row.push_back(ring.add(x, y));
        mul_row.push_back(ring.mul(x, y));
      }
      add.push_back(std::move(add_row));
      mul.push_back(std::move(mul_row));
    }
    doc["add"] = std::move(add);
    doc["mul"] = std::move(mul);
  }
  emit(out, std::move(doc));
}

void transposition(const Options& o, std::ostream& out) {
  const Ring ring = parse_ring(o.ring);
  const Element a = parse_element(ring, o.a, "--a");
  const Element b = parse_element(ring, o.b, "--b");
  const Polynomial f = transposition_poly(a, b);
  emit(out, json{{"polynomial", to_json(f)}, {"report", to_json(verify_transposition(f, a, b))}});
}

void carlitz(const Options& o, std::ostream& out) {
  const Ring ring = parse_ring(o.ring);
  const Element a = parse_element(ring, o.a, "--a");
  const Element zero = ring.element(0);
  if (o.pointwise || ring.size() > kCarlitzExpansionLimit) {
    const long degree = static_cast<long>((ring.size() - 2) * (ring.size() - 2) * (ring.size() - 2));
    emit(out, json{{"polynomial", nullptr},
                   {"reduced", nullptr},
                   {"report", to_json(verify_table(carlitz_table(a), degree, 0, a.index()))}});
    return;
  }
  const Polynomial g = carlitz_poly(a);
  emit(out, json{{"polynomial", to_json(g)},
                 {"reduced", to_json(reduce_canonical(g))},
                 {"report", to_json(verify_transposition(g, zero, a))}});
}

void verify(const Options& o, std::ostream& out) {
  const Ring ring = parse_ring(o.ring);
  const Polynomial f = parse_poly(ring, o.poly, "--poly");
  const Element a = parse_element(ring, o.a, "--a");
  const Element b = parse_element(ring, o.b, "--b");
  emit(out, json{{"report", to_json(verify_transposition(f, a, b))}});
}

void criterion(const Options& o, std::ostream& out) {
  const Ring ring = parse_ring(o.ring);
  const Polynomial f = parse_poly(ring, o.poly, "--poly");
  json doc = to_json(noebauer_is_permutation(f), ring);
  doc["brute_force"] = brute_force_is_permutation(f);
  emit(out, std::move(doc));
}

void lift(const Options& o, std::ostream& out) {
  const Ring ring = parse_ring(o.ring);
  const Polynomial g = parse_poly(ring, o.g, "--g");
  const Polynomial l = parse_poly(ring, o.l, "--l");
  std::optional<Polynomial> h;
  if (!o.f.empty()) {
    h = proposition_h(parse_poly(ring, o.f, "--f"), g, l);
  } else {
    if (o.a.empty() || o.b.empty()) {
      throw Error(ErrorCode::ParseError, "lift needs either --f or both --a and --b");
    }
    h = corollary_h(parse_element(ring, o.a, "--a"), parse_element(ring, o.b, "--b"), g, l);
  }
  const PermutationTable perm = PermutationTable::of(*h);
  const Polynomial hbar = residue_poly(*h);
  emit(out, json{{"polynomial", to_json(*h)},
                 {"criterion", to_json(noebauer_is_permutation(*h), ring)},
                 {"brute_force", brute_force_is_permutation(*h)},
                 {"sign", perm.sign()},
                 {"cycle_type", cycle_type_json(perm)},
                 {"residue_polynomial", to_json(hbar)},
                 {"residue_table", to_json(function_table(hbar))}});
}

void group(const Options& o, std::ostream& out) {
  const Ring ring = parse_ring(o.ring);
  // |R|! for |R| <= 20; larger symmetric groups exceed any closure we build.
  std::optional<std::uint64_t> symmetric;
  if (ring.size() <= 20) {
    std::uint64_t fact = 1;
    for (std::uint64_t i = 2; i <= ring.size(); ++i) fact *= i;
    symmetric = fact;
  }
  json doc{{"ring", ring.name()}};
  std::size_t order = 0;
  if (o.polys.empty()) {
    order = polynomial_permutation_group(ring, o.bound).order();
    doc["group"] = "P(R)";
  } else {
    std::vector<PermutationTable> gens;
    json generators = json::array();
    for (const auto& text : o.polys) {
      const Polynomial f = parse_poly(ring, text, "--poly");
      gens.push_back(PermutationTable::of(f));
      generators.push_back(json{{"polynomial", to_json(f)},
                                {"cycles", cycles_json(gens.back())},
                                {"sign", gens.back().sign()}});
    }
    order = generated_subgroup(ring, gens).order();
    doc["group"] = "generated";
    doc["generators"] = std::move(generators);
  }
  doc["order"] = order;
  doc["symmetric_order"] = symmetric ? json(*symmetric) : json(nullptr);
  doc["proper"] = !symmetric || order < *symmetric;
  emit(out, std::move(doc));
}

void experiment(const Options& o, std::ostream& out) {
  const Ring ring = parse_ring(o.ring);
  SamplingConfig config;
  if (o.mode == "exhaustive") {
    config.mode = SamplingMode::Exhaustive;
  } else if (o.mode == "random") {
    config.mode = SamplingMode::Random;
  } else {
    throw Error(ErrorCode::ParseError, "--mode must be exhaustive or random");
  }
  config.seed = o.seed;
  config.samples = o.samples;
  config.g_max_degree = o.g_degree;
  config.l_max_degree = o.l_degree;
  config.bound = o.bound;
  const ExperimentReport report = question_experiment(ring, config);
  if (o.csv) {
    write_sweep_csv(out, report, ring);
    return;
  }
  out << to_json(report, o.timing).dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transposition polynomials over finite fields and their lifts to local rings"};
  app.require_subcommand(1);
  Options o;

  const std::string ring_help = "ring spec: gf:p^n[/c0,..,1], zmod:p^k, fqu:p^n,k";
  auto* field_cmd = app.add_subcommand("field-table", "enumerate a ring and its operation tables");
  field_cmd->add_option("--ring", o.ring, ring_help)->required();

  auto* transpo_cmd = app.add_subcommand("transposition", "polynomial of degree q-2 inducing (a b)");
  transpo_cmd->add_option("--ring", o.ring, ring_help)->required();
  transpo_cmd->add_option("--a", o.a, "first point (JSON element)")->required();
  transpo_cmd->add_option("--b", o.b, "second point (JSON element)")->required();

  auto* carlitz_cmd = app.add_subcommand("carlitz", "Carlitz's polynomial inducing (0 a)");
  carlitz_cmd->add_option("--ring", o.ring, ring_help)->required();
  carlitz_cmd->add_option("--a", o.a, "nonzero point (JSON element)")->required();
  carlitz_cmd->add_flag("--pointwise", o.pointwise, "evaluate the nested form without expanding");

  auto* verify_cmd = app.add_subcommand("verify", "check a polynomial against (a b)");
  verify_cmd->add_option("--ring", o.ring, ring_help)->required();
  verify_cmd->add_option("--poly", o.poly, "polynomial JSON")->required();
  verify_cmd->add_option("--a", o.a, "first point")->required();
  verify_cmd->add_option("--b", o.b, "second point")->required();

  auto* criterion_cmd = app.add_subcommand("criterion", "local-ring permutation criterion");
  criterion_cmd->add_option("--ring", o.ring, ring_help)->required();
  criterion_cmd->add_option("--poly", o.poly, "polynomial JSON")->required();

  auto* lift_cmd = app.add_subcommand("lift", "lift a residue permutation to the local ring");
  lift_cmd->add_option("--ring", o.ring, ring_help)->required();
  lift_cmd->add_option("--a", o.a, "first point of the transposition");
  lift_cmd->add_option("--b", o.b, "second point of the transposition");
  lift_cmd->add_option("--f", o.f, "residue-permuting polynomial JSON (instead of --a/--b)");
  lift_cmd->add_option("--g", o.g, "unit-valued polynomial JSON")->capture_default_str();
  lift_cmd->add_option("--l", o.l, "free polynomial JSON")->capture_default_str();

  auto* group_cmd = app.add_subcommand("group", "order of P(R) or of a generated subgroup");
  group_cmd->add_option("--ring", o.ring, ring_help)->required();
  group_cmd->add_option("--poly", o.polys, "generator polynomial JSON (repeatable)");
  group_cmd->add_option("--bound", o.bound, "largest ring to enumerate")->capture_default_str();

  auto* experiment_cmd = app.add_subcommand("experiment", "does A generate P(R)?");
  experiment_cmd->add_option("--ring", o.ring, ring_help)->required();
  experiment_cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
  experiment_cmd->add_option("--mode", o.mode, "exhaustive or random")->capture_default_str();
  experiment_cmd->add_option("--samples", o.samples, "random mode sample count")
      ->capture_default_str();
  experiment_cmd->add_option("--g-degree", o.g_degree, "degree bound for g")->capture_default_str();
  experiment_cmd->add_option("--l-degree", o.l_degree, "degree bound for l in random mode")
      ->capture_default_str();
  experiment_cmd->add_option("--bound", o.bound, "largest ring to enumerate")->capture_default_str();
  experiment_cmd->add_flag("--csv", o.csv, "print the sweep table as CSV");
  experiment_cmd->add_flag("--timing", o.timing, "include runtime_ms in the report");

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsageError;
  }

  try {
    if (*field_cmd) field_table(o, out);
    else if (*transpo_cmd) transposition(o, out);
    else if (*carlitz_cmd) carlitz(o, out);
    else if (*verify_cmd) verify(o, out);
    else if (*criterion_cmd) criterion(o, out);
    else if (*lift_cmd) lift(o, out);
    else if (*group_cmd) group(o, out);
    else if (*experiment_cmd) experiment(o, out);
  } catch (const Error& e) {
    err << json{{"schema", kSchemaVersion}, {"error", std::string(to_string(e.code()))},
                {"message", e.what()}}
               .dump()
        << '\n';
    return e.code() == ErrorCode::ParseError ? kExitUsageError : kExitDomainError;
  }
  return kExitOk;
}

}  // namespace permpoly::cli
