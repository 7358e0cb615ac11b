// ambipref command-line front end.
//   evaluate | audit | analyze | slice | gen | verify
// Exit codes: 0 ok, 1 verify found a counterexample, 2 input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ambipref/analysis.hpp"
#include "ambipref/axioms.hpp"
#include "ambipref/battery.hpp"
#include "ambipref/generator.hpp"
#include "ambipref/instance_json.hpp"
#include "ambipref/report_json.hpp"
#include "ambipref/slices.hpp"
#include "ambipref/verify.hpp"

namespace {

using namespace ambipref;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kInputError = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  for (char c : text) {
    if (c == sep) {
      out.push_back(item);
      item.clear();
    } else if (c != ' ') {
      item.push_back(c);
    }
  }
  out.push_back(item);
  return out;
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw Error(ErrorCode::MalformedDocument, "cannot write '" + output + "'");
  out << text;
}

void emit(const json& doc, const std::string& output) { emit(doc.dump(2) + "\n", output); }

// "states=3,sets=2,vertices=4,denominator=12"
GenParams parse_params(const std::string& text) {
  GenParams p;
  if (text.empty()) return p;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParamsOutOfRange, "expected key=value in '" + item + "'");
    const std::string key = item.substr(0, eq);
    long long value = 0;
    try {
      std::size_t used = 0;
      value = std::stoll(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParamsOutOfRange, "bad integer in '" + item + "'");
    }
    if (value < 0) throw Error(ErrorCode::ParamsOutOfRange, "negative value in '" + item + "'");
    if (key == "states") {
      p.num_states = static_cast<std::size_t>(value);
    } else if (key == "sets") {
      p.num_sets = static_cast<std::size_t>(value);
    } else if (key == "vertices") {
      p.vertices_per_set = static_cast<std::size_t>(value);
    } else if (key == "denominator") {
      p.denominator_bound = value;
    } else {
      throw Error(ErrorCode::ParamsOutOfRange, "unknown generator parameter '" + key + "'");
    }
  }
  check_params(p);
  return p;
}

std::pair<std::uint64_t, std::uint64_t> parse_seeds(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto seed = std::stoull(text);
      return {seed, seed};
    }
    const auto first = std::stoull(text.substr(0, dots));
    const auto last = std::stoull(text.substr(dots + 2));
    if (last < first) throw std::invalid_argument(text);
    return {first, last};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParamsOutOfRange, "seed range must look like A..B with A <= B");
  }
}

UtilityVector parse_direction(const std::string& text) {
  std::vector<Rational> entries;
  for (const auto& item : split(text, ',')) entries.push_back(parse_rational(item));
  return UtilityVector(std::move(entries));
}

int run_evaluate(const std::string& path, const std::string& model, const std::string& left,
                 const std::string& right, const std::string& output) {
  const Instance inst = load_instance(path);
  emit(evaluate_pair(inst, parse_model(model), left, right), output);
  return kOk;
}

int run_audit(const std::string& path, const std::string& model, const std::string& axioms, int resolution,
              const std::string& radius, std::size_t max_witnesses, const std::string& output) {
  const Instance inst = load_instance(path);
  const ModelKind kind = parse_model(model);
  const Battery battery = generate_act_grid(inst, resolution, parse_rational(radius));
  AuditOptions options;
  options.max_witnesses = max_witnesses;
  std::vector<AxiomKind> selected;
  if (axioms != "all") {
    for (const auto& name : split(axioms, ',')) {
      if (!name.empty()) selected.push_back(parse_axiom(name));
    }
    if (selected.empty()) throw Error(ErrorCode::UnknownAxiom, "no axioms given");
  }
  emit(audit_document(inst, kind, selected, battery, options), output);
  return kOk;
}

int run_analyze(const std::string& path, const std::string& output) {
  const Instance inst = load_instance(path);
  emit(to_json(analyze(inst), inst), output);
  return kOk;
}

int run_slice(const std::string& path, const std::string& direction, std::size_t samples, const std::string& alpha,
              const std::string& format, const std::string& output) {
  const Instance inst = load_instance(path);
  std::optional<Rational> weight;
  if (!alpha.empty()) weight = parse_rational(alpha);
  const SliceProfile profile = slice_profile(inst.collection, parse_direction(direction), samples, weight);
  emit(export_slice(profile, format), output);
  return kOk;
}

int run_gen(std::uint64_t seed, const std::string& params, const std::string& output) {
  emit(to_json(generate_instance(seed, parse_params(params))), output);
  return kOk;
}

int run_verify(const std::string& suites, const std::string& seeds, const std::string& params, int resolution,
               const std::string& radius, bool no_hand_built, std::size_t threads, const std::string& output) {
  VerifyOptions options;
  options.suites = parse_suites(suites);
  std::tie(options.first_seed, options.last_seed) = parse_seeds(seeds);
  options.params = parse_params(params);
  options.resolution = resolution;
  options.radius = parse_rational(radius);
  options.hand_built = !no_hand_built;
  options.threads = threads;
  const VerificationReport report = verify(options);
  emit(to_json(report), output);
  for (const auto& s : report.suites) {
    std::cerr << s.id << ": " << (s.passed ? "pass" : "FAIL") << " (" << s.instances << " instances, "
              << s.counterexamples.size() << " counterexamples)\n";
  }
  return report.passed ? kOk : kCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact evaluation, auditing and analysis of generalized Bewley preferences"};
  app.require_subcommand(1);
  std::string output;

  std::string instance, model = "gb", left, right;
  auto* evaluate = app.add_subcommand("evaluate", "compare two named acts under one model");
  evaluate->add_option("--instance", instance)->required();
  evaluate->add_option("--model", model);
  evaluate->add_option("--left", left)->required();
  evaluate->add_option("--right", right)->required();

  std::string axioms = "all", radius = "1";
  int resolution = 2;
  std::size_t max_witnesses = 32;
  auto* audit_cmd = app.add_subcommand("audit", "audit axioms on a lattice battery");
  audit_cmd->add_option("--instance", instance)->required();
  audit_cmd->add_option("--model", model);
  audit_cmd->add_option("--axioms", axioms, "comma list or 'all'");
  audit_cmd->add_option("--resolution", resolution);
  audit_cmd->add_option("--radius", radius);
  audit_cmd->add_option("--max-witnesses", max_witnesses, "0 keeps all");

  auto* analyze_cmd = app.add_subcommand("analyze", "parametric analysis of the belief collection");
  analyze_cmd->add_option("--instance", instance)->required();

  std::string direction, alpha, format = "csv";
  std::size_t samples = 64;
  auto* slice = app.add_subcommand("slice", "cone cross-section on a plane through the diagonal");
  slice->add_option("--instance", instance)->required();
  slice->add_option("--direction", direction, "comma-separated rationals")->required();
  slice->add_option("--samples", samples);
  slice->add_option("--alpha", alpha);
  slice->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  std::uint64_t seed = 0;
  std::string params;
  auto* gen = app.add_subcommand("gen", "generate a seeded instance");
  gen->add_option("--seed", seed)->required();
  gen->add_option("--params", params, "states=N,sets=N,vertices=N,denominator=N");

  std::string suites = "all", seeds = "0..99";
  bool no_hand_built = false;
  std::size_t threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("--suites", suites);
  verify_cmd->add_option("--seeds", seeds, "A..B");
  verify_cmd->add_option("--params", params);
  verify_cmd->add_option("--resolution", resolution);
  verify_cmd->add_option("--radius", radius);
  verify_cmd->add_flag("--no-hand-built", no_hand_built);
  verify_cmd->add_option("--threads", threads);

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("-o,--output", output, "write to a file instead of standard output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*evaluate) return run_evaluate(instance, model, left, right, output);
    if (*audit_cmd) return run_audit(instance, model, axioms, resolution, radius, max_witnesses, output);
    if (*analyze_cmd) return run_analyze(instance, output);
    if (*slice) return run_slice(instance, direction, samples, alpha, format, output);
    if (*gen) return run_gen(seed, params, output);
    if (*verify_cmd) {
      return run_verify(suites, seeds, params, resolution, radius, no_hand_built, threads, output);
    }
  } catch (const ValidationError& e) {
    for (const auto& issue : e.issues()) {
      std::cerr << "error: " << to_string(issue.code) << " at " << issue.path << ": " << issue.message << "\n";
    }
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
