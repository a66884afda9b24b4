// Command-line front end: exact counts, structure listings, generating-series
// truncations, the bijections/involutions as text-to-text maps, and the
// self-verification suites. Exit code 0 = pass, 1 = a mathematical check
// disagreed, 2 = bad input or a resource cap.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fishburn/diagram.hpp"
#include "fishburn/enumeration.hpp"
#include "fishburn/inversion_table.hpp"
#include "fishburn/matching.hpp"
#include "fishburn/paired_diagram.hpp"
#include "fishburn/sequences.hpp"
#include "fishburn/series.hpp"
#include "fishburn/verify.hpp"

namespace {

using nlohmann::ordered_json;

enum class Format { Plain, Json, Csv };

Format parse_format(const std::string& name) {
  if (name == "plain") return Format::Plain;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format \"" + name + "\"");
}

struct Report {
  std::string command;
  ordered_json parameters = ordered_json::object();
  ordered_json results = ordered_json::object();
  std::string status = "pass";  // pass | fail | error
  std::string plain;            // preformatted payload for --format plain
  std::string csv;              // preformatted payload for --format csv
};

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';  // escape by doubling
    out += c;
  }
  out += '"';
  return out;
}

fishburn::Cap resolve_cap(const std::optional<std::uint64_t>& flag) {
  fishburn::Cap cap;
  if (flag) {
    cap.limit = *flag;
    return cap;
  }
  if (const char* env = std::getenv("FISHBURN_CAP")) {
    try {
      size_t used = 0;
      const unsigned long long parsed = std::stoull(env, &used, 10);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
      cap.limit = parsed;
    } catch (const std::exception&) {
      throw std::invalid_argument("FISHBURN_CAP must be a nonnegative integer, got \"" +
                                  std::string(env) + "\"");
    }
  }
  return cap;
}

std::string join(const std::vector<int>& values, char sep) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

// ---- count ----------------------------------------------------------------

struct CountOptions {
  std::string structure;
  int n = 0;
  std::optional<int> d;
  std::optional<std::string> avoid;
  bool cdf = false;
  bool list = false;
};

void require_flag_absent(bool present, const std::string& flag, const std::string& structure) {
  if (present)
    throw std::invalid_argument(flag + " does not apply to --structure " + structure);
}

Report run_count(const CountOptions& options, fishburn::Cap cap) {
  Report report;
  report.command = "count";
  report.parameters["structure"] = options.structure;
  report.parameters["n"] = options.n;
  if (options.d) report.parameters["d"] = *options.d;
  if (options.avoid) report.parameters["avoid"] = *options.avoid;
  if (options.cdf) report.parameters["cdf"] = true;
  if (options.list) report.parameters["list"] = true;

  std::int64_t count = 0;
  std::vector<std::string> items;
  auto accept = [&](std::string text) {
    ++count;
    if (options.list) items.push_back(std::move(text));
  };

  if (options.structure == "matchings") {
    require_flag_absent(options.cdf, "--cdf", options.structure);
    require_flag_absent(options.d.has_value(), "--d", options.structure);
    std::optional<fishburn::NestingKind> avoided;
    if (options.avoid) avoided = fishburn::NestingKind::parse(*options.avoid);
    fishburn::for_each_matching(
        options.n,
        [&](const fishburn::Matching& x) {
          if (avoided && fishburn::count_nestings(x, *avoided) != 0) return;
          accept(x.to_string());
        },
        cap);
  } else if (options.structure == "tables") {
    require_flag_absent(options.avoid.has_value(), "--avoid", options.structure);
    const auto tables = options.cdf ? fishburn::cdf_tables(options.n, options.d, cap)
                                    : fishburn::all_inversion_tables(options.n, options.d, cap);
    for (const auto& table : tables) accept(table.to_string());
  } else if (options.structure == "diagrams") {
    require_flag_absent(options.avoid.has_value(), "--avoid", options.structure);
    require_flag_absent(options.cdf, "--cdf", options.structure);
    fishburn::for_each_diagram(
        options.n,
        [&](const fishburn::FishburnDiagram& diagram) { accept(diagram.to_string()); },
        options.d, cap);
  } else if (options.structure == "paired") {
    require_flag_absent(options.avoid.has_value(), "--avoid", options.structure);
    require_flag_absent(options.cdf, "--cdf", options.structure);
    if (!options.d)
      throw std::invalid_argument("--structure paired requires --d");
    for (const auto& pair : fishburn::all_paired_diagrams(options.n, *options.d, cap))
      accept(pair.to_string());
  } else if (options.structure == "ascent") {
    require_flag_absent(options.avoid.has_value(), "--avoid", options.structure);
    require_flag_absent(options.cdf, "--cdf", options.structure);
    for (const auto& sequence : fishburn::ascent_sequences(options.n, cap)) {
      if (options.d && fishburn::zeros_statistic(sequence) != *options.d) continue;
      accept(join(sequence, ','));
    }
  } else if (options.structure == "permutations") {
    require_flag_absent(options.avoid.has_value(), "--avoid", options.structure);
    require_flag_absent(options.cdf, "--cdf", options.structure);
    require_flag_absent(options.d.has_value(), "--d", options.structure);
    for (const auto& perm : fishburn::fishburn_permutations(options.n, cap))
      accept(join(perm, ','));
  } else {
    throw std::invalid_argument("unknown structure \"" + options.structure + "\"");
  }

  report.results["count"] = count;
  report.plain = std::to_string(count) + "\n";
  if (options.list) {
    report.results["items"] = items;
    for (const auto& item : items) report.plain += item + "\n";
    report.csv = "item\n";
    for (const auto& item : items) report.csv += csv_quote(item) + "\n";
  } else {
    report.csv = "count\n" + std::to_string(count) + "\n";
  }
  return report;
}

// ---- verify ---------------------------------------------------------------

Report run_verify(const std::string& suite, int n_max, fishburn::Cap cap) {
  Report report;
  report.command = "verify";
  report.parameters["suite"] = suite;
  report.parameters["n_max"] = n_max;
  const fishburn::SuiteResult result = fishburn::run_suite(suite, n_max, cap);
  report.status = result.pass ? "pass" : "fail";
  report.results["suite"] = result.suite;
  report.results["n_max"] = result.n_max;
  report.results["pass"] = result.pass;
  report.results["instances"] = result.instances;
  report.results["notes"] = result.notes;
  report.results["failures"] = result.failures;

  for (const auto& note : result.notes) report.plain += "  " + note + "\n";
  for (const auto& failure : result.failures) report.plain += "FAIL: " + failure + "\n";
  report.plain += result.suite + " n_max=" + std::to_string(result.n_max) + ": " +
                  (result.pass ? "PASS" : "FAIL") + " (" + std::to_string(result.instances) +
                  " instances checked)\n";
  report.csv = "suite,n_max,status,instances\n" + result.suite + "," +
               std::to_string(result.n_max) + "," + (result.pass ? "pass" : "fail") + "," +
               std::to_string(result.instances) + "\n";
  return report;
}

// ---- series ---------------------------------------------------------------

Report run_series(const std::string& equation, int order) {
  Report report;
  report.command = "series";
  report.parameters["equation"] = equation;
  report.parameters["order"] = order;

  fishburn::TruncatedPolynomial polynomial(0);
  if (equation == "fishburn")
    polynomial = fishburn::fishburn_series(order);
  else if (equation == "refined-simple")
    polynomial = fishburn::refined_series_simple(order);
  else if (equation == "refined-rk")
    polynomial = fishburn::refined_series_rk(order);
  else
    throw std::invalid_argument("unknown equation \"" + equation + "\"");

  ordered_json terms = ordered_json::object();
  for (const auto& [degrees, value] : polynomial.terms())
    terms["t^" + std::to_string(degrees.first) + " z^" + std::to_string(degrees.second)] = value;
  report.results["polynomial"] = terms;
  report.plain = polynomial.to_json_string() + "\n";
  report.csv = "t_deg,z_deg,coefficient\n";
  for (const auto& [degrees, value] : polynomial.terms())
    report.csv += std::to_string(degrees.first) + "," + std::to_string(degrees.second) + "," +
                  std::to_string(value) + "\n";
  return report;
}

// ---- map ------------------------------------------------------------------

Report run_map(const std::string& name, const std::string& input) {
  Report report;
  report.command = "map";
  report.parameters["map"] = name;
  report.parameters["input"] = input;

  std::string output;
  if (name == "phi") {
    output = fishburn::phi(fishburn::Matching::parse(input)).to_string();
  } else if (name == "phi-inverse") {
    output = fishburn::phi_inverse(fishburn::InversionTable::parse(input)).to_string();
  } else if (name == "psi") {
    output = fishburn::psi(fishburn::FishburnDiagram::parse(input)).to_string();
  } else if (name == "psi-tilde") {
    output = fishburn::psi_tilde(fishburn::PairedDiagram::parse(input)).to_string();
  } else if (name == "embed") {
    output = fishburn::embed_paired(fishburn::PairedDiagram::parse(input)).to_string();
  } else if (name == "embed-inverse") {
    output = fishburn::extract_paired(fishburn::FishburnDiagram::parse(input)).to_string();
  } else {
    throw std::invalid_argument("unknown map \"" + name + "\"");
  }

  report.results["output"] = output;
  report.plain = output + "\n";
  report.csv = "input,output\n" + csv_quote(input) + "," + csv_quote(output) + "\n";
  return report;
}

// ---- report emission ------------------------------------------------------

int emit(const Report& report, Format format,
         std::chrono::steady_clock::time_point started) {
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  switch (format) {
    case Format::Plain:
      std::cout << report.plain;
      break;
    case Format::Csv:
      std::cout << report.csv;
      break;
    case Format::Json: {
      ordered_json out;
      out["command"] = report.command;
      out["parameters"] = report.parameters;
      out["results"] = report.results;
      out["status"] = report.status;
      out["elapsed_ms"] = elapsed;
      std::cout << out.dump(2) << "\n";
      break;
    }
  }
  if (report.status == "pass") return 0;
  return report.status == "fail" ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration toolkit for the Fishburn-number structures"};
  app.require_subcommand(1);

  std::string format_name = "plain";
  std::optional<std::uint64_t> cap_flag;
  app.add_option("--format", format_name, "output format: plain, json, or csv")
      ->capture_default_str();
  app.add_option("--cap", cap_flag,
                 "enumeration cap (items); overrides the FISHBURN_CAP environment variable");

  auto* count_cmd = app.add_subcommand("count", "count (and optionally list) structures");
  count_cmd->fallthrough();  // global --format/--cap may trail the subcommand
  CountOptions count_options;
  count_cmd
      ->add_option("--structure", count_options.structure,
                   "matchings, tables, diagrams, paired, ascent, or permutations")
      ->required();
  count_cmd->add_option("--n", count_options.n, "size parameter")->required();
  count_cmd->add_option("--d", count_options.d, "restrict to this d-statistic");
  count_cmd->add_option("--avoid", count_options.avoid,
                        "matchings only: nesting kind that must not occur "
                        "(e.g. 2-nesting, left-nesting)");
  count_cmd->add_flag("--cdf", count_options.cdf,
                      "tables only: restrict to consecutive-decreasing-free tables");
  count_cmd->add_flag("--list", count_options.list, "also list every structure");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->fallthrough();
  std::string suite;
  int n_max = 6;
  verify_cmd->add_option("suite", suite, "one of: involution, involution-refined, "
                                         "phi-roundtrip, identity-eq1, identity-eq7-eq8, "
                                         "embedding, eulerian, insertion-cases")
      ->required();
  verify_cmd->add_option("--n-max", n_max, "verify all sizes up to this n")
      ->capture_default_str();

  auto* series_cmd = app.add_subcommand("series", "emit a truncated generating series");
  series_cmd->fallthrough();
  std::string equation;
  int order = 0;
  series_cmd
      ->add_option("--equation", equation, "fishburn, refined-simple, or refined-rk")
      ->required();
  series_cmd->add_option("--order", order, "truncation order in t (>= 1)")->required();

  auto* map_cmd = app.add_subcommand("map", "apply one of the maps to a structure");
  map_cmd->fallthrough();
  std::string map_name;
  std::string map_input;
  map_cmd->add_option("name", map_name, "one of: phi, phi-inverse, psi, psi-tilde, "
                                        "embed, embed-inverse")
      ->required();
  map_cmd->add_option("--input", map_input, "canonical text form of the argument")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForAllHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  Format format = Format::Plain;
  try {
    format = parse_format(format_name);
    const fishburn::Cap cap = resolve_cap(cap_flag);
    Report report;
    if (count_cmd->parsed())
      report = run_count(count_options, cap);
    else if (verify_cmd->parsed())
      report = run_verify(suite, n_max, cap);
    else if (series_cmd->parsed())
      report = run_series(equation, order);
    else
      report = run_map(map_name, map_input);
    return emit(report, format, started);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    if (format == Format::Json) {
      Report report;
      report.command = count_cmd->parsed()    ? "count"
                       : verify_cmd->parsed() ? "verify"
                       : series_cmd->parsed() ? "series"
                                              : "map";
      report.results["error"] = std::string(error.what());
      report.status = "error";
      emit(report, Format::Json, started);
    }
    return 2;
  }
}
