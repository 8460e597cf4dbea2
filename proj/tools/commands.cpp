#include "commands.hpp"

#include <compograph/affinity.hpp>
#include <compograph/error.hpp>
#include <compograph/oracle.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace compograph::cli {

namespace {

namespace fs = std::filesystem;

std::optional<Catalog> load_catalog(const CatalogSource& source, std::ostream& err) {
  std::ifstream in(source.path, std::ios::binary);
  if (!in) {
    err << "error: cannot read catalog '" << source.path << "'\n";
    return std::nullopt;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  const fs::path path(source.path);
  const CatalogFormat format = source.format.value_or(
      path.extension() == ".json" ? CatalogFormat::json : CatalogFormat::dsl);
  auto result = parse_catalog(text, format, path.stem().string());
  if (!result.ok()) {
    for (const ParseError& e : result.errors) err << source.path << ":" << format_error(e) << "\n";
    return std::nullopt;
  }
  return std::move(result.catalog);
}

std::optional<TypeSet> parse_csv(const std::string& csv, const char* flag, std::ostream& err) {
  auto set = TypeSet::try_parse(csv);
  if (!set) err << "error: " << flag << ": invalid type list '" << csv << "'\n";
  return set;
}

std::optional<Request> parse_request(const std::string& provided, const std::string& required,
                                     std::ostream& err) {
  auto p = parse_csv(provided, "--provided", err);
  auto r = parse_csv(required, "--required", err);
  if (!p || !r) return std::nullopt;
  return Request{std::move(*p), std::move(*r)};
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += sep;
    out += item;
  }
  return out;
}

std::string plan_line(const Plan& plan) {
  return plan.services.empty() ? "(empty plan)" : join(plan.services, " -> ");
}

std::string executability_note(const Plan& plan, const oracle::ExecutabilityReport& report) {
  if (report.executable()) return "[executable]";
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < report.missing.size(); ++i) {
    if (!report.missing[i].empty()) {
      parts.push_back(report.missing[i].to_string() + " @ " + plan.services[i]);
    }
  }
  return "[missing: " + join(parts, "; ") + "]";
}

std::string paint(const std::string& text, const char* sgr, bool color) {
  if (!color) return text;
  return std::string("\x1b[") + sgr + "m" + text + "\x1b[0m";
}

}  // namespace

int cmd_build(const BuildOptions& options, std::ostream& out, std::ostream& err) {
  if (options.format != "dot" && options.format != "json") {
    err << "error: --format must be dot or json\n";
    return kUsageError;
  }
  auto catalog = load_catalog(options.catalog, err);
  if (!catalog) return kUsageError;

  std::string text;
  try {
    const CompositionModel model = build_model(*catalog, options.init);
    text = options.format == "json" ? to_json(model) : to_dot(model);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kSemanticError;
  }

  if (options.out_path) {
    std::ofstream file(*options.out_path, std::ios::binary);
    if (!(file << text)) {
      err << "error: cannot write '" << *options.out_path << "'\n";
      return kUsageError;
    }
    return kSuccess;
  }
  out << text;
  return kSuccess;
}

int cmd_plan(const PlanOptions& options, std::ostream& out, std::ostream& err) {
  auto request = parse_request(options.provided, options.required, err);
  if (!request) return kUsageError;
  auto catalog = load_catalog(options.catalog, err);
  if (!catalog) return kUsageError;

  PlanSearchResult result;
  try {
    const CompositionModel model = build_model(*catalog, options.init);
    result = find_plans(model, *catalog, *request, options.max_plans);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kSemanticError;
  }

  std::vector<oracle::ExecutabilityReport> reports;
  if (options.check_executability) {
    for (const Plan& p : result.plans) {
      reports.push_back(oracle::forward_executability(p.services, *catalog, request->provided));
    }
  }

  std::ostringstream text;
  if (options.json) {
    auto root = nlohmann::ordered_json::parse(to_json(*request, result));
    for (std::size_t i = 0; i < reports.size(); ++i) {
      nlohmann::ordered_json missing = nlohmann::ordered_json::object();
      for (std::size_t k = 0; k < reports[i].missing.size(); ++k) {
        if (!reports[i].missing[k].empty()) {
          missing[result.plans[i].services[k]] = reports[i].missing[k].to_string();
        }
      }
      root["plans"][i]["executable"] = reports[i].executable();
      root["plans"][i]["missing"] = std::move(missing);
    }
    text << root.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < result.plans.size(); ++i) {
      text << plan_line(result.plans[i]);
      if (options.check_executability) {
        text << " " << executability_note(result.plans[i], reports[i]);
      }
      text << "\n";
    }
    if (options.stats) {
      text << "states: " << result.stats.states << "  solutions: " << result.stats.solutions
           << "\n";
    }
  }
  out << text.str();
  return kSuccess;
}

int cmd_affinity(const AffinityOptions& options, std::ostream& out, std::ostream& err) {
  auto catalog = load_catalog(options.catalog, err);
  if (!catalog) return kUsageError;

  std::vector<std::string> names;
  std::vector<std::vector<std::string>> matrix;
  for (const Service& a : *catalog) {
    names.push_back(a.name());
    auto& row = matrix.emplace_back();
    for (const Service& b : *catalog) {
      row.push_back(a.name() == b.name() ? "-" : service_affinity(a, b).to_string());
    }
  }

  std::ostringstream text;
  if (options.json) {
    nlohmann::ordered_json root = {{"services", names}, {"matrix", matrix}};
    text << root.dump(2) << "\n";
  } else {
    text << "services: " << join(names, ", ") << "\n";
    for (std::size_t i = 0; i < names.size(); ++i) {
      text << names[i] << ": " << join(matrix[i], ", ") << "\n";
    }
  }
  out << text.str();
  return kSuccess;
}

int cmd_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err,
               const PlanFinder& finder) {
  auto request = parse_request(options.provided, options.required, err);
  if (!request) return kUsageError;
  auto catalog = load_catalog(options.catalog, err);
  if (!catalog) return kUsageError;

  std::ostringstream text;
  bool all_pass = true;
  auto verdict = [&](bool pass, const std::string& check) {
    all_pass = all_pass && pass;
    text << (pass ? paint("PASS", "32", options.color) : paint("FAIL", "31", options.color)) << " "
         << check << "\n";
  };

  try {
    const CompositionModel model = build_model(*catalog, options.init);

    const auto violations = check_model(model);
    verdict(violations.empty(), "model-invariants");
    for (const auto& v : violations) text << "  " << v << "\n";

    const SweepDelta delta = sweep_once(model);
    verdict(delta.empty(), "fixpoint");

    const PlanSearchResult searched =
        finder ? finder(model, *catalog, *request, std::nullopt)
               : find_plans(model, *catalog, *request);
    const auto brute = oracle::enumerate_plans_bruteforce(model, *catalog, *request);
    const auto diff = oracle::compare_plan_sets(searched.plans, brute);
    verdict(diff.empty(), "plan-sets (" + std::to_string(searched.plans.size()) + " planner, " +
                              std::to_string(brute.size()) + " oracle)");
    if (!diff.empty()) {
      text << "  planner:\n";
      for (const Plan& p : searched.plans) text << "    " << plan_line(p) << "\n";
      text << "  oracle:\n";
      for (const Plan& p : brute) text << "    " << plan_line(p) << "\n";
      for (const Plan& p : diff.only_in_planner) text << "  - only in planner: " << plan_line(p) << "\n";
      for (const Plan& p : diff.only_in_oracle) text << "  + only in oracle: " << plan_line(p) << "\n";
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kSemanticError;
  }

  out << text.str();
  if (!all_pass) {
    err << "oracle: checks failed\n";
    return kSemanticError;
  }
  return kSuccess;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Graph-based automatic web-service composition", "compograph"};
  app.require_subcommand(1);

  std::string input_format;
  auto add_catalog = [&](CLI::App* cmd, CatalogSource& source) {
    cmd->add_option("catalog", source.path, "Catalog file (.svc DSL or .json)")->required();
    cmd->add_option("--input-format", input_format, "Override format detection")
        ->check(CLI::IsMember({"dsl", "json"}));
  };

  BuildOptions build;
  auto* build_cmd = app.add_subcommand("build", "Build the composition model");
  add_catalog(build_cmd, build.catalog);
  build_cmd->add_option("--init", build.init, "Initial service")->required();
  build_cmd->add_option("--format", build.format, "Output format")
      ->check(CLI::IsMember({"dot", "json"}));
  build_cmd->add_option("--out", build.out_path, "Write to this file instead of stdout");

  PlanOptions plan;
  auto* plan_cmd = app.add_subcommand("plan", "Enumerate composition plans for a request");
  add_catalog(plan_cmd, plan.catalog);
  plan_cmd->add_option("--init", plan.init, "Initial service")->required();
  plan_cmd->add_option("--provided", plan.provided, "Provided types, comma separated");
  plan_cmd->add_option("--required", plan.required, "Required types, comma separated")->required();
  plan_cmd->add_flag("--json", plan.json, "Emit JSON");
  plan_cmd->add_flag("--stats", plan.stats, "Print search statistics");
  plan_cmd->add_flag("--check-executability", plan.check_executability,
                     "Annotate plans with forward executability");
  plan_cmd->add_option("--max-plans", plan.max_plans, "Stop after this many plans");

  AffinityOptions affinity;
  auto* affinity_cmd = app.add_subcommand("affinity", "Print the service affinity matrix");
  add_catalog(affinity_cmd, affinity.catalog);
  affinity_cmd->add_flag("--json", affinity.json, "Emit JSON");

  OracleOptions oracle_opts;
  oracle_opts.color = color;
  auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check the planner against brute force");
  add_catalog(oracle_cmd, oracle_opts.catalog);
  oracle_cmd->add_option("--init", oracle_opts.init, "Initial service")->required();
  oracle_cmd->add_option("--provided", oracle_opts.provided, "Provided types, comma separated");
  oracle_cmd->add_option("--required", oracle_opts.required, "Required types, comma separated")
      ->required();

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  std::optional<CatalogFormat> format;
  if (input_format == "json") format = CatalogFormat::json;
  if (input_format == "dsl") format = CatalogFormat::dsl;

  if (*build_cmd) {
    build.catalog.format = format;
    return cmd_build(build, out, err);
  }
  if (*plan_cmd) {
    plan.catalog.format = format;
    return cmd_plan(plan, out, err);
  }
  if (*affinity_cmd) {
    affinity.catalog.format = format;
    return cmd_affinity(affinity, out, err);
  }
  oracle_opts.catalog.format = format;
  return cmd_oracle(oracle_opts, out, err);
}

}  // namespace compograph::cli
