#pragma once

#include <compograph/catalog_io.hpp>
#include <compograph/model.hpp>
#include <compograph/planner.hpp>

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace compograph::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,     // bad flags, unreadable input, parse errors
  kSemanticError = 2,  // unknown initial service, oracle mismatch
};

struct CatalogSource {
  std::string path;
  std::optional<CatalogFormat> format;  // inferred from the extension when unset
};

struct BuildOptions {
  CatalogSource catalog;
  std::string init;
  std::string format = "dot";  // dot | json
  std::optional<std::string> out_path;
};

struct PlanOptions {
  CatalogSource catalog;
  std::string init;
  std::string provided;  // CSV
  std::string required;  // CSV
  bool json = false;
  bool stats = false;
  bool check_executability = false;
  std::optional<std::size_t> max_plans;
};

struct AffinityOptions {
  CatalogSource catalog;
  bool json = false;
};

struct OracleOptions {
  CatalogSource catalog;
  std::string init;
  std::string provided;
  std::string required;
  bool color = false;
};

// Stand-in for find_plans(); lets tests feed the oracle a faulty planner.
using PlanFinder = std::function<PlanSearchResult(const CompositionModel&, const Catalog&,
                                                  const Request&, std::optional<std::size_t>)>;

// Every command writes its result to `out` only when it succeeds.
int cmd_build(const BuildOptions& options, std::ostream& out, std::ostream& err);
int cmd_plan(const PlanOptions& options, std::ostream& out, std::ostream& err);
int cmd_affinity(const AffinityOptions& options, std::ostream& out, std::ostream& err);
int cmd_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err,
               const PlanFinder& finder = {});

// Parses argv (argv[0] is the program name) and dispatches.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err,
        bool color = false);

}  // namespace compograph::cli
