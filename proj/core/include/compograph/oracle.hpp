#pragma once

#include <compograph/model.hpp>
#include <compograph/planner.hpp>
#include <compograph/service.hpp>
#include <compograph/type_set.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace compograph::oracle {

/// Re-derives the plan set by plain recursion over the model: every node that
/// can seed a plan, then every admissible backward edge, with no state
/// deduplication. Shares no search code with find_plans(). Returns
/// deduplicated plans in canonical order.
std::vector<Plan> enumerate_plans_bruteforce(const CompositionModel& model,
                                             const Catalog& catalog,
                                             const Request& request);

struct ExecutabilityReport {
  std::vector<TypeSet> missing;  // per plan position: inputs not yet available

  bool executable() const noexcept;
};

/// Runs the plan left to right starting from `provided` and records, for each
/// step, which of the service's own inputs were not available.
/// Throws Error(Errc::unknown_service).
ExecutabilityReport forward_executability(std::span<const std::string> plan,
                                          const Catalog& catalog,
                                          const TypeSet& provided);

/// Deterministic catalog of `n_services` services named s1..sN over the types
/// t1..tK; each service gets 1 to 3 inputs and 1 to 3 outputs.
Catalog random_catalog(std::uint64_t seed, std::size_t n_services, std::size_t n_types);

struct PlanSetDiff {
  std::vector<Plan> only_in_planner;
  std::vector<Plan> only_in_oracle;

  bool empty() const noexcept { return only_in_planner.empty() && only_in_oracle.empty(); }
};

// Set comparison of two plan lists (order-insensitive).
PlanSetDiff compare_plan_sets(std::vector<Plan> planner, std::vector<Plan> oracle);

}  // namespace compograph::oracle
