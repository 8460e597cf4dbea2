#pragma once

#include <compograph/model.hpp>
#include <compograph/service.hpp>
#include <compograph/type_set.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace compograph {

struct Request {
  TypeSet provided;
  TypeSet required;  // may be empty: the start state is then already a goal

  friend bool operator==(const Request&, const Request&) = default;
};

/// One point of the backward plan search.
///
/// `chain` holds model node indices ordered source -> sink; plans grow by
/// prepending, so `chain.front()` is the node added last. The service names
/// along the chain are the invocations.
struct SearchState {
  std::vector<std::string> remaining_services;  // sorted
  TypeSet remaining_required;
  std::vector<std::size_t> chain;

  bool is_goal() const noexcept { return remaining_required.empty(); }

  friend bool operator==(const SearchState&, const SearchState&) = default;
  friend auto operator<=>(const SearchState&, const SearchState&) = default;
};

std::vector<std::string> invocations(const CompositionModel& model,
                                     const SearchState& state);

struct Plan {
  std::vector<std::string> services;  // source -> sink
  std::vector<Node> chain;            // witnessing nodes, aligned with services

  friend bool operator==(const Plan&, const Plan&) = default;
};

// Shorter plans first, then lexicographic by services, then by chain.
bool canonical_less(const Plan& a, const Plan& b);
void sort_canonical(std::vector<Plan>& plans);

struct SearchStats {
  std::size_t states = 1;  // distinct states generated, start state included
  std::size_t solutions = 0;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct PlanSearchResult {
  std::vector<Plan> plans;  // canonical order
  SearchStats stats;
};

// The start state: every service available, nothing chosen yet.
SearchState start_state(const Catalog& catalog, const Request& request);

/// Plan seeds: one state per node whose cumulative inputs include the
/// provided types and whose cumulative outputs cover the whole goal. The goal
/// shrinks by the seeded service's own outputs. Canonical order.
/// Throws Error(Errc::empty_required) for an empty goal.
std::vector<SearchState> seed_states(const CompositionModel& model,
                                     const Catalog& catalog,
                                     const Request& request);

/// Backward extensions of `state` along edges into its most recently added
/// node, under the same coverage conditions against the remaining goal.
std::vector<SearchState> extend_state(const CompositionModel& model,
                                      const Catalog& catalog,
                                      const Request& request,
                                      const SearchState& state);

/// Breadth-first enumeration of every plan reachable by seeding and
/// extending. States are deduplicated; goals are not expanded. When
/// `max_plans` is given the search stops at that many goals.
/// Throws Error(Errc::catalog_mismatch) unless `model` was built from `catalog`.
PlanSearchResult find_plans(const CompositionModel& model, const Catalog& catalog,
                            const Request& request,
                            std::optional<std::size_t> max_plans = std::nullopt);

Plan to_plan(const CompositionModel& model, const SearchState& goal);

// `{"request": ..., "plans": [...], "stats": {...}}`
std::string to_json(const Request& request, const PlanSearchResult& result);

}  // namespace compograph
