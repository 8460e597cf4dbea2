#include <compograph/planner.hpp>

#include <compograph/affinity.hpp>
#include <compograph/error.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <deque>
#include <set>

namespace compograph {

std::vector<std::string> invocations(const CompositionModel& model, const SearchState& state) {
  std::vector<std::string> out;
  out.reserve(state.chain.size());
  for (std::size_t i : state.chain) out.push_back(model.node(i).service);
  return out;
}

bool canonical_less(const Plan& a, const Plan& b) {
  if (a.services.size() != b.services.size()) return a.services.size() < b.services.size();
  if (a.services != b.services) return a.services < b.services;
  return a.chain < b.chain;
}

void sort_canonical(std::vector<Plan>& plans) {
  std::sort(plans.begin(), plans.end(), canonical_less);
}

SearchState start_state(const Catalog& catalog, const Request& request) {
  SearchState st;
  st.remaining_services.reserve(catalog.size());
  for (const Service& s : catalog) st.remaining_services.push_back(s.name());
  st.remaining_required = request.required;
  return st;
}

namespace {

// Both plan rules admit a node under the same two conditions.
bool admissible(const Node& node, const TypeSet& provided, const TypeSet& remaining) {
  return includes(provided, node.cum_inputs) && request_node_affinity(remaining, node).is_one();
}

SearchState consume(const SearchState& from, const Service& service, std::size_t node) {
  SearchState next;
  next.remaining_services.reserve(from.remaining_services.size());
  for (const auto& name : from.remaining_services) {
    if (name != service.name()) next.remaining_services.push_back(name);
  }
  next.remaining_required = remove(from.remaining_required, service.outputs());
  next.chain.reserve(from.chain.size() + 1);
  next.chain.push_back(node);
  next.chain.insert(next.chain.end(), from.chain.begin(), from.chain.end());
  return next;
}

bool available(const SearchState& st, const std::string& service) {
  return std::binary_search(st.remaining_services.begin(), st.remaining_services.end(), service);
}

}  // namespace

std::vector<SearchState> seed_states(const CompositionModel& model, const Catalog& catalog,
                                     const Request& request) {
  if (request.required.empty()) {
    throw Error(Errc::empty_required, "cannot seed plans for an empty goal");
  }
  const SearchState start = start_state(catalog, request);
  std::vector<SearchState> out;
  // Nodes are ordered by service name first, so this is (service, node) order.
  for (std::size_t i = 0; i < model.nodes().size(); ++i) {
    const Node& n = model.node(i);
    const Service* svc = catalog.find(n.service);
    if (svc == nullptr) continue;
    if (admissible(n, request.provided, request.required)) out.push_back(consume(start, *svc, i));
  }
  return out;
}

std::vector<SearchState> extend_state(const CompositionModel& model, const Catalog& catalog,
                                      const Request& request, const SearchState& state) {
  std::vector<SearchState> out;
  if (state.chain.empty() || state.is_goal()) return out;
  for (std::size_t p : model.predecessors(state.chain.front())) {
    const Node& n = model.node(p);
    if (!available(state, n.service)) continue;
    const Service* svc = catalog.find(n.service);
    if (svc == nullptr) continue;
    if (admissible(n, request.provided, state.remaining_required)) {
      out.push_back(consume(state, *svc, p));
    }
  }
  return out;
}

Plan to_plan(const CompositionModel& model, const SearchState& goal) {
  Plan plan;
  for (std::size_t i : goal.chain) {
    plan.services.push_back(model.node(i).service);
    plan.chain.push_back(model.node(i));
  }
  return plan;
}

PlanSearchResult find_plans(const CompositionModel& model, const Catalog& catalog,
                            const Request& request, std::optional<std::size_t> max_plans) {
  if (model.catalog() != catalog) {
    throw Error(Errc::catalog_mismatch, "model was built from catalog '" + model.catalog_name() +
                                            "', not from the given catalog '" + catalog.name() +
                                            "'");
  }

  PlanSearchResult result;
  const SearchState start = start_state(catalog, request);
  if (max_plans && *max_plans == 0) return result;
  if (start.is_goal()) {
    result.plans.push_back(Plan{});
    result.stats.solutions = 1;
    return result;
  }

  std::set<SearchState> seen{start};
  std::deque<const SearchState*> frontier{&*seen.begin()};
  while (!frontier.empty()) {
    const SearchState& st = *frontier.front();
    frontier.pop_front();
    auto successors = st.chain.empty() ? seed_states(model, catalog, request)
                                       : extend_state(model, catalog, request, st);
    for (auto& next : successors) {
      auto [it, inserted] = seen.insert(std::move(next));
      if (!inserted) continue;
      ++result.stats.states;
      if (it->is_goal()) {
        result.plans.push_back(to_plan(model, *it));
        ++result.stats.solutions;
        if (max_plans && result.stats.solutions >= *max_plans) {
          sort_canonical(result.plans);
          return result;
        }
      } else {
        frontier.push_back(&*it);
      }
    }
  }
  sort_canonical(result.plans);
  return result;
}

std::string to_json(const Request& request, const PlanSearchResult& result) {
  using nlohmann::ordered_json;
  ordered_json plans = ordered_json::array();
  for (const Plan& p : result.plans) {
    ordered_json nodes = ordered_json::array();
    for (const Node& n : p.chain) {
      nodes.push_back({{"service", n.service},
                       {"ti", n.cum_inputs.to_string()},
                       {"to", n.cum_outputs.to_string()}});
    }
    plans.push_back({{"services", p.services}, {"nodes", std::move(nodes)}});
  }
  ordered_json root = {
      {"request",
       {{"provided", request.provided.members()}, {"required", request.required.members()}}},
      {"plans", std::move(plans)},
      {"stats", {{"states", result.stats.states}, {"solutions", result.stats.solutions}}}};
  return root.dump(2) + "\n";
}

}  // namespace compograph
