#include <compograph/oracle.hpp>

#include <compograph/error.hpp>

#include <algorithm>
#include <iterator>
#include <random>
#include <set>

namespace compograph::oracle {

namespace {

// Deliberately separate from the planner: coverage is tested with plain
// inclusion rather than affinity, and edges are found by scanning the list.
bool can_use(const Node& node, const TypeSet& provided, const TypeSet& goal) {
  return includes(provided, node.cum_inputs) && includes(goal, node.cum_outputs);
}

bool plan_less(const Plan& a, const Plan& b) {
  if (a.services.size() != b.services.size()) return a.services.size() < b.services.size();
  if (a.services != b.services) return a.services < b.services;
  return a.chain < b.chain;
}

bool plan_equal(const Plan& a, const Plan& b) { return a == b; }

class Enumerator {
 public:
  Enumerator(const CompositionModel& model, const Catalog& catalog, const Request& request)
      : model_(model), catalog_(catalog), request_(request) {}

  std::vector<Plan> run() {
    if (request_.required.empty()) return {Plan{}};
    const auto& nodes = model_.nodes();
    for (std::size_t sink = 0; sink < nodes.size(); ++sink) {
      const Service* svc = catalog_.find(nodes[sink].service);
      if (svc == nullptr || !can_use(nodes[sink], request_.provided, request_.required)) continue;
      std::vector<std::size_t> chain{sink};
      std::set<std::string> used{svc->name()};
      descend(chain, used, remove(request_.required, svc->outputs()));
    }
    std::vector<Plan> plans;
    for (const auto& chain : found_) {
      Plan p;
      for (std::size_t i : chain) {
        p.services.push_back(nodes[i].service);
        p.chain.push_back(nodes[i]);
      }
      plans.push_back(std::move(p));
    }
    std::sort(plans.begin(), plans.end(), plan_less);
    return plans;
  }

 private:
  // `chain` is source -> sink; its front is the node reached last.
  void descend(std::vector<std::size_t>& chain, std::set<std::string>& used,
               const TypeSet& remaining) {
    if (remaining.empty()) {
      found_.insert(chain);
      return;
    }
    const std::size_t head = chain.front();
    for (const Edge& e : model_.edges()) {
      if (e.target != head) continue;
      const Node& n = model_.nodes()[e.source];
      if (used.count(n.service) != 0) continue;
      const Service* svc = catalog_.find(n.service);
      if (svc == nullptr || !can_use(n, request_.provided, remaining)) continue;
      chain.insert(chain.begin(), e.source);
      used.insert(n.service);
      descend(chain, used, remove(remaining, svc->outputs()));
      used.erase(n.service);
      chain.erase(chain.begin());
    }
  }

  const CompositionModel& model_;
  const Catalog& catalog_;
  const Request& request_;
  std::set<std::vector<std::size_t>> found_;
};

}  // namespace

std::vector<Plan> enumerate_plans_bruteforce(const CompositionModel& model,
                                             const Catalog& catalog, const Request& request) {
  return Enumerator(model, catalog, request).run();
}

bool ExecutabilityReport::executable() const noexcept {
  return std::all_of(missing.begin(), missing.end(), [](const TypeSet& m) { return m.empty(); });
}

ExecutabilityReport forward_executability(std::span<const std::string> plan,
                                          const Catalog& catalog, const TypeSet& provided) {
  ExecutabilityReport report;
  TypeSet available = provided;
  for (const std::string& name : plan) {
    const Service& svc = catalog.at(name);
    report.missing.push_back(remove(svc.inputs(), available));
    available = unite(available, svc.outputs());
  }
  return report;
}

Catalog random_catalog(std::uint64_t seed, std::size_t n_services, std::size_t n_types) {
  if (n_services == 0 || n_types == 0) {
    throw std::invalid_argument("random_catalog needs at least one service and one type");
  }
  // mt19937_64 output is fully specified; distributions are not, so draws are
  // reduced by modulo to stay identical across standard libraries.
  std::mt19937_64 rng(seed);
  auto draw = [&rng](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

  std::vector<std::string> universe;
  for (std::size_t t = 1; t <= n_types; ++t) universe.push_back("t" + std::to_string(t));

  auto pick = [&](std::size_t count) {
    std::vector<std::string> pool = universe;
    for (std::size_t j = 0; j < count; ++j) std::swap(pool[j], pool[j + draw(pool.size() - j)]);
    pool.resize(count);
    return TypeSet(std::span<const std::string>(pool));
  };

  std::vector<Service> services;
  for (std::size_t k = 1; k <= n_services; ++k) {
    const std::size_t n_in = std::min<std::size_t>(1 + draw(3), n_types);
    const std::size_t n_out = std::min<std::size_t>(1 + draw(3), n_types);
    TypeSet inputs = pick(n_in);
    TypeSet outputs = pick(n_out);
    services.emplace_back("s" + std::to_string(k), std::move(inputs), std::move(outputs));
  }
  return Catalog("random-" + std::to_string(seed), std::move(services));
}

PlanSetDiff compare_plan_sets(std::vector<Plan> planner, std::vector<Plan> oracle) {
  for (auto* v : {&planner, &oracle}) {
    std::sort(v->begin(), v->end(), plan_less);
    v->erase(std::unique(v->begin(), v->end(), plan_equal), v->end());
  }
  PlanSetDiff diff;
  std::set_difference(planner.begin(), planner.end(), oracle.begin(), oracle.end(),
                      std::back_inserter(diff.only_in_planner), plan_less);
  std::set_difference(oracle.begin(), oracle.end(), planner.begin(), planner.end(),
                      std::back_inserter(diff.only_in_oracle), plan_less);
  return diff;
}

}  // namespace compograph::oracle
