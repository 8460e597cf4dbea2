#include <compograph/model.hpp>

#include <compograph/error.hpp>

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace compograph {

CompositionModel::CompositionModel(Catalog catalog, Node initial, std::vector<Node> nodes,
                                   std::vector<std::pair<Node, Node>> edges)
    : catalog_(std::move(catalog)), nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());

  auto require_index = [this](const Node& n, const char* role) {
    auto idx = index_of(n);
    if (!idx) {
      throw std::invalid_argument(std::string(role) + " node '" + n.service +
                                  "' is not in the node set");
    }
    return *idx;
  };

  initial_ = require_index(initial, "initial");
  edges_.reserve(edges.size());
  for (const auto& [source, target] : edges) {
    edges_.push_back({require_index(source, "edge source"), require_index(target, "edge target")});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  preds_.resize(nodes_.size());
  succs_.resize(nodes_.size());
  for (const Edge& e : edges_) {
    preds_[e.target].push_back(e.source);
    succs_[e.source].push_back(e.target);
  }
  for (auto& p : preds_) std::sort(p.begin(), p.end());
}

std::optional<std::size_t> CompositionModel::index_of(const Node& node) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
  if (it == nodes_.end() || *it != node) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

bool CompositionModel::has_edge(std::size_t source, std::size_t target) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{source, target});
}

std::span<const std::size_t> CompositionModel::predecessors(std::size_t index) const {
  return preds_.at(index);
}

std::span<const std::size_t> CompositionModel::successors(std::size_t index) const {
  return succs_.at(index);
}

Node initial_node(const Service& service) {
  return Node{service.name(), service.inputs(), service.outputs()};
}

std::optional<Attachment> attach_candidate(const Node& from, const Service& service) {
  if (intersect(from.cum_outputs, service.inputs()).empty()) return std::nullopt;
  if (includes(service.outputs(), from.cum_outputs)) return std::nullopt;
  return Attachment{from, Node{service.name(), unite(from.cum_inputs, service.inputs()),
                               unite(from.cum_outputs, service.outputs())}};
}

CompositionModel build_model(const Catalog& catalog, std::string_view initial_service) {
  const Service* init = catalog.find(initial_service);
  if (init == nullptr) {
    throw Error(Errc::unknown_initial_service,
                "initial service '" + std::string(initial_service) + "' is not in catalog '" +
                    catalog.name() + "'");
  }

  const Node root = initial_node(*init);
  std::set<Node> nodes{root};
  std::set<std::pair<Node, Node>> edges;

  // Every new node has strictly more cumulative outputs than its source, so
  // the sweeps terminate once the type universe is exhausted.
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Node> sweep(nodes.begin(), nodes.end());
    for (const Node& from : sweep) {
      for (const Service& service : catalog) {
        if (service.name() == init->name()) continue;
        auto attached = attach_candidate(from, service);
        if (!attached) continue;
        changed |= nodes.insert(attached->target).second;
        changed |= edges.emplace(from, std::move(attached->target)).second;
      }
    }
  }

  return CompositionModel(catalog, root, std::vector<Node>(nodes.begin(), nodes.end()),
                          std::vector<std::pair<Node, Node>>(edges.begin(), edges.end()));
}

SweepDelta sweep_once(const CompositionModel& model) {
  const std::string& init_name = model.initial_node().service;
  std::set<Node> new_nodes;
  std::set<std::pair<std::size_t, Node>> new_edges;
  for (std::size_t i = 0; i < model.nodes().size(); ++i) {
    for (const Service& service : model.catalog()) {
      if (service.name() == init_name) continue;
      auto attached = attach_candidate(model.node(i), service);
      if (!attached) continue;
      auto target = model.index_of(attached->target);
      if (!target) {
        new_nodes.insert(attached->target);
        new_edges.emplace(i, std::move(attached->target));
      } else if (!model.has_edge(i, *target)) {
        new_edges.emplace(i, std::move(attached->target));
      }
    }
  }
  return {new_nodes.size(), new_edges.size()};
}

namespace {

std::string describe(const CompositionModel& m, std::size_t i) {
  const Node& n = m.node(i);
  return "n" + std::to_string(i) + " <" + n.service + " | " + n.cum_inputs.to_string() + " | " +
         n.cum_outputs.to_string() + ">";
}

}  // namespace

std::vector<std::string> check_model(const CompositionModel& m) {
  std::vector<std::string> report;
  const Catalog& catalog = m.catalog();
  const std::size_t init = m.initial();
  const std::string& init_name = m.initial_node().service;

  for (std::size_t i = 0; i < m.nodes().size(); ++i) {
    const Node& n = m.node(i);
    const Service* svc = catalog.find(n.service);
    if (svc == nullptr) {
      report.push_back(describe(m, i) + ": service not in catalog");
      continue;
    }
    if (!includes(svc->inputs(), n.cum_inputs) || !includes(svc->outputs(), n.cum_outputs)) {
      report.push_back(describe(m, i) + ": cumulative sets do not contain the service's own types");
    }
    if (i == init) continue;
    if (n.service == init_name) {
      report.push_back(describe(m, i) + ": only the initial node may use the initial service");
    }
    if (m.predecessors(i).empty()) {
      report.push_back(describe(m, i) + ": non-initial node has no incoming edge");
    }
  }

  for (const Edge& e : m.edges()) {
    const std::string label = describe(m, e.source) + " -> " + describe(m, e.target);
    if (e.source == e.target) {
      report.push_back(label + ": self loop");
      continue;
    }
    const Node& a = m.node(e.source);
    const Node& b = m.node(e.target);
    const Service* svc = catalog.find(b.service);
    if (svc == nullptr) continue;  // reported above
    if (intersect(a.cum_outputs, svc->inputs()).empty()) {
      report.push_back(label + ": target service consumes none of the source outputs");
    }
    if (includes(svc->outputs(), a.cum_outputs)) {
      report.push_back(label + ": target service adds no new outputs");
    }
    if (b.cum_inputs != unite(a.cum_inputs, svc->inputs()) ||
        b.cum_outputs != unite(a.cum_outputs, svc->outputs())) {
      report.push_back(label + ": target sets are not the unions of source and service sets");
    }
  }

  // Nodes with no incoming edge were already reported.
  std::vector<bool> reached(m.nodes().size(), false);
  std::deque<std::size_t> queue{init};
  reached[init] = true;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t next : m.successors(i)) {
      if (!reached[next]) {
        reached[next] = true;
        queue.push_back(next);
      }
    }
  }
  for (std::size_t i = 0; i < reached.size(); ++i) {
    if (!reached[i] && !m.predecessors(i).empty()) {
      report.push_back(describe(m, i) + ": unreachable from the initial node");
    }
  }
  return report;
}

}  // namespace compograph
