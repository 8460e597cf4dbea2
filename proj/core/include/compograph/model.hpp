#pragma once

#include <compograph/service.hpp>
#include <compograph/type_set.hpp>

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace compograph {

/// Graph vertex: a service together with the types accumulated along the path
/// that reached it. Identity is the whole triple, so the same service can
/// appear in several nodes.
struct Node {
  std::string service;
  TypeSet cum_inputs;
  TypeSet cum_outputs;

  friend bool operator==(const Node&, const Node&) = default;
  friend auto operator<=>(const Node&, const Node&) = default;
};

// Indices into CompositionModel::nodes().
struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable composition graph. Nodes are stored in canonical order (service
/// name, then cumulative inputs, then cumulative outputs) and edges refer to
/// them by index, sorted by (source, target).
class CompositionModel {
 public:
  // Canonicalizes and deduplicates the given nodes and edges. Throws
  // std::invalid_argument if the initial node or an edge endpoint is not
  // among `nodes`. Semantic invariants are not enforced here; see
  // check_model().
  CompositionModel(Catalog catalog, Node initial, std::vector<Node> nodes,
                   std::vector<std::pair<Node, Node>> edges);

  const Catalog& catalog() const noexcept { return catalog_; }
  const std::string& catalog_name() const noexcept { return catalog_.name(); }

  std::size_t initial() const noexcept { return initial_; }
  const Node& initial_node() const noexcept { return nodes_[initial_]; }

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Node& node(std::size_t index) const { return nodes_.at(index); }

  std::optional<std::size_t> index_of(const Node& node) const;
  bool has_edge(std::size_t source, std::size_t target) const;

  // Sources of edges into `index`, ascending.
  std::span<const std::size_t> predecessors(std::size_t index) const;
  // Targets of edges out of `index`, ascending.
  std::span<const std::size_t> successors(std::size_t index) const;

 private:
  Catalog catalog_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::size_t initial_ = 0;
  std::vector<std::vector<std::size_t>> preds_;
  std::vector<std::vector<std::size_t>> succs_;
};

// The root of a model: the service's own inputs and outputs.
Node initial_node(const Service& service);

// The edge source -> target produced by a successful attachment.
struct Attachment {
  Node source;
  Node target;
};

/// Tries to attach `service` after `from`. Succeeds iff the service consumes
/// at least one type in `from.cum_outputs` and contributes at least one output
/// not already there.
std::optional<Attachment> attach_candidate(const Node& from, const Service& service);

/// Grows the model from the named service's initial node until no
/// (node, service) pair yields a new node or edge. The initial service is
/// never attached again. Throws Error(Errc::unknown_initial_service).
CompositionModel build_model(const Catalog& catalog, std::string_view initial_service);

struct SweepDelta {
  std::size_t new_nodes = 0;
  std::size_t new_edges = 0;

  bool empty() const noexcept { return new_nodes == 0 && new_edges == 0; }
};

// Runs one full attach pass over `model` and counts what it would add.
SweepDelta sweep_once(const CompositionModel& model);

// Empty iff every structural and derivation invariant of the model holds.
std::vector<std::string> check_model(const CompositionModel& model);

// Graphviz digraph, node ids n0..nK in canonical node order.
std::string to_dot(const CompositionModel& model);

// {"catalog", "initial", "nodes": [{service, ti, to}], "edges": [[s, t]]}
std::string to_json(const CompositionModel& model);

}  // namespace compograph
