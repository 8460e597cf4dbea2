#include <compograph/model.hpp>

#include <nlohmann/json.hpp>

namespace compograph {

namespace {

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const CompositionModel& model) {
  std::string out = "digraph \"" + dot_escape(model.catalog_name()) + "\" {\n";
  out += "  rankdir=LR;\n";
  out += "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < model.nodes().size(); ++i) {
    const Node& n = model.node(i);
    out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(n.service) +
           "\\nTi: " + dot_escape(n.cum_inputs.to_string()) +
           "\\nTo: " + dot_escape(n.cum_outputs.to_string()) + "\"";
    if (i == model.initial()) out += ", peripheries=2";
    out += "];\n";
  }
  for (const Edge& e : model.edges()) {
    out += "  n" + std::to_string(e.source) + " -> n" + std::to_string(e.target) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string to_json(const CompositionModel& model) {
  using nlohmann::ordered_json;
  ordered_json nodes = ordered_json::array();
  for (const Node& n : model.nodes()) {
    nodes.push_back({{"service", n.service},
                     {"ti", n.cum_inputs.to_string()},
                     {"to", n.cum_outputs.to_string()}});
  }
  ordered_json edges = ordered_json::array();
  for (const Edge& e : model.edges()) edges.push_back({e.source, e.target});
  ordered_json root = {{"catalog", model.catalog_name()},
                       {"initial", model.initial()},
                       {"nodes", std::move(nodes)},
                       {"edges", std::move(edges)}};
  return root.dump(2) + "\n";
}

}  // namespace compograph
