#include <compograph/affinity.hpp>

#include <compograph/error.hpp>

namespace compograph {

bool can_compose(const Service& producer, const Service& consumer) {
  return !intersect(producer.outputs(), consumer.inputs()).empty();
}

Rational service_affinity(const Service& producer, const Service& consumer) {
  if (producer.name() == consumer.name()) {
    throw Error(Errc::same_service, "affinity of '" + producer.name() + "' with itself");
  }
  // Service inputs are never empty.
  return Rational(card(intersect(producer.outputs(), consumer.inputs())), card(consumer.inputs()));
}

Rational request_node_affinity(const TypeSet& required, const Node& node) {
  if (required.empty()) throw Error(Errc::empty_required, "affinity against an empty goal");
  return Rational(card(intersect(required, node.cum_outputs)), card(required));
}

bool fully_covers(const Node& node, const TypeSet& required) {
  return card(intersect(required, node.cum_outputs)) == card(required);
}

}  // namespace compograph
