#pragma once

#include <compograph/model.hpp>
#include <compograph/rational.hpp>
#include <compograph/service.hpp>
#include <compograph/type_set.hpp>

namespace compograph {

// True iff some output of `producer` is an input of `consumer`.
bool can_compose(const Service& producer, const Service& consumer);

/// Share of `consumer`'s inputs covered by `producer`'s outputs,
/// |producer.out ∩ consumer.in| / |consumer.in|.
/// Throws Error(Errc::same_service) when both have the same name.
Rational service_affinity(const Service& producer, const Service& consumer);

/// Share of `required` already present in the node's cumulative outputs.
/// Throws Error(Errc::empty_required) for an empty goal.
Rational request_node_affinity(const TypeSet& required, const Node& node);

// Exact test for request_node_affinity(required, node) == 1, by cardinality.
bool fully_covers(const Node& node, const TypeSet& required);

}  // namespace compograph
