#pragma once

#include <vector>

#include "adspace/rational.hpp"

namespace adspace {

struct FlowEdge {
  int from = 0;
  int to = 0;
  Rational capacity;
};

struct FlowNetwork {
  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<FlowEdge> edges;
};

struct MaxFlowResult {
  Rational value;
  std::vector<Rational> flow;  // parallel to network.edges
};

/// Exact maximum flow over rationals (shortest augmenting paths). The
/// augmentation count is bounded by nodes * edges regardless of capacity
/// values, so exact arithmetic costs nothing in termination.
MaxFlowResult max_flow(const FlowNetwork& network);

}  // namespace adspace
