#include "adspace/flow.hpp"

#include <deque>

#include "adspace/errors.hpp"

namespace adspace {

MaxFlowResult max_flow(const FlowNetwork& network) {
  const int n = network.node_count;
  if (network.source < 0 || network.source >= n || network.sink < 0 ||
      network.sink >= n || network.source == network.sink) {
    throw ValidationError(-1, "flow_network",
                          "bad source/sink in flow network");
  }

  // Residual edges in pairs: 2i forward, 2i+1 backward.
  const int m = (int)network.edges.size();
  std::vector<Rational> residual(2 * m);
  std::vector<int> head(2 * m);
  std::vector<std::vector<int>> adjacency(n);
  for (int i = 0; i < m; ++i) {
    const FlowEdge& e = network.edges[i];
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n ||
        e.capacity < 0) {
      throw ValidationError(-1, "flow_network", "bad edge in flow network");
    }
    residual[2 * i] = e.capacity;
    residual[2 * i + 1] = 0;
    head[2 * i] = e.to;
    head[2 * i + 1] = e.from;
    adjacency[e.from].push_back(2 * i);
    adjacency[e.to].push_back(2 * i + 1);
  }

  MaxFlowResult result;
  result.value = 0;
  std::vector<int> via(n);
  while (true) {
    std::fill(via.begin(), via.end(), -1);
    via[network.source] = -2;
    std::deque<int> queue{network.source};
    while (!queue.empty() && via[network.sink] == -1) {
      int u = queue.front();
      queue.pop_front();
      for (int e : adjacency[u]) {
        if (residual[e] > 0 && via[head[e]] == -1) {
          via[head[e]] = e;
          queue.push_back(head[e]);
        }
      }
    }
    if (via[network.sink] == -1) break;

    Rational bottleneck;
    bool first = true;
    for (int v = network.sink; v != network.source; v = head[via[v] ^ 1]) {
      if (first || residual[via[v]] < bottleneck) bottleneck = residual[via[v]];
      first = false;
    }
    for (int v = network.sink; v != network.source; v = head[via[v] ^ 1]) {
      residual[via[v]] -= bottleneck;
      residual[via[v] ^ 1] += bottleneck;
    }
    result.value += bottleneck;
  }

  result.flow.resize(m);
  for (int i = 0; i < m; ++i) result.flow[i] = residual[2 * i + 1];
  return result;
}

}  // namespace adspace
