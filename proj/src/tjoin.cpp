// Copyright 2026 The qcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/maximum_weighted_matching.hpp>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>

#include "qcc/decoders.hpp"

namespace qcc {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

struct Tree {
  std::vector<std::uint32_t> dist;
  std::vector<std::size_t> parent_edge;
};

Tree bfs(const std::vector<std::vector<Graph::Vertex>>& adj, const std::vector<std::vector<std::size_t>>& inc,
         Graph::Vertex root) {
  Tree t;
  t.dist.assign(adj.size(), kUnreached);
  t.parent_edge.assign(adj.size(), std::size_t(-1));
  std::deque<Graph::Vertex> queue{root};
  t.dist[root] = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < adj[u].size(); ++k) {
      auto w = adj[u][k];
      if (t.dist[w] != kUnreached) continue;
      t.dist[w] = t.dist[u] + 1;
      t.parent_edge[w] = inc[u][k];
      queue.push_back(w);
    }
  }
  return t;
}

// Exact minimum perfect matching by DP over subsets of the odd vertices.
std::vector<std::size_t> match_dp(const std::vector<std::vector<std::uint32_t>>& d) {
  const std::size_t k = d.size();
  const std::size_t full = (std::size_t{1} << k) - 1;
  constexpr std::uint64_t inf = std::numeric_limits<std::uint64_t>::max() / 4;
  std::vector<std::uint64_t> best(full + 1, inf);
  std::vector<std::uint8_t> choice(full + 1, 0);
  best[0] = 0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) & 1) continue;
    const auto i = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t rest = mask & ~(std::size_t{1} << i);
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!((rest >> j) & 1) || d[i][j] == kUnreached) continue;
      const auto prev = best[rest & ~(std::size_t{1} << j)];
      if (prev == inf) continue;
      const auto cand = prev + d[i][j];
      if (cand < best[mask]) {
        best[mask] = cand;
        choice[mask] = static_cast<std::uint8_t>(j);
      }
    }
  }
  if (best[full] == inf) throw std::invalid_argument("tjoin_decode: odd set cannot be matched");
  std::vector<std::size_t> mate(k);
  for (std::size_t mask = full; mask;) {
    const auto i = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t j = choice[mask];
    mate[i] = j;
    mate[j] = i;
    mask &= ~((std::size_t{1} << i) | (std::size_t{1} << j));
  }
  return mate;
}

// Blossom matching on the metric closure, weights shifted so perfect matchings dominate.
std::vector<std::size_t> match_blossom(const std::vector<std::vector<std::uint32_t>>& d) {
  using namespace boost;
  using G = adjacency_list<vecS, vecS, undirectedS, no_property, property<edge_weight_t, long long>>;
  const std::size_t k = d.size();
  long long span = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (d[i][j] != kUnreached) span += d[i][j];
  G g(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (d[i][j] != kUnreached) add_edge(i, j, span - static_cast<long long>(d[i][j]), g);
  std::vector<graph_traits<G>::vertex_descriptor> mate(k);
  maximum_weighted_matching(g, &mate[0]);
  std::vector<std::size_t> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (mate[i] == graph_traits<G>::null_vertex()) throw std::invalid_argument("tjoin_decode: odd set cannot be matched");
    out[i] = mate[i];
  }
  return out;
}

}  // namespace

BitVector tjoin_decode(const Graph& g, const BitVector& odd_set, const TJoinOptions& options) {
  if (odd_set.size() != g.n) throw std::invalid_argument("tjoin_decode: odd set length differs from vertex count");
  BitVector out(g.edges.size());
  const auto odd = odd_set.support();
  if (odd.empty()) return out;
  if (odd.size() % 2) throw std::invalid_argument("tjoin_decode: odd set has odd size");

  const auto adj = g.adjacency();
  const auto inc = g.incident_edges();
  std::vector<Tree> trees;
  trees.reserve(odd.size());
  for (auto v : odd) trees.push_back(bfs(adj, inc, static_cast<Graph::Vertex>(v)));

  // Parity per component.
  std::vector<char> seen(odd.size(), 0);
  for (std::size_t i = 0; i < odd.size(); ++i) {
    if (seen[i]) continue;
    std::size_t count = 0;
    for (std::size_t j = i; j < odd.size(); ++j) {
      if (trees[i].dist[odd[j]] != kUnreached) {
        seen[j] = 1;
        ++count;
      }
    }
    if (count % 2) throw std::invalid_argument("tjoin_decode: a component holds an odd number of odd vertices");
  }

  std::vector<std::vector<std::uint32_t>> d(odd.size(), std::vector<std::uint32_t>(odd.size()));
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = 0; j < odd.size(); ++j) d[i][j] = trees[i].dist[odd[j]];

  const auto mate = odd.size() <= options.dp_limit ? match_dp(d) : match_blossom(d);
  for (std::size_t i = 0; i < odd.size(); ++i) {
    const std::size_t j = mate[i];
    if (j < i) continue;
    // Walk from odd[j] back to the root odd[i].
    auto v = static_cast<Graph::Vertex>(odd[j]);
    while (v != odd[i]) {
      const auto e = trees[i].parent_edge[v];
      out.flip(e);
      v = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
    }
  }
  return out;
}

}  // namespace qcc
