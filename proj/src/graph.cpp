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

#include "qcc/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace qcc {

std::vector<std::vector<Graph::Vertex>> Graph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<std::vector<std::size_t>> Graph::incident_edges() const {
  std::vector<std::vector<std::size_t>> inc(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    inc[edges[e].first].push_back(e);
    inc[edges[e].second].push_back(e);
  }
  return inc;
}

Graph graph_from_boundary(const BinaryMatrix& d1) {
  Graph g;
  g.n = d1.rows();
  const auto cols = d1.transpose();
  g.edges.reserve(cols.rows());
  for (std::size_t e = 0; e < cols.rows(); ++e) {
    if (cols.row_weight(e) != 2) {
      throw std::invalid_argument("graph_from_boundary: column " + std::to_string(e) + " does not have weight 2");
    }
    g.edges.emplace_back(cols.row(e)[0], cols.row(e)[1]);
  }
  return g;
}

bool is_bipartite(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<int> side(g.n, -1);
  for (std::size_t s = 0; s < g.n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto v : adj[u]) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::pair<std::size_t, std::size_t> degree_range(const Graph& g) {
  if (g.n == 0) return {0, 0};
  std::vector<std::size_t> deg(g.n, 0);
  for (const auto& [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  const auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
  return {*lo, *hi};
}

std::optional<std::size_t> girth(const Graph& g) {
  const auto adj = g.adjacency();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.n), parent(g.n);
  for (std::size_t s = 0; s < g.n; ++s) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
    dist[s] = 0;
    parent[s] = g.n;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      bool skipped_parent = false;
      for (auto v : adj[u]) {
        if (v == parent[u] && !skipped_parent) {
          skipped_parent = true;  // a parallel edge back to the parent still closes a cycle
          continue;
        }
        if (dist[v] == std::numeric_limits<std::size_t>::max()) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

std::size_t component_count(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<char> seen(g.n, 0);
  std::size_t count = 0;
  for (std::size_t s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto v : adj[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
  }
  return count;
}

std::vector<std::size_t> spanning_forest(const Graph& g) {
  const auto inc = g.incident_edges();
  std::vector<char> seen(g.n, 0);
  std::vector<std::size_t> tree;
  for (std::size_t s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto e : inc[u]) {
        const auto& [a, b] = g.edges[e];
        const std::size_t v = a == u ? b : a;
        if (!seen[v]) {
          seen[v] = 1;
          tree.push_back(e);
          queue.push_back(v);
        }
      }
    }
  }
  return tree;
}

PotentialChecker::PotentialChecker(Graph g) : g_(std::move(g)), inc_(g_.incident_edges()) {}

std::optional<BitVector> PotentialChecker::potential(const BitVector& r) const {
  const Graph& g = g_;
  if (r.size() != g.edges.size()) throw std::invalid_argument("coboundary_potential: length mismatch");
  BitVector phi(g.n);
  if (r.none()) return phi;
  std::vector<char> seen(g.n, 0);
  std::vector<std::size_t> queue;
  queue.reserve(g.n);
  for (std::size_t s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto u = queue[head];
      for (auto e : inc_[u]) {
        const auto& [a, b] = g.edges[e];
        const std::size_t v = a == u ? b : a;
        const bool want = phi.get(u) ^ r.get(e);
        if (!seen[v]) {
          seen[v] = 1;
          phi.set(v, want);
          queue.push_back(v);
        } else if (phi.get(v) != want) {
          return std::nullopt;
        }
      }
    }
  }
  return phi;
}

std::optional<BitVector> coboundary_potential(const Graph& g, const BitVector& r) {
  return PotentialChecker(g).potential(r);
}

}  // namespace qcc
