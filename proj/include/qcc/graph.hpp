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

#ifndef QCC_GRAPH_HPP
#define QCC_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qcc/gf2.hpp"

namespace qcc {

/// Simple undirected graph on vertices 0..n-1.
struct Graph {
  using Vertex = std::uint32_t;
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  /// Original ids of the vertices, when the graph was extracted from a larger one.
  std::vector<Vertex> labels;

  /// Neighbour lists in edge order; entry k of adjacency()[v] pairs with incident_edges()[v][k].
  std::vector<std::vector<Vertex>> adjacency() const;
  std::vector<std::vector<std::size_t>> incident_edges() const;
};

/// Reads a graph off a boundary map whose columns all have weight 2.
Graph graph_from_boundary(const BinaryMatrix& d1);

bool is_bipartite(const Graph& g);
/// (min, max) vertex degree; (0, 0) for the empty graph.
std::pair<std::size_t, std::size_t> degree_range(const Graph& g);
/// Length of a shortest cycle, or nullopt for a forest.
std::optional<std::size_t> girth(const Graph& g);
std::size_t component_count(const Graph& g);
/// Edge indices of a BFS spanning forest (lowest root first).
std::vector<std::size_t> spanning_forest(const Graph& g);

/// Repeated coboundary tests on one graph, with the incidence lists built once.
class PotentialChecker {
 public:
  explicit PotentialChecker(Graph g);

  /// A vertex labelling phi with phi(u) + phi(v) = r(e) on every edge, or
  /// nullopt when r is not a coboundary. Linear time.
  std::optional<BitVector> potential(const BitVector& r) const;
  bool is_coboundary(const BitVector& r) const { return potential(r).has_value(); }
  const Graph& graph() const noexcept { return g_; }

 private:
  Graph g_;
  std::vector<std::vector<std::size_t>> inc_;
};

std::optional<BitVector> coboundary_potential(const Graph& g, const BitVector& r);
inline bool is_coboundary(const Graph& g, const BitVector& r) { return coboundary_potential(g, r).has_value(); }

}  // namespace qcc

#endif  // QCC_GRAPH_HPP
