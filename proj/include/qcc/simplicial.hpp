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

#ifndef QCC_SIMPLICIAL_HPP
#define QCC_SIMPLICIAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qcc/chain.hpp"
#include "qcc/graph.hpp"
#include "qcc/sparse_kernel.hpp"

namespace qcc {

/// Simplicial complex on vertices 0..n-1.
///
/// The p-faces are strictly increasing (p+1)-tuples kept in lexicographic
/// order, stored flat. Face p-tuples index the rows/columns of the derived
/// chain complex.
class SimplicialComplex {
 public:
  using Vertex = std::uint32_t;

  SimplicialComplex() = default;
  /// faces[p - 1] lists the p-faces for p >= 1; vertices are implicit.
  /// Tuples are sorted, face lists sorted; downward closure is checked.
  SimplicialComplex(std::size_t n_vertices, std::vector<std::vector<std::vector<Vertex>>> faces);
  /// Downward closure of the given faces.
  static SimplicialComplex from_maximal_faces(std::size_t n_vertices,
                                              const std::vector<std::vector<Vertex>>& faces);

  std::size_t dimension() const noexcept { return flat_.size(); }
  std::size_t vertex_count() const noexcept { return n_vertices_; }
  std::size_t face_count(std::size_t p) const;
  std::span<const Vertex> face(std::size_t p, std::size_t i) const;
  /// Index of a sorted tuple among the p-faces (p = tuple size - 1).
  std::optional<std::size_t> index_of(std::span<const Vertex> tuple) const;

  const ChainComplex& chain() const noexcept { return chain_; }
  /// 1-skeleton as a graph; edge k is 1-face k.
  Graph graph() const;

 private:
  std::size_t n_vertices_ = 0;
  std::vector<std::vector<Vertex>> flat_;  // flat_[p - 1]: p-faces, (p+1) entries each
  ChainComplex chain_;
};

/// All cliques of size <= max_dim + 1 of a simple graph.
SimplicialComplex clique_complex(std::size_t n_vertices,
                                 const std::vector<std::pair<SimplicialComplex::Vertex, SimplicialComplex::Vertex>>& edges,
                                 std::size_t max_dim);

/// Graph on the neighbours of v; (u, w) is an edge iff {u, v, w} is a triangle.
/// Vertices are relabelled 0..deg-1 in increasing order; labels keep the ids.
Graph link(const SimplicialComplex& x, SimplicialComplex::Vertex v);

SimplicialComplex skeleton(const SimplicialComplex& x, std::size_t k);

struct DegreeRange {
  std::size_t min = 0;
  std::size_t max = 0;
};
/// Entry p: how many (p+1)-faces contain a p-face, over all p-faces; p < dim.
std::vector<DegreeRange> degree_stats(const SimplicialComplex& x);

/// Triangulated r x c torus: vertex (i, j) has id i * c + j; each square is
/// cut along its (i, j)-(i+1, j+1) diagonal.
SimplicialComplex fixture_torus(std::size_t r, std::size_t c);

/// H^1 of a complex whose first boundary map is a graph incidence.
struct CohomologyReport {
  std::size_t dimension = 0;
  std::size_t guesses = 0;
  std::vector<std::size_t> tree_edges;
  /// Cocycles vanishing on the tree, one per class; only when requested.
  std::vector<BitVector> basis;
};

/// Solves delta_1 f = 0 with f pinned to zero on a spanning forest; every
/// cohomology class has exactly one such representative.
CohomologyReport gauge_fixed_cohomology(const ChainComplex& x, const PropagationOptions& options = {});

}  // namespace qcc

#endif  // QCC_SIMPLICIAL_HPP
