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

#include "qcc/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace qcc {

namespace {

using Vertex = SimplicialComplex::Vertex;
using Tuple = std::vector<Vertex>;

std::vector<Vertex> flatten_sorted(std::vector<Tuple> faces, std::size_t width, std::size_t n_vertices) {
  for (auto& f : faces) {
    if (f.size() != width) throw std::invalid_argument("SimplicialComplex: face of wrong size");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw std::invalid_argument("SimplicialComplex: repeated vertex in a face");
    }
    if (f.back() >= n_vertices) throw std::out_of_range("SimplicialComplex: vertex id out of range");
  }
  std::sort(faces.begin(), faces.end());
  if (std::adjacent_find(faces.begin(), faces.end()) != faces.end()) {
    throw std::invalid_argument("SimplicialComplex: duplicate face");
  }
  std::vector<Vertex> flat;
  flat.reserve(faces.size() * width);
  for (const auto& f : faces) flat.insert(flat.end(), f.begin(), f.end());
  return flat;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t n_vertices, std::vector<std::vector<Tuple>> faces)
    : n_vertices_(n_vertices) {
  while (!faces.empty() && faces.back().empty()) faces.pop_back();
  flat_.reserve(faces.size());
  for (std::size_t k = 0; k < faces.size(); ++k) {
    flat_.push_back(flatten_sorted(std::move(faces[k]), k + 2, n_vertices));
  }

  std::vector<std::size_t> counts{n_vertices_};
  std::vector<BinaryMatrix> maps;
  Tuple facet;
  for (std::size_t p = 1; p <= dimension(); ++p) {
    counts.push_back(face_count(p));
    std::vector<std::vector<BinaryMatrix::Index>> cols(face_count(p));
    for (std::size_t i = 0; i < face_count(p); ++i) {
      const auto f = face(p, i);
      for (std::size_t drop = 0; drop <= p; ++drop) {
        facet.clear();
        for (std::size_t j = 0; j <= p; ++j)
          if (j != drop) facet.push_back(f[j]);
        const auto idx = index_of(facet);
        if (!idx) {
          throw std::invalid_argument("SimplicialComplex: face set is not downward closed at grade " +
                                      std::to_string(p));
        }
        cols[i].push_back(static_cast<BinaryMatrix::Index>(*idx));
      }
    }
    maps.push_back(BinaryMatrix::from_row_lists(face_count(p - 1), std::move(cols)).transpose());
  }
  chain_ = ChainComplex(std::move(counts), std::move(maps));
}

SimplicialComplex SimplicialComplex::from_maximal_faces(std::size_t n_vertices, const std::vector<Tuple>& faces) {
  std::vector<std::set<Tuple>> by_dim;
  for (auto f : faces) {
    std::sort(f.begin(), f.end());
    const std::size_t k = f.size();
    if (k == 0) continue;
    if (k > 30) throw std::invalid_argument("from_maximal_faces: face too large");
    if (by_dim.size() < k - 1) by_dim.resize(k - 1);
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      if (std::popcount(mask) < 2) continue;
      Tuple sub;
      for (std::size_t j = 0; j < k; ++j)
        if ((mask >> j) & 1u) sub.push_back(f[j]);
      by_dim[sub.size() - 2].insert(std::move(sub));
    }
  }
  std::vector<std::vector<Tuple>> lists;
  for (auto& s : by_dim) lists.emplace_back(s.begin(), s.end());
  return SimplicialComplex(n_vertices, std::move(lists));
}

std::size_t SimplicialComplex::face_count(std::size_t p) const {
  if (p == 0) return n_vertices_;
  if (p > dimension()) return 0;
  return flat_[p - 1].size() / (p + 1);
}

std::span<const Vertex> SimplicialComplex::face(std::size_t p, std::size_t i) const {
  if (p == 0) throw std::invalid_argument("SimplicialComplex::face: vertices are implicit");
  return std::span<const Vertex>(flat_.at(p - 1)).subspan(i * (p + 1), p + 1);
}

std::optional<std::size_t> SimplicialComplex::index_of(std::span<const Vertex> tuple) const {
  if (tuple.empty()) return std::nullopt;
  const std::size_t p = tuple.size() - 1;
  if (p == 0) {
    if (tuple[0] < n_vertices_) return tuple[0];
    return std::nullopt;
  }
  if (p > dimension()) return std::nullopt;
  std::size_t lo = 0, hi = face_count(p);
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto f = face(p, mid);
    if (std::lexicographical_compare(f.begin(), f.end(), tuple.begin(), tuple.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < face_count(p) && std::equal(tuple.begin(), tuple.end(), face(p, lo).begin())) return lo;
  return std::nullopt;
}

Graph SimplicialComplex::graph() const {
  Graph g;
  g.n = n_vertices_;
  for (std::size_t e = 0; e < face_count(1); ++e) {
    const auto f = face(1, e);
    g.edges.emplace_back(f[0], f[1]);
  }
  return g;
}

SimplicialComplex clique_complex(std::size_t n_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges,
                                 std::size_t max_dim) {
  std::vector<std::vector<Vertex>> higher(n_vertices);
  for (const auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("clique_complex: self-loop");
    if (std::max(u, v) >= n_vertices) throw std::out_of_range("clique_complex: vertex id out of range");
    higher[std::min(u, v)].push_back(std::max(u, v));
  }
  for (auto& h : higher) {
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
  }
  std::vector<std::vector<Tuple>> faces(max_dim);
  Tuple clique;
  // Extends `clique` by each candidate; candidates are common higher neighbours, ascending.
  auto expand = [&](auto&& self, const std::vector<Vertex>& candidates) -> void {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Vertex w = candidates[i];
      clique.push_back(w);
      faces[clique.size() - 2].push_back(clique);
      if (clique.size() <= max_dim) {
        std::vector<Vertex> next;
        std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1, candidates.end(),
                              higher[w].begin(), higher[w].end(), std::back_inserter(next));
        if (!next.empty()) self(self, next);
      }
      clique.pop_back();
    }
  };
  if (max_dim > 0) {
    for (Vertex v = 0; v < n_vertices; ++v) {
      clique.assign(1, v);
      expand(expand, higher[v]);
    }
  }
  return SimplicialComplex(n_vertices, std::move(faces));
}

Graph link(const SimplicialComplex& x, Vertex v) {
  if (v >= x.vertex_count()) throw std::out_of_range("link: unknown vertex " + std::to_string(v));
  std::vector<Vertex> nbrs;
  if (x.dimension() >= 1) {
    for (auto e : x.chain().boundary(1).row(v)) {
      const auto f = x.face(1, e);
      nbrs.push_back(f[0] == v ? f[1] : f[0]);
    }
  }
  std::sort(nbrs.begin(), nbrs.end());
  Graph g;
  g.n = nbrs.size();
  g.labels = nbrs;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      Tuple t{v, nbrs[i], nbrs[j]};
      std::sort(t.begin(), t.end());
      if (x.index_of(t)) g.edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return g;
}

SimplicialComplex skeleton(const SimplicialComplex& x, std::size_t k) {
  std::vector<std::vector<Tuple>> faces;
  for (std::size_t p = 1; p <= std::min(k, x.dimension()); ++p) {
    std::vector<Tuple> list;
    for (std::size_t i = 0; i < x.face_count(p); ++i) {
      const auto f = x.face(p, i);
      list.emplace_back(f.begin(), f.end());
    }
    faces.push_back(std::move(list));
  }
  return SimplicialComplex(x.vertex_count(), std::move(faces));
}

std::vector<DegreeRange> degree_stats(const SimplicialComplex& x) {
  std::vector<DegreeRange> out;
  for (std::size_t p = 0; p < x.dimension(); ++p) {
    const auto& up = x.chain().boundary(p + 1);
    DegreeRange r{up.rows() ? up.row_weight(0) : 0, 0};
    for (std::size_t i = 0; i < up.rows(); ++i) {
      r.min = std::min(r.min, up.row_weight(i));
      r.max = std::max(r.max, up.row_weight(i));
    }
    out.push_back(r);
  }
  return out;
}

SimplicialComplex fixture_torus(std::size_t r, std::size_t c) {
  if (r < 3 || c < 3) throw std::invalid_argument("fixture_torus: need r, c >= 3");
  auto id = [&](std::size_t i, std::size_t j) { return static_cast<Vertex>((i % r) * c + (j % c)); };
  std::vector<Tuple> triangles;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      triangles.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
      triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
    }
  }
  return SimplicialComplex::from_maximal_faces(r * c, triangles);
}

CohomologyReport gauge_fixed_cohomology(const ChainComplex& x, const PropagationOptions& options) {
  if (x.dimension() < 1) throw std::invalid_argument("gauge_fixed_cohomology: need a complex with edges");
  const Graph g = graph_from_boundary(x.boundary(1));
  CohomologyReport out;
  out.tree_edges = spanning_forest(g);
  const BinaryMatrix delta1 = x.boundary(2).transpose();
  auto res = kernel_by_propagation(delta1, out.tree_edges, options);
  out.dimension = res.dimension;
  out.guesses = res.guesses;
  out.basis = std::move(res.basis);
  return out;
}

}  // namespace qcc
