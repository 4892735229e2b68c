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

#ifndef QCC_TESTS_FIXTURES_HPP
#define QCC_TESTS_FIXTURES_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "qcc/simplicial.hpp"

namespace fixture {

inline qcc::SimplicialComplex filled_triangle() {
  return qcc::SimplicialComplex::from_maximal_faces(3, {{0, 1, 2}});
}

/// Random 2-complex: a few random triangles and edges on n vertices, closed downward.
inline qcc::SimplicialComplex random_complex(std::size_t n, std::size_t triangles, std::size_t edges,
                                             std::mt19937_64& rng) {
  std::uniform_int_distribution<qcc::SimplicialComplex::Vertex> pick(0, static_cast<std::uint32_t>(n - 1));
  std::vector<std::vector<qcc::SimplicialComplex::Vertex>> faces;
  while (faces.size() < triangles) {
    auto a = pick(rng), b = pick(rng), c = pick(rng);
    if (a != b && b != c && a != c) faces.push_back({a, b, c});
  }
  while (faces.size() < triangles + edges) {
    auto a = pick(rng), b = pick(rng);
    if (a != b) faces.push_back({a, b});
  }
  return qcc::SimplicialComplex::from_maximal_faces(n, faces);
}

}  // namespace fixture

#endif  // QCC_TESTS_FIXTURES_HPP
