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

#ifndef QCC_DECODERS_HPP
#define QCC_DECODERS_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qcc/gf2.hpp"
#include "qcc/graph.hpp"
#include "qcc/product.hpp"
#include "qcc/simplicial.hpp"

namespace qcc {

enum class DecodeStatus { success, stalled, budget_exceeded };
const char* to_string(DecodeStatus status);

struct DecodeOutcome {
  BitVector correction;
  DecodeStatus status = DecodeStatus::success;
  std::size_t iterations = 0;
  /// Syndrome weight before the first step and after every step.
  std::vector<std::size_t> syndrome_weights;
  std::string message;

  bool ok() const noexcept { return status == DecodeStatus::success; }
};

// ---------------------------------------------------------------------------
// Cycle codes

struct TJoinOptions {
  /// Odd sets up to this size use the exact subset DP; larger ones use blossom matching.
  std::size_t dp_limit = 16;
};

/// Minimum-weight edge set whose odd-degree vertices are exactly odd_set.
///
/// Shortest paths between odd vertices, exact minimum-weight perfect
/// matching on their metric closure, then the symmetric difference of the
/// matched paths. Throws std::invalid_argument if some connected component
/// holds an odd number of odd vertices.
BitVector tjoin_decode(const Graph& g, const BitVector& odd_set, const TJoinOptions& options = {});

// ---------------------------------------------------------------------------
// Product codes

/// Basis Z0 of the boundaries B1(X) completed by Z1 to a basis of Z1(X).
class CycleBasis {
 public:
  explicit CycleBasis(const ChainComplex& x);

  std::span<const BitVector> z0() const noexcept { return {vectors_.data(), n0_}; }
  std::span<const BitVector> z1() const noexcept { return {vectors_.data() + n0_, vectors_.size() - n0_}; }
  /// Coordinates of a cycle on Z0 then Z1; nullopt when z is not a cycle.
  std::optional<BitVector> coordinates(const BitVector& z) const;

 private:
  std::vector<BitVector> vectors_;
  std::size_t n0_ = 0;
  EchelonBasis basis_;
  BinaryMatrix down_;
};

/// X-error decoding from sigma_x(x): per-column T-joins, a particular
/// solution for the remaining syndrome, then word decoding of every Z1 row
/// of the cycle-basis array to strip the codeword of Y.
DecodeOutcome x_decode(const ProductCode& p, const BitVector& syndrome);

/// The same, reusing a prebuilt cycle basis and graph of X.
DecodeOutcome x_decode(const ProductCode& p, const CycleBasis& basis, const Graph& graph, const BitVector& syndrome);

/// Equivalent Z-error with no support on X1 x A'.
BitVector z_reduce(const ProductCode& p, const BitVector& error);

/// Decodes a column syndrome over X2 to a correction over X1.
using ComponentDecoder = std::function<DecodeOutcome(const BitVector&)>;

/// Z-error decoding from sigma_z(x): the X2 x B block is read off the A'
/// columns of the syndrome, its contribution removed, and every remaining
/// column decoded by the component decoder of X.
DecodeOutcome z_decode(const ProductCode& p, const BitVector& syndrome, const ComponentDecoder& component);

/// True iff sigma_x(r) = 0 and r is a row combination of sigma_z (dense).
bool x_equivalent(const ProductCode& p, const BitVector& error, const BitVector& correction);

/// True iff error + correction is a combination of the rows of sigma_x.
/// Exact and near linear: reduce the residual, then test every A'' column
/// for being a vertex coboundary of X. Requires a graph-like X.
bool z_equivalent(const ProductCode& p, const PotentialChecker& base, const BitVector& error, const BitVector& correction);

// ---------------------------------------------------------------------------
// Local coboundary decoding on 2-complexes

struct LocalDecodeOptions {
  /// Refuse vertices whose search space 2^(degree - 1) exceeds this.
  double max_subsets_per_vertex = double(1 << 20);
  /// Check f against im(delta_1) up front when the complex has at most this
  /// many edges (dense); larger complexes skip the check.
  std::size_t image_check_limit = 4000;
};

/// Precomputed incidences for repeated local decoding on one complex.
class LocalDecoder {
 public:
  explicit LocalDecoder(const SimplicialComplex& x, LocalDecodeOptions options = {});

  /// Subset search: vertex v and y inside the edges at v with |y| <= deg/2.
  DecodeOutcome decode(const BitVector& f) const;
  /// Single-edge moves only.
  DecodeOutcome decode_single_edge(const BitVector& f) const;

  std::size_t edge_count() const noexcept { return n_edges_; }
  std::size_t triangle_count() const noexcept { return n_triangles_; }

 private:
  void check_input(const BitVector& f) const;

  const SimplicialComplex* x_;
  LocalDecodeOptions options_;
  std::size_t n_edges_ = 0, n_triangles_ = 0;
  BinaryMatrix edge_triangles_;   ///< row e: triangles containing e
  BinaryMatrix triangle_edges_;   ///< row t: its three edges
  BinaryMatrix vertex_edges_;     ///< row v: edges at v
  BinaryMatrix edge_vertices_;    ///< row e: its two vertices
};

DecodeOutcome local_coboundary_decode(const SimplicialComplex& x, const BitVector& f,
                                      const LocalDecodeOptions& options = {});
DecodeOutcome single_edge_decode(const SimplicialComplex& x, const BitVector& f,
                                 const LocalDecodeOptions& options = {});

}  // namespace qcc

#endif  // QCC_DECODERS_HPP
