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

#ifndef QCC_PRODUCT_HPP
#define QCC_PRODUCT_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "qcc/chain.hpp"
#include "qcc/classical.hpp"

namespace qcc {

/// Index bookkeeping for the product of X = (X0, X1, X2) with Y = (A, B).
///
/// Grade 0: X0 x A (x0 * |A| + a), then X1 x B.
/// Grade 1: X1 x A (x1 * |A| + a), then X2 x B.
/// Grade 2: X2 x A (x2 * |A| + a).
struct ProductLayout {
  std::size_t x0 = 0, x1 = 0, x2 = 0, a = 0, b = 0;

  std::size_t va(std::size_t v, std::size_t col) const { return v * a + col; }
  std::size_t eb(std::size_t e, std::size_t chk) const { return x0 * a + e * b + chk; }
  std::size_t ea(std::size_t e, std::size_t col) const { return e * a + col; }
  std::size_t tb(std::size_t t, std::size_t chk) const { return x1 * a + t * b + chk; }
  std::size_t ta(std::size_t t, std::size_t col) const { return t * a + col; }

  std::size_t grade0() const { return x0 * a + x1 * b; }
  std::size_t qubits() const { return x1 * a + x2 * b; }
  std::size_t grade2() const { return x2 * a; }
  std::size_t ea_block() const { return x1 * a; }
};

/// The product complex with its CSS syndrome maps.
class ProductCode {
 public:
  ProductCode(ChainComplex base, BipartiteCode code);

  const ChainComplex& base() const noexcept { return base_; }
  const BipartiteCode& code() const noexcept { return code_; }
  const ProductLayout& layout() const noexcept { return layout_; }
  const ChainComplex& complex() const noexcept { return complex_; }
  const ColumnSelection& selection() const noexcept { return selection_; }

  /// Boundary map out of grade 1 (rows: grade 0, columns: qubits).
  const BinaryMatrix& sigma_x() const { return complex_.boundary(1); }
  /// Coboundary map out of grade 1 (rows: grade 2, columns: qubits).
  const BinaryMatrix& sigma_z() const noexcept { return sigma_z_; }

 private:
  ChainComplex base_;
  BipartiteCode code_;
  ProductLayout layout_;
  ChainComplex complex_;
  BinaryMatrix sigma_z_;
  ColumnSelection selection_;
};

/// Assembles the product; X must be 2-dimensional and H(Y) of full row rank.
/// Throws std::logic_error if the assembled maps fail validation.
ProductCode build_product(const ChainComplex& x, const BipartiteCode& y);

struct DistanceReport {
  std::optional<SystoleReport> measured;
  std::optional<std::size_t> predicted;
  /// Why no measurement was made (budget refusal message or "undefined").
  std::string note;
};

struct ProductParams {
  std::size_t n = 0;
  std::size_t k = 0;
  Provenance k_provenance = Provenance::measured;
  DistanceReport dx;
  DistanceReport dz;
};

struct ParamsOptions {
  SearchBudget budget;
  /// Dense rank for K only up to this many qubits; above it K comes from the
  /// Kunneth formula with dim H1(X) measured, labelled predicted, and the
  /// distance searches are refused.
  std::size_t dense_rank_limit = 20000;
};

ProductParams product_params(const ProductCode& p, const ParamsOptions& options = {});

struct WeightAudit {
  std::size_t wz = 0;  ///< max row weight of sigma_z
  std::size_t wx = 0;  ///< max row weight of sigma_x
  std::size_t wz_bound = 0;
  std::size_t wx_bound = 0;
  std::size_t wx_r = 0, wz_r = 0, wz_c = 0, w_r = 0, w_c = 0;
  bool passed() const { return wz <= wz_bound && wx <= wx_bound; }
};

WeightAudit weight_audit(const ProductCode& p);

/// z (a cycle on X1) tensor c (a word on A), placed in the X1 x A block.
BitVector tensor_cycle(const ProductCode& p, const BitVector& z, const BitVector& c);

}  // namespace qcc

#endif  // QCC_PRODUCT_HPP
