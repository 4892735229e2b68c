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

#ifndef QCC_CHAIN_HPP
#define QCC_CHAIN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcc/gf2.hpp"

namespace qcc {

/// Finite chain complex over GF(2): face sets X_0..X_d and boundary maps.
///
/// boundary(p) has shape |X_{p-1}| x |X_p|. The maps at p = 0 and p = d + 1
/// are stored as explicit zero matrices (0 x |X_0| and |X_d| x 0).
class ChainComplex {
 public:
  ChainComplex() = default;
  /// boundaries[p - 1] is the map out of grade p, for p = 1..d.
  ChainComplex(std::vector<std::size_t> face_counts, std::vector<BinaryMatrix> boundaries);

  std::size_t dimension() const noexcept { return face_counts_.empty() ? 0 : face_counts_.size() - 1; }
  const std::vector<std::size_t>& face_counts() const noexcept { return face_counts_; }
  std::size_t face_count(std::size_t p) const { return face_counts_.at(p); }

  /// Boundary map out of grade p, for 0 <= p <= d + 1.
  const BinaryMatrix& boundary(std::size_t p) const { return maps_.at(p); }
  /// Coboundary map out of grade p: transpose of boundary(p + 1).
  BinaryMatrix coboundary(std::size_t p) const { return boundary(p + 1).transpose(); }

  bool operator==(const ChainComplex& other) const = default;

 private:
  std::vector<std::size_t> face_counts_;
  std::vector<BinaryMatrix> maps_;
};

/// First place where a boundary of a boundary fails to vanish.
struct Violation {
  std::size_t p = 0;     ///< grade of the offending face
  std::size_t face = 0;  ///< index of the face in X_p
  std::string message() const;
};

std::optional<Violation> validate(const ChainComplex& x);

/// Co-complex: grade i holds X_{d-i}, with boundary the transposed coboundary.
ChainComplex cocomplex(const ChainComplex& x);

std::size_t homology_dim(const ChainComplex& x, std::size_t p);
/// dim ker(delta_p) - rank(delta_{p-1}), computed on the transposed maps.
std::size_t cohomology_dim(const ChainComplex& x, std::size_t p);

enum class Provenance { measured, predicted, lower_bounded };
const char* to_string(Provenance p);

struct SystoleReport {
  Provenance provenance = Provenance::measured;
  SearchMode mode = SearchMode::exhaustive;
  /// Exact systole when measured; lower bound (cap + 1) when lower_bounded.
  std::size_t value = 0;
  /// Minimum-weight non-trivial cycle; empty when lower_bounded.
  BitVector witness;
  std::size_t homology = 0;
};

/// Minimum weight of a p-cycle that is not a p-boundary.
///
/// Returns nullopt when H_p = 0. Under the full budget the homology classes
/// are enumerated and each coset is searched with min_weight_coset. Otherwise
/// cycles are grown face by face from their lowest face, branching on a
/// violated boundary check, at increasing weight. With a weight cap the search
/// stops at the cap (lower_bounded when nothing is found) and is refused up
/// front when n * (max check weight)^(cap-1) exceeds the budget; without a cap
/// it deepens until the node budget runs out and then throws BudgetExceeded.
std::optional<SystoleReport> systole(const ChainComplex& x, std::size_t p,
                                     const SearchBudget& budget = {});
std::optional<SystoleReport> cosystole(const ChainComplex& x, std::size_t p,
                                       const SearchBudget& budget = {});

/// CSS code read off grade p of a complex.
struct CssCode {
  std::size_t n = 0;
  BinaryMatrix hx;  ///< boundary(p): rows indexed by X_{p-1}
  BinaryMatrix hz;  ///< coboundary(p): rows indexed by X_{p+1}
  std::size_t grade = 0;
};

CssCode css_extract(const ChainComplex& x, std::size_t p);
/// n - rank(H_X) - rank(H_Z).
std::size_t css_dimension(const CssCode& code);

}  // namespace qcc

#endif  // QCC_CHAIN_HPP
