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

#ifndef QCC_GF2_HPP
#define QCC_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcc {

/// Thrown when an exhaustive search would need more work than the caller allows.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double required)
      : std::runtime_error(what), required_(required) {}
  /// Enumeration size the refused request would have needed.
  double required() const noexcept { return required_; }

 private:
  double required_;
};

/// Dense bit-packed vector over GF(2).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length);
  static BitVector from_support(std::size_t length, std::span<const std::size_t> support);
  static BitVector from_support(std::size_t length, std::initializer_list<std::size_t> support);
  /// Parses a string of '0'/'1' characters, index 0 first.
  static BitVector from_string(const std::string& bits);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  bool operator[](std::size_t i) const noexcept { return get(i); }
  void set(std::size_t i, bool value = true) noexcept;
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void clear() noexcept;

  std::size_t weight() const noexcept;
  bool none() const noexcept;
  bool any() const noexcept { return !none(); }
  /// Index of the lowest set bit, or size() when zero.
  std::size_t first() const noexcept;
  std::vector<std::size_t> support() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  bool operator==(const BitVector& other) const = default;
  /// Lexicographic order on the bit strings (index 0 most significant).
  bool operator<(const BitVector& other) const;

  /// Inner product mod 2.
  bool dot(const BitVector& other) const;

  std::string to_string() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Sparse matrix over GF(2), stored as sorted column lists per row.
///
/// Entries are a set: inserting the same (row, col) pair twice cancels it, so
/// the stored support is always canonical.
class BinaryMatrix {
 public:
  using Index = std::uint32_t;

  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);
  /// Builds from (row, col) pairs; duplicates cancel mod 2.
  static BinaryMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    std::span<const std::pair<std::size_t, std::size_t>> entries);
  static BinaryMatrix from_rows(std::size_t cols, const std::vector<BitVector>& rows);
  /// Builds from per-row column lists; duplicates within a row cancel.
  static BinaryMatrix from_row_lists(std::size_t cols, std::vector<std::vector<Index>> rows);
  static BinaryMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return n_rows_; }
  std::size_t cols() const noexcept { return n_cols_; }
  std::size_t nnz() const noexcept;
  bool is_zero() const noexcept { return nnz() == 0; }

  std::span<const Index> row(std::size_t r) const { return rows_[r]; }
  bool get(std::size_t r, std::size_t c) const;

  std::size_t row_weight(std::size_t r) const { return rows_[r].size(); }
  std::vector<std::size_t> column_weights() const;
  std::size_t max_row_weight() const;
  std::size_t max_column_weight() const;

  BinaryMatrix transpose() const;
  BitVector multiply(const BitVector& v) const;
  /// Computes v^T M, i.e. M^T v, without materializing the transpose.
  BitVector left_multiply(const BitVector& v) const;
  BinaryMatrix multiply(const BinaryMatrix& other) const;
  /// Keeps the listed columns, in the given order.
  BinaryMatrix select_columns(std::span<const std::size_t> columns) const;

  BitVector row_vector(std::size_t r) const;
  std::vector<BitVector> dense_rows() const;
  std::vector<std::pair<std::size_t, std::size_t>> triplets() const;

  bool operator==(const BinaryMatrix& other) const = default;

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<std::vector<Index>> rows_;
};

/// Incremental echelon basis of a subspace of GF(2)^n.
///
/// Each stored vector keeps its pivot (lowest set bit after reduction) and the
/// combination of inserted vectors that produced it, so membership queries can
/// also return coordinates with respect to the inserted vectors.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t length, bool track_combinations = false);

  std::size_t length() const noexcept { return length_; }
  std::size_t rank() const noexcept { return reduced_.size(); }
  std::size_t inserted() const noexcept { return inserted_; }

  /// Inserts v; returns true when v was independent of the current span.
  bool insert(const BitVector& v);
  /// Reduces v against the basis in place; v ends up zero iff it was in the span.
  void reduce(BitVector& v) const;
  bool contains(const BitVector& v) const;
  /// Coordinates of v with respect to the inserted vectors (requires tracking).
  std::optional<BitVector> coordinates(const BitVector& v) const;

  std::span<const BitVector> reduced_vectors() const noexcept { return reduced_; }
  std::span<const std::size_t> pivots() const noexcept { return pivots_; }

 private:
  std::size_t length_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<BitVector> reduced_;
  std::vector<std::size_t> pivots_;
  std::vector<BitVector> combos_;
};

/// Reduced row echelon form of a dense matrix.
struct RowEchelonForm {
  std::vector<BitVector> rows;       ///< nonzero rows of the RREF, in pivot order
  std::vector<std::size_t> pivots;   ///< pivot column of each row
};

/// Gauss-Jordan elimination: leftmost nonzero column, first available row.
RowEchelonForm row_reduce(const BinaryMatrix& m);

std::size_t rank(const BinaryMatrix& m);
std::vector<BitVector> kernel_basis(const BinaryMatrix& m);
/// Some x with M x = b, or nullopt when the system is inconsistent.
std::optional<BitVector> solve(const BinaryMatrix& m, const BitVector& b);
/// True iff v lies in the row space of `rows`.
bool in_span(const BinaryMatrix& rows, const BitVector& v);

/// Work limits for brute-force minimum-weight searches.
struct SearchBudget {
  double max_enumeration = double(std::uint64_t{1} << 22);
  /// Enables the weight-bounded mode: only words of weight <= cap are tried.
  std::optional<std::size_t> weight_cap;
  /// Systole searches skip the coset enumeration even when it would fit.
  bool force_cycle_search = false;
};

enum class SearchMode { exhaustive, weight_bounded };

const char* to_string(SearchMode mode);

struct CosetMinimum {
  SearchMode mode = SearchMode::exhaustive;
  /// Minimum weight; nullopt when the weight-bounded search found nothing <= cap.
  std::optional<std::size_t> weight;
  BitVector witness;
};

/// Minimum Hamming weight over the coset shift + span(rows of span_rows).
///
/// Uses full Gray-code enumeration of the span when 2^dim fits the budget,
/// otherwise enumerates words of weight <= cap if a cap is configured and the
/// word count fits. Throws BudgetExceeded when neither mode is affordable.
CosetMinimum min_weight_coset(const BinaryMatrix& span_rows, const BitVector& shift,
                              const SearchBudget& budget = {});
CosetMinimum min_weight_coset(const EchelonBasis& span, const BitVector& shift,
                              const SearchBudget& budget = {});

/// Number of words of length n and weight <= w, saturating at a large double.
double count_low_weight_words(std::size_t n, std::size_t w);

/// Calls visit(word) for every word of length n and exact weight w, in
/// colexicographic order of supports. Stops early when visit returns false.
template <class Visit>
void for_each_word_of_weight(std::size_t n, std::size_t w, Visit&& visit);

}  // namespace qcc

#include "qcc/detail/gf2_impl.hpp"

#endif  // QCC_GF2_HPP
