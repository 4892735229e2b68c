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

#include "qcc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace qcc {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

void check_length(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    std::ostringstream msg;
    msg << where << ": length mismatch (" << a << " vs " << b << ")";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// BitVector

BitVector::BitVector(std::size_t length) : length_(length), words_(words_for(length), 0) {}

BitVector BitVector::from_support(std::size_t length, std::span<const std::size_t> support) {
  BitVector v(length);
  for (std::size_t i : support) {
    if (i >= length) throw std::out_of_range("BitVector: support index out of range");
    v.flip(i);
  }
  return v;
}

BitVector BitVector::from_support(std::size_t length, std::initializer_list<std::size_t> support) {
  return from_support(length, std::span<const std::size_t>(support.begin(), support.size()));
}

BitVector BitVector::from_string(const std::string& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitVector: expected only '0' and '1'");
    }
  }
  return v;
}

void BitVector::set(std::size_t i, bool value) noexcept {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

void BitVector::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

std::size_t BitVector::weight() const noexcept {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::first() const noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return length_;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t w = words_[k];
    while (w != 0) {
      out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_length(length_, other.length_, "BitVector::operator^=");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

bool BitVector::operator<(const BitVector& other) const {
  if (length_ != other.length_) return length_ < other.length_;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    const std::uint64_t diff = words_[k] ^ other.words_[k];
    if (diff != 0) {
      // The lowest differing index decides; the vector with a 1 there is larger.
      const std::uint64_t bit = diff & (~diff + 1);
      return (other.words_[k] & bit) != 0;
    }
  }
  return false;
}

bool BitVector::dot(const BitVector& other) const {
  check_length(length_, other.length_, "BitVector::dot");
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
  return (std::popcount(acc) & 1) != 0;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

// ---------------------------------------------------------------------------
// BinaryMatrix

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : n_rows_(rows), n_cols_(cols), rows_(rows) {}

BinaryMatrix BinaryMatrix::from_triplets(
    std::size_t rows, std::size_t cols,
    std::span<const std::pair<std::size_t, std::size_t>> entries) {
  std::vector<std::vector<Index>> lists(rows);
  for (const auto& [r, c] : entries) {
    if (r >= rows || c >= cols) throw std::out_of_range("BinaryMatrix: entry out of range");
    lists[r].push_back(static_cast<Index>(c));
  }
  return from_row_lists(cols, std::move(lists));
}

BinaryMatrix BinaryMatrix::from_row_lists(std::size_t cols, std::vector<std::vector<Index>> rows) {
  BinaryMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& list = rows[r];
    std::sort(list.begin(), list.end());
    // Cancel duplicate pairs.
    std::vector<Index> kept;
    kept.reserve(list.size());
    for (std::size_t i = 0; i < list.size();) {
      std::size_t j = i;
      while (j < list.size() && list[j] == list[i]) ++j;
      if (list[i] >= cols) throw std::out_of_range("BinaryMatrix: column out of range");
      if ((j - i) % 2 == 1) kept.push_back(list[i]);
      i = j;
    }
    m.rows_[r] = std::move(kept);
  }
  return m;
}

BinaryMatrix BinaryMatrix::from_rows(std::size_t cols, const std::vector<BitVector>& rows) {
  BinaryMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    check_length(rows[r].size(), cols, "BinaryMatrix::from_rows");
    for (std::size_t c : rows[r].support()) m.rows_[r].push_back(static_cast<Index>(c));
  }
  return m;
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back(static_cast<Index>(i));
  return m;
}

std::size_t BinaryMatrix::nnz() const noexcept {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.size();
  return total;
}

bool BinaryMatrix::get(std::size_t r, std::size_t c) const {
  const auto& list = rows_.at(r);
  return std::binary_search(list.begin(), list.end(), static_cast<Index>(c));
}

std::vector<std::size_t> BinaryMatrix::column_weights() const {
  std::vector<std::size_t> w(n_cols_, 0);
  for (const auto& r : rows_) {
    for (Index c : r) ++w[c];
  }
  return w;
}

std::size_t BinaryMatrix::max_row_weight() const {
  std::size_t best = 0;
  for (const auto& r : rows_) best = std::max(best, r.size());
  return best;
}

std::size_t BinaryMatrix::max_column_weight() const {
  const auto w = column_weights();
  return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix t(n_cols_, n_rows_);
  for (std::size_t r = 0; r < n_rows_; ++r) {
    for (Index c : rows_[r]) t.rows_[c].push_back(static_cast<Index>(r));
  }
  return t;
}

BitVector BinaryMatrix::multiply(const BitVector& v) const {
  check_length(v.size(), n_cols_, "BinaryMatrix::multiply");
  BitVector out(n_rows_);
  for (std::size_t r = 0; r < n_rows_; ++r) {
    bool parity = false;
    for (Index c : rows_[r]) parity ^= v.get(c);
    if (parity) out.set(r);
  }
  return out;
}

BitVector BinaryMatrix::left_multiply(const BitVector& v) const {
  check_length(v.size(), n_rows_, "BinaryMatrix::left_multiply");
  BitVector out(n_cols_);
  for (std::size_t r : v.support()) {
    for (Index c : rows_[r]) out.flip(c);
  }
  return out;
}

BinaryMatrix BinaryMatrix::multiply(const BinaryMatrix& other) const {
  check_length(n_cols_, other.n_rows_, "BinaryMatrix::multiply");
  BinaryMatrix out(n_rows_, other.n_cols_);
  std::vector<std::uint8_t> parity(other.n_cols_, 0);
  std::vector<std::uint8_t> seen(other.n_cols_, 0);
  std::vector<Index> touched;
  for (std::size_t r = 0; r < n_rows_; ++r) {
    touched.clear();
    for (Index k : rows_[r]) {
      for (Index c : other.rows_[k]) {
        if (!seen[c]) {
          seen[c] = 1;
          touched.push_back(c);
        }
        parity[c] ^= 1;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (Index c : touched) {
      if (parity[c]) out.rows_[r].push_back(c);
      parity[c] = 0;
      seen[c] = 0;
    }
  }
  return out;
}

BinaryMatrix BinaryMatrix::select_columns(std::span<const std::size_t> columns) const {
  std::vector<std::int64_t> where(n_cols_, -1);
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k] >= n_cols_) throw std::out_of_range("select_columns: column out of range");
    where[columns[k]] = static_cast<std::int64_t>(k);
  }
  std::vector<std::vector<Index>> lists(n_rows_);
  for (std::size_t r = 0; r < n_rows_; ++r) {
    for (Index c : rows_[r]) {
      if (where[c] >= 0) lists[r].push_back(static_cast<Index>(where[c]));
    }
  }
  return from_row_lists(columns.size(), std::move(lists));
}

BitVector BinaryMatrix::row_vector(std::size_t r) const {
  BitVector v(n_cols_);
  for (Index c : rows_.at(r)) v.set(c);
  return v;
}

std::vector<BitVector> BinaryMatrix::dense_rows() const {
  std::vector<BitVector> out;
  out.reserve(n_rows_);
  for (std::size_t r = 0; r < n_rows_; ++r) out.push_back(row_vector(r));
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> BinaryMatrix::triplets() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(nnz());
  for (std::size_t r = 0; r < n_rows_; ++r) {
    for (Index c : rows_[r]) out.emplace_back(r, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// EchelonBasis

EchelonBasis::EchelonBasis(std::size_t length, bool track_combinations)
    : length_(length), track_(track_combinations) {}

void EchelonBasis::reduce(BitVector& v) const {
  check_length(v.size(), length_, "EchelonBasis::reduce");
  // Rows are kept fully reduced at their pivots, so one pass in any order works.
  for (std::size_t k = 0; k < reduced_.size(); ++k) {
    if (v.get(pivots_[k])) v ^= reduced_[k];
  }
}

bool EchelonBasis::insert(const BitVector& v) {
  check_length(v.size(), length_, "EchelonBasis::insert");
  BitVector r = v;
  BitVector combo;
  if (track_) {
    combo = BitVector(inserted_ + 1);
    combo.set(inserted_);
  }
  for (std::size_t k = 0; k < reduced_.size(); ++k) {
    if (r.get(pivots_[k])) {
      r ^= reduced_[k];
      if (track_) {
        // Stored combos are shorter than the new one; xor word-by-word.
        auto dst = combo.words();
        auto src = combos_[k].words();
        for (std::size_t w = 0; w < src.size(); ++w) dst[w] ^= src[w];
      }
    }
  }
  ++inserted_;
  if (r.none()) return false;
  const std::size_t p = r.first();
  // Keep the basis reduced: clear the new pivot column from existing rows.
  for (std::size_t k = 0; k < reduced_.size(); ++k) {
    if (reduced_[k].get(p)) {
      reduced_[k] ^= r;
      if (track_) {
        BitVector grown(inserted_);
        auto dst = grown.words();
        auto a = combos_[k].words();
        auto b = combo.words();
        for (std::size_t w = 0; w < a.size(); ++w) dst[w] ^= a[w];
        for (std::size_t w = 0; w < b.size(); ++w) dst[w] ^= b[w];
        combos_[k] = std::move(grown);
      }
    }
  }
  reduced_.push_back(std::move(r));
  pivots_.push_back(p);
  if (track_) combos_.push_back(std::move(combo));
  return true;
}

bool EchelonBasis::contains(const BitVector& v) const {
  BitVector r = v;
  reduce(r);
  return r.none();
}

std::optional<BitVector> EchelonBasis::coordinates(const BitVector& v) const {
  if (!track_) throw std::logic_error("EchelonBasis: combination tracking disabled");
  check_length(v.size(), length_, "EchelonBasis::coordinates");
  BitVector r = v;
  BitVector coords(inserted_);
  for (std::size_t k = 0; k < reduced_.size(); ++k) {
    if (r.get(pivots_[k])) {
      r ^= reduced_[k];
      auto dst = coords.words();
      auto src = combos_[k].words();
      for (std::size_t w = 0; w < src.size(); ++w) dst[w] ^= src[w];
    }
  }
  if (r.any()) return std::nullopt;
  return coords;
}

// ---------------------------------------------------------------------------
// Elimination

RowEchelonForm row_reduce(const BinaryMatrix& m) {
  std::vector<BitVector> rows = m.dense_rows();
  RowEchelonForm out;
  std::size_t next = 0;
  for (std::size_t col = 0; col < m.cols() && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(col)) rows[r] ^= rows[next];
    }
    out.pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  out.rows = std::move(rows);
  return out;
}

std::size_t rank(const BinaryMatrix& m) {
  // Eliminate along the shorter dimension.
  if (m.rows() > m.cols()) return rank(m.transpose());
  EchelonBasis basis(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row_vector(r));
  return basis.rank();
}

std::vector<BitVector> kernel_basis(const BinaryMatrix& m) {
  const RowEchelonForm rref = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : rref.pivots) is_pivot[p] = true;
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.cols());
    v.set(free);
    for (std::size_t k = 0; k < rref.rows.size(); ++k) {
      if (rref.rows[k].get(free)) v.set(rref.pivots[k]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<BitVector> solve(const BinaryMatrix& m, const BitVector& b) {
  check_length(b.size(), m.rows(), "solve");
  // Columns of M are the rows of M^T; b must be a combination of them.
  const BinaryMatrix t = m.transpose();
  EchelonBasis basis(m.rows(), /*track_combinations=*/true);
  for (std::size_t c = 0; c < t.rows(); ++c) basis.insert(t.row_vector(c));
  auto coords = basis.coordinates(b);
  if (!coords) return std::nullopt;
  return coords;
}

bool in_span(const BinaryMatrix& rows, const BitVector& v) {
  check_length(v.size(), rows.cols(), "in_span");
  EchelonBasis basis(rows.cols());
  for (std::size_t r = 0; r < rows.rows(); ++r) basis.insert(rows.row_vector(r));
  return basis.contains(v);
}

// ---------------------------------------------------------------------------
// Minimum-weight coset search

const char* to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::exhaustive:
      return "exhaustive";
    case SearchMode::weight_bounded:
      return "weight-bounded";
  }
  return "unknown";
}

double count_low_weight_words(std::size_t n, std::size_t w) {
  double total = 0.0;
  double term = 1.0;  // C(n, k)
  for (std::size_t k = 0; k <= std::min(n, w); ++k) {
    total += term;
    if (total > 1e300) return 1e300;
    term = term * double(n - k) / double(k + 1);
  }
  return total;
}

namespace {

CosetMinimum exhaustive_coset(const EchelonBasis& basis, const BitVector& shift) {
  CosetMinimum best;
  best.mode = SearchMode::exhaustive;
  BitVector current = shift;
  best.weight = current.weight();
  best.witness = current;
  const auto vectors = basis.reduced_vectors();
  const std::size_t dim = vectors.size();
  const std::uint64_t total = std::uint64_t{1} << dim;
  for (std::uint64_t i = 1; i < total; ++i) {
    // Gray code: flip the basis vector indexed by the lowest set bit of i.
    current ^= vectors[static_cast<std::size_t>(std::countr_zero(i))];
    const std::size_t w = current.weight();
    if (w < *best.weight) {
      best.weight = w;
      best.witness = current;
    }
  }
  return best;
}

}  // namespace

CosetMinimum min_weight_coset(const BinaryMatrix& span_rows, const BitVector& shift,
                              const SearchBudget& budget) {
  check_length(shift.size(), span_rows.cols(), "min_weight_coset");
  EchelonBasis basis(span_rows.cols());
  for (std::size_t r = 0; r < span_rows.rows(); ++r) basis.insert(span_rows.row_vector(r));
  return min_weight_coset(basis, shift, budget);
}

CosetMinimum min_weight_coset(const EchelonBasis& basis, const BitVector& shift,
                              const SearchBudget& budget) {
  check_length(shift.size(), basis.length(), "min_weight_coset");
  const std::size_t dim = basis.rank();
  const double full = std::ldexp(1.0, static_cast<int>(dim));
  if (dim < 63 && full <= budget.max_enumeration) return exhaustive_coset(basis, shift);

  if (budget.weight_cap) {
    const std::size_t n = shift.size();
    const std::size_t cap = *budget.weight_cap;
    const double words = count_low_weight_words(n, cap);
    if (words <= budget.max_enumeration) {
      CosetMinimum out;
      out.mode = SearchMode::weight_bounded;
      for (std::size_t w = 0; w <= std::min(cap, n) && !out.weight; ++w) {
        for_each_word_of_weight(n, w, [&](const BitVector& word) {
          BitVector probe = word ^ shift;
          basis.reduce(probe);
          if (probe.none()) {
            out.weight = w;
            out.witness = word;
            return false;
          }
          return true;
        });
      }
      return out;
    }
    std::ostringstream msg;
    msg << "min_weight_coset: span dimension " << dim << " needs 2^" << dim
        << " enumerations and the weight-" << cap << " search needs " << words
        << ", budget is " << budget.max_enumeration;
    throw BudgetExceeded(msg.str(), std::min(full, words));
  }
  std::ostringstream msg;
  msg << "min_weight_coset: span dimension " << dim << " needs 2^" << dim
      << " enumerations, budget is " << budget.max_enumeration;
  throw BudgetExceeded(msg.str(), full);
}

}  // namespace qcc
