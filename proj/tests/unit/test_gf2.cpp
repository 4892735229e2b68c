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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qcc/gf2.hpp"
#include "qcc/sparse_kernel.hpp"

using qcc::BinaryMatrix;
using qcc::BitVector;

TEST(BitVector, BasicOps) {
  auto v = BitVector::from_string("10100");
  EXPECT_EQ(v.size(), 5u);
  EXPECT_EQ(v.weight(), 2u);
  EXPECT_EQ(v.first(), 0u);
  EXPECT_EQ(v.support(), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(v.to_string(), "10100");
  auto w = BitVector::from_support(5, {2, 3});
  EXPECT_EQ((v ^ w).to_string(), "10010");
  EXPECT_TRUE(v.dot(w));
  EXPECT_EQ(BitVector(70).first(), 70u);
}

TEST(BinaryMatrix, DuplicatesCancel) {
  std::vector<std::pair<std::size_t, std::size_t>> e{{0, 1}, {0, 1}, {1, 2}};
  auto m = BinaryMatrix::from_triplets(2, 3, e);
  EXPECT_EQ(m.nnz(), 1u);
  EXPECT_TRUE(m.get(1, 2));
  EXPECT_FALSE(m.get(0, 1));
  EXPECT_THROW(BinaryMatrix::from_triplets(2, 3, std::vector<std::pair<std::size_t, std::size_t>>{{2, 0}}),
               std::out_of_range);
}

TEST(BinaryMatrix, TransposeAndProducts) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto a = oracle::random_matrix(7, 9, 0.4, rng);
    auto b = oracle::random_matrix(9, 5, 0.4, rng);
    EXPECT_EQ(a.transpose().transpose(), a);
    auto x = oracle::random_vector(9, rng);
    EXPECT_EQ(oracle::to_ints(a.multiply(x)), oracle::mul(oracle::to_dense(a), oracle::to_ints(x)));
    auto y = oracle::random_vector(7, rng);
    EXPECT_EQ(a.left_multiply(y), a.transpose().multiply(y));
    auto ab = a.multiply(b);
    auto z = oracle::random_vector(5, rng);
    EXPECT_EQ(ab.multiply(z), a.multiply(b.multiply(z)));
  }
}

TEST(Rank, TrivialCases) {
  EXPECT_EQ(qcc::rank(BinaryMatrix::identity(3)), 3u);
  EXPECT_EQ(qcc::rank(BinaryMatrix(4, 6)), 0u);
}

TEST(Rank, RandomSeedOneMatchesNaiveElimination) {
  std::mt19937_64 rng(1);
  auto m = oracle::random_matrix(8, 12, 0.5, rng);
  EXPECT_EQ(static_cast<int>(qcc::rank(m)), oracle::rank(oracle::to_dense(m)));
  EXPECT_EQ(qcc::rank(m), qcc::rank(m.transpose()));
}

TEST(Kernel, TrivialCases) {
  EXPECT_TRUE(qcc::kernel_basis(BinaryMatrix::identity(4)).empty());
  auto parity = BinaryMatrix::from_row_lists(2, {{0, 1}});
  auto k = qcc::kernel_basis(parity);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0].to_string(), "11");
}

TEST(Kernel, RandomAnnihilatedAndCounted) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    auto m = oracle::random_matrix(6, 10, 0.35, rng);
    auto k = qcc::kernel_basis(m);
    EXPECT_EQ(k.size() + qcc::rank(m), m.cols());
    for (const auto& v : k) EXPECT_TRUE(m.multiply(v).none());
    EXPECT_EQ(qcc::rank(BinaryMatrix::from_rows(10, k)), k.size());
  }
}

TEST(Solve, Cases) {
  auto id = BinaryMatrix::identity(5);
  auto b = BitVector::from_string("01101");
  EXPECT_EQ(qcc::solve(id, b), b);
  auto row = BinaryMatrix::from_row_lists(2, {{0, 1}});
  auto x = qcc::solve(row, BitVector::from_string("1"));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(x->weight(), 1u);
  auto zero = BinaryMatrix(2, 3);
  EXPECT_FALSE(qcc::solve(zero, BitVector::from_string("10")).has_value());

  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    auto m = oracle::random_matrix(8, 6, 0.4, rng);
    auto x0 = oracle::random_vector(6, rng);
    auto rhs = m.multiply(x0);
    auto sol = qcc::solve(m, rhs);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m.multiply(*sol), rhs);
    auto other = oracle::random_vector(8, rng);
    EXPECT_EQ(qcc::solve(m, other).has_value(), qcc::in_span(m.transpose(), other));
  }
}

TEST(InSpan, Cases) {
  auto rows = BinaryMatrix::from_row_lists(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(qcc::in_span(rows, BitVector(3)));
  EXPECT_TRUE(qcc::in_span(rows, BitVector::from_string("101")));
  EXPECT_FALSE(qcc::in_span(rows, BitVector::from_string("100")));

  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    auto m = oracle::random_matrix(5, 9, 0.3, rng);
    auto v = oracle::random_vector(9, rng);
    auto dense = oracle::to_dense(m);
    auto ext = dense;
    ext.push_back(oracle::to_ints(v));
    EXPECT_EQ(qcc::in_span(m, v), oracle::rank(dense) == oracle::rank(ext));
  }
}

TEST(MinWeightCoset, SmallExamples) {
  auto r1 = qcc::min_weight_coset(BinaryMatrix(0, 5), BitVector::from_string("10100"));
  EXPECT_EQ(r1.weight, 2u);
  EXPECT_EQ(r1.witness.to_string(), "10100");
  auto r2 = qcc::min_weight_coset(BinaryMatrix::from_row_lists(3, {{0, 1, 2}}),
                                  BitVector::from_string("100"));
  EXPECT_EQ(r2.weight, 1u);
  EXPECT_EQ(r2.witness.to_string(), "100");
  EXPECT_EQ(r2.mode, qcc::SearchMode::exhaustive);
}

TEST(MinWeightCoset, RandomDimTenMatchesExhaustive) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 10; ++t) {
    auto span = oracle::random_matrix(10, 20, 0.3, rng);
    auto shift = oracle::random_vector(20, rng);
    auto res = qcc::min_weight_coset(span, shift);
    ASSERT_TRUE(res.weight.has_value());
    EXPECT_EQ(static_cast<int>(*res.weight),
              oracle::min_coset_weight(oracle::to_dense(span), oracle::to_ints(shift)));
    EXPECT_EQ(res.witness.weight(), *res.weight);
    EXPECT_TRUE(qcc::in_span(span, res.witness ^ shift));
  }
}

TEST(MinWeightCoset, ShiftInvariance) {
  std::mt19937_64 rng(7);
  auto span = oracle::random_matrix(6, 14, 0.3, rng);
  auto shift = oracle::random_vector(14, rng);
  auto moved = shift ^ span.row_vector(2) ^ span.row_vector(4);
  EXPECT_EQ(qcc::min_weight_coset(span, shift).weight, qcc::min_weight_coset(span, moved).weight);
}

TEST(MinWeightCoset, WeightBoundedModeAndRefusal) {
  std::mt19937_64 rng(8);
  auto span = oracle::random_matrix(12, 20, 0.3, rng);
  auto shift = oracle::random_vector(20, rng);
  const auto exact = qcc::min_weight_coset(span, shift);
  qcc::SearchBudget tight;
  tight.max_enumeration = 1000;
  EXPECT_THROW(qcc::min_weight_coset(span, shift, tight), qcc::BudgetExceeded);
  try {
    qcc::min_weight_coset(span, shift, tight);
  } catch (const qcc::BudgetExceeded& e) {
    EXPECT_GE(e.required(), 4096.0);
  }
  qcc::SearchBudget bounded;
  bounded.max_enumeration = 3000;
  bounded.weight_cap = 3;
  auto res = qcc::min_weight_coset(span, shift, bounded);
  EXPECT_EQ(res.mode, qcc::SearchMode::weight_bounded);
  if (*exact.weight <= 3) {
    EXPECT_EQ(res.weight, exact.weight);
  } else {
    EXPECT_FALSE(res.weight.has_value());
  }
}

TEST(WordsOfWeight, CountsMatchBinomial) {
  std::size_t count = 0;
  qcc::for_each_word_of_weight(7, 3, [&](const BitVector& w) {
    EXPECT_EQ(w.weight(), 3u);
    ++count;
    return true;
  });
  EXPECT_EQ(count, 35u);
  EXPECT_DOUBLE_EQ(qcc::count_low_weight_words(7, 2), 1 + 7 + 21);
}

TEST(EchelonBasis, CoordinatesReproduceVector) {
  std::mt19937_64 rng(9);
  qcc::EchelonBasis basis(16, true);
  std::vector<BitVector> inserted;
  for (int i = 0; i < 8; ++i) {
    inserted.push_back(oracle::random_vector(16, rng));
    basis.insert(inserted.back());
  }
  auto target = inserted[1] ^ inserted[5] ^ inserted[6];
  auto coords = basis.coordinates(target);
  ASSERT_TRUE(coords.has_value());
  BitVector rebuilt(16);
  for (auto i : coords->support()) rebuilt ^= inserted[i];
  EXPECT_EQ(rebuilt, target);
}

TEST(SparseKernel, MatchesRankNullity) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 40; ++t) {
    std::vector<std::vector<BinaryMatrix::Index>> rows(14);
    std::uniform_int_distribution<int> pick(0, 17);
    for (auto& r : rows)
      for (int k = 0; k < 3; ++k) r.push_back(static_cast<BinaryMatrix::Index>(pick(rng)));
    auto m = BinaryMatrix::from_row_lists(18, rows);
    qcc::PropagationOptions opts;
    opts.want_basis = true;
    auto res = qcc::kernel_by_propagation(m, {}, opts);
    EXPECT_EQ(res.dimension, m.cols() - qcc::rank(m));
    ASSERT_EQ(res.basis.size(), res.dimension);
    for (const auto& v : res.basis) EXPECT_TRUE(m.multiply(v).none());
    EXPECT_EQ(qcc::rank(BinaryMatrix::from_rows(18, res.basis)), res.dimension);
  }
}

TEST(SparseKernel, FixedVariablesAreZero) {
  std::mt19937_64 rng(11);
  auto m = oracle::random_matrix(6, 12, 0.25, rng);
  std::vector<std::size_t> fixed{0, 3, 7};
  qcc::PropagationOptions opts;
  opts.want_basis = true;
  auto res = qcc::kernel_by_propagation(m, fixed, opts);
  // Pinning columns to zero is the same as deleting them.
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < 12; ++c)
    if (c != 0 && c != 3 && c != 7) keep.push_back(c);
  auto reduced = m.select_columns(keep);
  EXPECT_EQ(res.dimension, keep.size() - qcc::rank(reduced));
  for (const auto& v : res.basis) {
    EXPECT_FALSE(v.get(0) || v.get(3) || v.get(7));
    EXPECT_TRUE(m.multiply(v).none());
  }
}

TEST(SparseKernel, GuessBudget) {
  auto m = BinaryMatrix(0, 10);
  qcc::PropagationOptions opts;
  opts.max_guesses = 4;
  EXPECT_THROW(qcc::kernel_by_propagation(m, {}, opts), qcc::BudgetExceeded);
}
