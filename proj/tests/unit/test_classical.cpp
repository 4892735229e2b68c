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

#include <algorithm>
#include <bit>
#include <random>

#include "oracles.hpp"
#include "qcc/classical.hpp"
#include "qcc/rng.hpp"

using qcc::BinaryMatrix;
using qcc::BitVector;

TEST(PathCode, Parameters) {
  auto p2 = qcc::path_code(2);
  EXPECT_EQ(p2.h, BinaryMatrix::from_row_lists(2, {{0, 1}}));
  EXPECT_EQ(qcc::code_distance(p2), 2u);
  auto p3 = qcc::path_code(3);
  EXPECT_EQ(p3.dimension(), 1u);
  EXPECT_EQ(qcc::code_distance(p3), 3u);
  EXPECT_THROW(qcc::path_code(1), std::invalid_argument);
}

TEST(MakeCode, RejectsRedundantRows) {
  EXPECT_THROW(qcc::make_code(BinaryMatrix::from_row_lists(3, {{0, 1}, {1, 2}, {0, 2}})), std::invalid_argument);
}

TEST(RandomLdpc, ReproducibleFullRankBoundedWeights) {
  auto a = qcc::random_regular_ldpc(12, 3, 4, 7);
  auto b = qcc::random_regular_ldpc(12, 3, 4, 7);
  EXPECT_EQ(a.h, b.h);
  EXPECT_EQ(qcc::rank(a.h), a.checks());
  EXPECT_LE(a.h.max_row_weight(), 4u);
  EXPECT_LE(a.h.max_column_weight(), 3u);
  EXPECT_THROW(qcc::random_regular_ldpc(10, 3, 4, 1), std::invalid_argument);
}

TEST(RandomLdpc, DistanceMatchesCodewordScan) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto code = qcc::random_regular_ldpc(12, 3, 4, seed);
    auto dense = oracle::to_dense(code.h);
    int best = -1;
    for (std::uint32_t mask = 1; mask < (1u << 12); ++mask) {
      std::vector<int> v(12);
      for (int j = 0; j < 12; ++j) v[j] = (mask >> j) & 1u;
      auto s = oracle::mul(dense, v);
      if (std::count(s.begin(), s.end(), 1) != 0) continue;
      const int w = std::popcount(mask);
      if (best == -1 || w < best) best = w;
    }
    auto d = qcc::code_distance(code);
    if (best == -1) {
      EXPECT_FALSE(d.has_value());
    } else {
      EXPECT_EQ(d, static_cast<std::size_t>(best));
    }
  }
}

TEST(Bitflip, ZeroSyndrome) {
  auto code = qcc::random_regular_ldpc(24, 3, 6, 3);
  auto res = qcc::bitflip_decode(code, BitVector(code.checks()));
  ASSERT_TRUE(res.error.has_value());
  EXPECT_TRUE(res.error->none());
}

TEST(Bitflip, PathCodeMajority) {
  auto code = qcc::path_code(5);
  auto e = BitVector::from_support(5, {2});
  auto res = qcc::bitflip_decode(code, code.h.multiply(e));
  EXPECT_EQ(res.error, e);
  for (std::uint32_t mask = 0; mask < 32; ++mask) {
    if (std::popcount(mask) >= 3) continue;
    BitVector err(5);
    for (std::size_t j = 0; j < 5; ++j)
      if ((mask >> j) & 1u) err.set(j);
    EXPECT_EQ(qcc::bitflip_decode(code, code.h.multiply(err)).error, err);
  }
}

TEST(Bitflip, RandomLdpcSyndromeConsistency) {
  auto code = qcc::random_regular_ldpc(48, 3, 6, 7);
  std::size_t successes = 0;
  for (std::size_t j = 0; j < code.bits(); ++j) {
    auto e = BitVector::from_support(code.bits(), {j});
    auto s = code.h.multiply(e);
    auto res = qcc::bitflip_decode(code, s);
    if (res.error) {
      EXPECT_EQ(code.h.multiply(*res.error), s);
      ++successes;
    }
  }
  EXPECT_GT(successes, 0u);
}

TEST(DecodeWord, StripsSparseNoise) {
  auto code = qcc::path_code(5);
  auto noisy = BitVector::from_string("11011");
  EXPECT_EQ(qcc::decode_word(code, noisy), BitVector::from_string("11111"));
}

TEST(SelectAPrime, Cases) {
  auto sel = qcc::select_a_prime(qcc::path_code(3));
  EXPECT_EQ(sel.a_prime.size(), 2u);
  EXPECT_EQ(sel.a_double_prime.size(), 1u);
  auto id = qcc::make_code(BinaryMatrix::identity(4));
  EXPECT_EQ(qcc::select_a_prime(id).a_prime, (std::vector<std::size_t>{0, 1, 2, 3}));

  auto code = qcc::random_regular_ldpc(24, 3, 6, 11);
  auto s = qcc::select_a_prime(code);
  auto m = code.h.select_columns(s.a_prime);
  EXPECT_EQ(qcc::rank(m), code.checks());
  EXPECT_EQ(s.a_double_prime.size(), code.dimension());
  // b_sets are the rows of the inverse: M * inverse = identity.
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t i = 0; i < s.b_sets.size(); ++i)
    for (auto b : s.b_sets[i]) entries.emplace_back(i, b);
  auto inv = BinaryMatrix::from_triplets(s.a_prime.size(), code.checks(), entries);
  EXPECT_EQ(m.multiply(inv), BinaryMatrix::identity(code.checks()));
}

TEST(DecoderRadius, PathCode) {
  EXPECT_EQ(qcc::estimate_decoder_radius(qcc::path_code(5), 3, 50, 1), 2u);
}

TEST(Rng, SampleIndicesDistinctSorted) {
  auto rng = qcc::trial_rng(42, 3);
  for (std::size_t k : {0, 1, 5, 30}) {
    auto s = qcc::sample_indices(rng, 40, k);
    EXPECT_EQ(s.size(), k);
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
    EXPECT_EQ(std::adjacent_find(s.begin(), s.end()), s.end());
  }
  auto a = qcc::trial_rng(1, 2), b = qcc::trial_rng(1, 2);
  EXPECT_EQ(a(), b());
}
