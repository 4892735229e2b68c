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

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qcc/chain.hpp"
#include "qcc/simplicial.hpp"

using qcc::BinaryMatrix;
using qcc::ChainComplex;

namespace {

ChainComplex triangle_chain() { return fixture::filled_triangle().chain(); }

int oracle_systole(const ChainComplex& x, std::size_t p, int max_weight) {
  auto h = oracle::to_dense(x.boundary(p));
  auto b = oracle::transpose(oracle::to_dense(x.boundary(p + 1)));
  return oracle::min_nontrivial_cycle(h, b, x.face_count(p), max_weight);
}

}  // namespace

TEST(ChainComplex, ShapeMismatchRejected) {
  EXPECT_THROW(ChainComplex({3, 2}, {BinaryMatrix(2, 3)}), std::invalid_argument);
  EXPECT_THROW(ChainComplex({3, 2}, {}), std::invalid_argument);
}

TEST(ChainComplex, EndMapsAreZero) {
  auto x = triangle_chain();
  EXPECT_EQ(x.boundary(0).rows(), 0u);
  EXPECT_EQ(x.boundary(0).cols(), 3u);
  EXPECT_EQ(x.boundary(3).rows(), 1u);
  EXPECT_EQ(x.boundary(3).cols(), 0u);
}

TEST(Validate, TriangleOkAndFlippedBitReported) {
  auto x = triangle_chain();
  EXPECT_FALSE(qcc::validate(x).has_value());
  auto d2 = x.boundary(2).triplets();
  d2.pop_back();  // drop one edge from the triangle's boundary
  ChainComplex broken({3, 3, 1}, {x.boundary(1), BinaryMatrix::from_triplets(3, 1, d2)});
  auto v = qcc::validate(broken);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->p, 2u);
  EXPECT_EQ(v->face, 0u);
}

TEST(Cocomplex, GraphAndInvolution) {
  ChainComplex graph({3, 2}, {BinaryMatrix::from_row_lists(2, {{0}, {0, 1}, {1}})});
  auto co = qcc::cocomplex(graph);
  EXPECT_EQ(co.face_counts(), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(co.boundary(1), graph.boundary(1).transpose());

  auto torus = qcc::fixture_torus(3, 3).chain();
  EXPECT_EQ(qcc::cocomplex(qcc::cocomplex(torus)), torus);
  EXPECT_EQ(qcc::cocomplex(triangle_chain()).face_count(0), 1u);
}

TEST(Homology, TorusAndTriangle) {
  auto torus = qcc::fixture_torus(3, 3).chain();
  EXPECT_EQ(qcc::homology_dim(torus, 0), 1u);
  EXPECT_EQ(qcc::homology_dim(torus, 1), 2u);
  EXPECT_EQ(qcc::homology_dim(torus, 2), 1u);
  EXPECT_EQ(qcc::homology_dim(triangle_chain(), 1), 0u);
}

TEST(Homology, DualityOnRandomComplexes) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 30; ++t) {
    auto x = fixture::random_complex(8, 5, 6, rng).chain();
    ASSERT_FALSE(qcc::validate(x).has_value());
    for (std::size_t p = 0; p <= x.dimension(); ++p) {
      EXPECT_EQ(qcc::homology_dim(x, p), qcc::cohomology_dim(x, p));
    }
  }
}

TEST(Systole, TorusThreeByThree) {
  auto torus = qcc::fixture_torus(3, 3).chain();
  auto s = qcc::systole(torus, 1);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->value, 3u);
  EXPECT_EQ(s->provenance, qcc::Provenance::measured);
  EXPECT_EQ(oracle_systole(torus, 1, 3), 3);
  EXPECT_TRUE(torus.boundary(1).multiply(s->witness).none());
  EXPECT_FALSE(qcc::in_span(torus.boundary(2).transpose(), s->witness));
  EXPECT_EQ(s->witness.weight(), 3u);
}

TEST(Systole, TorusThreeByFour) {
  auto torus = qcc::fixture_torus(3, 4).chain();
  qcc::SearchBudget budget;
  budget.max_enumeration = 1 << 25;
  auto s = qcc::systole(torus, 1, budget);
  ASSERT_TRUE(s.has_value());
  EXPECT_LE(s->value, 3u);
  EXPECT_EQ(static_cast<int>(s->value), oracle_systole(torus, 1, 4));
}

TEST(Systole, UndefinedWithoutHomology) {
  EXPECT_FALSE(qcc::systole(triangle_chain(), 1).has_value());
  EXPECT_FALSE(qcc::cosystole(triangle_chain(), 1).has_value());
}

TEST(Systole, CapModeAndRefusal) {
  auto torus = qcc::fixture_torus(3, 3).chain();
  qcc::SearchBudget budget;
  budget.max_enumeration = 5;
  EXPECT_THROW(qcc::systole(torus, 1, budget), qcc::BudgetExceeded);
  budget.weight_cap = 3;
  EXPECT_THROW(qcc::systole(torus, 1, budget), qcc::BudgetExceeded);
  budget.max_enumeration = 5000;
  budget.weight_cap = 2;
  auto low = qcc::systole(torus, 1, budget);
  ASSERT_TRUE(low.has_value());
  EXPECT_EQ(low->provenance, qcc::Provenance::lower_bounded);
  EXPECT_EQ(low->value, 3u);
  budget.weight_cap = 3;
  auto hit = qcc::systole(torus, 1, budget);
  EXPECT_EQ(hit->provenance, qcc::Provenance::measured);
  EXPECT_EQ(hit->mode, qcc::SearchMode::weight_bounded);
  EXPECT_EQ(hit->value, 3u);
}

TEST(Systole, CycleSearchMatchesOracle) {
  std::mt19937_64 rng(31);
  qcc::SearchBudget forced;
  forced.force_cycle_search = true;
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto x = fixture::random_complex(7, 5, 4, rng).chain();
    auto full = qcc::systole(x, 1);
    auto dfs = qcc::systole(x, 1, forced);
    ASSERT_EQ(full.has_value(), dfs.has_value());
    if (!full) continue;
    EXPECT_EQ(dfs->mode, qcc::SearchMode::weight_bounded);
    EXPECT_EQ(dfs->value, full->value);
    EXPECT_EQ(dfs->witness.weight(), dfs->value);
    EXPECT_TRUE(x.boundary(1).multiply(dfs->witness).none());
    auto co = qcc::cosystole(x, 1);
    auto co_dfs = qcc::cosystole(x, 1, forced);
    EXPECT_EQ(co->value, co_dfs->value);
    ++checked;
  }
  EXPECT_GT(checked, 5);
}

TEST(Systole, CycleSearchOnLargerTorus) {
  auto torus = qcc::fixture_torus(4, 5).chain();
  qcc::SearchBudget forced;
  forced.force_cycle_search = true;
  EXPECT_EQ(qcc::systole(torus, 1, forced)->value, 4u);
  auto exhaustive = qcc::cosystole(torus, 1);
  EXPECT_EQ(exhaustive->mode, qcc::SearchMode::exhaustive);
  EXPECT_EQ(qcc::cosystole(torus, 1, forced)->value, exhaustive->value);
  EXPECT_EQ(exhaustive->value, 8u);
}

TEST(Cosystole, TorusMatchesCocomplexAndOracle) {
  auto torus = qcc::fixture_torus(3, 3).chain();
  auto s = qcc::cosystole(torus, 1);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->value, qcc::systole(qcc::cocomplex(torus), 1)->value);
  auto h = oracle::transpose(oracle::to_dense(torus.boundary(2)));
  auto b = oracle::to_dense(torus.boundary(1));
  EXPECT_EQ(static_cast<int>(s->value), oracle::min_nontrivial_cycle(h, b, 27, 8));
}

TEST(Cosystole, RandomComplexesMatchOracle) {
  std::mt19937_64 rng(22);
  int checked = 0;
  for (int t = 0; t < 60 && checked < 10; ++t) {
    auto x = fixture::random_complex(7, 4, 5, rng).chain();
    if (qcc::cohomology_dim(x, 1) == 0) continue;
    ++checked;
    auto s = qcc::cosystole(x, 1);
    ASSERT_TRUE(s.has_value());
    auto h = oracle::transpose(oracle::to_dense(x.boundary(2)));
    auto b = oracle::to_dense(x.boundary(1));
    EXPECT_EQ(static_cast<int>(s->value), oracle::min_nontrivial_cycle(h, b, x.face_count(1), 21));
  }
  EXPECT_GT(checked, 0);
}

TEST(CssExtract, TorusAndTriangle) {
  auto torus = qcc::fixture_torus(3, 3).chain();
  auto code = qcc::css_extract(torus, 1);
  EXPECT_EQ(code.n, 27u);
  EXPECT_EQ(qcc::css_dimension(code), 2u);
  EXPECT_TRUE(code.hz.multiply(code.hx.transpose()).is_zero());
  auto tri = qcc::css_extract(triangle_chain(), 1);
  EXPECT_EQ(tri.n, 3u);
  EXPECT_EQ(qcc::css_dimension(tri), 0u);
  EXPECT_THROW(qcc::css_extract(torus, 3), std::out_of_range);
}
