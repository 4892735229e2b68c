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
#include "qcc/decoders.hpp"
#include "qcc/lsv.hpp"
#include "qcc/rng.hpp"

using qcc::BinaryMatrix;
using qcc::BitVector;
using qcc::Graph;

namespace {

Graph random_graph(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  Graph g;
  g.n = n;
  std::uniform_int_distribution<Graph::Vertex> pick(0, static_cast<Graph::Vertex>(n - 1));
  while (g.edges.size() < m) {
    auto a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (std::find(g.edges.begin(), g.edges.end(), std::make_pair(a, b)) != g.edges.end()) continue;
    g.edges.emplace_back(a, b);
  }
  return g;
}

BitVector boundary_of(const Graph& g, const BitVector& edges) {
  BitVector out(g.n);
  for (auto e : edges.support()) {
    out.flip(g.edges[e].first);
    out.flip(g.edges[e].second);
  }
  return out;
}

// Exhaustive minimum T-join weight, -1 when none exists.
int brute_tjoin(const Graph& g, const BitVector& odd) {
  int best = -1;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edges.size()); ++m) {
    BitVector e(g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i)
      if ((m >> i) & 1) e.set(i);
    if (boundary_of(g, e) != odd) continue;
    const int w = static_cast<int>(e.weight());
    if (best < 0 || w < best) best = w;
  }
  return best;
}

BitVector random_weight(std::size_t n, std::size_t w, std::uint64_t seed, std::uint64_t trial) {
  auto rng = qcc::trial_rng(seed, trial);
  auto idx = qcc::sample_indices(rng, n, w);
  return BitVector::from_support(n, idx);
}

const qcc::SimplicialComplex& lsv_q2() {
  static const auto q = qcc::build_quotient_complex(qcc::CyclicAlgebra::build(2, 3, {1, 1, 1}), 200000);
  return q.complex;
}

void expect_monotone(const qcc::DecodeOutcome& out) {
  ASSERT_FALSE(out.syndrome_weights.empty());
  for (std::size_t k = 1; k < out.syndrome_weights.size(); ++k)
    EXPECT_LT(out.syndrome_weights[k], out.syndrome_weights[k - 1]);
  EXPECT_LE(out.iterations, out.syndrome_weights.front());
  EXPECT_EQ(out.iterations + 1, out.syndrome_weights.size());
}

}  // namespace

TEST(TJoin, TrivialCases) {
  Graph path;
  path.n = 5;
  path.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  EXPECT_TRUE(qcc::tjoin_decode(path, BitVector(5)).none());
  EXPECT_EQ(qcc::tjoin_decode(path, BitVector::from_string("10001")), BitVector::from_string("1111"));
  EXPECT_THROW(qcc::tjoin_decode(path, BitVector::from_string("10000")), std::invalid_argument);
  Graph split;
  split.n = 4;
  split.edges = {{0, 1}, {2, 3}};
  EXPECT_THROW(qcc::tjoin_decode(split, BitVector::from_string("1010")), std::invalid_argument);
}

TEST(TJoin, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(606);
  int tested = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 4 + trial % 5;
    const std::size_t m = std::min<std::size_t>(n * (n - 1) / 2, 5 + trial % 8);
    auto g = random_graph(n, m, rng);
    auto odd = boundary_of(g, oracle::random_vector(m, rng));
    auto join = qcc::tjoin_decode(g, odd);
    EXPECT_EQ(boundary_of(g, join), odd);
    EXPECT_EQ(static_cast<int>(join.weight()), brute_tjoin(g, odd));
    ++tested;
  }
  EXPECT_EQ(tested, 100);
}

TEST(TJoin, BlossomAgreesWithSubsetDp) {
  std::mt19937_64 rng(77);
  qcc::TJoinOptions blossom;
  blossom.dp_limit = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto g = random_graph(24, 40 + trial % 20, rng);
    auto odd = boundary_of(g, oracle::random_vector(g.edges.size(), rng));
    if (odd.weight() > 16) continue;
    auto a = qcc::tjoin_decode(g, odd);
    auto b = qcc::tjoin_decode(g, odd, blossom);
    EXPECT_EQ(a.weight(), b.weight());
    EXPECT_EQ(boundary_of(g, b), odd);
  }
}

TEST(TJoin, LargeOddSetOnTorus) {
  auto g = qcc::fixture_torus(8, 8).graph();
  auto truth = random_weight(g.edges.size(), 20, 3, 0);
  auto odd = boundary_of(g, truth);
  auto join = qcc::tjoin_decode(g, odd);
  EXPECT_EQ(boundary_of(g, join), odd);
  EXPECT_LE(join.weight(), truth.weight());
}

TEST(CycleBasis, Invariants) {
  auto x = qcc::fixture_torus(3, 4).chain();
  qcc::CycleBasis basis(x);
  EXPECT_EQ(static_cast<int>(basis.z0().size()), oracle::rank(oracle::to_dense(x.boundary(2))));
  EXPECT_EQ(basis.z0().size() + basis.z1().size(), qcc::kernel_basis(x.boundary(1)).size());
  EXPECT_EQ(basis.z1().size(), 2u);
  BinaryMatrix all = BinaryMatrix::from_rows(x.face_count(1), {basis.z0().begin(), basis.z1().end()});
  EXPECT_EQ(qcc::rank(all), all.rows());
  auto d2t = x.boundary(2).transpose();
  for (const auto& z : basis.z0()) EXPECT_TRUE(qcc::in_span(d2t, z));
  auto c = basis.coordinates(basis.z1()[1] ^ basis.z0()[0]);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->weight(), 2u);
  EXPECT_FALSE(basis.coordinates(BitVector::from_support(x.face_count(1), {0})).has_value());
}

TEST(XDecode, StepOneTrivialWhenColumnsAreLight) {
  auto x = qcc::fixture_torus(5, 5);
  auto g = x.graph();
  auto d2t = x.chain().boundary(2).transpose();
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto xa = random_weight(g.edges.size(), 1 + t % 2, 12, t);
    auto ya = qcc::tjoin_decode(g, boundary_of(g, xa));
    EXPECT_TRUE(qcc::in_span(d2t, xa ^ ya));
  }
}

TEST(XDecode, TorusTimesPathFive) {
  auto p = qcc::build_product(qcc::fixture_torus(3, 3).chain(), qcc::path_code(5));
  const std::size_t n = p.layout().qubits();
  auto zero = qcc::x_decode(p, BitVector(p.layout().grade0()));
  EXPECT_TRUE(zero.ok());
  EXPECT_TRUE(zero.correction.none());

  qcc::CycleBasis basis(p.base());
  auto g = qcc::graph_from_boundary(p.base().boundary(1));
  for (std::size_t q = 0; q < n; ++q) {
    auto e = BitVector::from_support(n, {q});
    auto out = qcc::x_decode(p, basis, g, p.sigma_x().multiply(e));
    ASSERT_TRUE(out.ok()) << q;
    EXPECT_EQ(p.sigma_x().multiply(out.correction), p.sigma_x().multiply(e));
    EXPECT_TRUE(qcc::x_equivalent(p, e, out.correction)) << q;
  }
  for (std::uint64_t t = 0; t < 150; ++t) {
    auto e = random_weight(n, 2, 99, t);
    auto out = qcc::x_decode(p, basis, g, p.sigma_x().multiply(e));
    ASSERT_TRUE(out.ok());
    EXPECT_TRUE(qcc::x_equivalent(p, e, out.correction)) << t;
  }
}

TEST(XDecode, NontrivialColumnIsStripped) {
  // A weight-2 error in one column that the T-join closes into a non-trivial cycle.
  auto p = qcc::build_product(qcc::fixture_torus(3, 3).chain(), qcc::path_code(5));
  qcc::CycleBasis basis(p.base());
  auto g = qcc::graph_from_boundary(p.base().boundary(1));
  auto z = qcc::systole(p.base(), 1)->witness;
  auto s = z.support();
  BitVector xa = BitVector::from_support(z.size(), {s[0], s[1]});
  auto c = BitVector::from_string("00100");
  auto e = qcc::tensor_cycle(p, xa, c);
  auto out = qcc::x_decode(p, basis, g, p.sigma_x().multiply(e));
  ASSERT_TRUE(out.ok());
  EXPECT_GE(out.iterations, 1u);
  EXPECT_TRUE(qcc::x_equivalent(p, e, out.correction));
}

TEST(XDecode, RejectsInconsistentSyndrome) {
  auto p = qcc::build_product(qcc::fixture_torus(3, 3).chain(), qcc::path_code(3));
  BitVector s(p.layout().grade0());
  s.set(0);
  EXPECT_THROW(qcc::x_decode(p, s), std::invalid_argument);
}

TEST(ZReduce, Properties) {
  auto p = qcc::build_product(qcc::fixture_torus(3, 3).chain(), qcc::path_code(4));
  const auto& l = p.layout();
  const auto& sel = p.selection();
  const std::size_t n = l.qubits();
  BitVector on_app(n);
  on_app.set(l.ea(4, sel.a_double_prime[0]));
  on_app.set(l.tb(2, 1));
  EXPECT_EQ(qcc::z_reduce(p, on_app), on_app);

  for (std::uint64_t t = 0; t < 100; ++t) {
    auto e = t == 0 ? BitVector::from_support(n, {l.ea(3, sel.a_prime[0])}) : random_weight(n, 1 + t % 6, 5, t);
    auto r = qcc::z_reduce(p, e);
    std::size_t ea_weight = 0;
    for (std::size_t q = 0; q < l.ea_block(); ++q) ea_weight += e.get(q);
    for (auto a : sel.a_prime)
      for (std::size_t x1 = 0; x1 < l.x1; ++x1) EXPECT_FALSE(r.get(l.ea(x1, a)));
    for (auto a : sel.a_double_prime) {
      std::size_t w = 0;
      for (std::size_t x1 = 0; x1 < l.x1; ++x1) w += r.get(l.ea(x1, a));
      EXPECT_LE(w, ea_weight);
    }
    EXPECT_TRUE(qcc::in_span(p.sigma_x(), e ^ r));
  }
}

TEST(ZDecode, ZeroAndTbOnly) {
  auto torus = qcc::fixture_torus(5, 5);
  auto p = qcc::build_product(torus.chain(), qcc::path_code(3));
  qcc::LocalDecoder local(torus);
  auto component = [&](const BitVector& f) { return local.decode(f); };
  auto zero = qcc::z_decode(p, BitVector(p.layout().grade2()), component);
  EXPECT_TRUE(zero.ok());
  EXPECT_TRUE(zero.correction.none());
  const auto& l = p.layout();
  BitVector e(l.qubits());
  e.set(l.tb(0, 0));
  e.set(l.tb(7, 1));
  e.set(l.tb(7, 0));
  auto out = qcc::z_decode(p, p.sigma_z().multiply(e), component);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(out.correction, e);
}

TEST(ZDecode, TorusTimesPathRandom) {
  auto torus = qcc::fixture_torus(5, 5);
  auto p = qcc::build_product(torus.chain(), qcc::path_code(3));
  auto g = torus.graph();
  qcc::PotentialChecker checker(g);
  qcc::LocalDecoder local(torus);
  auto component = [&](const BitVector& f) { return local.decode(f); };
  int successes = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto e = random_weight(p.layout().qubits(), 1 + t % 2, 8, t);
    auto s = p.sigma_z().multiply(e);
    auto out = qcc::z_decode(p, s, component);
    if (!out.ok()) continue;
    ++successes;
    EXPECT_EQ(p.sigma_z().multiply(out.correction), s);
    const bool fast = qcc::z_equivalent(p, checker, e, out.correction);
    EXPECT_EQ(fast, qcc::in_span(p.sigma_x(), e ^ out.correction));
    EXPECT_TRUE(fast) << t;
  }
  EXPECT_GT(successes, 150);
}

TEST(ZEquivalence, AgreesWithDenseMembership) {
  auto torus = qcc::fixture_torus(3, 4);
  auto p = qcc::build_product(torus.chain(), qcc::path_code(3));
  auto g = torus.graph();
  qcc::PotentialChecker checker(g);
  const auto n = p.layout().qubits();
  int positives = 0, negatives = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto rng = qcc::trial_rng(4, t);
    BitVector r(n);
    if (t % 2) {
      // A random coboundary of the product, plus possibly a logical.
      BitVector u = oracle::random_vector(p.layout().grade0(), rng);
      r = p.sigma_x().left_multiply(u);
      if (t % 4 == 1) {
        auto z = qcc::cosystole(torus.chain(), 1)->witness;
        r ^= qcc::tensor_cycle(p, z, BitVector::from_string("111"));
      }
    } else {
      r = oracle::random_vector(n, rng);
    }
    const bool dense = p.sigma_z().multiply(r).none() && qcc::in_span(p.sigma_x(), r);
    EXPECT_EQ(qcc::z_equivalent(p, checker, r, BitVector(n)), dense) << t;
    (dense ? positives : negatives)++;
  }
  EXPECT_GT(positives, 30);
  EXPECT_GT(negatives, 30);
}

TEST(LocalDecode, TrivialCases) {
  auto torus = qcc::fixture_torus(5, 5);
  qcc::LocalDecoder local(torus);
  auto zero = local.decode(BitVector(torus.face_count(2)));
  EXPECT_TRUE(zero.ok());
  EXPECT_EQ(zero.iterations, 0u);
  const auto d1 = torus.chain().coboundary(1);
  for (std::size_t e = 0; e < torus.face_count(1); ++e) {
    auto f = d1.multiply(BitVector::from_support(torus.face_count(1), {e}));
    auto out = local.decode(f);
    ASSERT_TRUE(out.ok());
    EXPECT_EQ(out.iterations, 1u);
    EXPECT_EQ(out.correction.weight(), 1u);
    EXPECT_EQ(d1.multiply(out.correction), f);
    auto single = local.decode_single_edge(f);
    ASSERT_TRUE(single.ok());
    EXPECT_EQ(single.correction, BitVector::from_support(torus.face_count(1), {e}));
  }
  BitVector bad(torus.face_count(2));
  bad.set(0);
  EXPECT_THROW(local.decode(bad), std::invalid_argument);
}

TEST(LocalDecode, ProgressAndConsistencyOnRandomComplexes) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 60; ++trial) {
    auto x = fixture::random_complex(8, 9, 2, rng);
    qcc::LocalDecoder local(x);
    const auto d1 = x.chain().coboundary(1);
    auto g = x.graph();
    auto e = oracle::random_vector(x.face_count(1), rng);
    auto f = d1.multiply(e);
    for (const auto& out : {local.decode(f), local.decode_single_edge(f)}) {
      expect_monotone(out);
      if (out.ok()) EXPECT_EQ(d1.multiply(out.correction), f);
      else EXPECT_EQ(out.status, qcc::DecodeStatus::stalled);
    }
  }
}

TEST(LocalDecode, DeterministicTieBreaks) {
  auto torus = qcc::fixture_torus(4, 4);
  qcc::LocalDecoder local(torus);
  const auto d1 = torus.chain().coboundary(1);
  for (std::uint64_t t = 0; t < 20; ++t) {
    auto f = d1.multiply(random_weight(torus.face_count(1), 3, 1, t));
    auto a = local.decode(f);
    auto b = qcc::local_coboundary_decode(torus, f);
    EXPECT_EQ(a.correction, b.correction);
    EXPECT_EQ(a.syndrome_weights, b.syndrome_weights);
  }
}

TEST(SingleEdge, TorusSuccessesAreEquivalent) {
  auto torus = qcc::fixture_torus(5, 5);
  qcc::LocalDecoder local(torus);
  const auto d1 = torus.chain().coboundary(1);
  auto g = torus.graph();
  int successes = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto e = random_weight(torus.face_count(1), 1 + t % 2, 21, t);
    auto out = local.decode_single_edge(d1.multiply(e));
    expect_monotone(out);
    if (!out.ok()) continue;
    ++successes;
    EXPECT_TRUE(qcc::is_coboundary(g, e ^ out.correction)) << t;
  }
  EXPECT_GE(successes, 100);
}

TEST(LocalDecode, BudgetRefusal) {
  auto torus = qcc::fixture_torus(4, 4);
  qcc::LocalDecodeOptions tight;
  tight.max_subsets_per_vertex = 8;
  qcc::LocalDecoder local(torus, tight);
  auto f = torus.chain().coboundary(1).multiply(BitVector::from_support(torus.face_count(1), {0}));
  EXPECT_EQ(local.decode(f).status, qcc::DecodeStatus::budget_exceeded);
}

TEST(LocalDecodeLsv, RandomErrorsUpToWeightThree) {
  const auto& x = lsv_q2();
  qcc::LocalDecoder local(x);
  const auto& d2 = x.chain().boundary(2);
  auto g = x.graph();
  qcc::PotentialChecker checker(g);
  std::size_t ok = 0, equivalent = 0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    auto e = random_weight(x.face_count(1), 1 + t % 3, 2026, t);
    auto f = d2.left_multiply(e);
    auto out = local.decode(f);
    expect_monotone(out);
    if (!out.ok()) continue;
    ++ok;
    EXPECT_EQ(d2.left_multiply(out.correction), f);
    equivalent += checker.is_coboundary(e ^ out.correction);
  }
  EXPECT_EQ(ok, equivalent);
  RecordProperty("successes", static_cast<int>(ok));
  EXPECT_GT(ok, 900u);
}
