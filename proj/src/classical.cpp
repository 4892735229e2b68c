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

#include "qcc/classical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qcc/rng.hpp"

namespace qcc {

const char* to_string(CodeKind kind) {
  switch (kind) {
    case CodeKind::path:
      return "path";
    case CodeKind::ldpc:
      return "ldpc";
    case CodeKind::custom:
      return "custom";
  }
  return "unknown";
}

BipartiteCode make_code(BinaryMatrix h, CodeKind kind, std::size_t decoder_radius) {
  if (rank(h) != h.rows()) {
    throw std::invalid_argument("make_code: check matrix has redundant rows (rank " + std::to_string(rank(h)) +
                                " < " + std::to_string(h.rows()) + ")");
  }
  BipartiteCode code;
  code.h = std::move(h);
  code.kind = kind;
  code.decoder_radius = decoder_radius;
  return code;
}

BipartiteCode path_code(std::size_t m) {
  if (m < 2) throw std::invalid_argument("path_code: need m >= 2");
  std::vector<std::vector<BinaryMatrix::Index>> rows;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    rows.push_back({static_cast<BinaryMatrix::Index>(i), static_cast<BinaryMatrix::Index>(i + 1)});
  }
  return make_code(BinaryMatrix::from_row_lists(m, std::move(rows)), CodeKind::path, (m - 1) / 2);
}

BipartiteCode random_regular_ldpc(std::size_t n, std::size_t dv, std::size_t dc, std::uint64_t seed) {
  if (n == 0 || dv == 0 || dc == 0 || (n * dv) % dc != 0) {
    std::ostringstream msg;
    msg << "random_regular_ldpc: infeasible degrees n=" << n << " dv=" << dv << " dc=" << dc;
    throw std::invalid_argument(msg.str());
  }
  const std::size_t sockets = n * dv;
  const std::size_t m = sockets / dc;
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(sockets);
  for (std::size_t i = 0; i < sockets; ++i) perm[i] = i;
  for (std::size_t i = sockets; i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(perm[i - 1], perm[j]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t s = 0; s < sockets; ++s) entries.emplace_back(s / dc, perm[s] / dv);
  const auto full = BinaryMatrix::from_triplets(m, n, entries);

  EchelonBasis basis(n);
  std::vector<BitVector> kept;
  for (std::size_t r = 0; r < full.rows(); ++r) {
    auto row = full.row_vector(r);
    if (basis.insert(row)) kept.push_back(std::move(row));
  }
  return make_code(BinaryMatrix::from_rows(n, kept), CodeKind::ldpc, 0);
}

std::optional<std::size_t> code_distance(const BipartiteCode& code, double max_enumeration) {
  const auto basis = kernel_basis(code.h);
  const std::size_t k = basis.size();
  if (k == 0) return std::nullopt;
  if (k >= 63 || std::ldexp(1.0, static_cast<int>(k)) > max_enumeration) {
    throw BudgetExceeded("code_distance: 2^" + std::to_string(k) + " codewords exceed the budget",
                         std::ldexp(1.0, static_cast<int>(std::min<std::size_t>(k, 1000))));
  }
  BitVector word(code.bits());
  std::size_t best = code.bits() + 1;
  for (std::uint64_t g = 1; g < (std::uint64_t{1} << k); ++g) {
    word ^= basis[static_cast<std::size_t>(std::countr_zero(g))];
    best = std::min(best, word.weight());
  }
  return best;
}

namespace {

ClassicalDecode majority_decode(const BipartiteCode& code, const BitVector& syndrome) {
  const std::size_t m = code.bits();
  BitVector e(m);
  for (std::size_t i = 0; i + 1 < m; ++i) e.set(i + 1, e.get(i) ^ syndrome.get(i));
  if (2 * e.weight() > m) {
    for (std::size_t i = 0; i < m; ++i) e.flip(i);
  }
  ClassicalDecode out;
  out.error = std::move(e);
  out.rounds = 1;
  return out;
}

ClassicalDecode greedy_bitflip(const BipartiteCode& code, const BitVector& syndrome, std::size_t max_rounds) {
  const auto& h = code.h;
  const auto cols = h.transpose();
  BitVector unsat = syndrome;
  BitVector e(code.bits());
  ClassicalDecode out;
  if (max_rounds == 0) max_rounds = 4 * code.bits() + 4;
  while (unsat.any()) {
    if (out.rounds >= max_rounds) return out;
    long best_gain = 0;
    std::size_t best = code.bits();
    for (std::size_t j = 0; j < cols.rows(); ++j) {
      long gain = 0;
      for (auto b : cols.row(j)) gain += unsat.get(b) ? 1 : -1;
      if (gain > best_gain) {
        best_gain = gain;
        best = j;
      }
    }
    if (best == code.bits()) return out;  // stalled
    e.flip(best);
    for (auto b : cols.row(best)) unsat.flip(b);
    ++out.rounds;
  }
  out.error = std::move(e);
  return out;
}

}  // namespace

ClassicalDecode bitflip_decode(const BipartiteCode& code, const BitVector& syndrome, std::size_t max_rounds) {
  if (syndrome.size() != code.checks()) throw std::invalid_argument("bitflip_decode: syndrome length mismatch");
  if (code.kind == CodeKind::path) return majority_decode(code, syndrome);
  return greedy_bitflip(code, syndrome, max_rounds);
}

std::optional<BitVector> decode_word(const BipartiteCode& code, const BitVector& word) {
  auto res = bitflip_decode(code, code.h.multiply(word));
  if (!res.error) return std::nullopt;
  return word ^ *res.error;
}

ColumnSelection select_a_prime(const BipartiteCode& code) {
  const auto rref = row_reduce(code.h);
  if (rref.pivots.size() != code.checks()) throw std::invalid_argument("select_a_prime: H is rank deficient");
  ColumnSelection sel;
  sel.a_prime = rref.pivots;
  std::sort(sel.a_prime.begin(), sel.a_prime.end());
  std::vector<char> is_prime(code.bits(), 0);
  for (auto a : sel.a_prime) is_prime[a] = 1;
  for (std::size_t a = 0; a < code.bits(); ++a)
    if (!is_prime[a]) sel.a_double_prime.push_back(a);

  // Column b of M^{-1} solves M x = e_b, with M = H[:, A'].
  const auto m = code.h.select_columns(sel.a_prime);
  const std::size_t nb = code.checks();
  sel.b_sets.assign(nb, {});
  for (std::size_t b = 0; b < nb; ++b) {
    BitVector unit(nb);
    unit.set(b);
    auto x = solve(m, unit);
    if (!x) throw std::logic_error("select_a_prime: restricted matrix is singular");
    for (auto i : x->support()) sel.b_sets[i].push_back(b);
  }
  return sel;
}

std::size_t estimate_decoder_radius(const BipartiteCode& code, std::size_t max_weight, std::size_t trials,
                                    std::uint64_t seed) {
  std::size_t radius = 0;
  for (std::size_t w = 1; w <= std::min(max_weight, code.bits()); ++w) {
    for (std::size_t t = 0; t < trials; ++t) {
      auto rng = trial_rng(seed ^ (std::uint64_t{w} << 40), t);
      const auto support = sample_indices(rng, code.bits(), w);
      const auto e = BitVector::from_support(code.bits(), support);
      const auto res = bitflip_decode(code, code.h.multiply(e));
      if (!res.error || *res.error != e) return radius;
    }
    radius = w;
  }
  return radius;
}

}  // namespace qcc
