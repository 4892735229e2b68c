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

#ifndef QCC_CLASSICAL_HPP
#define QCC_CLASSICAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcc/gf2.hpp"

namespace qcc {

enum class CodeKind { path, ldpc, custom };
const char* to_string(CodeKind kind);

/// Classical code on bits A with checks B; H is |B| x |A| of full row rank.
struct BipartiteCode {
  BinaryMatrix h;
  CodeKind kind = CodeKind::custom;
  /// Claimed number of correctable errors (0 = unknown).
  std::size_t decoder_radius = 0;

  std::size_t bits() const noexcept { return h.cols(); }
  std::size_t checks() const noexcept { return h.rows(); }
  std::size_t dimension() const noexcept { return h.cols() - h.rows(); }
};

/// Wraps H after checking it has no redundant rows.
BipartiteCode make_code(BinaryMatrix h, CodeKind kind = CodeKind::custom, std::size_t decoder_radius = 0);

/// Repetition code of length m: checks a_i + a_{i+1}.
BipartiteCode path_code(std::size_t m);

/// Random (dv, dc)-biregular factor graph from a seeded socket permutation;
/// parallel edges cancel mod 2 and dependent rows are dropped (earliest kept).
BipartiteCode random_regular_ldpc(std::size_t n, std::size_t dv, std::size_t dc, std::uint64_t seed);

/// Minimum nonzero codeword weight by enumerating all 2^k codewords;
/// nullopt for k = 0. Throws BudgetExceeded above max_enumeration.
std::optional<std::size_t> code_distance(const BipartiteCode& code, double max_enumeration = double(1 << 22));

struct ClassicalDecode {
  std::optional<BitVector> error;  ///< nullopt when the decoder stalled
  std::size_t rounds = 0;
};

/// Finds e with H e = syndrome.
///
/// Path codes are decoded by majority: the syndrome fixes e up to the
/// all-ones word and the lighter of the two is returned. Other codes use
/// greedy bit-flip: each round flips the bit that satisfies the most
/// unsatisfied checks net (lowest index on ties), and stops when no flip
/// reduces the number of unsatisfied checks.
ClassicalDecode bitflip_decode(const BipartiteCode& code, const BitVector& syndrome, std::size_t max_rounds = 0);

/// Decodes a noisy word to a codeword; nullopt on a stall.
std::optional<BitVector> decode_word(const BipartiteCode& code, const BitVector& word);

/// Pivot split of A for a full-rank H.
struct ColumnSelection {
  std::vector<std::size_t> a_prime;         ///< |B| columns where H is invertible
  std::vector<std::size_t> a_double_prime;  ///< remaining k columns
  /// b_sets[i]: the b with (H[:, A'])^{-1}[i][b] = 1, for a = a_prime[i].
  std::vector<std::vector<std::size_t>> b_sets;
};

ColumnSelection select_a_prime(const BipartiteCode& code);

/// Largest w <= max_weight such that every trial at each weight up to w
/// decoded to an equivalent word; trials per weight, seeded.
std::size_t estimate_decoder_radius(const BipartiteCode& code, std::size_t max_weight, std::size_t trials,
                                    std::uint64_t seed);

}  // namespace qcc

#endif  // QCC_CLASSICAL_HPP
