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

#ifndef QCC_RNG_HPP
#define QCC_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <random>
#include <vector>

namespace qcc {

/// SplitMix64 finalizer; used to derive independent per-trial seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::mt19937_64 trial_rng(std::uint64_t master_seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(splitmix64(master_seed) ^ trial));
}

/// Uniform integer in [0, bound) by rejection; identical on every platform,
/// unlike std::uniform_int_distribution.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// k distinct indices from [0, n), in increasing order.
inline std::vector<std::size_t> sample_indices(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> out;
  if (4 * k < n) {
    while (out.size() < k) {
      const auto x = static_cast<std::size_t>(uniform_below(rng, n));
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
  } else {
    // Partial Fisher-Yates.
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
      const auto j = i + static_cast<std::size_t>(uniform_below(rng, n - i));
      std::swap(out[i], out[j]);
    }
    out.resize(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qcc

#endif  // QCC_RNG_HPP
