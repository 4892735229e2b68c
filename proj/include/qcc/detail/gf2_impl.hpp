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

#ifndef QCC_DETAIL_GF2_IMPL_HPP
#define QCC_DETAIL_GF2_IMPL_HPP

namespace qcc {

template <class Visit>
void for_each_word_of_weight(std::size_t n, std::size_t w, Visit&& visit) {
  if (w > n) return;
  BitVector word(n);
  if (w == 0) {
    visit(static_cast<const BitVector&>(word));
    return;
  }
  std::vector<std::size_t> idx(w);
  for (std::size_t i = 0; i < w; ++i) {
    idx[i] = i;
    word.set(i);
  }
  while (true) {
    if (!visit(static_cast<const BitVector&>(word))) return;
    // Advance to the next combination in colex order.
    std::size_t i = 0;
    while (i < w && idx[i] + 1 == (i + 1 < w ? idx[i + 1] : n)) ++i;
    if (i == w) return;
    word.flip(idx[i]);
    ++idx[i];
    word.flip(idx[i]);
    for (std::size_t j = 0; j < i; ++j) {
      word.flip(idx[j]);
      idx[j] = j;
      word.flip(idx[j]);
    }
  }
}

}  // namespace qcc

#endif  // QCC_DETAIL_GF2_IMPL_HPP
