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

#ifndef QCC_SPARSE_KERNEL_HPP
#define QCC_SPARSE_KERNEL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "qcc/gf2.hpp"

namespace qcc {

struct PropagationOptions {
  /// Refuse (BudgetExceeded) once this many free guesses have been introduced.
  std::size_t max_guesses = 4096;
  bool want_basis = false;
};

struct PropagationKernel {
  std::size_t dimension = 0;
  std::size_t guesses = 0;
  /// Kernel basis (only when requested); fixed-zero variables are zero in every vector.
  std::vector<BitVector> basis;
};

/// Kernel of a sparse system by unit propagation over symbolic guesses.
///
/// Rows of `equations` are parity constraints over its columns (the
/// variables). Variables listed in `fixed_zero` are pinned to 0. Whenever an
/// equation has exactly one undetermined variable, that variable is solved as
/// a linear form in the guesses made so far; when no equation is unit, the
/// lowest-index undetermined variable becomes a new guess. Fully determined
/// equations yield linear constraints on the guesses, and the kernel
/// dimension is guesses minus the rank of those constraints.
///
/// Memory grows with (variables x guesses), so this only pays off when
/// propagation closes after few guesses, as for gauge-fixed cocycle systems
/// of locally connected complexes.
PropagationKernel kernel_by_propagation(const BinaryMatrix& equations,
                                        std::span<const std::size_t> fixed_zero,
                                        const PropagationOptions& options = {});

}  // namespace qcc

#endif  // QCC_SPARSE_KERNEL_HPP
