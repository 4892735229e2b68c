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

#include "qcc/sparse_kernel.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

namespace qcc {

namespace {

using Words = std::vector<std::uint64_t>;

void xor_into(Words& dst, const Words& src) {
  if (dst.size() < src.size()) dst.resize(src.size(), 0);
  for (std::size_t k = 0; k < src.size(); ++k) dst[k] ^= src[k];
}

void trim(Words& w) {
  while (!w.empty() && w.back() == 0) w.pop_back();
}

bool test_bit(const Words& w, std::size_t i) {
  return (i >> 6) < w.size() && ((w[i >> 6] >> (i & 63)) & 1u);
}

std::size_t lowest_bit(const Words& w) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(w[k]));
  }
  return static_cast<std::size_t>(-1);
}

/// Fully reduced echelon set over a growing coordinate space.
class GrowingEchelon {
 public:
  void insert(Words v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (test_bit(v, pivots_[k])) xor_into(v, rows_[k]);
    }
    trim(v);
    if (v.empty()) return;
    const std::size_t p = lowest_bit(v);
    for (auto& row : rows_) {
      if (test_bit(row, p)) {
        xor_into(row, v);
        trim(row);
      }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
  }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Words>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::vector<Words> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

PropagationKernel kernel_by_propagation(const BinaryMatrix& equations,
                                        std::span<const std::size_t> fixed_zero,
                                        const PropagationOptions& options) {
  const std::size_t n_vars = equations.cols();
  const std::size_t n_eqs = equations.rows();
  const BinaryMatrix incidence = equations.transpose();  // variable -> equations

  std::vector<Words> form(n_vars);
  std::vector<char> known(n_vars, 0);
  std::vector<std::uint32_t> unknown_count(n_eqs);
  for (std::size_t e = 0; e < n_eqs; ++e) {
    unknown_count[e] = static_cast<std::uint32_t>(equations.row_weight(e));
  }

  GrowingEchelon constraints;
  std::deque<std::size_t> unit;
  std::size_t guesses = 0;

  auto close_equation = [&](std::size_t e) {
    Words acc;
    for (auto v : equations.row(e)) xor_into(acc, form[v]);
    trim(acc);
    if (!acc.empty()) constraints.insert(std::move(acc));
  };

  auto assign = [&](std::size_t var, Words value) {
    trim(value);
    form[var] = std::move(value);
    known[var] = 1;
    for (auto e : incidence.row(var)) {
      const auto left = --unknown_count[e];
      if (left == 1) {
        unit.push_back(e);
      } else if (left == 0) {
        close_equation(e);
      }
    }
  };

  for (std::size_t v : fixed_zero) {
    if (v >= n_vars) throw std::out_of_range("kernel_by_propagation: fixed variable out of range");
    if (!known[v]) assign(v, {});
  }
  for (std::size_t e = 0; e < n_eqs; ++e) {
    if (unknown_count[e] == 1) unit.push_back(e);
  }

  std::size_t cursor = 0;
  while (true) {
    while (!unit.empty()) {
      const std::size_t e = unit.front();
      unit.pop_front();
      if (unknown_count[e] != 1) continue;
      std::size_t target = n_vars;
      Words value;
      for (auto v : equations.row(e)) {
        if (known[v]) {
          xor_into(value, form[v]);
        } else {
          target = v;
        }
      }
      assign(target, std::move(value));
    }
    while (cursor < n_vars && known[cursor]) ++cursor;
    if (cursor == n_vars) break;
    if (guesses >= options.max_guesses) {
      std::ostringstream msg;
      msg << "kernel_by_propagation: more than " << options.max_guesses
          << " guesses needed (" << (n_vars - std::count(known.begin(), known.end(), 1))
          << " variables still undetermined)";
      throw BudgetExceeded(msg.str(), double(guesses + 1));
    }
    Words unit_form((guesses >> 6) + 1, 0);
    unit_form[guesses >> 6] = std::uint64_t{1} << (guesses & 63);
    ++guesses;
    assign(cursor, std::move(unit_form));
  }

  PropagationKernel out;
  out.guesses = guesses;
  out.dimension = guesses - constraints.rank();
  if (!options.want_basis) return out;

  // Free guesses are the non-pivot coordinates of the (fully reduced) constraints.
  std::vector<char> is_pivot(guesses, 0);
  for (auto p : constraints.pivots()) is_pivot[p] = 1;
  for (std::size_t g = 0; g < guesses; ++g) {
    if (is_pivot[g]) continue;
    Words assignment((guesses + 63) / 64, 0);
    assignment[g >> 6] |= std::uint64_t{1} << (g & 63);
    for (std::size_t k = 0; k < constraints.rank(); ++k) {
      if (test_bit(constraints.rows()[k], g)) {
        const auto p = constraints.pivots()[k];
        assignment[p >> 6] |= std::uint64_t{1} << (p & 63);
      }
    }
    BitVector vec(n_vars);
    for (std::size_t v = 0; v < n_vars; ++v) {
      const Words& f = form[v];
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < f.size() && k < assignment.size(); ++k) acc ^= f[k] & assignment[k];
      if (std::popcount(acc) & 1) vec.set(v);
    }
    out.basis.push_back(std::move(vec));
  }
  return out;
}

}  // namespace qcc
