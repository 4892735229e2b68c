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

#include "qcc/chain.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcc {

ChainComplex::ChainComplex(std::vector<std::size_t> face_counts, std::vector<BinaryMatrix> boundaries)
    : face_counts_(std::move(face_counts)) {
  if (face_counts_.empty()) throw std::invalid_argument("ChainComplex: need at least grade 0");
  const std::size_t d = face_counts_.size() - 1;
  if (boundaries.size() != d) {
    throw std::invalid_argument("ChainComplex: expected " + std::to_string(d) + " boundary maps, got " +
                                std::to_string(boundaries.size()));
  }
  maps_.reserve(d + 2);
  maps_.emplace_back(0, face_counts_[0]);
  for (std::size_t p = 1; p <= d; ++p) {
    auto& m = boundaries[p - 1];
    if (m.rows() != face_counts_[p - 1] || m.cols() != face_counts_[p]) {
      std::ostringstream msg;
      msg << "ChainComplex: boundary " << p << " has shape " << m.rows() << "x" << m.cols() << ", expected "
          << face_counts_[p - 1] << "x" << face_counts_[p];
      throw std::invalid_argument(msg.str());
    }
    maps_.push_back(std::move(m));
  }
  maps_.emplace_back(face_counts_[d], 0);
}

std::string Violation::message() const {
  std::ostringstream msg;
  msg << "boundary of boundary is nonzero at grade " << p << ", face " << face;
  return msg.str();
}

std::optional<Violation> validate(const ChainComplex& x) {
  for (std::size_t p = 2; p <= x.dimension(); ++p) {
    const auto by_face = x.boundary(p - 1).multiply(x.boundary(p)).transpose();
    for (std::size_t f = 0; f < by_face.rows(); ++f) {
      if (by_face.row_weight(f) != 0) return Violation{p, f};
    }
  }
  return std::nullopt;
}

ChainComplex cocomplex(const ChainComplex& x) {
  const std::size_t d = x.dimension();
  std::vector<std::size_t> counts(d + 1);
  for (std::size_t i = 0; i <= d; ++i) counts[i] = x.face_count(d - i);
  std::vector<BinaryMatrix> maps;
  for (std::size_t i = 1; i <= d; ++i) maps.push_back(x.boundary(d - i + 1).transpose());
  return ChainComplex(std::move(counts), std::move(maps));
}

std::size_t homology_dim(const ChainComplex& x, std::size_t p) {
  if (p > x.dimension()) throw std::out_of_range("homology_dim: grade out of range");
  return x.face_count(p) - rank(x.boundary(p)) - rank(x.boundary(p + 1));
}

std::size_t cohomology_dim(const ChainComplex& x, std::size_t p) {
  if (p > x.dimension()) throw std::out_of_range("cohomology_dim: grade out of range");
  const std::size_t kernel = x.face_count(p) - rank(x.coboundary(p));
  const std::size_t image = p == 0 ? 0 : rank(x.coboundary(p - 1));
  return kernel - image;
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::measured:
      return "measured";
    case Provenance::predicted:
      return "predicted";
    case Provenance::lower_bounded:
      return "lower-bounded";
  }
  return "unknown";
}

std::optional<SystoleReport> systole(const ChainComplex& x, std::size_t p, const SearchBudget& budget) {
  if (p > x.dimension()) throw std::out_of_range("systole: grade out of range");
  const std::size_t n = x.face_count(p);
  const auto& down = x.boundary(p);
  const auto& up = x.boundary(p + 1);

  EchelonBasis boundaries(n);
  const auto up_t = up.transpose();
  for (std::size_t r = 0; r < up_t.rows(); ++r) boundaries.insert(up_t.row_vector(r));

  const std::size_t h = n - rank(down) - boundaries.rank();
  if (h == 0) return std::nullopt;

  SystoleReport report;
  report.homology = h;
  const double total = (std::ldexp(1.0, static_cast<int>(std::min<std::size_t>(h, 1000))) - 1.0) *
                       std::ldexp(1.0, static_cast<int>(std::min<std::size_t>(boundaries.rank(), 1000)));

  if (total <= budget.max_enumeration && !budget.force_cycle_search) {
    // Homology representatives: cycles independent of the boundaries.
    EchelonBasis grow = boundaries;
    std::vector<BitVector> reps;
    for (const auto& z : kernel_basis(down)) {
      if (grow.insert(z)) reps.push_back(z);
    }
    SearchBudget inner;
    inner.max_enumeration = std::ldexp(1.0, static_cast<int>(boundaries.rank()));
    BitVector shift(n);
    std::optional<std::size_t> best;
    for (std::uint64_t g = 1; g < (std::uint64_t{1} << h); ++g) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(g));
      shift ^= reps[bit];
      auto res = min_weight_coset(boundaries, shift, inner);
      if (!best || *res.weight < *best) {
        best = res.weight;
        report.witness = res.witness;
      }
    }
    report.value = *best;
    return report;
  }

  // Grow cycles from their lowest face; a violated check must be covered by
  // a later face. Zero-syndrome proper subsets are never extended.
  const auto cols = down.transpose();
  const std::size_t branching = std::max<std::size_t>(1, down.max_row_weight());
  const std::size_t reach = std::max<std::size_t>(1, cols.max_row_weight());
  std::vector<std::uint32_t> syn(down.rows(), 0);
  std::vector<std::size_t> chosen;
  std::vector<char> in(n, 0);
  std::size_t violated = 0;
  double nodes = 0;
  double limit = budget.max_enumeration;
  bool found = false;

  auto toggle = [&](std::size_t q) {
    in[q] ^= 1;
    for (auto c : cols.row(q)) {
      syn[c] ^= 1;
      violated += syn[c] ? 1 : std::size_t(-1);
    }
  };
  std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t q0, std::size_t left) {
    ++nodes;
    if (violated == 0) {
      BitVector word(n);
      for (auto q : chosen) word.set(q);
      if (!boundaries.contains(word)) {
        report.witness = std::move(word);
        found = true;
      }
      return;
    }
    if (left == 0 || violated > left * reach || nodes > limit) return;
    std::size_t check = down.rows();
    for (auto q : chosen) {
      for (auto c : cols.row(q)) {
        if (syn[c]) {
          check = c;
          break;
        }
      }
      if (check != down.rows()) break;
    }
    for (auto q : down.row(check)) {
      if (q <= q0 || in[q]) continue;
      chosen.push_back(q);
      toggle(q);
      grow(q0, left - 1);
      toggle(q);
      chosen.pop_back();
      if (found) return;
    }
  };
  auto search = [&](std::size_t w) {
    for (std::size_t q0 = 0; q0 < n && !found; ++q0) {
      chosen.assign(1, q0);
      toggle(q0);
      grow(q0, w - 1);
      toggle(q0);
      if (nodes > limit) break;
    }
    return found;
  };

  report.mode = SearchMode::weight_bounded;
  if (budget.weight_cap) {
    const std::size_t cap = std::min(*budget.weight_cap, n);
    const double estimate = double(n) * std::pow(double(branching), double(cap > 0 ? cap - 1 : 0));
    if (estimate > budget.max_enumeration) {
      std::ostringstream msg;
      msg << "systole: " << total << " coset enumerations or about " << estimate << " cycle extensions up to weight "
          << cap << " needed, budget is " << budget.max_enumeration;
      throw BudgetExceeded(msg.str(), std::min(total, estimate));
    }
    limit = std::numeric_limits<double>::infinity();
    for (std::size_t w = 1; w <= cap; ++w) {
      if (search(w)) {
        report.value = w;
        return report;
      }
    }
    report.provenance = Provenance::lower_bounded;
    report.value = *budget.weight_cap + 1;
    report.witness = BitVector();
    return report;
  }
  // No cap: deepen until found or until the node budget runs out.
  for (std::size_t w = 1; w <= n; ++w) {
    if (search(w)) {
      report.value = w;
      return report;
    }
    if (nodes > limit) {
      std::ostringstream msg;
      msg << "systole: homology dimension " << h << ", boundary dimension " << boundaries.rank()
          << "; cycle search exhausted " << budget.max_enumeration << " extensions with systole >= " << w;
      throw BudgetExceeded(msg.str(), total);
    }
  }
  throw std::logic_error("systole: no non-trivial cycle found despite positive homology");
}

std::optional<SystoleReport> cosystole(const ChainComplex& x, std::size_t p, const SearchBudget& budget) {
  if (p > x.dimension()) throw std::out_of_range("cosystole: grade out of range");
  return systole(cocomplex(x), x.dimension() - p, budget);
}

CssCode css_extract(const ChainComplex& x, std::size_t p) {
  if (p > x.dimension()) throw std::out_of_range("css_extract: grade out of range");
  CssCode code;
  code.n = x.face_count(p);
  code.hx = x.boundary(p);
  code.hz = x.coboundary(p);
  code.grade = p;
  return code;
}

std::size_t css_dimension(const CssCode& code) { return code.n - rank(code.hx) - rank(code.hz); }

}  // namespace qcc
