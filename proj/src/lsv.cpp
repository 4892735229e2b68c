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

#include "qcc/lsv.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "qcc/gf2.hpp"

namespace qcc {

CyclicAlgebra::CyclicAlgebra(std::uint32_t q, std::uint32_t d, FiniteField extension, FiniteField scalars)
    : q_(q), d_(d), extension_(std::move(extension)), scalars_(std::move(scalars)) {}

CyclicAlgebra CyclicAlgebra::build(std::uint32_t q, std::uint32_t d, const Poly& p_y) {
  if (!is_prime(q)) throw std::invalid_argument("lsv: q = " + std::to_string(q) + " must be prime");
  if (d < 2) throw std::invalid_argument("lsv: d must be at least 2");
  if (!is_irreducible(p_y, q)) throw std::invalid_argument("lsv: p_y is not irreducible over F_q");
  if (evaluate(p_y, 0, q) == 0) throw std::invalid_argument("lsv: p_y(0) = 0, so y is not a unit");
  if (evaluate(p_y, q - 1, q) == 0) throw std::invalid_argument("lsv: p_y(-1) = 0, so 1 + y is not a unit");

  CyclicAlgebra alg(q, d, FiniteField(q, first_irreducible(q, d)), FiniteField(q, p_y));
  const auto& fd = alg.extension_;

  // Normal element: first u whose Frobenius orbit is a basis over F_q.
  bool found = false;
  for (FiniteField::Element u = 1; u < fd.order() && !found; ++u) {
    std::vector<FiniteField::Element> orbit{u};
    for (std::uint32_t i = 1; i < d; ++i) orbit.push_back(fd.frobenius(orbit.back()));
    std::vector<std::vector<std::uint32_t>> m(d, std::vector<std::uint32_t>(d));
    for (std::uint32_t i = 0; i < d; ++i) {
      const auto c = fd.coefficients(orbit[i]);
      for (std::uint32_t r = 0; r < d; ++r) m[r][i] = c[r];
    }
    if (solve_mod_p(m, std::vector<std::uint32_t>(d, 0), q)) {
      alg.xi0_ = u;
      alg.xi_ = orbit;
      found = true;
    }
  }
  if (!found) throw std::logic_error("lsv: no normal element found");

  alg.structure_.assign(std::size_t{d} * d * d, 0);
  for (std::uint32_t a = 0; a < d; ++a) {
    for (std::uint32_t b = 0; b < d; ++b) {
      const auto coords = alg.xi_coordinates(fd.mul(alg.xi_[a], alg.xi_[b]));
      for (std::uint32_t k = 0; k < d; ++k) alg.structure_[(a * d + b) * d + k] = coords[k];
    }
  }

  const auto& s = alg.scalars_;
  alg.y_ = s.generator();
  alg.one_plus_y_ = s.add(1, alg.y_);
  alg.one_plus_y_inv_ = s.inv(alg.one_plus_y_);
  return alg;
}

std::vector<std::uint32_t> CyclicAlgebra::xi_coordinates(FiniteField::Element u) const {
  std::vector<std::vector<std::uint32_t>> m(d_, std::vector<std::uint32_t>(d_));
  for (std::uint32_t i = 0; i < d_; ++i) {
    const auto c = extension_.coefficients(xi_[i]);
    for (std::uint32_t r = 0; r < d_; ++r) m[r][i] = c[r];
  }
  auto x = solve_mod_p(m, extension_.coefficients(u), q_);
  if (!x) throw std::logic_error("lsv: normal basis is singular");
  return *x;
}

CyclicAlgebra::Element CyclicAlgebra::embed(FiniteField::Element u, std::uint32_t j) const {
  Element out = zero();
  const auto coords = xi_coordinates(u);
  // F_q sits inside S as the constant residues, whose codes are 0..q-1.
  for (std::uint32_t i = 0; i < d_; ++i) out[i * d_ + (j % d_)] = coords[i];
  return out;
}

CyclicAlgebra::Element CyclicAlgebra::one() const { return embed(1, 0); }

CyclicAlgebra::Element CyclicAlgebra::z() const { return embed(1, 1 % d_); }

CyclicAlgebra::Element CyclicAlgebra::add(const Element& a, const Element& b) const {
  Element out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = scalars_.add(a[i], b[i]);
  return out;
}

CyclicAlgebra::Element CyclicAlgebra::scale(const Element& a, Scalar s) const {
  Element out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = scalars_.mul(a[i], s);
  return out;
}

CyclicAlgebra::Element CyclicAlgebra::multiply(const Element& a, const Element& b) const {
  if (a.size() != std::size_t{d_} * d_ || b.size() != a.size()) {
    throw std::invalid_argument("CyclicAlgebra::multiply: element shape mismatch");
  }
  Element out = zero();
  for (std::uint32_t ia = 0; ia < d_; ++ia) {
    for (std::uint32_t i = 0; i < d_; ++i) {
      const Scalar s = a[ia * d_ + i];
      if (s == 0) continue;
      for (std::uint32_t ib = 0; ib < d_; ++ib) {
        for (std::uint32_t j = 0; j < d_; ++j) {
          const Scalar t = b[ib * d_ + j];
          if (t == 0) continue;
          // (s xi_ia z^i)(t xi_ib z^j) = s t xi_ia xi_{ib+i} z^{i+j}, and z^d = 1 + y.
          Scalar coeff = scalars_.mul(s, t);
          if (i + j >= d_) coeff = scalars_.mul(coeff, one_plus_y_);
          const std::uint32_t shifted = (ib + i) % d_;
          const std::uint32_t power = (i + j) % d_;
          for (std::uint32_t k = 0; k < d_; ++k) {
            const std::uint32_t c = structure_constant(ia, shifted, k);
            if (c == 0) continue;
            Scalar& slot = out[k * d_ + power];
            slot = scalars_.add(slot, scalars_.mul(coeff, c));
          }
        }
      }
    }
  }
  return out;
}

std::optional<CyclicAlgebra::Element> CyclicAlgebra::inverse(const Element& a) const {
  // Columns of the left-regular matrix are a * (basis element).
  const std::size_t n = std::size_t{d_} * d_;
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n + 1, 0));
  for (std::size_t c = 0; c < n; ++c) {
    Element basis = zero();
    basis[c] = 1;
    const auto col = multiply(a, basis);
    for (std::size_t r = 0; r < n; ++r) m[r][c] = col[r];
  }
  const Element target = one();
  for (std::size_t r = 0; r < n; ++r) m[r][n] = target[r];
  // Gauss-Jordan over S.
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m[r][c] == 0) ++r;
    if (r == n) return std::nullopt;
    std::swap(m[r], m[c]);
    const Scalar piv = scalars_.inv(m[c][c]);
    for (auto& x : m[c]) x = scalars_.mul(x, piv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Scalar f = m[i][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] = scalars_.sub(m[i][j], scalars_.mul(f, m[c][j]));
    }
  }
  Element x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = m[r][n];
  if (multiply(x, a) != target) throw std::logic_error("CyclicAlgebra::inverse: left and right inverses differ");
  return x;
}

CyclicAlgebra::Element CyclicAlgebra::canonical(const Element& a) const {
  for (auto c : a) {
    if (c != 0) return scale(a, scalars_.inv(c));
  }
  throw std::invalid_argument("CyclicAlgebra::canonical: zero element");
}

std::string CyclicAlgebra::key(const Element& a) const {
  std::string out;
  out.reserve(a.size() * 4);
  const bool narrow = scalars_.order() <= 256;
  for (auto c : a) {
    if (narrow) {
      out.push_back(static_cast<char>(c));
    } else {
      for (int k = 0; k < 4; ++k) out.push_back(static_cast<char>((c >> (8 * k)) & 0xffu));
    }
  }
  return out;
}

std::vector<CyclicAlgebra::Element> CyclicAlgebra::sigma1() const {
  const auto& fd = extension_;
  // z^{-1} = (1 + y)^{-1} z^{d-1}.
  std::vector<Element> out;
  std::set<std::string> seen_classes;
  for (FiniteField::Element u = 1; u < fd.order(); ++u) {
    // Class representative: scale u so its leading residue coefficient is 1.
    const auto coeffs = fd.coefficients(u);
    std::uint32_t lead = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      if (*it) {
        lead = *it;
        break;
      }
    if (lead != 1) continue;
    const auto w = fd.mul(u, fd.inv(fd.frobenius(u)));
    Element b = one();
    const auto coords = xi_coordinates(w);
    for (std::uint32_t i = 0; i < d_; ++i) {
      const Scalar term = scalars_.mul(coords[i], one_plus_y_inv_);
      Scalar& slot = b[i * d_ + (d_ - 1)];
      slot = scalars_.sub(slot, term);
    }
    out.push_back(std::move(b));
  }
  return out;
}

QuotientComplex build_quotient_complex(const CyclicAlgebra& algebra, std::size_t max_group_size) {
  if (algebra.d() > 3) {
    throw std::invalid_argument("lsv: only d = 2 or d = 3 is supported; the full neighbour set for d >= 4 is not derived");
  }
  QuotientComplex out;
  for (const auto& b : algebra.sigma1()) out.generators.push_back(algebra.canonical(b));
  const std::size_t half = out.generators.size();
  for (std::size_t k = 0; k < half; ++k) {
    auto inv = algebra.inverse(out.generators[k]);
    if (!inv) throw std::logic_error("lsv: a Sigma_1 generator is not invertible");
    out.generators.push_back(algebra.canonical(*inv));
  }

  std::unordered_map<std::string, std::uint32_t> index;
  out.elements.push_back(algebra.canonical(algebra.one()));
  index.emplace(algebra.key(out.elements[0]), 0);
  std::set<std::pair<std::uint32_t, std::uint32_t>> edge_set;
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (const auto& s : out.generators) {
      auto next = algebra.canonical(algebra.multiply(out.elements[head], s));
      auto [it, inserted] = index.emplace(algebra.key(next), static_cast<std::uint32_t>(out.elements.size()));
      if (inserted) {
        if (out.elements.size() >= max_group_size) {
          throw BudgetExceeded("lsv: group exceeds max size " + std::to_string(max_group_size),
                               double(out.elements.size() + 1));
        }
        out.elements.push_back(std::move(next));
      }
      const auto u = static_cast<std::uint32_t>(head);
      const auto v = it->second;
      if (u != v) edge_set.emplace(std::min(u, v), std::max(u, v));
    }
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges(edge_set.begin(), edge_set.end());
  out.complex = clique_complex(out.elements.size(), edges, algebra.d() - 1);
  return out;
}

}  // namespace qcc
