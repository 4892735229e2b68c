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

#ifndef QCC_LSV_HPP
#define QCC_LSV_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcc/finite_field.hpp"
#include "qcc/simplicial.hpp"

namespace qcc {

/// Cyclic algebra sum_{i,j} S xi_i z^j with z xi_i = phi(xi_i) z and z^d = 1 + y,
/// over S = F_q[y]/(p_y).
///
/// xi_i = phi^i(xi_0) is a normal basis of F_{q^d} over F_q, phi the
/// Frobenius. An element is a row-major d x d table: entry i * d + j is the
/// coefficient of xi_i z^j.
class CyclicAlgebra {
 public:
  using Scalar = FiniteField::Element;
  using Element = std::vector<Scalar>;

  /// Validates p_y (irreducible of degree e, p_y(0) != 0, p_y(-1) != 0) and
  /// finds the normal element. q must be prime.
  static CyclicAlgebra build(std::uint32_t q, std::uint32_t d, const Poly& p_y);

  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t d() const noexcept { return d_; }
  std::uint32_t e() const noexcept { return scalars_.degree(); }
  const FiniteField& extension() const noexcept { return extension_; }  ///< F_{q^d}
  const FiniteField& scalars() const noexcept { return scalars_; }      ///< S
  FiniteField::Element normal_element() const noexcept { return xi0_; }
  Scalar y() const noexcept { return y_; }
  Scalar one_plus_y_inverse() const noexcept { return one_plus_y_inv_; }
  /// Coefficient of xi_k in xi_a xi_b (an element of F_q).
  std::uint32_t structure_constant(std::uint32_t a, std::uint32_t b, std::uint32_t k) const {
    return structure_[(a * d_ + b) * d_ + k];
  }

  /// F_q coordinates of u in the basis xi_0..xi_{d-1}.
  std::vector<std::uint32_t> xi_coordinates(FiniteField::Element u) const;

  Element zero() const { return Element(std::size_t{d_} * d_, 0); }
  Element one() const;
  Element z() const;
  /// u z^j for u in F_{q^d}.
  Element embed(FiniteField::Element u, std::uint32_t j = 0) const;
  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, Scalar s) const;
  Element multiply(const Element& a, const Element& b) const;
  /// Two-sided inverse from the left-regular representation; nullopt when singular.
  std::optional<Element> inverse(const Element& a) const;
  /// Representative of a modulo S^*: first nonzero entry (row-major) scaled to 1.
  Element canonical(const Element& a) const;
  /// Fixed-width byte encoding of an element, used as a hash key.
  std::string key(const Element& a) const;

  /// b_u = 1 - (u / phi(u)) z^{-1}, one per class u in F_{q^d}^* / F_q^*.
  std::vector<Element> sigma1() const;

 private:
  CyclicAlgebra(std::uint32_t q, std::uint32_t d, FiniteField extension, FiniteField scalars);

  std::uint32_t q_;
  std::uint32_t d_;
  FiniteField extension_;
  FiniteField scalars_;
  FiniteField::Element xi0_ = 0;
  std::vector<FiniteField::Element> xi_;
  std::vector<std::uint32_t> structure_;
  Scalar y_ = 0;
  Scalar one_plus_y_ = 0;
  Scalar one_plus_y_inv_ = 0;
};

struct QuotientComplex {
  SimplicialComplex complex;
  /// Canonical group element of each vertex, in BFS discovery order.
  std::vector<CyclicAlgebra::Element> elements;
  /// Sigma_1 followed by the inverses, canonical.
  std::vector<CyclicAlgebra::Element> generators;
};

/// Cayley graph of the group generated by Sigma_1 u Sigma_1^{-1} inside
/// A(S)^*/S^*, explored by BFS from the identity, and its clique complex of
/// dimension d - 1. Throws BudgetExceeded once more than max_group_size
/// elements are reached. Only d = 3 (and the graph case d = 2) is supported.
QuotientComplex build_quotient_complex(const CyclicAlgebra& algebra, std::size_t max_group_size);

}  // namespace qcc

#endif  // QCC_LSV_HPP
