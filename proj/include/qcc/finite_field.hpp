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

#ifndef QCC_FINITE_FIELD_HPP
#define QCC_FINITE_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace qcc {

/// Polynomial over F_p, coefficients constant term first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

bool is_prime(std::uint32_t n);
/// True iff `f` (degree >= 1) has no factor of positive smaller degree over F_p.
bool is_irreducible(const Poly& f, std::uint32_t p);
/// First monic irreducible of the given degree, in increasing coefficient order.
Poly first_irreducible(std::uint32_t p, std::uint32_t degree);
std::uint32_t evaluate(const Poly& f, std::uint32_t x, std::uint32_t p);

/// F_p[x]/(m) for prime p and irreducible m.
///
/// Elements are encoded as integers: sum of c_i p^i for the residue
/// c_0 + c_1 x + ... Zero is 0 and one is 1.
class FiniteField {
 public:
  using Element = std::uint32_t;

  FiniteField(std::uint32_t p, Poly modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t order() const noexcept { return order_; }
  const Poly& modulus() const noexcept { return modulus_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const { return sub(0, a); }
  Element mul(Element a, Element b) const;
  /// Multiplicative inverse; a must be nonzero.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t k) const;
  /// x -> x^p.
  Element frobenius(Element a) const { return pow(a, p_); }

  /// Residue coefficients, length degree().
  std::vector<std::uint32_t> coefficients(Element a) const;
  Element from_coefficients(const std::vector<std::uint32_t>& c) const;
  /// The class of the polynomial variable.
  Element generator() const;

 private:
  Element mul_slow(Element a, Element b) const;

  std::uint32_t p_;
  std::uint32_t degree_;
  std::uint32_t order_;
  Poly modulus_;
  std::vector<Element> mul_table_;
  std::vector<Element> inv_table_;
};

/// Solves A x = b over F_p (A square, row-major); nullopt when singular.
std::optional<std::vector<std::uint32_t>> solve_mod_p(std::vector<std::vector<std::uint32_t>> a,
                                                      std::vector<std::uint32_t> b, std::uint32_t p);

}  // namespace qcc

#endif  // QCC_FINITE_FIELD_HPP
