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

#include "qcc/finite_field.hpp"

#include <stdexcept>
#include <string>

namespace qcc {

namespace {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^(p-2).
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t k = p - 2; k; k >>= 1) {
    if (k & 1u) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

/// Remainder of f modulo g over F_p (g nonzero).
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t factor = std::uint64_t{f.back()} * lead_inv % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - factor * g[i] % p) % p);
    }
    trim(f);
  }
  return f;
}

/// Monic polynomial of the given degree whose lower coefficients are the base-p digits of code.
Poly monic_from_code(std::uint64_t code, std::uint32_t degree, std::uint32_t p) {
  Poly f(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  f[degree] = 1;
  return f;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t k = 2; std::uint64_t{k} * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

std::uint32_t evaluate(const Poly& f, std::uint32_t x, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % p;
  return static_cast<std::uint32_t>(acc);
}

bool is_irreducible(const Poly& f_in, std::uint32_t p) {
  Poly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t k = 1; 2 * k <= n; ++k) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      if (poly_mod(f, monic_from_code(code, k, p), p).empty()) return false;
    }
  }
  return true;
}

Poly first_irreducible(std::uint32_t p, std::uint32_t degree) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < degree; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    auto f = monic_from_code(code, degree, p);
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("first_irreducible: none found");
}

FiniteField::FiniteField(std::uint32_t p, Poly modulus) : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw std::invalid_argument("FiniteField: characteristic " + std::to_string(p) + " is not prime");
  for (auto& c : modulus_) c %= p;
  trim(modulus_);
  if (!is_irreducible(modulus_, p)) throw std::invalid_argument("FiniteField: modulus is not irreducible");
  // Normalize to monic.
  const auto lead_inv = inv_mod(modulus_.back(), p);
  for (auto& c : modulus_) c = static_cast<std::uint32_t>(std::uint64_t{c} * lead_inv % p);
  degree_ = static_cast<std::uint32_t>(modulus_.size() - 1);
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    order *= p;
    if (order > (std::uint64_t{1} << 30)) throw std::invalid_argument("FiniteField: order too large");
  }
  order_ = static_cast<std::uint32_t>(order);
  if (order_ <= 256) {
    mul_table_.resize(std::size_t{order_} * order_);
    for (Element a = 0; a < order_; ++a)
      for (Element b = 0; b < order_; ++b) mul_table_[std::size_t{a} * order_ + b] = mul_slow(a, b);
    inv_table_.assign(order_, 0);
    for (Element a = 1; a < order_; ++a)
      for (Element b = 1; b < order_; ++b)
        if (mul_table_[std::size_t{a} * order_ + b] == 1) inv_table_[a] = b;
  }
}

std::vector<std::uint32_t> FiniteField::coefficients(Element a) const {
  std::vector<std::uint32_t> c(degree_);
  for (std::uint32_t i = 0; i < degree_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

FiniteField::Element FiniteField::from_coefficients(const std::vector<std::uint32_t>& c) const {
  Poly f(c.begin(), c.end());
  for (auto& x : f) x %= p_;
  f = poly_mod(f, modulus_, p_);
  Element code = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) code = code * p_ + *it;
  return code;
}

FiniteField::Element FiniteField::generator() const {
  if (degree_ > 1) return p_;
  return neg(modulus_[0]);
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  Element out = 0, scale = 1;
  while (a || b) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::sub(Element a, Element b) const {
  Element out = 0, scale = 1;
  while (a || b) {
    out += ((a % p_ + p_ - b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::mul_slow(Element a, Element b) const {
  const auto ca = coefficients(a), cb = coefficients(b);
  std::vector<std::uint32_t> prod(2 * degree_, 0);
  for (std::uint32_t i = 0; i < degree_; ++i)
    for (std::uint32_t j = 0; j < degree_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_);
  return from_coefficients(prod);
}

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  if (!mul_table_.empty()) return mul_table_[std::size_t{a} * order_ + b];
  return mul_slow(a, b);
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t k) const {
  Element result = 1;
  while (k) {
    if (k & 1u) result = mul(result, a);
    a = mul(a, a);
    k >>= 1;
  }
  return result;
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw std::domain_error("FiniteField::inv: zero has no inverse");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, std::uint64_t{order_} - 2);
}

std::optional<std::vector<std::uint32_t>> solve_mod_p(std::vector<std::vector<std::uint32_t>> a,
                                                      std::vector<std::uint32_t> b, std::uint32_t p) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a[r][c] % p == 0) ++r;
    if (r == n) return std::nullopt;
    std::swap(a[r], a[c]);
    std::swap(b[r], b[c]);
    const std::uint64_t piv = inv_mod(a[c][c] % p, p);
    for (auto& x : a[c]) x = static_cast<std::uint32_t>(x * piv % p);
    b[c] = static_cast<std::uint32_t>(b[c] * piv % p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] % p == 0) continue;
      const std::uint64_t f = a[i][c] % p;
      for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<std::uint32_t>((a[i][j] + p - f * a[c][j] % p) % p);
      b[i] = static_cast<std::uint32_t>((b[i] + p - f * b[c] % p) % p);
    }
  }
  return b;
}

}  // namespace qcc
