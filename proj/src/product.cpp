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

#include "qcc/product.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcc/graph.hpp"
#include "qcc/simplicial.hpp"

namespace qcc {

namespace {

using Index = BinaryMatrix::Index;

ChainComplex assemble(const ChainComplex& x, const BipartiteCode& y, const ProductLayout& l) {
  const auto& d1 = x.boundary(1);  // X0 x X1
  const auto& d2 = x.boundary(2);  // X1 x X2
  const auto d1t = d1.transpose();  // row x1: its faces in X0
  const auto d2t = d2.transpose();  // row x2: its edges in X1
  const auto ht = y.h.transpose();  // row a: checks touching a

  // Columns of the grade-1 boundary, one per qubit.
  std::vector<std::vector<Index>> cols1(l.qubits());
  for (std::size_t e = 0; e < l.x1; ++e) {
    for (std::size_t a = 0; a < l.a; ++a) {
      auto& col = cols1[l.ea(e, a)];
      for (auto v : d1t.row(e)) col.push_back(static_cast<Index>(l.va(v, a)));
      for (auto b : ht.row(a)) col.push_back(static_cast<Index>(l.eb(e, b)));
    }
  }
  for (std::size_t t = 0; t < l.x2; ++t) {
    for (std::size_t b = 0; b < l.b; ++b) {
      auto& col = cols1[l.tb(t, b)];
      for (auto e : d2t.row(t)) col.push_back(static_cast<Index>(l.eb(e, b)));
    }
  }
  std::vector<std::vector<Index>> cols2(l.grade2());
  for (std::size_t t = 0; t < l.x2; ++t) {
    for (std::size_t a = 0; a < l.a; ++a) {
      auto& col = cols2[l.ta(t, a)];
      for (auto e : d2t.row(t)) col.push_back(static_cast<Index>(l.ea(e, a)));
      for (auto b : ht.row(a)) col.push_back(static_cast<Index>(l.tb(t, b)));
    }
  }
  auto b1 = BinaryMatrix::from_row_lists(l.grade0(), std::move(cols1)).transpose();
  auto b2 = BinaryMatrix::from_row_lists(l.qubits(), std::move(cols2)).transpose();
  return ChainComplex({l.grade0(), l.qubits(), l.grade2()}, {std::move(b1), std::move(b2)});
}

}  // namespace

ProductCode::ProductCode(ChainComplex base, BipartiteCode code) : base_(std::move(base)), code_(std::move(code)) {
  if (base_.dimension() != 2) throw std::invalid_argument("build_product: X must be 2-dimensional");
  if (rank(code_.h) != code_.checks()) throw std::invalid_argument("build_product: H(Y) has redundant rows");
  layout_ = ProductLayout{base_.face_count(0), base_.face_count(1), base_.face_count(2), code_.bits(), code_.checks()};
  complex_ = assemble(base_, code_, layout_);
  if (auto v = validate(complex_)) {
    throw std::logic_error("build_product: assembled complex is invalid: " + v->message());
  }
  sigma_z_ = complex_.coboundary(1);
  selection_ = select_a_prime(code_);
}

ProductCode build_product(const ChainComplex& x, const BipartiteCode& y) { return ProductCode(x, y); }

namespace {

bool graph_like(const BinaryMatrix& d1) {
  for (auto w : d1.column_weights())
    if (w != 2) return false;
  return true;
}

std::size_t first_homology_of_base(const ChainComplex& x, std::size_t dense_limit) {
  if (x.face_count(1) <= dense_limit || !graph_like(x.boundary(1))) return homology_dim(x, 1);
  PropagationOptions opts;
  opts.max_guesses = 1 << 16;
  return gauge_fixed_cohomology(x, opts).dimension;
}

}  // namespace

ProductParams product_params(const ProductCode& p, const ParamsOptions& options) {
  ProductParams out;
  out.n = p.layout().qubits();
  const auto& x = p.base();
  const auto& y = p.code();
  if (out.n <= options.dense_rank_limit) {
    out.k = out.n - rank(p.sigma_x()) - rank(p.sigma_z());
  } else {
    out.k = first_homology_of_base(x, options.dense_rank_limit) * y.dimension();
    out.k_provenance = Provenance::predicted;
  }

  if (out.k == 0) {
    out.dx.note = "undefined";
    out.dz.note = "undefined";
    return out;
  }

  // Predictions from the factors, each only if its own oracle fits the budget.
  if (x.face_count(1) <= options.dense_rank_limit) {
    try {
      auto sx = systole(x, 1, options.budget);
      auto dy = code_distance(y, options.budget.max_enumeration);
      if (sx && dy && sx->provenance == Provenance::measured) out.dx.predicted = sx->value * *dy;
    } catch (const BudgetExceeded&) {
    }
    try {
      auto cx = cosystole(x, 1, options.budget);
      if (cx && cx->provenance == Provenance::measured) out.dz.predicted = cx->value;
    } catch (const BudgetExceeded&) {
    }
  }

  if (out.n > options.dense_rank_limit) {
    out.dx.note = out.dz.note = "refused: the systole search needs dense elimination on N = " +
                                std::to_string(out.n) + " > " + std::to_string(options.dense_rank_limit) +
                                " columns";
    return out;
  }
  try {
    out.dx.measured = systole(p.complex(), 1, options.budget);
  } catch (const BudgetExceeded& e) {
    out.dx.note = e.what();
  }
  try {
    out.dz.measured = cosystole(p.complex(), 1, options.budget);
  } catch (const BudgetExceeded& e) {
    out.dz.note = e.what();
  }
  return out;
}

WeightAudit weight_audit(const ProductCode& p) {
  WeightAudit w;
  const auto& x = p.base();
  const auto& h = p.code().h;
  w.wz = p.sigma_z().max_row_weight();
  w.wx = p.sigma_x().max_row_weight();
  w.wx_r = x.boundary(1).max_row_weight();     // rows of H_X(X)
  w.wz_r = x.boundary(2).max_column_weight();  // rows of H_Z(X)
  w.wz_c = x.boundary(2).max_row_weight();     // columns of H_Z(X)
  w.w_r = h.max_row_weight();
  w.w_c = h.max_column_weight();
  w.wz_bound = w.wz_r + w.w_c;
  w.wx_bound = std::max(w.wx_r, w.w_r + w.wz_c);
  return w;
}

BitVector tensor_cycle(const ProductCode& p, const BitVector& z, const BitVector& c) {
  const auto& l = p.layout();
  if (z.size() != l.x1 || c.size() != l.a) throw std::invalid_argument("tensor_cycle: length mismatch");
  BitVector out(l.qubits());
  for (auto e : z.support())
    for (auto a : c.support()) out.set(l.ea(e, a));
  return out;
}

}  // namespace qcc
