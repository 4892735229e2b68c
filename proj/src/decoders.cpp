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

#include "qcc/decoders.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcc {

const char* to_string(DecodeStatus status) {
  switch (status) {
    case DecodeStatus::success:
      return "success";
    case DecodeStatus::stalled:
      return "stalled";
    case DecodeStatus::budget_exceeded:
      return "budget-exceeded";
  }
  return "?";
}

// ---------------------------------------------------------------------------

CycleBasis::CycleBasis(const ChainComplex& x) : basis_(x.face_count(1), true) {
  const std::size_t n = x.face_count(1);
  EchelonBasis probe(n);
  const auto d2t = x.boundary(2).transpose();
  for (std::size_t t = 0; t < d2t.rows(); ++t) {
    auto v = d2t.row_vector(t);
    if (probe.insert(v)) vectors_.push_back(std::move(v));
  }
  n0_ = vectors_.size();
  for (auto& z : kernel_basis(x.boundary(1))) {
    if (probe.insert(z)) vectors_.push_back(std::move(z));
  }
  for (const auto& v : vectors_) basis_.insert(v);
  down_ = x.boundary(1);
}

std::optional<BitVector> CycleBasis::coordinates(const BitVector& z) const {
  if (down_.multiply(z).any()) return std::nullopt;
  return basis_.coordinates(z);
}

namespace {

BitVector column(const BitVector& v, std::size_t count, const std::function<std::size_t(std::size_t)>& index) {
  BitVector out(count);
  for (std::size_t i = 0; i < count; ++i)
    if (v.get(index(i))) out.set(i);
  return out;
}

}  // namespace

DecodeOutcome x_decode(const ProductCode& p, const BitVector& syndrome) {
  return x_decode(p, CycleBasis(p.base()), graph_from_boundary(p.base().boundary(1)), syndrome);
}

DecodeOutcome x_decode(const ProductCode& p, const CycleBasis& basis, const Graph& graph, const BitVector& syndrome) {
  const auto& l = p.layout();
  if (syndrome.size() != l.grade0()) throw std::invalid_argument("x_decode: syndrome length mismatch");
  DecodeOutcome out;
  out.correction = BitVector(l.qubits());
  out.syndrome_weights.push_back(syndrome.weight());
  if (syndrome.none()) return out;

  // Step 1: one T-join per column a.
  for (std::size_t a = 0; a < l.a; ++a) {
    auto odd = column(syndrome, l.x0, [&](std::size_t v) { return l.va(v, a); });
    if (odd.none()) continue;
    BitVector join;
    try {
      join = tjoin_decode(graph, odd);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("x_decode: syndrome is not in the image of sigma_x");
    }
    for (auto e : join.support()) out.correction.set(l.ea(e, a));
  }
  auto rest = syndrome ^ p.sigma_x().multiply(out.correction);
  out.syndrome_weights.push_back(rest.weight());

  // Step 2: a particular solution on the A' columns.
  const auto& sel = p.selection();
  std::vector<BitVector> sb(l.b);
  for (std::size_t b = 0; b < l.b; ++b) sb[b] = column(rest, l.x1, [&](std::size_t e) { return l.eb(e, b); });
  std::vector<BitVector> cols(l.a, BitVector(l.x1));
  for (std::size_t i = 0; i < sel.a_prime.size(); ++i)
    for (auto b : sel.b_sets[i]) cols[sel.a_prime[i]] ^= sb[b];
  BitVector zp(l.qubits());
  for (std::size_t a = 0; a < l.a; ++a)
    for (auto e : cols[a].support()) zp.set(l.ea(e, a));
  if (p.sigma_x().multiply(zp) != rest) throw std::invalid_argument("x_decode: syndrome is not in the image of sigma_x");

  // Steps 3 and 4: Z1 coordinates per column, then strip a codeword per row.
  const auto z1 = basis.z1();
  const std::size_t n0 = basis.z0().size();
  std::vector<BitVector> rows(z1.size(), BitVector(l.a));
  for (std::size_t a = 0; a < l.a; ++a) {
    if (cols[a].none()) continue;
    auto coords = basis.coordinates(cols[a]);
    if (!coords) throw std::logic_error("x_decode: particular solution has a non-cycle column");
    for (std::size_t j = 0; j < z1.size(); ++j)
      if (coords->get(n0 + j)) rows[j].set(a);
  }
  for (std::size_t j = 0; j < z1.size(); ++j) {
    if (rows[j].none()) continue;
    ++out.iterations;
    auto c = decode_word(p.code(), rows[j]);
    if (!c) {
      out.status = DecodeStatus::stalled;
      out.message = "classical decoder stalled on a Z1 row";
      return out;
    }
    for (auto a : c->support())
      for (auto e : z1[j].support()) zp.flip(l.ea(e, a));
  }
  out.correction ^= zp;
  out.syndrome_weights.push_back(0);
  if (p.sigma_x().multiply(out.correction) != syndrome) throw std::logic_error("x_decode: correction misses the syndrome");
  return out;
}

BitVector z_reduce(const ProductCode& p, const BitVector& error) {
  const auto& l = p.layout();
  if (error.size() != l.qubits()) throw std::invalid_argument("z_reduce: length mismatch");
  const auto& sel = p.selection();
  BitVector u(l.grade0());
  for (std::size_t i = 0; i < sel.a_prime.size(); ++i) {
    const auto a = sel.a_prime[i];
    for (std::size_t e = 0; e < l.x1; ++e) {
      if (!error.get(l.ea(e, a))) continue;
      for (auto b : sel.b_sets[i]) u.flip(l.eb(e, b));
    }
  }
  return error ^ p.sigma_x().left_multiply(u);
}

DecodeOutcome z_decode(const ProductCode& p, const BitVector& syndrome, const ComponentDecoder& component) {
  const auto& l = p.layout();
  if (syndrome.size() != l.grade2()) throw std::invalid_argument("z_decode: syndrome length mismatch");
  DecodeOutcome out;
  out.correction = BitVector(l.qubits());
  out.syndrome_weights.push_back(syndrome.weight());
  if (syndrome.none()) return out;

  const auto& sel = p.selection();
  for (std::size_t t = 0; t < l.x2; ++t)
    for (std::size_t i = 0; i < sel.a_prime.size(); ++i)
      if (syndrome.get(l.ta(t, sel.a_prime[i])))
        for (auto b : sel.b_sets[i]) out.correction.flip(l.tb(t, b));
  auto rest = syndrome ^ p.sigma_z().multiply(out.correction);
  out.syndrome_weights.push_back(rest.weight());

  for (std::size_t a = 0; a < l.a; ++a) {
    auto f = column(rest, l.x2, [&](std::size_t t) { return l.ta(t, a); });
    if (f.none()) continue;
    auto sub = component(f);
    out.iterations += sub.iterations;
    if (!sub.ok()) {
      out.status = sub.status;
      std::ostringstream msg;
      msg << "component decoder " << to_string(sub.status) << " on column " << a;
      if (!sub.message.empty()) msg << ": " << sub.message;
      out.message = msg.str();
      return out;
    }
    for (auto e : sub.correction.support()) out.correction.flip(l.ea(e, a));
  }
  if (p.sigma_z().multiply(out.correction) != syndrome) {
    out.status = DecodeStatus::stalled;
    out.message = "syndrome is not in the image of sigma_z";
    return out;
  }
  out.syndrome_weights.push_back(0);
  return out;
}

bool x_equivalent(const ProductCode& p, const BitVector& error, const BitVector& correction) {
  const auto r = error ^ correction;
  if (p.sigma_x().multiply(r).any()) return false;
  return in_span(p.sigma_z(), r);
}

bool z_equivalent(const ProductCode& p, const PotentialChecker& base, const BitVector& error, const BitVector& correction) {
  const auto& l = p.layout();
  const auto r = error ^ correction;
  if (p.sigma_z().multiply(r).any()) return false;
  const auto reduced = z_reduce(p, r);
  for (std::size_t t = 0; t < l.x2; ++t)
    for (std::size_t b = 0; b < l.b; ++b)
      if (reduced.get(l.tb(t, b))) throw std::logic_error("z_equivalent: reduced cocycle keeps an X2 x B part");
  for (auto a : p.selection().a_double_prime) {
    auto col = column(reduced, l.x1, [&](std::size_t e) { return l.ea(e, a); });
    if (col.any() && !base.is_coboundary(col)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

LocalDecoder::LocalDecoder(const SimplicialComplex& x, LocalDecodeOptions options) : x_(&x), options_(options) {
  if (x.dimension() < 2) throw std::invalid_argument("LocalDecoder: complex must have triangles");
  n_edges_ = x.face_count(1);
  n_triangles_ = x.face_count(2);
  edge_triangles_ = x.chain().boundary(2);
  triangle_edges_ = edge_triangles_.transpose();
  vertex_edges_ = x.chain().boundary(1);
  edge_vertices_ = vertex_edges_.transpose();
}

void LocalDecoder::check_input(const BitVector& f) const {
  if (f.size() != n_triangles_) throw std::invalid_argument("local decoder: syndrome length mismatch");
  if (n_edges_ <= options_.image_check_limit && f.any() && !in_span(edge_triangles_, f)) {
    throw std::invalid_argument("local decoder: syndrome is not a coboundary");
  }
}

namespace {

bool lex_less(std::uint64_t a, std::uint64_t b) {
  while (a && b) {
    const int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

}  // namespace

DecodeOutcome LocalDecoder::decode(const BitVector& f0) const {
  check_input(f0);
  DecodeOutcome out;
  out.correction = BitVector(n_edges_);
  BitVector f = f0;
  std::size_t weight = f.weight();
  out.syndrome_weights.push_back(weight);

  struct LinkEdge {
    std::uint32_t i, j;
    std::size_t t;
  };
  std::vector<LinkEdge> link;
  std::vector<std::vector<std::uint32_t>> touching;
  std::vector<int> w;
  std::vector<char> crossing;

  while (weight > 0) {
    // Vertices of f-triangles, each counted once per f-triangle through it.
    std::vector<std::size_t> candidates;
    for (auto t : f.support()) {
      const auto te = triangle_edges_.row(t);
      const auto ends = edge_vertices_.row(te[0]);
      candidates.push_back(ends[0]);
      candidates.push_back(ends[1]);
      for (auto v : edge_vertices_.row(te[1]))
        if (v != ends[0] && v != ends[1]) candidates.push_back(v);
    }
    std::sort(candidates.begin(), candidates.end());

    long best_gain = 0;
    std::size_t best_v = 0;
    std::uint64_t best_y = 0;
    for (std::size_t c = 0; c < candidates.size();) {
      const auto v = candidates[c];
      std::size_t through = 0;
      while (c < candidates.size() && candidates[c] == v) ++c, ++through;
      // Later vertices must strictly beat the best gain.
      if (static_cast<long>(through) <= best_gain) continue;
      const auto edges = vertex_edges_.row(v);
      const std::size_t q = edges.size();
      if (q >= 64 || std::ldexp(1.0, int(q) - 1) > options_.max_subsets_per_vertex) {
        out.status = DecodeStatus::budget_exceeded;
        std::ostringstream msg;
        msg << "vertex " << v << " has degree " << q << ", subset search exceeds " << options_.max_subsets_per_vertex;
        out.message = msg.str();
        return out;
      }
      // Link of v: a triangle through v joins its two edges at v.
      link.clear();
      touching.assign(q, {});
      for (std::uint32_t i = 0; i < q; ++i) {
        for (auto t : edge_triangles_.row(edges[i])) {
          for (auto e : triangle_edges_.row(t)) {
            if (e == edges[i]) continue;
            auto it = std::lower_bound(edges.begin(), edges.end(), e);
            if (it == edges.end() || *it != e) continue;
            const auto j = static_cast<std::uint32_t>(it - edges.begin());
            if (j > i) {
              touching[i].push_back(static_cast<std::uint32_t>(link.size()));
              touching[j].push_back(static_cast<std::uint32_t>(link.size()));
              link.push_back({i, j, t});
            }
          }
        }
      }
      w.assign(link.size(), 0);
      for (std::size_t k = 0; k < link.size(); ++k) w[k] = f.get(link[k].t) ? 1 : -1;
      crossing.assign(link.size(), 0);

      // Gray code over subsets avoiding the top edge; complements give the same coboundary.
      const std::uint64_t count = q == 0 ? 1 : std::uint64_t{1} << (q - 1);
      const std::uint64_t all = q == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << q) - 1;
      std::uint64_t mask = 0;
      long gain = 0;
      for (std::uint64_t g = 1; g < count; ++g) {
        const auto bit = static_cast<std::uint32_t>(std::countr_zero(g));
        mask ^= std::uint64_t{1} << bit;
        for (auto k : touching[bit]) {
          crossing[k] ^= 1;
          gain += crossing[k] ? w[k] : -w[k];
        }
        if (gain <= 0 || gain < best_gain) continue;
        std::uint64_t y = mask;
        const auto comp = all & ~mask;
        const int py = std::popcount(y), pc = std::popcount(comp);
        if (pc < py || (pc == py && lex_less(comp, y))) y = comp;
        if (gain > best_gain || (best_v == v && lex_less(y, best_y))) {
          best_gain = gain;
          best_v = v;
          best_y = y;
        }
      }
    }
    if (best_gain <= 0) {
      out.status = DecodeStatus::stalled;
      out.message = "no improving local move";
      return out;
    }
    const auto edges = vertex_edges_.row(best_v);
    for (std::uint64_t m = best_y; m; m &= m - 1) {
      const auto e = edges[static_cast<std::size_t>(std::countr_zero(m))];
      out.correction.flip(e);
      for (auto t : edge_triangles_.row(e)) f.flip(t);
    }
    weight -= static_cast<std::size_t>(best_gain);
    ++out.iterations;
    out.syndrome_weights.push_back(weight);
  }
  return out;
}

DecodeOutcome LocalDecoder::decode_single_edge(const BitVector& f0) const {
  check_input(f0);
  DecodeOutcome out;
  out.correction = BitVector(n_edges_);
  BitVector f = f0;
  std::size_t weight = f.weight();
  out.syndrome_weights.push_back(weight);
  while (weight > 0) {
    std::vector<std::size_t> candidates;
    for (auto t : f.support())
      for (auto e : triangle_edges_.row(t)) candidates.push_back(e);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    long best_gain = 0;
    std::size_t best_e = 0;
    for (auto e : candidates) {
      long gain = 0;
      for (auto t : edge_triangles_.row(e)) gain += f.get(t) ? 1 : -1;
      if (gain > best_gain) {
        best_gain = gain;
        best_e = e;
      }
    }
    if (best_gain <= 0) {
      out.status = DecodeStatus::stalled;
      out.message = "no improving edge";
      return out;
    }
    out.correction.flip(best_e);
    for (auto t : edge_triangles_.row(best_e)) f.flip(t);
    weight -= static_cast<std::size_t>(best_gain);
    ++out.iterations;
    out.syndrome_weights.push_back(weight);
  }
  return out;
}

DecodeOutcome local_coboundary_decode(const SimplicialComplex& x, const BitVector& f, const LocalDecodeOptions& options) {
  return LocalDecoder(x, options).decode(f);
}

DecodeOutcome single_edge_decode(const SimplicialComplex& x, const BitVector& f, const LocalDecodeOptions& options) {
  return LocalDecoder(x, options).decode_single_edge(f);
}

}  // namespace qcc
