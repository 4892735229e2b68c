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

#include "qcc/io.hpp"

#include <unistd.h>

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace qcc::io {

std::string matrix_to_text(const BinaryMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (auto c : m.row(r)) out << r << ' ' << c << '\n';
  return out.str();
}

BinaryMatrix matrix_from_text(const std::string& text) {
  std::istringstream in(text);
  long long rows = -1, cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) throw FormatError("matrix: missing 'rows cols' header");
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  std::pair<long long, long long> prev{-1, -1};
  long long r = 0, c = 0;
  while (in >> r) {
    if (!(in >> c)) throw FormatError("matrix: dangling row index");
    if (r < 0 || c < 0 || r >= rows || c >= cols) {
      throw FormatError("matrix: entry (" + std::to_string(r) + ", " + std::to_string(c) + ") out of range");
    }
    if (std::make_pair(r, c) <= prev) throw FormatError("matrix: entries must be sorted and distinct");
    prev = {r, c};
    entries.emplace_back(r, c);
  }
  if (!in.eof()) throw FormatError("matrix: unreadable entry");
  return BinaryMatrix::from_triplets(rows, cols, entries);
}

std::string vector_to_text(const BitVector& v) { return v.to_string() + "\n"; }

BitVector vector_from_text(const std::string& text) {
  std::string bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch == '0' || ch == '1') {
      bits.push_back(ch);
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      throw FormatError(std::string("vector: unexpected character '") + ch + "'");
    }
  }
  return BitVector::from_string(bits);
}

namespace {

Json triplets(const BinaryMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (auto c : m.row(r)) out.push_back({r, c});
  return out;
}

BinaryMatrix matrix_from_triplets(const Json& j, std::size_t rows, std::size_t cols) {
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw FormatError("complex: boundary entries must be [row, col] pairs");
    const auto r = e[0].get<std::size_t>(), c = e[1].get<std::size_t>();
    if (r >= rows || c >= cols) throw FormatError("complex: boundary entry out of range");
    entries.emplace_back(r, c);
  }
  return BinaryMatrix::from_triplets(rows, cols, entries);
}

}  // namespace

Json to_json(const ChainComplex& x) {
  Json j;
  j["dimension"] = x.dimension();
  j["face_counts"] = x.face_counts();
  Json maps = Json::array();
  for (std::size_t p = 1; p <= x.dimension(); ++p) maps.push_back(triplets(x.boundary(p)));
  j["boundaries"] = std::move(maps);
  return j;
}

Json to_json(const SimplicialComplex& x) {
  Json j;
  j["vertices"] = x.vertex_count();
  Json faces = Json::object();
  for (std::size_t p = 1; p <= x.dimension(); ++p) {
    Json list = Json::array();
    for (std::size_t i = 0; i < x.face_count(p); ++i) {
      auto f = x.face(p, i);
      list.push_back(std::vector<SimplicialComplex::Vertex>(f.begin(), f.end()));
    }
    faces[std::to_string(p)] = std::move(list);
  }
  j["faces"] = std::move(faces);
  return j;
}

LoadedComplex complex_from_json(const Json& j) {
  try {
    if (j.contains("faces")) {
      const auto n = j.at("vertices").get<std::size_t>();
      std::vector<std::vector<std::vector<SimplicialComplex::Vertex>>> faces;
      for (std::size_t p = 1; j["faces"].contains(std::to_string(p)); ++p) {
        auto list = j["faces"][std::to_string(p)].get<std::vector<std::vector<SimplicialComplex::Vertex>>>();
        for (const auto& f : list) {
          if (f.size() != p + 1) throw FormatError("complex: face of the wrong size in grade " + std::to_string(p));
          for (auto v : f)
            if (v >= n) throw FormatError("complex: vertex id out of range");
        }
        faces.push_back(std::move(list));
      }
      if (faces.size() != j["faces"].size()) throw FormatError("complex: face grades must be 1, 2, ... without gaps");
      SimplicialComplex x(n, std::move(faces));
      auto chain = x.chain();
      return {std::move(chain), std::move(x)};
    }
    const auto counts = j.at("face_counts").get<std::vector<std::size_t>>();
    const auto& maps = j.at("boundaries");
    if (counts.empty() || maps.size() + 1 != counts.size()) throw FormatError("complex: need d + 1 face counts and d boundaries");
    if (j.contains("dimension") && j["dimension"].get<std::size_t>() + 1 != counts.size()) {
      throw FormatError("complex: dimension disagrees with face_counts");
    }
    std::vector<BinaryMatrix> boundaries;
    for (std::size_t p = 1; p < counts.size(); ++p) boundaries.push_back(matrix_from_triplets(maps[p - 1], counts[p - 1], counts[p]));
    ChainComplex x(counts, std::move(boundaries));
    if (auto v = validate(x)) throw FormatError("complex: " + v->message());
    return {std::move(x), std::nullopt};
  } catch (const Json::exception& e) {
    throw FormatError(std::string("complex: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("complex: ") + e.what());
  }
}

BipartiteCode code_from_matrix(BinaryMatrix h) {
  if (h.cols() >= 2 && h.rows() + 1 == h.cols() && h == path_code(h.cols()).h) return path_code(h.cols());
  return make_code(std::move(h));
}

Json to_json(const ProductCode& p, const Json& complex_json) {
  const auto& l = p.layout();
  Json j;
  j["format"] = "qcc-product";
  j["complex"] = complex_json;
  j["code"] = {{"rows", p.code().checks()},
               {"cols", p.code().bits()},
               {"kind", to_string(p.code().kind)},
               {"entries", triplets(p.code().h)}};
  j["layout"] = {{"X0", l.x0}, {"X1", l.x1}, {"X2", l.x2}, {"A", l.a}, {"B", l.b},
                 {"grade0", l.grade0()}, {"qubits", l.qubits()}, {"grade2", l.grade2()},
                 {"order", "X1xA (x1 * |A| + a), then X2xB"}};
  return j;
}

LoadedProduct product_from_json(const Json& j) {
  try {
    if (j.value("format", "") != "qcc-product") throw FormatError("product: not a qcc-product file");
    auto base = complex_from_json(j.at("complex"));
    const auto& c = j.at("code");
    auto h = matrix_from_triplets(c.at("entries"), c.at("rows").get<std::size_t>(), c.at("cols").get<std::size_t>());
    auto product = build_product(base.chain, code_from_matrix(std::move(h)));
    if (product.layout().qubits() != j.at("layout").at("qubits").get<std::size_t>()) {
      throw FormatError("product: stored layout disagrees with the factors");
    }
    return {std::move(base), std::move(product)};
  } catch (const Json::exception& e) {
    throw FormatError(std::string("product: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move " + tmp.string() + " to " + path + ": " + ec.message());
  }
}

Json read_json(const std::string& path) {
  const auto text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace qcc::io
