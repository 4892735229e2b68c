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

#ifndef QCC_IO_HPP
#define QCC_IO_HPP

#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>

#include "qcc/chain.hpp"
#include "qcc/classical.hpp"
#include "qcc/product.hpp"
#include "qcc/simplicial.hpp"

namespace qcc::io {

/// Malformed input file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

/// "rows cols" then one sorted "r c" pair per line.
std::string matrix_to_text(const BinaryMatrix& m);
BinaryMatrix matrix_from_text(const std::string& text);

/// A single line of '0'/'1' characters; whitespace is ignored on input.
std::string vector_to_text(const BitVector& v);
BitVector vector_from_text(const std::string& text);

Json to_json(const ChainComplex& x);
Json to_json(const SimplicialComplex& x);
/// Factors plus layout; the product maps are rebuilt on load.
Json to_json(const ProductCode& p, const Json& complex_json);

/// A complex file in either the boundary form or the simplicial face-list form.
struct LoadedComplex {
  ChainComplex chain;
  std::optional<SimplicialComplex> simplicial;
};
LoadedComplex complex_from_json(const Json& j);

/// Path codes are recognised from their check matrix; anything else is custom.
BipartiteCode code_from_matrix(BinaryMatrix h);

struct LoadedProduct {
  LoadedComplex base;
  ProductCode product;
};
LoadedProduct product_from_json(const Json& j);

std::string read_file(const std::string& path);
/// Writes through a temporary file in the same directory and renames it into place.
void write_file_atomic(const std::string& path, const std::string& contents);
Json read_json(const std::string& path);

}  // namespace qcc::io

#endif  // QCC_IO_HPP
