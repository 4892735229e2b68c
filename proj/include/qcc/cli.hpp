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

#ifndef QCC_CLI_HPP
#define QCC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qcc::cli {

/// Exit codes; errors also print {"error": {"kind", "message"}} on err.
enum Exit : int { ok = 0, bad_arguments = 2, io_error = 3, budget_refused = 4, bad_input = 5, internal = 6 };

/// Runs one subcommand: build, product, params, decode, simulate or inspect.
/// The JSON report goes to out (and to --report when given).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "2^22", "4194304" or "1e6".
double parse_budget(const std::string& text);

}  // namespace qcc::cli

#endif  // QCC_CLI_HPP
