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

#include "qcc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcc/decoders.hpp"
#include "qcc/finite_field.hpp"
#include "qcc/io.hpp"
#include "qcc/lsv.hpp"
#include "qcc/rng.hpp"

namespace qcc::cli {

namespace {

using io::Json;

struct Failure {
  Exit code;
  std::string kind;
  std::string message;
};

[[noreturn]] void fail(Exit code, const std::string& kind, const std::string& message) {
  throw Failure{code, kind, message};
}

Json tool_json() { return {{"name", "qcc"}, {"version", QCC_VERSION}}; }

Json report_header(const std::string& command, Json config) {
  Json j;
  j["tool"] = tool_json();
  j["command"] = command;
  j["config"] = std::move(config);
  return j;
}

Json range_json(std::size_t lo, std::size_t hi) { return Json::array({lo, hi}); }

Poly parse_poly(const std::string& text) {
  Poly out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit)) fail(bad_arguments, "argument", "--poly: expected comma-separated integers");
    out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
  }
  return out;
}

std::string poly_string(const Poly& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

Json complex_summary(const ChainComplex& x, const SimplicialComplex* simplicial) {
  Json j;
  j["dimension"] = x.dimension();
  j["face_counts"] = x.face_counts();
  auto v = validate(x);
  j["valid"] = !v.has_value();
  if (v) j["violation"] = v->message();
  if (simplicial) {
    Json deg = Json::array();
    for (auto d : degree_stats(*simplicial)) deg.push_back(range_json(d.min, d.max));
    j["up_degree_ranges"] = std::move(deg);
  }
  return j;
}

// Aggregated link statistics over every vertex.
Json link_summary(const SimplicialComplex& x) {
  std::size_t vmin = SIZE_MAX, vmax = 0, emin = SIZE_MAX, emax = 0, dmin = SIZE_MAX, dmax = 0, gmin = SIZE_MAX, gmax = 0;
  bool bipartite = true, acyclic = false;
  for (std::size_t v = 0; v < x.vertex_count(); ++v) {
    auto l = qcc::link(x, static_cast<SimplicialComplex::Vertex>(v));
    vmin = std::min(vmin, l.n), vmax = std::max(vmax, l.n);
    emin = std::min(emin, l.edges.size()), emax = std::max(emax, l.edges.size());
    auto [lo, hi] = degree_range(l);
    dmin = std::min(dmin, lo), dmax = std::max(dmax, hi);
    bipartite = bipartite && is_bipartite(l);
    auto g = girth(l);
    if (!g) {
      acyclic = true;
    } else {
      gmin = std::min(gmin, *g), gmax = std::max(gmax, *g);
    }
  }
  Json j;
  j["vertices"] = range_json(vmin, vmax);
  j["edges"] = range_json(emin, emax);
  j["degree"] = range_json(dmin, dmax);
  j["bipartite"] = bipartite;
  j["girth"] = gmin == SIZE_MAX ? Json(nullptr) : range_json(gmin, gmax);
  j["some_acyclic"] = acyclic;
  return j;
}

Json cohomology_json(const ChainComplex& x, std::size_t dense_limit) {
  Json j;
  if (x.dimension() < 1) return j;
  if (x.face_count(1) <= dense_limit) {
    j["H1"] = homology_dim(x, 1);
    j["H^1"] = cohomology_dim(x, 1);
    j["method"] = "dense";
    return j;
  }
  PropagationOptions opts;
  opts.max_guesses = 1 << 16;
  auto rep = gauge_fixed_cohomology(x, opts);
  j["H^1"] = rep.dimension;
  j["method"] = "gauge-fixed propagation";
  j["guesses"] = rep.guesses;
  return j;
}

Json systole_json(const DistanceReport& d) {
  Json j = Json::object();
  if (d.measured) {
    const auto& m = *d.measured;
    if (m.provenance == Provenance::lower_bounded) {
      j["lower_bounded"] = m.value;
    } else {
      j["measured"] = m.value;
    }
    j["mode"] = to_string(m.mode);
  } else {
    j["measured"] = nullptr;
    j["note"] = d.note;
  }
  if (d.predicted) j["predicted"] = *d.predicted;
  return j;
}

Json audit_json(const WeightAudit& a) {
  return {{"W_X", a.wx},       {"W_Z", a.wz},       {"W_X_bound", a.wx_bound}, {"W_Z_bound", a.wz_bound},
          {"w_X^R", a.wx_r},   {"w_Z^R", a.wz_r},   {"w_Z^C", a.wz_c},         {"w^R", a.w_r},
          {"w^C", a.w_c},      {"passed", a.passed()}};
}

void emit(const Json& report, const std::string& report_path, std::ostream& out) {
  const auto text = report.dump(2) + "\n";
  if (!report_path.empty()) io::write_file_atomic(report_path, text);
  out << text;
}

// ---------------------------------------------------------------------------

struct BuildLsvArgs {
  unsigned q = 2, d = 3, e = 2;
  std::string poly;
  std::size_t max_size = 200000;
  std::string out, report;
};

Json build_lsv(const BuildLsvArgs& a) {
  Poly p;
  if (!a.poly.empty()) {
    p = parse_poly(a.poly);
    if (p.size() != a.e + 1) fail(bad_arguments, "argument", "--poly has degree " + std::to_string(p.size() - 1) + " but --e is " + std::to_string(a.e));
  } else {
    if (!is_prime(a.q)) fail(bad_arguments, "argument", "--q must be prime");
    // First irreducible of degree e avoiding the roots 0 and -1.
    std::vector<std::uint32_t> c(a.e + 1, 0);
    c[a.e] = 1;
    bool found = false;
    while (!found) {
      if (is_irreducible(c, a.q) && evaluate(c, 0, a.q) != 0 && evaluate(c, a.q - 1, a.q) != 0) {
        found = true;
        break;
      }
      std::size_t k = 0;
      while (k < a.e && ++c[k] == a.q) c[k++] = 0;
      if (k == a.e) break;
    }
    if (!found) fail(bad_input, "input", "no irreducible p_y of degree " + std::to_string(a.e) + " over F_" + std::to_string(a.q) + " avoids 0 and -1 as roots");
    p = c;
  }
  Json config = {{"q", a.q}, {"d", a.d}, {"e", a.e}, {"poly", poly_string(p)}, {"max_size", a.max_size}, {"out", a.out}};
  auto alg = CyclicAlgebra::build(a.q, a.d, p);
  auto quotient = build_quotient_complex(alg, a.max_size);
  const auto& x = quotient.complex;
  Json report = report_header("build lsv", config);
  report["complex"] = complex_summary(x.chain(), &x);
  report["generators"] = quotient.generators.size();
  report["links"] = link_summary(x);
  report["cohomology"] = cohomology_json(x.chain(), 0);
  if (!a.out.empty()) {
    Json file = io::to_json(x);
    file["meta"] = {{"source", "lsv"}, {"q", a.q}, {"d", a.d}, {"e", a.e}, {"poly", poly_string(p)}};
    io::write_file_atomic(a.out, file.dump() + "\n");
  }
  return report;
}

Json build_torus(std::size_t r, std::size_t c, const std::string& out) {
  auto x = fixture_torus(r, c);
  Json report = report_header("build torus", {{"r", r}, {"c", c}, {"out", out}});
  report["complex"] = complex_summary(x.chain(), &x);
  report["cohomology"] = cohomology_json(x.chain(), 20000);
  if (!out.empty()) {
    Json file = io::to_json(x);
    file["meta"] = {{"source", "torus"}, {"r", r}, {"c", c}};
    io::write_file_atomic(out, file.dump() + "\n");
  }
  return report;
}

Json code_summary(const BipartiteCode& code, double budget) {
  Json j = {{"n", code.bits()}, {"checks", code.checks()}, {"k", code.dimension()}, {"kind", to_string(code.kind)},
            {"max_row_weight", code.h.max_row_weight()}, {"max_column_weight", code.h.max_column_weight()}};
  try {
    auto d = code_distance(code, budget);
    j["distance"] = d ? Json(*d) : Json(nullptr);
  } catch (const BudgetExceeded& e) {
    j["distance"] = nullptr;
    j["distance_note"] = e.what();
  }
  return j;
}

struct BuildCodeArgs {
  std::string kind = "path";
  std::size_t m = 3, n = 0, dv = 3, dc = 6;
  std::uint64_t seed = 0;
  std::string out;
  std::string budget = "2^22";
};

Json build_code(const BuildCodeArgs& a) {
  BipartiteCode code;
  Json config = {{"kind", a.kind}, {"out", a.out}, {"budget", a.budget}};
  if (a.kind == "path") {
    code = path_code(a.m);
    config["m"] = a.m;
  } else if (a.kind == "ldpc") {
    if (a.n == 0) fail(bad_arguments, "argument", "--kind ldpc needs --n");
    code = random_regular_ldpc(a.n, a.dv, a.dc, a.seed);
    config["n"] = a.n;
    config["dv"] = a.dv;
    config["dc"] = a.dc;
    config["seed"] = a.seed;
  } else {
    fail(bad_arguments, "argument", "--kind must be path or ldpc");
  }
  Json report = report_header("build code", config);
  report["code"] = code_summary(code, parse_budget(a.budget));
  if (!a.out.empty()) io::write_file_atomic(a.out, io::matrix_to_text(code.h));
  return report;
}

Json product_cmd(const std::string& complex_path, const std::string& code_path, const std::string& out) {
  auto cj = io::read_json(complex_path);
  auto base = io::complex_from_json(cj);
  auto code = io::code_from_matrix(io::matrix_from_text(io::read_file(code_path)));
  auto p = build_product(base.chain, code);
  Json report = report_header("product", {{"complex", complex_path}, {"code", code_path}, {"out", out}});
  const auto& l = p.layout();
  report["N"] = l.qubits();
  report["layout"] = {{"X0", l.x0}, {"X1", l.x1}, {"X2", l.x2}, {"A", l.a}, {"B", l.b}};
  report["valid"] = true;
  report["weight_audit"] = audit_json(weight_audit(p));
  if (!out.empty()) {
    if (cj.contains("meta")) cj.erase("meta");
    io::write_file_atomic(out, io::to_json(p, cj).dump() + "\n");
  }
  return report;
}

Json params_cmd(const std::string& path, const std::string& budget, std::optional<std::size_t> cap) {
  auto loaded = io::product_from_json(io::read_json(path));
  ParamsOptions opts;
  opts.budget.max_enumeration = parse_budget(budget);
  opts.budget.weight_cap = cap;
  Json config = {{"code", path}, {"budget", budget}};
  if (cap) config["cap"] = *cap;
  Json report = report_header("params", config);
  const auto params = product_params(loaded.product, opts);
  report["N"] = params.n;
  report["K"] = {{"value", params.k}, {"provenance", to_string(params.k_provenance)}};
  report["D_X"] = params.k ? systole_json(params.dx) : Json(nullptr);
  report["D_Z"] = params.k ? systole_json(params.dz) : Json(nullptr);
  report["weight_audit"] = audit_json(weight_audit(loaded.product));
  return report;
}

Json outcome_json(const DecodeOutcome& o) {
  Json j = {{"status", to_string(o.status)}, {"iterations", o.iterations},
            {"syndrome_weights", o.syndrome_weights}, {"correction_weight", o.correction.weight()}};
  if (!o.message.empty()) j["message"] = o.message;
  if (o.correction.weight() <= 4096) j["correction_support"] = o.correction.support();
  return j;
}

struct Decoders {
  const io::LoadedProduct* product = nullptr;
  std::optional<CycleBasis> basis;
  std::optional<Graph> graph;
  std::optional<PotentialChecker> checker;
  std::optional<LocalDecoder> local;
  std::string component = "subset";

  Decoders(const io::LoadedProduct& p, const std::string& type, const std::string& comp) : product(&p), component(comp) {
    if (type == "x") {
      basis.emplace(p.base.chain);
      graph = graph_from_boundary(p.base.chain.boundary(1));
    } else {
      if (!p.base.simplicial) fail(bad_input, "input", "z decoding needs the complex in simplicial face-list form");
      graph = p.base.simplicial->graph();
      local.emplace(*p.base.simplicial);
    }
    checker.emplace(*graph);
  }

  DecodeOutcome run(const std::string& type, const BitVector& syndrome) const {
    if (type == "x") return x_decode(product->product, *basis, *graph, syndrome);
    const LocalDecoder& dec = *local;
    if (component == "single") return z_decode(product->product, syndrome, [&](const BitVector& f) { return dec.decode_single_edge(f); });
    return z_decode(product->product, syndrome, [&](const BitVector& f) { return dec.decode(f); });
  }
};

void check_type(const std::string& type, const std::string& component) {
  if (type != "x" && type != "z") fail(bad_arguments, "argument", "--type must be x or z");
  if (component != "subset" && component != "single") fail(bad_arguments, "argument", "--decoder must be subset or single");
}

Json decode_cmd(const std::string& path, const std::string& type, const std::string& syndrome_path,
                const std::string& component, const std::string& out) {
  check_type(type, component);
  auto loaded = io::product_from_json(io::read_json(path));
  auto s = io::vector_from_text(io::read_file(syndrome_path));
  const auto& l = loaded.product.layout();
  const std::size_t expected = type == "x" ? l.grade0() : l.grade2();
  if (s.size() != expected) fail(bad_input, "input", "syndrome has length " + std::to_string(s.size()) + ", expected " + std::to_string(expected));
  Decoders dec(loaded, type, component);
  Json config = {{"code", path}, {"type", type}, {"syndrome", syndrome_path}, {"out", out}};
  if (type == "z") config["decoder"] = component;
  Json report = report_header("decode", config);
  DecodeOutcome o;
  try {
    o = dec.run(type, s);
  } catch (const std::invalid_argument& e) {
    fail(bad_input, "input", e.what());
  }
  report["outcome"] = outcome_json(o);
  if (!out.empty() && o.ok()) io::write_file_atomic(out, io::vector_to_text(o.correction));
  return report;
}

struct SimulateArgs {
  std::string code, type = "z", decoder = "subset", report;
  std::size_t weight = 1, trials = 100;
  std::uint64_t seed = 0;
  bool up_to = false;
  std::size_t dense_limit = 50000;
};

Json simulate_cmd(const SimulateArgs& a) {
  check_type(a.type, a.decoder);
  if (a.weight == 0) fail(bad_arguments, "argument", "--weight must be positive");
  auto loaded = io::product_from_json(io::read_json(a.code));
  const auto& p = loaded.product;
  const std::size_t n = p.layout().qubits();
  if (a.weight > n) fail(bad_arguments, "argument", "--weight exceeds the number of qubits");
  if (a.type == "x" && n > a.dense_limit) {
    fail(budget_refused, "budget", "x equivalence uses dense elimination; N = " + std::to_string(n) + " exceeds " + std::to_string(a.dense_limit));
  }
  Decoders dec(loaded, a.type, a.decoder);
  Json config = {{"code", a.code}, {"type", a.type}, {"weight", a.weight}, {"weight_mode", a.up_to ? "up-to" : "exact"},
                 {"trials", a.trials}, {"seed", a.seed}, {"report", a.report}};
  if (a.type == "z") config["decoder"] = a.decoder;

  std::size_t successes = 0, stalls = 0, budget = 0, equivalence_failures = 0, syndrome_failures = 0, iterations = 0;
  Json failures = Json::array();
  for (std::size_t t = 0; t < a.trials; ++t) {
    auto rng = trial_rng(a.seed, t);
    const std::size_t w = a.up_to ? 1 + static_cast<std::size_t>(uniform_below(rng, a.weight)) : a.weight;
    const auto error = BitVector::from_support(n, sample_indices(rng, n, w));
    const auto syndrome = a.type == "x" ? p.sigma_x().multiply(error) : p.sigma_z().multiply(error);
    const auto o = dec.run(a.type, syndrome);
    iterations += o.iterations;
    std::string verdict;
    if (o.status == DecodeStatus::stalled) {
      ++stalls;
      verdict = "stalled";
    } else if (o.status == DecodeStatus::budget_exceeded) {
      ++budget;
      verdict = "budget-exceeded";
    } else {
      const auto again = a.type == "x" ? p.sigma_x().multiply(o.correction) : p.sigma_z().multiply(o.correction);
      const bool equivalent = a.type == "x" ? x_equivalent(p, error, o.correction)
                                            : z_equivalent(p, *dec.checker, error, o.correction);
      if (again != syndrome) {
        ++syndrome_failures;
        verdict = "syndrome-mismatch";
      } else if (!equivalent) {
        ++equivalence_failures;
        verdict = "not-equivalent";
      } else {
        ++successes;
      }
    }
    if (!verdict.empty() && failures.size() < 32) failures.push_back({{"trial", t}, {"weight", w}, {"outcome", verdict}});
  }
  Json report = report_header("simulate", config);
  report["trials"] = a.trials;
  report["successes"] = successes;
  report["stalls"] = stalls;
  report["budget_exceeded"] = budget;
  report["equivalence_failures"] = equivalence_failures;
  report["syndrome_failures"] = syndrome_failures;
  report["mean_iterations"] = a.trials ? double(iterations) / double(a.trials) : 0.0;
  report["stall_rate"] = a.trials ? double(stalls) / double(a.trials) : 0.0;
  report["first_failures"] = std::move(failures);
  return report;
}

Json inspect_cmd(const std::string& path, const std::string& budget) {
  Json report = report_header("inspect", {{"path", path}, {"budget", budget}});
  const auto text = io::read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] != '{') {
    auto code = io::code_from_matrix(io::matrix_from_text(text));
    report["type"] = "code";
    report["code"] = code_summary(code, parse_budget(budget));
    return report;
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(bad_input, "input", path + ": " + e.what());
  }
  if (j.value("format", "") == "qcc-product") {
    auto loaded = io::product_from_json(j);
    const auto& l = loaded.product.layout();
    report["type"] = "product";
    report["N"] = l.qubits();
    report["layout"] = {{"X0", l.x0}, {"X1", l.x1}, {"X2", l.x2}, {"A", l.a}, {"B", l.b}};
    report["complex"] = complex_summary(loaded.product.complex(), nullptr);
    report["weight_audit"] = audit_json(weight_audit(loaded.product));
    return report;
  }
  auto loaded = io::complex_from_json(j);
  report["type"] = loaded.simplicial ? "simplicial" : "complex";
  report["complex"] = complex_summary(loaded.chain, loaded.simplicial ? &*loaded.simplicial : nullptr);
  bool graph_like = loaded.chain.dimension() >= 1;
  if (graph_like)
    for (auto w : loaded.chain.boundary(1).column_weights()) graph_like = graph_like && w == 2;
  if (graph_like || (loaded.chain.dimension() >= 1 && loaded.chain.face_count(1) <= 20000)) {
    report["cohomology"] = cohomology_json(loaded.chain, 20000);
  }
  return report;
}

}  // namespace

double parse_budget(const std::string& text) {
  const auto caret = text.find('^');
  try {
    std::size_t used = 0;
    if (caret != std::string::npos) {
      const double base = std::stod(text.substr(0, caret), &used);
      if (used != caret) throw std::invalid_argument("base");
      const auto exp_text = text.substr(caret + 1);
      const double exp = std::stod(exp_text, &used);
      if (used != exp_text.size()) throw std::invalid_argument("exponent");
      return std::pow(base, exp);
    }
    const double v = std::stod(text, &used);
    if (used != text.size() || v < 0) throw std::invalid_argument("value");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse budget '" + text + "'");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qcc: quantum codes from chain complexes", "qcc"};
  app.set_version_flag("--version", QCC_VERSION);
  app.require_subcommand(1);
  std::string report_path;
  Json report;
  std::function<Json()> action;

  auto* build = app.add_subcommand("build", "Build a complex or a classical code");
  build->require_subcommand(1);
  BuildLsvArgs lsv;
  auto* blsv = build->add_subcommand("lsv", "LSV quotient complex");
  blsv->add_option("--q", lsv.q, "Field characteristic (prime)");
  blsv->add_option("--d", lsv.d, "Matrix size (complex dimension d - 1)");
  blsv->add_option("--e", lsv.e, "Degree of p_y");
  blsv->add_option("--poly", lsv.poly, "Coefficients of p_y, constant term first");
  blsv->add_option("--max-size", lsv.max_size, "Abort once the group exceeds this many elements");
  blsv->add_option("--out", lsv.out, "Complex JSON output");
  blsv->add_option("--report", report_path, "Also write the report here");
  blsv->callback([&] { action = [&] { return build_lsv(lsv); }; });

  std::size_t tr = 3, tc = 3;
  std::string torus_out;
  auto* btorus = build->add_subcommand("torus", "Triangulated torus grid");
  btorus->add_option("--r", tr);
  btorus->add_option("--c", tc);
  btorus->add_option("--out", torus_out);
  btorus->add_option("--report", report_path);
  btorus->callback([&] { action = [&] { return build_torus(tr, tc, torus_out); }; });

  BuildCodeArgs bc;
  auto* bcode = build->add_subcommand("code", "Classical code Y = (A, B)");
  bcode->add_option("--kind", bc.kind, "path or ldpc");
  bcode->add_option("--m", bc.m, "Path length");
  bcode->add_option("--n", bc.n, "LDPC length");
  bcode->add_option("--dv", bc.dv);
  bcode->add_option("--dc", bc.dc);
  bcode->add_option("--seed", bc.seed);
  bcode->add_option("--budget", bc.budget, "Distance enumeration budget");
  bcode->add_option("--out", bc.out, "Matrix text output");
  bcode->add_option("--report", report_path);
  bcode->callback([&] { action = [&] { return build_code(bc); }; });

  std::string pcomplex, pcode, pout;
  auto* product = app.add_subcommand("product", "Product of a 2-complex with a classical code");
  product->add_option("--complex", pcomplex)->required();
  product->add_option("--code", pcode)->required();
  product->add_option("--out", pout);
  product->add_option("--report", report_path);
  product->callback([&] { action = [&] { return product_cmd(pcomplex, pcode, pout); }; });

  std::string params_path, params_budget = "2^22";
  std::optional<std::size_t> params_cap;
  auto* params = app.add_subcommand("params", "N, K and distances of a product code");
  params->add_option("code", params_path)->required();
  params->add_option("--budget", params_budget, "Enumeration budget, e.g. 2^22");
  params->add_option("--cap", params_cap, "Weight cap for the cycle search");
  params->add_option("--report", report_path);
  params->callback([&] { action = [&] { return params_cmd(params_path, params_budget, params_cap); }; });

  std::string dcode, dtype = "z", dsyn, ddec = "subset", dout;
  auto* decode = app.add_subcommand("decode", "Decode one syndrome");
  decode->add_option("--code", dcode)->required();
  decode->add_option("--type", dtype, "x or z");
  decode->add_option("--syndrome", dsyn)->required();
  decode->add_option("--decoder", ddec, "Component decoder for z: subset or single");
  decode->add_option("--out", dout, "Correction output (vector text)");
  decode->add_option("--report", report_path);
  decode->callback([&] { action = [&] { return decode_cmd(dcode, dtype, dsyn, ddec, dout); }; });

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo decoding of bounded-weight errors");
  simulate->add_option("--code", sim.code)->required();
  simulate->add_option("--type", sim.type, "x or z");
  simulate->add_option("--weight", sim.weight, "Error weight");
  simulate->add_flag("--up-to", sim.up_to, "Draw the weight uniformly from 1..weight");
  simulate->add_option("--trials", sim.trials);
  simulate->add_option("--seed", sim.seed);
  simulate->add_option("--decoder", sim.decoder, "Component decoder for z: subset or single");
  simulate->add_option("--report", sim.report);
  simulate->callback([&] { action = [&] { return simulate_cmd(sim); }; });

  std::string ipath, ibudget = "2^22";
  auto* inspect = app.add_subcommand("inspect", "Summarise a complex, product or code file");
  inspect->add_option("path", ipath)->required();
  inspect->add_option("--budget", ibudget);
  inspect->add_option("--report", report_path);
  inspect->callback([&] { action = [&] { return inspect_cmd(ipath, ibudget); }; });

  auto error_json = [&](const std::string& kind, const std::string& message) {
    err << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::CallForVersion&) {
    out << QCC_VERSION << "\n";
    return ok;
  } catch (const CLI::ParseError& e) {
    error_json("argument", e.what());
    return bad_arguments;
  }

  try {
    report = action();
    emit(report, sim.report.empty() ? report_path : sim.report, out);
    return ok;
  } catch (const Failure& f) {
    error_json(f.kind, f.message);
    return f.code;
  } catch (const BudgetExceeded& e) {
    error_json("budget", e.what());
    return budget_refused;
  } catch (const io::FormatError& e) {
    error_json("input", e.what());
    return bad_input;
  } catch (const std::invalid_argument& e) {
    error_json("input", e.what());
    return bad_input;
  } catch (const std::out_of_range& e) {
    error_json("input", e.what());
    return bad_input;
  } catch (const std::runtime_error& e) {
    error_json("io", e.what());
    return io_error;
  } catch (const std::exception& e) {
    error_json("internal", e.what());
    return internal;
  }
}

}  // namespace qcc::cli
