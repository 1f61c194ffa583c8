// Copyright 2026 The qlie authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "qlie/closure.hpp"
#include "qlie/dense.hpp"
#include "qlie/forcing.hpp"
#include "qlie/hamlib.hpp"
#include "qlie/verify.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct RunConfig {
  std::string spec_path;
  std::string mode = "exact";
  double tolerance = 1e-9;
  bool tolerance_given = false;
  std::uint64_t seed = 1;
  bool seed_given = false;
  int stability = 1;
  int threads = 1;
  std::size_t bit_budget = 4096;
  std::uint32_t max_dense = qlie::kDefaultDenseLimit;
  std::string output = "text";
  std::string out_path;
};

void add_common_options(CLI::App* cmd, RunConfig& cfg, bool with_spec = true) {
  if (with_spec) {
    cmd->add_option("--spec", cfg.spec_path, "problem file (JSONify per the schema)")->required();
  }
  cmd->add_option("--seed", cfg.seed, "sampling seed (default 1)")->each([&](const std::string&) {
    cfg.seed_given = true;
  });
  cmd->add_option("--mode", cfg.mode, "coefficient arithmetic: exact|float")
      ->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--tolerance", cfg.tolerance, "float-mode rank tolerance (default 1e-9)")
      ->each([&](const std::string&) { cfg.tolerance_given = true; });
  cmd->add_option("--stability", cfg.stability, "re-run with k independent seeds and compare")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", cfg.threads, "bracket-generation threads")->check(CLI::PositiveNumber);
  cmd->add_option("--bit-budget", cfg.bit_budget, "exact-coefficient bit budget (default 4096)");
  cmd->add_option("--max-dense", cfg.max_dense, "dense-matrix qubit limit (default 6)");
  cmd->add_option("--output", cfg.output, "report format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", cfg.out_path, "write the report to a file instead of stdout");
}

void validate_common(const RunConfig& cfg) {
  if (cfg.tolerance_given && cfg.mode != "float") {
    throw qlie::InputError("--tolerance is only meaningful with --mode float");
  }
  if (cfg.tolerance <= 0) throw qlie::InputError("--tolerance must be positive");
}

void emit(const RunConfig& cfg, const ordered_json& doc, const std::string& text) {
  std::string payload = cfg.output == "json" ? doc.dump(2) + "\n" : text;
  if (cfg.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(cfg.out_path);
    if (!f) throw qlie::InputError("cannot open output file: " + cfg.out_path);
    f << payload;
  }
}

qlie::ClosureOptions closure_options(const RunConfig& cfg) {
  qlie::ClosureOptions opt;
  opt.tolerance = cfg.tolerance;
  opt.bit_budget = cfg.bit_budget;
  opt.threads = cfg.threads;
  return opt;
}

nlohmann::json load_spec_doc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qlie::InputError("cannot open problem file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw qlie::InputError(std::string("problem document is not valid JSON: ") + e.what());
  }
}

qlie::ProblemSpec parse_with_seed(nlohmann::json doc, std::optional<std::uint64_t> seed) {
  if (seed) doc["seed"] = *seed;
  return qlie::parse_spec(doc);
}

// Family-specific sufficient conditions from the universality statements;
// failures are flagged, never turned into a non-universality claim.
std::vector<std::pair<std::string, bool>> sufficient_conditions(const qlie::ProblemSpec& spec) {
  std::vector<std::pair<std::string, bool>> out;
  const auto& c = spec.coefficients;
  auto nz = [](const qlie::Rational& r) { return !r.is_zero(); };
  switch (spec.family) {
    case qlie::Family::Chain: {
      const auto &wA = c.at("wA"), &wB = c.at("wB"), &gAB = c.at("gAB"), &gBA = c.at("gBA");
      out.emplace_back("n odd", spec.n % 2 == 1);
      out.emplace_back("wA^2 != wB^2", !(wA * wA == wB * wB));
      out.emplace_back("gAB != 0", nz(gAB));
      out.emplace_back("gBA != 0", nz(gBA));
      out.emplace_back("gAB^2 != gBA^2", !(gAB * gAB == gBA * gBA));
      out.emplace_back("gAB^2 != 4*gBA^2", !(gAB * gAB == qlie::Rational(4) * gBA * gBA));
      break;
    }
    case qlie::Family::Hyperchain:
      out.emplace_back("gamma != 0", nz(c.at("gamma")));
      out.emplace_back("delta != 0", nz(c.at("delta")));
      break;
    default:
      break;
  }
  return out;
}

struct ClosureRun {
  qlie::ClosureReport report;
  std::optional<qlie::LieBasis<qlie::Rational>> exact_basis;
  std::optional<qlie::LieBasis<double>> float_basis;
};

ClosureRun run_closure(const qlie::ProblemSpec& spec, const RunConfig& cfg) {
  auto built = spec.build();
  ClosureRun run;
  if (cfg.mode == "exact") {
    auto [basis, report] = qlie::lie_closure<qlie::Rational>({built.hz, built.hx}, closure_options(cfg));
    run.report = report;
    run.exact_basis = std::move(basis);
  } else {
    auto [basis, report] =
        qlie::lie_closure<double>({qlie::to_float(built.hz), qlie::to_float(built.hx)}, closure_options(cfg));
    run.report = report;
    run.float_basis = std::move(basis);
  }
  return run;
}

ordered_json coefficients_json(const qlie::ProblemSpec& spec) {
  ordered_json coeffs;
  for (const auto& [name, value] : spec.coefficients.values) coeffs[name] = value.str();
  return coeffs;
}

int cmd_closure(RunConfig& cfg) {
  validate_common(cfg);
  auto doc = load_spec_doc(cfg.spec_path);
  qlie::ProblemSpec spec = parse_with_seed(doc, cfg.seed_given ? std::optional(cfg.seed) : std::nullopt);

  std::vector<std::uint64_t> seeds;
  std::vector<std::size_t> dims;
  ClosureRun primary;
  for (int k = 0; k < cfg.stability; ++k) {
    std::uint64_t seed = spec.seed + static_cast<std::uint64_t>(k);
    qlie::ProblemSpec s = parse_with_seed(doc, seed);
    ClosureRun run = run_closure(s, cfg);
    seeds.push_back(seed);
    dims.push_back(run.report.dimension);
    if (k == 0) primary = std::move(run);
  }
  bool stable = std::all_of(dims.begin(), dims.end(), [&](std::size_t d) { return d == dims.front(); });

  auto built = spec.build();
  qlie::SymmetrySearchResult symmetry;
  if (!primary.report.universal && spec.n <= 10) {
    symmetry = qlie::detect_permutation_symmetries(built.hz, built.hx);
  }

  ordered_json rep;
  rep["n"] = primary.report.n;
  rep["dimension"] = primary.report.dimension;
  rep["ambient"] = "4^n-1";
  rep["ambient_value"] = qlie::ambient_dimension(primary.report.n);
  rep["universal"] = primary.report.universal;
  rep["early_exit"] = primary.report.early_exit;
  rep["brackets"] = primary.report.bracket_count;
  rep["rounds"] = primary.report.rounds;
  rep["mode"] = cfg.mode;
  rep["seeds"] = seeds;
  if (cfg.stability > 1) {
    rep["stability"] = {{"dimensions", dims}, {"agree", stable}};
  }
  ordered_json syms = ordered_json::array();
  for (const auto& cert : symmetry.certificates) syms.push_back(cert.pi.cycles());
  rep["symmetries"] = syms;
  rep["certified_non_universal"] = !symmetry.certificates.empty();
  ordered_json conds = ordered_json::array();
  bool all_conditions = true;
  for (const auto& [name, holds] : sufficient_conditions(spec)) {
    conds.push_back({{"condition", name}, {"holds", holds}});
    all_conditions = all_conditions && holds;
  }
  rep["sufficient_conditions"] = conds;
  rep["sufficient_conditions_hold"] = all_conditions;
  rep["coefficients"] = coefficients_json(spec);
  rep["wall_ms"] = primary.report.wall_ms;

  std::ostringstream text;
  text << "n = " << primary.report.n << ", dimension = " << primary.report.dimension << " / "
       << qlie::ambient_dimension(primary.report.n) << " (4^n-1)\n"
       << "universal: " << (primary.report.universal ? "yes" : "no")
       << (primary.report.early_exit ? " (early exit)" : "") << "\n";
  if (!all_conditions) {
    text << "note: sufficient conditions for this family's universality statement do not all hold;\n"
         << "      the computed dimension stands on its own and no non-universality is claimed.\n";
  }
  for (const auto& cert : symmetry.certificates) {
    text << "symmetry certificate: " << cert.pi.cycles() << " (certifies non-universality)\n";
  }
  if (cfg.stability > 1) {
    text << "stability over " << cfg.stability << " seeds: " << (stable ? "agree" : "DISAGREE") << "\n";
  }
  text << "brackets: " << primary.report.bracket_count << ", wall: " << primary.report.wall_ms << " ms\n";
  emit(cfg, rep, text.str());
  return kExitOk;
}

int cmd_member(RunConfig& cfg, const std::string& target_text) {
  validate_common(cfg);
  auto doc = load_spec_doc(cfg.spec_path);
  qlie::ProblemSpec spec = parse_with_seed(doc, cfg.seed_given ? std::optional(cfg.seed) : std::nullopt);
  auto built = spec.build();
  qlie::Operator target = qlie::parse_operator(static_cast<std::uint32_t>(spec.n), target_text);

  ordered_json rep;
  rep["target"] = qlie::render_operator(target);
  std::ostringstream text;
  if (cfg.mode == "exact") {
    auto [basis, report] = qlie::lie_closure<qlie::Rational>({built.hz, built.hx}, closure_options(cfg));
    auto m = qlie::membership(basis, target);
    rep["member"] = m.member;
    rep["dimension"] = report.dimension;
    ordered_json expansion = ordered_json::array();
    for (const auto& [pivot, coeff] : m.expansion) {
      expansion.push_back({{"pivot", pivot.str()}, {"coeff", coeff.str()}});
    }
    rep["expansion"] = expansion;
    text << "member: " << (m.member ? "yes" : "no") << " (dimension " << report.dimension << ")\n";
  } else {
    auto [basis, report] =
        qlie::lie_closure<double>({qlie::to_float(built.hz), qlie::to_float(built.hx)}, closure_options(cfg));
    auto m = qlie::membership(basis, qlie::to_float(target));
    rep["member"] = m.member;
    rep["dimension"] = report.dimension;
    ordered_json expansion = ordered_json::array();
    for (const auto& [pivot, coeff] : m.expansion) {
      expansion.push_back({{"pivot", pivot.str()}, {"coeff", coeff}});
    }
    rep["expansion"] = expansion;
    text << "member: " << (m.member ? "yes" : "no") << " (dimension " << report.dimension << ")\n";
  }
  emit(cfg, rep, text.str());
  return kExitOk;
}

qlie::GraphSpec graph_for_spec(const qlie::ProblemSpec& spec) {
  if (spec.graph) return *spec.graph;
  qlie::GraphSpec g;
  g.num_vertices = spec.n;
  if (spec.family == qlie::Family::Chain) {
    for (int v = 1; v < spec.n; ++v) g.edges.push_back({v, v + 1, ""});
    return g;
  }
  if (spec.family == qlie::Family::Hyperchain) {
    g.hyperedges.push_back({1, 2});
    for (int k = 1; k <= spec.n - 2; ++k) g.hyperedges.push_back({k, k + 1, k + 2});
    return g;
  }
  throw qlie::InputError("this family carries no graph for forcing");
}

std::set<int> parse_vertex_set(const std::string& text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.insert(std::stoi(item));
  }
  return out;
}

std::set<std::pair<int, int>> parse_edge_set(const std::string& text) {
  std::set<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto dash = item.find('-');
    if (dash == std::string::npos) throw qlie::InputError("2-edge list entries look like u-v");
    int u = std::stoi(item.substr(0, dash));
    int v = std::stoi(item.substr(dash + 1));
    out.insert({std::min(u, v), std::max(u, v)});
  }
  return out;
}

qlie::ForcingMode infer_mode(const qlie::GraphSpec& g, const std::string& rule) {
  if (!rule.empty()) return qlie::forcing_mode_from_name(rule);
  if (!g.hyperedges.empty()) return qlie::ForcingMode::Hyper;
  for (const auto& e : g.edges) {
    if (!e.type.empty()) return qlie::ForcingMode::Generalized;
  }
  return qlie::ForcingMode::Basic;
}

int cmd_force(RunConfig& cfg, const std::string& set_text, const std::string& set2_text,
              const std::string& rule) {
  validate_common(cfg);
  auto doc = load_spec_doc(cfg.spec_path);
  qlie::ProblemSpec spec = parse_with_seed(doc, cfg.seed_given ? std::optional(cfg.seed) : std::nullopt);
  qlie::GraphSpec g = graph_for_spec(spec);
  std::set<int> s = set_text.empty() ? g.infected_vertices : parse_vertex_set(set_text);
  std::set<std::pair<int, int>> s2 = set2_text.empty() ? g.infected_2edges : parse_edge_set(set2_text);
  qlie::ForcingMode mode = infer_mode(g, rule);

  qlie::ForcingState state;
  switch (mode) {
    case qlie::ForcingMode::Basic:
      state = qlie::zero_forcing_run(g, s);
      break;
    case qlie::ForcingMode::Generalized:
      state = qlie::generalized_forcing_run(g, s);
      break;
    case qlie::ForcingMode::Hyper:
      state = qlie::hyper_forcing_run(g, s, s2);
      break;
  }
  bool forcing = state.all_infected(g);
  ordered_json rep;
  rep["mode"] = qlie::forcing_mode_name(mode);
  rep["initial"] = std::vector<int>(s.begin(), s.end());
  rep["forcing"] = forcing;
  rep["trace"] = qlie::trace_to_json(state);
  std::ostringstream text;
  text << "mode: " << qlie::forcing_mode_name(mode) << "\nforcing: " << (forcing ? "true" : "false")
       << "\ninfected " << state.infected.size() << " of " << g.num_vertices << " vertices in "
       << state.trace.size() << " steps\n";
  emit(cfg, rep, text.str());
  return kExitOk;
}

int cmd_force_search(RunConfig& cfg, int max_size, const std::string& rule) {
  validate_common(cfg);
  auto doc = load_spec_doc(cfg.spec_path);
  qlie::ProblemSpec spec = parse_with_seed(doc, cfg.seed_given ? std::optional(cfg.seed) : std::nullopt);
  qlie::GraphSpec g = graph_for_spec(spec);
  qlie::ForcingMode mode = infer_mode(g, rule);
  auto minima = qlie::minimal_forcing_search(g, mode, max_size);
  ordered_json rep;
  rep["mode"] = qlie::forcing_mode_name(mode);
  rep["minimum_size"] = minima.empty() ? -1 : static_cast<int>(minima.front().size());
  ordered_json sets = ordered_json::array();
  for (const auto& s : minima) sets.push_back(std::vector<int>(s.begin(), s.end()));
  rep["sets"] = sets;
  std::ostringstream text;
  if (minima.empty()) {
    text << "no forcing set within the size bound\n";
  } else {
    text << "minimum forcing sets (size " << minima.front().size() << "):\n";
    for (const auto& s : minima) {
      text << "  {";
      bool first = true;
      for (int v : s) {
        text << (first ? "" : ", ") << v;
        first = false;
      }
      text << "}\n";
    }
  }
  emit(cfg, rep, text.str());
  return kExitOk;
}

int cmd_symmetry(RunConfig& cfg) {
  validate_common(cfg);
  auto doc = load_spec_doc(cfg.spec_path);
  qlie::ProblemSpec spec = parse_with_seed(doc, cfg.seed_given ? std::optional(cfg.seed) : std::nullopt);
  auto built = spec.build();
  auto result = qlie::detect_permutation_symmetries(built.hz, built.hx);
  ordered_json rep;
  ordered_json syms = ordered_json::array();
  for (const auto& cert : result.certificates) syms.push_back(cert.pi.cycles());
  rep["symmetries"] = syms;
  rep["complete"] = result.complete;
  std::ostringstream text;
  if (result.certificates.empty()) {
    text << "no nontrivial permutation symmetry found"
         << (result.complete ? "" : " (search incomplete: budget)") << "\n";
  } else {
    for (const auto& cert : result.certificates) text << "symmetry: " << cert.pi.cycles() << "\n";
    if (!result.complete) text << "(search incomplete: budget)\n";
  }
  emit(cfg, rep, text.str());
  return kExitOk;
}

ordered_json case_to_json(const qlie::IdentityCase& c) {
  ordered_json out;
  out["name"] = c.name;
  out["params"] = c.params;
  if (c.skipped()) {
    out["status"] = "skipped";
    out["reason"] = c.skip_reason;
    return out;
  }
  out["status"] = c.passed() ? "pass" : "fail";
  if (const auto* f = c.first_failure()) {
    out["failing_step"] = f->name;
    out["diff"] = f->detail;
  }
  ordered_json checks = ordered_json::array();
  for (const auto& ch : c.checks) {
    ordered_json cj;
    cj["name"] = ch.name;
    cj["status"] = qlie::identity_status_name(ch.status);
    if (!ch.detail.empty()) cj["detail"] = ch.detail;
    checks.push_back(cj);
  }
  out["checks"] = checks;
  return out;
}

int cmd_verify(RunConfig& cfg, const std::string& which, int n, int k, int side) {
  validate_common(cfg);
  std::vector<qlie::IdentityCase> cases;
  bool all_ok = true;
  ordered_json rep;
  if (which == "all") {
    auto report = qlie::run_all(cfg.seed);
    cases = report.cases;
    all_ok = report.all_pass;
    rep["negative_controls"] = {{"total", report.negative_controls_total},
                                {"failed_as_expected", report.negative_controls_failed_as_expected}};
  } else {
    auto chain = qlie::sample_generic_coefficients(
        {"wA", "wB", "gAB", "gBA"}, cfg.seed,
        {qlie::Constraint::Nonzero, qlie::Constraint::DistinctSquares, qlie::Constraint::AvoidGammaDegenerate});
    if (which == "lemma1") {
      cases.push_back(qlie::verify_lemma_decouple(n, chain));
    } else if (which == "prop2") {
      cases.push_back(qlie::verify_even_odd(n, chain));
    } else if (which == "appendixA") {
      cases.push_back(qlie::verify_sep_generators(n, chain));
    } else if (which == "lemma4") {
      cases.push_back(qlie::verify_separation_X(n, k > 0 ? k : n, chain));
    } else if (which == "cnot") {
      cases.push_back(qlie::verify_cnot_identity());
    } else if (which == "grid") {
      auto coeffs = qlie::sample_generic_coefficients({"wA", "wB", "wC", "gA", "gB", "gC"}, cfg.seed,
                                                      {qlie::Constraint::Nonzero});
      cases.push_back(qlie::verify_grid_recursion(side, coeffs));
    } else if (which == "hyper") {
      auto coeffs = qlie::sample_generic_coefficients({"delta", "gamma", "w1", "w"}, cfg.seed,
                                                      {qlie::Constraint::Nonzero});
      cases.push_back(qlie::verify_hyper_step(n, coeffs));
    } else {
      throw qlie::InputError("unknown verify case '" + which +
                             "' (expected all|lemma1|prop2|appendixA|lemma4|cnot|grid|hyper)");
    }
    for (const auto& c : cases) {
      if (c.skipped() || !c.passed()) all_ok = false;
    }
  }

  ordered_json jcases = ordered_json::array();
  std::ostringstream text;
  for (const auto& c : cases) {
    jcases.push_back(case_to_json(c));
    std::string status = c.skipped() ? ("skipped (" + c.skip_reason + ")")
                                     : (c.passed() ? "pass" : "FAIL");
    text << c.name;
    for (const auto& [key, value] : c.params) text << " " << key << "=" << value;
    text << ": " << status << "\n";
    if (!c.skipped() && !c.passed()) {
      const auto* f = c.first_failure();
      text << "    failing step: " << f->name << "\n    " << f->detail << "\n";
    }
  }
  rep["cases"] = jcases;
  rep["all_pass"] = all_ok;
  text << (all_ok ? "all identities hold\n" : "NOT all identities hold\n");
  emit(cfg, rep, text.str());
  return kExitOk;
}

int cmd_report(RunConfig& cfg) {
  validate_common(cfg);
  auto doc = load_spec_doc(cfg.spec_path);
  qlie::ProblemSpec spec = parse_with_seed(doc, cfg.seed_given ? std::optional(cfg.seed) : std::nullopt);
  auto built = spec.build();

  ordered_json rep;
  rep["spec"] = ordered_json::parse(qlie::serialize(spec).dump());

  ClosureRun run = run_closure(spec, cfg);
  rep["closure"]["dimension"] = run.report.dimension;
  rep["closure"]["universal"] = run.report.universal;
  rep["closure"]["early_exit"] = run.report.early_exit;
  rep["closure"]["brackets"] = run.report.bracket_count;
  if (spec.n <= 3 && spec.n <= static_cast<int>(cfg.max_dense)) {
    rep["closure"]["dense_oracle_dimension"] = qlie::dense_closure_oracle({built.hz, built.hx});
  }

  auto symmetry = qlie::detect_permutation_symmetries(built.hz, built.hx);
  ordered_json syms = ordered_json::array();
  for (const auto& cert : symmetry.certificates) syms.push_back(cert.pi.cycles());
  rep["symmetry"] = {{"certificates", syms}, {"complete", symmetry.complete}};

  bool has_graph = spec.graph.has_value() || spec.family == qlie::Family::Chain ||
                   spec.family == qlie::Family::Hyperchain;
  if (has_graph) {
    qlie::GraphSpec g = graph_for_spec(spec);
    if (!g.infected_vertices.empty() || !g.hyperedges.empty() || !g.edges.empty()) {
      qlie::ForcingMode mode = infer_mode(g, "");
      std::optional<std::set<std::pair<int, int>>> s2;
      if (mode == qlie::ForcingMode::Hyper) s2 = g.infected_2edges;
      bool forcing = qlie::is_forcing_set(g, g.infected_vertices, s2, mode);
      rep["forcing"] = {{"mode", qlie::forcing_mode_name(mode)}, {"forcing", forcing}};
    }
  }
  ordered_json conds = ordered_json::array();
  for (const auto& [name, holds] : sufficient_conditions(spec)) {
    conds.push_back({{"condition", name}, {"holds", holds}});
  }
  rep["sufficient_conditions"] = conds;

  std::ostringstream text;
  text << "dimension " << run.report.dimension << " / " << qlie::ambient_dimension(spec.n)
       << (run.report.universal ? " universal" : " not full") << "\n";
  emit(cfg, rep, text.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie-algebra universality toolkit for alternating-operator Hamiltonian pairs"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string target_text, set_text, set2_text, rule, which = "all";
  int max_size = -1, n = 3, k = -1, side = 2;

  auto* closure = app.add_subcommand("closure", "compute the generated Lie algebra and its dimension");
  add_common_options(closure, cfg);

  auto* member = app.add_subcommand("member", "test membership of an operator in the closure");
  add_common_options(member, cfg);
  member->add_option("--target", target_text, "operator text, e.g. \"Z1*Z2\"")->required();

  auto* force = app.add_subcommand("force", "run an infection process on the problem's graph");
  add_common_options(force, cfg);
  force->get_option("--spec")->required(false);
  force->add_option("--graph", cfg.spec_path, "problem file carrying the graph");
  force->add_option("--set", set_text, "initial infected vertices, e.g. 1,2");
  force->add_option("--set2", set2_text, "initial infected 2-edges, e.g. 1-2,3-4");
  force->add_option("--rule", rule, "forcing rule: basic|generalized|hyper (default: inferred)");

  auto* search = app.add_subcommand("force-search", "enumerate minimum forcing sets");
  add_common_options(search, cfg);
  search->get_option("--spec")->required(false);
  search->add_option("--graph", cfg.spec_path, "problem file carrying the graph");
  search->add_option("--max-size", max_size, "largest set size to try");
  search->add_option("--rule", rule, "forcing rule: basic|generalized|hyper (default: inferred)");

  auto* symmetry = app.add_subcommand("symmetry", "find qubit permutations fixing both Hamiltonians");
  add_common_options(symmetry, cfg);

  auto* verify = app.add_subcommand("verify", "replay the constructive derivations as exact identities");
  add_common_options(verify, cfg, false);
  verify->add_option("--case", which, "all|lemma1|prop2|appendixA|lemma4|cnot|grid|hyper");
  verify->add_option("--n", n, "chain length for the chain cases");
  verify->add_option("--k", k, "ladder target for the X-separation case");
  verify->add_option("--side", side, "grid side for the grid case");

  auto* report = app.add_subcommand("report", "aggregate closure, symmetry and forcing report");
  add_common_options(report, cfg);

  CLI11_PARSE(app, argc, argv);

  try {
    if (closure->parsed()) return cmd_closure(cfg);
    if (member->parsed()) return cmd_member(cfg, target_text);
    if (force->parsed()) {
      if (cfg.spec_path.empty()) throw qlie::InputError("force requires --graph (or --spec)");
      return cmd_force(cfg, set_text, set2_text, rule);
    }
    if (search->parsed()) {
      if (cfg.spec_path.empty()) throw qlie::InputError("force-search requires --graph (or --spec)");
      return cmd_force_search(cfg, max_size, rule);
    }
    if (symmetry->parsed()) return cmd_symmetry(cfg);
    if (verify->parsed()) return cmd_verify(cfg, which, n, k, side);
    if (report->parsed()) return cmd_report(cfg);
  } catch (const qlie::OverflowGuard& e) {
    std::cerr << "error (resource guard): " << e.what() << "\n";
    return kExitResource;
  } catch (const qlie::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
