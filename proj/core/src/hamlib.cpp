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

#include "qlie/hamlib.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using nlohmann::json;

namespace qlie {

void GraphSpec::validate() const {
  if (num_vertices < 0) throw InputError("graph: negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    if (e.u == e.v) {
      throw InputError("graph: loop edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    if (e.u < 1 || e.u > num_vertices || e.v < 1 || e.v > num_vertices) {
      throw InputError("graph: edge endpoint outside declared vertices: (" + std::to_string(e.u) +
                       "," + std::to_string(e.v) + ")");
    }
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) {
      throw InputError("graph: duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
  }
  for (const auto& h : hyperedges) {
    if (h.empty()) throw InputError("graph: empty hyperedge");
    std::set<int> mem(h.begin(), h.end());
    if (mem.size() != h.size()) throw InputError("graph: hyperedge repeats a vertex");
    for (int v : h) {
      if (v < 1 || v > num_vertices) throw InputError("graph: hyperedge member outside declared vertices");
    }
  }
  for (int v : infected_vertices) {
    if (v < 1 || v > num_vertices) throw InputError("graph: infected vertex " + std::to_string(v) + " not declared");
  }
  for (const auto& [u, v] : infected_2edges) {
    if (u < 1 || u > num_vertices || v < 1 || v > num_vertices) {
      throw InputError("graph: infected 2-edge endpoint not declared");
    }
    if (u == v) throw InputError("graph: infected 2-edge is a loop");
  }
}

std::vector<int> GraphSpec::neighbours(int v) const {
  std::vector<int> out;
  for (const auto& e : edges) {
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> GraphSpec::neighbours_in_type(int v, const std::string& type) const {
  std::vector<int> out;
  for (const auto& e : edges) {
    if (e.type != type) continue;
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> GraphSpec::edge_types() const {
  std::vector<std::string> out;
  for (const auto& e : edges) {
    if (std::find(out.begin(), out.end(), e.type) == out.end()) out.push_back(e.type);
  }
  return out;
}

bool GraphSpec::has_edge(int u, int v) const {
  for (const auto& e : edges) {
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
  }
  return false;
}

const Rational& CoefficientAssignment::at(const std::string& name) const {
  auto it = values.find(name);
  if (it == values.end()) throw InputError("missing coefficient symbol '" + name + "'");
  return it->second;
}

void CoefficientAssignment::set(const std::string& name, Rational v, Provenance p) {
  values[name] = std::move(v);
  provenance[name] = p;
}

namespace {

Rational draw_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(2, 1000000);
  long num = dist(rng);
  long den = dist(rng);
  return Rational(num, den);
}

bool constraints_hold(const CoefficientAssignment& a, const std::vector<std::string>& symbols,
                      const std::vector<Constraint>& constraints) {
  for (Constraint c : constraints) {
    switch (c) {
      case Constraint::Nonzero:
        for (const auto& s : symbols) {
          if (a.at(s).is_zero()) return false;
        }
        break;
      case Constraint::DistinctSquares:
        for (std::size_t i = 0; i < symbols.size(); ++i) {
          for (std::size_t j = i + 1; j < symbols.size(); ++j) {
            const Rational& x = a.at(symbols[i]);
            const Rational& y = a.at(symbols[j]);
            if (x * x == y * y) return false;
          }
        }
        break;
      case Constraint::AvoidGammaDegenerate: {
        if (!a.has("gAB") || !a.has("gBA")) return false;
        const Rational& p = a.at("gAB");
        const Rational& q = a.at("gBA");
        if (p.is_zero() || q.is_zero()) return false;
        if (p * p == Rational(4) * (q * q)) return false;
        if (p * p == q * q) return false;
        break;
      }
    }
  }
  return true;
}

}  // namespace

CoefficientAssignment sample_generic_coefficients(const std::vector<std::string>& symbols,
                                                  std::uint64_t seed,
                                                  const std::vector<Constraint>& constraints) {
  std::vector<std::string> ordered = symbols;
  std::sort(ordered.begin(), ordered.end());
  std::mt19937_64 rng(seed);
  constexpr int kMaxRetries = 100;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    CoefficientAssignment out;
    out.seed = seed;
    for (const auto& s : ordered) out.set(s, draw_rational(rng), Provenance::Sampled);
    if (constraints_hold(out, ordered, constraints)) return out;
  }
  throw InputError("coefficient sampling could not satisfy the constraint set");
}

namespace {

Operator zsum(std::uint32_t n, const std::vector<int>& sites) {
  std::vector<Operator::Term> t;
  for (int s : sites) t.emplace_back(PauliString::single(n, s, 'Z'), Rational(1));
  return Operator::from_terms(n, std::move(t));
}

Operator xsum(std::uint32_t n, const std::vector<int>& sites) {
  std::vector<Operator::Term> t;
  for (int s : sites) t.emplace_back(PauliString::single(n, s, 'X'), Rational(1));
  return Operator::from_terms(n, std::move(t));
}

PauliString zz(std::uint32_t n, int a, int b) {
  std::uint64_t m = (1ULL << (a - 1)) | (1ULL << (b - 1));
  return PauliString::from_masks(n, 0, m);
}

Operator full_mixer(std::uint32_t n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  return xsum(n, all);
}

}  // namespace

ChainOperators build_chain(int n, const CoefficientAssignment& coeffs) {
  if (n < 2) throw InputError("chain requires n >= 2");
  const Rational& wA = coeffs.at("wA");
  const Rational& wB = coeffs.at("wB");
  const Rational& gAB = coeffs.at("gAB");
  const Rational& gBA = coeffs.at("gBA");
  bool even = n % 2 == 0;
  ChainOperators out;
  std::uint32_t un = static_cast<std::uint32_t>(n);

  std::vector<int> a_sites, b_sites;
  int a_top = even ? n / 2 : (n - 1) / 2;
  for (int j = 1; j <= a_top; ++j) a_sites.push_back(2 * j);
  int b_top = even ? n / 2 - 1 : (n - 1) / 2;
  for (int j = 0; j <= b_top; ++j) b_sites.push_back(2 * j + 1);
  out.h_a = zsum(un, a_sites);
  out.h_b = zsum(un, b_sites);
  out.x_even = xsum(un, a_sites);
  out.x_odd = xsum(un, b_sites);

  std::vector<Operator::Term> ab, ba;
  int ab_top = even ? n / 2 - 1 : (n - 1) / 2;
  for (int j = 1; j <= ab_top; ++j) ab.emplace_back(zz(un, 2 * j, 2 * j + 1), Rational(1));
  int ba_top = even ? n / 2 - 1 : (n - 3) / 2;
  for (int j = 0; j <= ba_top; ++j) ba.emplace_back(zz(un, 2 * j + 1, 2 * j + 2), Rational(1));
  out.h_ab = Operator::from_terms(un, std::move(ab));
  out.h_ba = Operator::from_terms(un, std::move(ba));

  out.hz = linear_combine<Rational>({{wA, out.h_a}, {wB, out.h_b}, {gAB, out.h_ab}, {gBA, out.h_ba}});
  out.hx = full_mixer(un);
  return out;
}

std::pair<Operator, Operator> build_graph_hamiltonian(const GraphSpec& g,
                                                      const CoefficientAssignment& coeffs) {
  g.validate();
  if (g.num_vertices < 1) throw InputError("graph hamiltonian requires at least one vertex");
  std::uint32_t n = static_cast<std::uint32_t>(g.num_vertices);
  auto types = g.edge_types();
  bool multitype = types.size() > 1 || (types.size() == 1 && !types.front().empty());
  std::vector<Operator::Term> terms;
  for (const auto& e : g.edges) {
    const Rational& gamma = multitype ? coeffs.at("gamma_" + e.type) : coeffs.at("gamma");
    terms.emplace_back(zz(n, e.u, e.v), gamma);
  }
  for (int v = 1; v <= g.num_vertices; ++v) {
    if (g.infected_vertices.count(v)) {
      terms.emplace_back(PauliString::single(n, v, 'Z'), coeffs.at("w" + std::to_string(v)));
    } else {
      terms.emplace_back(PauliString::single(n, v, 'Z'), coeffs.at("w"));
    }
  }
  return {Operator::from_terms(n, std::move(terms)), full_mixer(n)};
}

std::pair<Operator, Operator> build_hyperchain(int n, const CoefficientAssignment& coeffs) {
  if (n < 3) throw InputError("hyperchain requires n >= 3");
  std::uint32_t un = static_cast<std::uint32_t>(n);
  const Rational& delta = coeffs.at("delta");
  const Rational& gamma = coeffs.at("gamma");
  const Rational& w1 = coeffs.at("w1");
  const Rational& w = coeffs.at("w");
  std::vector<Operator::Term> terms;
  for (int k = 1; k <= n - 2; ++k) {
    std::uint64_t m = (1ULL << (k - 1)) | (1ULL << k) | (1ULL << (k + 1));
    terms.emplace_back(PauliString::from_masks(un, 0, m), delta);
  }
  terms.emplace_back(zz(un, 1, 2), gamma);
  terms.emplace_back(PauliString::single(un, 1, 'Z'), w1);
  for (int i = 2; i <= n; ++i) terms.emplace_back(PauliString::single(un, i, 'Z'), w);
  return {Operator::from_terms(un, std::move(terms)), full_mixer(un)};
}

namespace {

GraphSpec grid_graph(int side) {
  if (side < 2) throw InputError("grid requires side >= 2");
  int N = side * side;
  GraphSpec g;
  g.num_vertices = N + 2;
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      int v = r * side + c + 1;
      if (c + 1 < side) g.edges.push_back({v, v + 1, "A"});
      if (r + 1 < side) g.edges.push_back({v, v + side, "A"});
    }
  }
  g.edges.push_back({1, N + 1, "B"});
  g.edges.push_back({side, N + 2, "C"});
  g.validate();
  return g;
}

}  // namespace

ProblemSpec build_grid(int side, const CoefficientAssignment& coeffs) {
  ProblemSpec spec;
  spec.family = Family::Grid;
  spec.side = side;
  spec.n = side * side + 2;
  spec.graph = grid_graph(side);
  spec.coefficients = coeffs;
  for (const auto& sym : {"wA", "wB", "wC", "gA", "gB", "gC"}) spec.coefficients.at(sym);
  return spec;
}

namespace {

ProblemSpec::Hamiltonians build_grid_hamiltonians(const ProblemSpec& spec) {
  const auto& g = *spec.graph;
  int N = spec.side * spec.side;
  std::uint32_t n = static_cast<std::uint32_t>(spec.n);
  const auto& c = spec.coefficients;
  std::vector<Operator::Term> terms;
  for (int i = 1; i <= N; ++i) terms.emplace_back(PauliString::single(n, i, 'Z'), c.at("wA"));
  terms.emplace_back(PauliString::single(n, N + 1, 'Z'), c.at("wB"));
  terms.emplace_back(PauliString::single(n, N + 2, 'Z'), c.at("wC"));
  for (const auto& e : g.edges) {
    const Rational& gamma = e.type == "A" ? c.at("gA") : (e.type == "B" ? c.at("gB") : c.at("gC"));
    terms.emplace_back(zz(n, e.u, e.v), gamma);
  }
  return {Operator::from_terms(n, std::move(terms)), full_mixer(n)};
}

}  // namespace

std::vector<std::string> ProblemSpec::required_symbols() const {
  switch (family) {
    case Family::Chain:
      return {"wA", "wB", "gAB", "gBA"};
    case Family::Grid:
      return {"wA", "wB", "wC", "gA", "gB", "gC"};
    case Family::Hyperchain:
      return {"delta", "gamma", "w1", "w"};
    case Family::Graph:
    case Family::MultitypeGraph: {
      std::vector<std::string> out;
      if (!graph) return out;
      auto types = graph->edge_types();
      bool multitype = family == Family::MultitypeGraph;
      if (multitype) {
        for (const auto& t : types) out.push_back("gamma_" + t);
      } else if (!graph->edges.empty()) {
        out.push_back("gamma");
      }
      for (int v : graph->infected_vertices) out.push_back("w" + std::to_string(v));
      if (static_cast<int>(graph->infected_vertices.size()) < graph->num_vertices) out.push_back("w");
      return out;
    }
    case Family::Custom:
      return {};
  }
  return {};
}

ProblemSpec::Hamiltonians ProblemSpec::build() const {
  switch (family) {
    case Family::Chain: {
      auto ops = build_chain(n, coefficients);
      return {ops.hz, ops.hx};
    }
    case Family::Graph:
    case Family::MultitypeGraph: {
      if (!graph) throw InputError("graph family requires a graph section");
      auto [hz, hx] = build_graph_hamiltonian(*graph, coefficients);
      return {hz, hx};
    }
    case Family::Grid:
      return build_grid_hamiltonians(*this);
    case Family::Hyperchain: {
      auto [hz, hx] = build_hyperchain(n, coefficients);
      return {hz, hx};
    }
    case Family::Custom: {
      std::uint32_t un = static_cast<std::uint32_t>(n);
      std::vector<Operator::Term> terms;
      for (const auto& t : custom_terms) {
        std::uint64_t m = 0;
        for (int q : t.qubits) m |= 1ULL << (q - 1);
        terms.emplace_back(PauliString::from_masks(un, 0, m), t.coeff);
      }
      return {Operator::from_terms(un, std::move(terms)), full_mixer(un)};
    }
  }
  throw InputError("unknown family");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Chain: return "chain";
    case Family::Graph: return "graph";
    case Family::MultitypeGraph: return "multitype-graph";
    case Family::Grid: return "grid";
    case Family::Hyperchain: return "hyperchain";
    case Family::Custom: return "custom";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "chain") return Family::Chain;
  if (name == "graph") return Family::Graph;
  if (name == "multitype-graph") return Family::MultitypeGraph;
  if (name == "grid") return Family::Grid;
  if (name == "hyperchain") return Family::Hyperchain;
  if (name == "custom") return Family::Custom;
  throw InputError("unknown family '" + name + "'");
}

namespace {

[[noreturn]] void fail_at(const std::string& path, const std::string& message) {
  throw InputError(path + ": " + message);
}

void require_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) fail_at(path + "/" + it.key(), "unknown field");
  }
}

int get_int(const json& obj, const std::string& path, const std::string& key) {
  if (!obj.contains(key)) fail_at(path + "/" + key, "missing required field");
  if (!obj[key].is_number_integer()) fail_at(path + "/" + key, "expected an integer");
  return obj[key].get<int>();
}

GraphSpec parse_graph(const json& doc, const std::string& path, int num_vertices) {
  GraphSpec g;
  require_keys(doc, path, {"vertices", "edges", "hyperedges", "infected_vertices", "infected_2edges"});
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array()) fail_at(path + "/vertices", "expected an array");
    std::set<int> vs;
    for (const auto& v : doc["vertices"]) {
      if (!v.is_number_integer()) fail_at(path + "/vertices", "expected integer labels");
      vs.insert(v.get<int>());
    }
    g.num_vertices = static_cast<int>(vs.size());
    int expect = 1;
    for (int v : vs) {
      if (v != expect++) fail_at(path + "/vertices", "labels must be exactly 1..n");
    }
  } else {
    g.num_vertices = num_vertices;
  }
  if (g.num_vertices <= 0) fail_at(path, "graph has no vertices (give \"vertices\" or top-level \"n\")");
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) fail_at(path + "/edges", "expected an array");
    int idx = 0;
    for (const auto& e : doc["edges"]) {
      std::string epath = path + "/edges/" + std::to_string(idx++);
      if (!e.is_array() || e.size() < 2 || e.size() > 3) fail_at(epath, "expected [u, v] or [u, v, \"type\"]");
      if (!e[0].is_number_integer() || !e[1].is_number_integer()) fail_at(epath, "endpoints must be integers");
      GraphSpec::Edge edge{e[0].get<int>(), e[1].get<int>(), ""};
      if (e.size() == 3) {
        if (!e[2].is_string()) fail_at(epath + "/2", "edge type must be a string");
        edge.type = e[2].get<std::string>();
      }
      g.edges.push_back(std::move(edge));
    }
  }
  if (doc.contains("hyperedges")) {
    if (!doc["hyperedges"].is_array()) fail_at(path + "/hyperedges", "expected an array");
    int idx = 0;
    for (const auto& h : doc["hyperedges"]) {
      std::string hpath = path + "/hyperedges/" + std::to_string(idx++);
      if (!h.is_array() || h.empty()) fail_at(hpath, "expected a nonempty vertex array");
      std::vector<int> mem;
      for (const auto& v : h) {
        if (!v.is_number_integer()) fail_at(hpath, "hyperedge members must be integers");
        mem.push_back(v.get<int>());
      }
      std::sort(mem.begin(), mem.end());
      g.hyperedges.push_back(std::move(mem));
    }
  }
  if (doc.contains("infected_vertices")) {
    if (!doc["infected_vertices"].is_array()) fail_at(path + "/infected_vertices", "expected an array");
    for (const auto& v : doc["infected_vertices"]) {
      if (!v.is_number_integer()) fail_at(path + "/infected_vertices", "expected integers");
      g.infected_vertices.insert(v.get<int>());
    }
  }
  if (doc.contains("infected_2edges")) {
    if (!doc["infected_2edges"].is_array()) fail_at(path + "/infected_2edges", "expected an array");
    for (const auto& e : doc["infected_2edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        fail_at(path + "/infected_2edges", "expected [u, v] pairs");
      }
      int u = e[0].get<int>(), v = e[1].get<int>();
      g.infected_2edges.insert({std::min(u, v), std::max(u, v)});
    }
  }
  try {
    g.validate();
  } catch (const InputError& err) {
    fail_at(path, err.what());
  }
  return g;
}

}  // namespace

ProblemSpec parse_spec(const json& doc) {
  const std::string root = "$";
  if (!doc.is_object()) fail_at(root, "problem document must be a JSON object");
  require_keys(doc, root, {"family", "n", "side", "graph", "coefficients", "seed", "custom_terms"});
  if (!doc.contains("family") || !doc["family"].is_string()) fail_at(root + "/family", "missing or non-string");
  ProblemSpec spec;
  spec.family = family_from_name(doc["family"].get<std::string>());
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_integer()) fail_at(root + "/seed", "expected an integer");
    spec.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("side")) {
    if (spec.family != Family::Grid) fail_at(root + "/side", "only the grid family takes a side");
    spec.side = get_int(doc, root, "side");
    if (spec.side < 2) fail_at(root + "/side", "side must be >= 2");
    spec.n = spec.side * spec.side + 2;
  }
  if (doc.contains("n")) {
    int n = get_int(doc, root, "n");
    if (spec.family == Family::Grid && spec.side > 0 && n != spec.n) {
      fail_at(root + "/n", "inconsistent with side*side + 2");
    }
    spec.n = n;
  }
  if (spec.family == Family::Grid && spec.side == 0) fail_at(root + "/side", "grid family requires a side");
  if (spec.n <= 0) fail_at(root + "/n", "missing or non-positive qubit count");
  if (spec.n > 64) fail_at(root + "/n", "at most 64 qubits are supported");

  if (doc.contains("graph")) {
    if (spec.family == Family::Chain || spec.family == Family::Hyperchain || spec.family == Family::Custom) {
      fail_at(root + "/graph", "family '" + family_name(spec.family) + "' does not take a graph");
    }
    if (spec.family == Family::Grid) fail_at(root + "/graph", "the grid family derives its own graph");
    spec.graph = parse_graph(doc["graph"], root + "/graph", spec.n);
    if (spec.graph->num_vertices != spec.n) fail_at(root + "/graph", "vertex count differs from n");
    for (std::size_t i = 0; i < spec.graph->edges.size(); ++i) {
      bool typed = !spec.graph->edges[i].type.empty();
      if (spec.family == Family::MultitypeGraph && !typed) {
        fail_at(root + "/graph/edges/" + std::to_string(i), "multitype-graph requires a type on every edge");
      }
      if (spec.family == Family::Graph && typed) {
        fail_at(root + "/graph/edges/" + std::to_string(i),
                "the graph family takes untyped edges (use multitype-graph)");
      }
    }
  } else if (spec.family == Family::Graph || spec.family == Family::MultitypeGraph) {
    fail_at(root + "/graph", "family '" + family_name(spec.family) + "' requires a graph");
  }
  if (spec.family == Family::Grid) {
    spec.graph = grid_graph(spec.side);
  }

  if (doc.contains("custom_terms")) {
    if (spec.family != Family::Custom) fail_at(root + "/custom_terms", "only the custom family takes explicit terms");
    if (!doc["custom_terms"].is_array()) fail_at(root + "/custom_terms", "expected an array");
    int idx = 0;
    for (const auto& t : doc["custom_terms"]) {
      std::string tpath = root + "/custom_terms/" + std::to_string(idx++);
      if (!t.is_object()) fail_at(tpath, "expected an object");
      require_keys(t, tpath, {"paulis", "coeff"});
      if (!t.contains("paulis") || !t["paulis"].is_array()) fail_at(tpath + "/paulis", "missing factor list");
      CustomTerm term;
      for (const auto& p : t["paulis"]) {
        if (!p.is_object()) fail_at(tpath + "/paulis", "expected {qubit, axis} objects");
        require_keys(p, tpath + "/paulis", {"qubit", "axis"});
        int q = get_int(p, tpath + "/paulis", "qubit");
        if (q < 1 || q > spec.n) fail_at(tpath + "/paulis/qubit", "qubit index out of range");
        if (!p.contains("axis") || !p["axis"].is_string()) fail_at(tpath + "/paulis/axis", "missing axis");
        std::string axis = p["axis"].get<std::string>();
        if (axis != "Z") {
          fail_at(tpath + "/paulis/axis", "H_Z must be diagonal: only Z factors are allowed, got '" + axis + "'");
        }
        term.qubits.push_back(q);
      }
      std::sort(term.qubits.begin(), term.qubits.end());
      if (std::adjacent_find(term.qubits.begin(), term.qubits.end()) != term.qubits.end()) {
        fail_at(tpath + "/paulis", "repeated qubit in one term");
      }
      if (!t.contains("coeff") || !t["coeff"].is_string()) fail_at(tpath + "/coeff", "expected a \"p/q\" string");
      try {
        term.coeff = Rational::parse(t["coeff"].get<std::string>());
      } catch (const InputError& e) {
        fail_at(tpath + "/coeff", e.what());
      }
      spec.custom_terms.push_back(std::move(term));
    }
  } else if (spec.family == Family::Custom) {
    fail_at(root + "/custom_terms", "custom family requires explicit terms");
  }

  std::vector<std::string> sample_symbols;
  if (doc.contains("coefficients")) {
    if (!doc["coefficients"].is_object()) fail_at(root + "/coefficients", "expected an object");
    for (auto it = doc["coefficients"].begin(); it != doc["coefficients"].end(); ++it) {
      const std::string cpath = root + "/coefficients/" + it.key();
      if (it.value().is_string()) {
        try {
          spec.coefficients.set(it.key(), Rational::parse(it.value().get<std::string>()));
        } catch (const InputError& e) {
          fail_at(cpath, e.what());
        }
      } else if (it.value().is_object()) {
        require_keys(it.value(), cpath, {"sample"});
        if (!it.value().contains("sample") || !it.value()["sample"].is_boolean() ||
            !it.value()["sample"].get<bool>()) {
          fail_at(cpath, "expected \"p/q\" or {\"sample\": true}");
        }
        sample_symbols.push_back(it.key());
      } else {
        fail_at(cpath, "expected \"p/q\" or {\"sample\": true}");
      }
    }
  }
  auto required = spec.required_symbols();
  for (const auto& sym : required) {
    if (!spec.coefficients.has(sym) &&
        std::find(sample_symbols.begin(), sample_symbols.end(), sym) == sample_symbols.end()) {
      fail_at(root + "/coefficients/" + sym, "missing required coefficient (give a value or {\"sample\": true})");
    }
  }
  if (!sample_symbols.empty()) {
    std::vector<Constraint> constraints{Constraint::Nonzero};
    if (spec.family == Family::Chain) {
      constraints.push_back(Constraint::DistinctSquares);
      constraints.push_back(Constraint::AvoidGammaDegenerate);
    }
    auto sampled = sample_generic_coefficients(sample_symbols, spec.seed, constraints);
    for (const auto& sym : sample_symbols) {
      spec.coefficients.set(sym, sampled.at(sym), Provenance::Sampled);
    }
    spec.coefficients.seed = spec.seed;
  }
  // Surface coefficient errors (missing symbols etc.) at parse time.
  spec.build();
  return spec;
}

ProblemSpec parse_spec_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("problem document is not valid JSON: ") + e.what());
  }
  return parse_spec(doc);
}

ProblemSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open problem file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str());
}

json serialize(const ProblemSpec& spec) {
  json doc;
  doc["family"] = family_name(spec.family);
  doc["n"] = spec.n;
  if (spec.family == Family::Grid) doc["side"] = spec.side;
  doc["seed"] = spec.seed;
  if (spec.graph && spec.family != Family::Grid) {
    json g;
    std::vector<int> vertices(spec.graph->num_vertices);
    std::iota(vertices.begin(), vertices.end(), 1);
    g["vertices"] = vertices;
    json edges = json::array();
    for (const auto& e : spec.graph->edges) {
      if (e.type.empty()) {
        edges.push_back({e.u, e.v});
      } else {
        edges.push_back({e.u, e.v, e.type});
      }
    }
    g["edges"] = edges;
    if (!spec.graph->hyperedges.empty()) g["hyperedges"] = spec.graph->hyperedges;
    if (!spec.graph->infected_vertices.empty()) {
      g["infected_vertices"] = std::vector<int>(spec.graph->infected_vertices.begin(),
                                                spec.graph->infected_vertices.end());
    }
    if (!spec.graph->infected_2edges.empty()) {
      json s2 = json::array();
      for (const auto& [u, v] : spec.graph->infected_2edges) s2.push_back({u, v});
      g["infected_2edges"] = s2;
    }
    doc["graph"] = g;
  }
  json coeffs;
  for (const auto& [name, value] : spec.coefficients.values) coeffs[name] = value.str();
  doc["coefficients"] = coeffs;
  if (!spec.custom_terms.empty()) {
    json terms = json::array();
    for (const auto& t : spec.custom_terms) {
      json paulis = json::array();
      for (int q : t.qubits) paulis.push_back({{"qubit", q}, {"axis", "Z"}});
      terms.push_back({{"paulis", paulis}, {"coeff", t.coeff.str()}});
    }
    doc["custom_terms"] = terms;
  }
  return doc;
}

}  // namespace qlie
