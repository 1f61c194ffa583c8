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

#include "qlie/forcing.hpp"

#include <algorithm>

namespace qlie {

ForcingMode forcing_mode_from_name(const std::string& name) {
  if (name == "basic") return ForcingMode::Basic;
  if (name == "generalized") return ForcingMode::Generalized;
  if (name == "hyper") return ForcingMode::Hyper;
  throw InputError("unknown forcing mode '" + name + "'");
}

std::string forcing_mode_name(ForcingMode mode) {
  switch (mode) {
    case ForcingMode::Basic: return "basic";
    case ForcingMode::Generalized: return "generalized";
    case ForcingMode::Hyper: return "hyper";
  }
  return "?";
}

namespace {

void check_subset(const GraphSpec& g, const std::set<int>& s) {
  for (int v : s) {
    if (v < 1 || v > g.num_vertices) {
      throw InputError("infected vertex " + std::to_string(v) + " is not a declared vertex");
    }
  }
}

// One basic-rule application within the given neighbour relation: the
// lowest infected vertex with exactly one uninfected neighbour forces.
template <class NeighbourFn>
bool basic_step(const GraphSpec& g, ForcingState& state, NeighbourFn&& neighbours_of,
                const std::string& rule) {
  for (int v = 1; v <= g.num_vertices; ++v) {
    if (!state.infected.count(v)) continue;
    int uninfected = 0, target = 0;
    for (int w : neighbours_of(v)) {
      if (!state.infected.count(w)) {
        ++uninfected;
        target = w;
      }
    }
    if (uninfected == 1) {
      state.infected.insert(target);
      state.trace.push_back({rule, {v}, target, std::nullopt});
      return true;
    }
  }
  return false;
}

}  // namespace

ForcingState zero_forcing_run(const GraphSpec& g, const std::set<int>& s) {
  g.validate();
  check_subset(g, s);
  ForcingState state;
  state.infected = s;
  while (basic_step(g, state, [&](int v) { return g.neighbours(v); }, "basic")) {
  }
  return state;
}

ForcingState generalized_forcing_run(const GraphSpec& g, const std::set<int>& s,
                                     RoundStrictness strictness) {
  g.validate();
  check_subset(g, s);
  for (const auto& e : g.edges) {
    if (e.type.empty()) throw InputError("generalized forcing requires a type on every edge");
  }
  auto types = g.edge_types();
  std::sort(types.begin(), types.end());
  ForcingState state;
  state.infected = s;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    std::set<int> round_snapshot = state.infected;
    for (std::size_t k = 0; k < types.size(); ++k) {
      const std::string& type = types[k];
      std::string rule = "typed:" + std::to_string(k + 1);
      if (strictness == RoundStrictness::Snapshot) {
        // Stages act on the set as of the round start; infections within
        // a stage still accumulate into the next round.
        ForcingState stage;
        stage.infected = round_snapshot;
        while (basic_step(g, stage, [&](int v) { return g.neighbours_in_type(v, type); }, rule)) {
        }
        for (const auto& st : stage.trace) {
          if (!state.infected.count(*st.infects_vertex)) {
            state.infected.insert(*st.infects_vertex);
            state.trace.push_back(st);
            progressed = true;
          }
        }
      } else {
        while (basic_step(g, state, [&](int v) { return g.neighbours_in_type(v, type); }, rule)) {
          progressed = true;
        }
      }
    }
  }
  return state;
}

ForcingState hyper_forcing_run(const GraphSpec& g, const std::set<int>& s1,
                               const std::set<std::pair<int, int>>& s2) {
  g.validate();
  check_subset(g, s1);
  for (const auto& h : g.hyperedges) {
    if (h.size() > 3) throw InputError("hyper forcing requires hyperedges of at most three vertices");
  }
  ForcingState state;
  state.infected = s1;
  for (const auto& [u, v] : s2) state.infected_2edges.insert({std::min(u, v), std::max(u, v)});

  auto three_neighbours = [&](int v1, int v2) {
    std::vector<int> out;
    for (const auto& h : g.hyperedges) {
      if (h.size() != 3) continue;
      if (std::find(h.begin(), h.end(), v1) == h.end()) continue;
      if (std::find(h.begin(), h.end(), v2) == h.end()) continue;
      for (int w : h) {
        if (w != v1 && w != v2) out.push_back(w);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  bool progressed = true;
  while (progressed) {
    progressed = false;
    // Lowest infected pair with an infected 2-edge and exactly one
    // uninfected 3-neighbour fires first.
    for (auto it = state.infected_2edges.begin(); it != state.infected_2edges.end() && !progressed; ++it) {
      auto [v1, v2] = *it;
      if (!state.infected.count(v1) || !state.infected.count(v2)) continue;
      int uninfected = 0, target = 0;
      for (int w : three_neighbours(v1, v2)) {
        if (!state.infected.count(w)) {
          ++uninfected;
          target = w;
        }
      }
      if (uninfected == 1) {
        state.infected.insert(target);
        state.trace.push_back({"hyper-pair", {v1, v2}, target, std::nullopt});
        auto e1 = std::minmax(v1, target);
        auto e2 = std::minmax(v2, target);
        if (state.infected_2edges.insert({e1.first, e1.second}).second) {
          state.trace.push_back({"hyper-pair", {v1, v2}, std::nullopt, std::pair<int, int>{e1.first, e1.second}});
        }
        if (state.infected_2edges.insert({e2.first, e2.second}).second) {
          state.trace.push_back({"hyper-pair", {v1, v2}, std::nullopt, std::pair<int, int>{e2.first, e2.second}});
        }
        progressed = true;
      }
    }
  }
  return state;
}

bool is_forcing_set(const GraphSpec& g, const std::set<int>& s,
                    const std::optional<std::set<std::pair<int, int>>>& s2, ForcingMode mode) {
  switch (mode) {
    case ForcingMode::Basic:
      return zero_forcing_run(g, s).all_infected(g);
    case ForcingMode::Generalized:
      return generalized_forcing_run(g, s).all_infected(g);
    case ForcingMode::Hyper: {
      std::set<std::pair<int, int>> edges2 = s2.value_or(std::set<std::pair<int, int>>{});
      return hyper_forcing_run(g, s, edges2).all_infected(g);
    }
  }
  return false;
}

std::vector<std::set<int>> minimal_forcing_search(const GraphSpec& g, ForcingMode mode, int max_size) {
  g.validate();
  if (g.num_vertices > 20) throw InputError("minimal forcing search supports at most 20 vertices");
  int n = g.num_vertices;
  if (max_size < 0 || max_size > n) max_size = n;
  std::vector<std::set<int>> winners;
  for (int size = 0; size <= max_size; ++size) {
    // enumerate all subsets of the given size in lexicographic order
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
      std::set<int> s(pick.begin(), pick.end());
      std::optional<std::set<std::pair<int, int>>> s2;
      if (mode == ForcingMode::Hyper) {
        std::set<std::pair<int, int>> pairs;
        for (int a : s) {
          for (int b : s) {
            if (a < b) pairs.insert({a, b});
          }
        }
        s2 = pairs;
      }
      if (is_forcing_set(g, s, s2, mode)) winners.push_back(s);
      // next combination
      int i = size - 1;
      while (i >= 0 && pick[i] == n - (size - 1 - i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!winners.empty()) return winners;
  }
  return winners;
}

namespace {

// Hypergraph cost Hamiltonian following the hyperline pattern: delta on
// every size-3 hyperedge, gamma on every size-2 hyperedge, w<i> on the
// initially infected vertices and w elsewhere.
std::pair<Operator, Operator> hypergraph_hamiltonian(const GraphSpec& g, const std::set<int>& s1,
                                                     const CoefficientAssignment& coeffs) {
  std::uint32_t n = static_cast<std::uint32_t>(g.num_vertices);
  std::vector<Operator::Term> terms;
  for (const auto& h : g.hyperedges) {
    std::uint64_t m = 0;
    for (int v : h) m |= 1ULL << (v - 1);
    terms.emplace_back(PauliString::from_masks(n, 0, m),
                       h.size() == 3 ? coeffs.at("delta") : coeffs.at("gamma"));
  }
  std::vector<Operator::Term> xt;
  for (int v = 1; v <= g.num_vertices; ++v) {
    terms.emplace_back(PauliString::single(n, v, 'Z'),
                       s1.count(v) ? coeffs.at("w" + std::to_string(v)) : coeffs.at("w"));
    xt.emplace_back(PauliString::single(n, v, 'X'), Rational(1));
  }
  return {Operator::from_terms(n, std::move(terms)), Operator::from_terms(n, std::move(xt))};
}

}  // namespace

ForcingUniversalityReport forcing_to_universality(const GraphSpec& g, const std::set<int>& s,
                                                  const std::optional<std::set<std::pair<int, int>>>& s2,
                                                  const CoefficientAssignment& coeffs, ForcingMode mode,
                                                  const ClosureOptions& options) {
  ForcingUniversalityReport report;
  report.forcing = is_forcing_set(g, s, s2, mode);

  Operator hz, hx;
  if (mode == ForcingMode::Hyper) {
    std::tie(hz, hx) = hypergraph_hamiltonian(g, s, coeffs);
  } else {
    GraphSpec gg = g;
    gg.infected_vertices = s;
    std::tie(hz, hx) = build_graph_hamiltonian(gg, coeffs);
  }
  auto [basis, closure_report] = lie_closure<Rational>({hz, hx}, options);
  report.closure = closure_report;

  std::uint32_t n = hz.num_qubits();
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : g.edges) pairs.insert(std::minmax(e.u, e.v));
  for (const auto& h : g.hyperedges) {
    for (std::size_t i = 0; i < h.size(); ++i) {
      for (std::size_t j = i + 1; j < h.size(); ++j) pairs.insert(std::minmax(h[i], h[j]));
    }
  }
  for (const auto& [u, v] : pairs) {
    std::uint64_t m = (1ULL << (u - 1)) | (1ULL << (v - 1));
    Operator target = Operator::from_terms(n, {{PauliString::from_masks(n, 0, m), Rational(1)}});
    bool member = membership(basis, target).member;
    report.pair_targets.push_back({render_operator(target), member});
    if (report.forcing && !member) ++report.mismatches;
  }
  for (int v = 1; v <= g.num_vertices; ++v) {
    Operator target = Operator::from_terms(n, {{PauliString::single(n, v, 'X'), Rational(1)}});
    bool member = membership(basis, target).member;
    report.vertex_targets.push_back({render_operator(target), member});
    if (report.forcing && !member) ++report.mismatches;
  }
  return report;
}

nlohmann::ordered_json trace_to_json(const ForcingState& state) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& st : state.trace) {
    nlohmann::ordered_json step;
    step["rule"] = st.rule;
    step["by"] = st.by;
    if (st.infects_vertex) {
      step["infects"] = *st.infects_vertex;
    } else if (st.infects_2edge) {
      step["infects"] = {st.infects_2edge->first, st.infects_2edge->second};
    }
    steps.push_back(step);
  }
  nlohmann::ordered_json out;
  out["steps"] = steps;
  out["infected"] = std::vector<int>(state.infected.begin(), state.infected.end());
  if (!state.infected_2edges.empty()) {
    nlohmann::ordered_json e2 = nlohmann::ordered_json::array();
    for (const auto& [u, v] : state.infected_2edges) e2.push_back({u, v});
    out["infected_2edges"] = e2;
  }
  return out;
}

}  // namespace qlie
