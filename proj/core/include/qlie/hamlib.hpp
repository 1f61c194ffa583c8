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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qlie/operator.hpp"

namespace qlie {

/**
 * Vertices, typed edges, hyperedges and infected sets. Vertex labels must
 * be exactly 1..n. The graph part must be simple (no loops, no duplicate
 * edges); hyperedges are limited to three members where the hyper rules
 * apply.
 */
struct GraphSpec {
  int num_vertices = 0;
  struct Edge {
    int u, v;
    std::string type;  // empty means untyped (single-type graph)
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> hyperedges;
  std::set<int> infected_vertices;                 // S (or S1 in hyper mode)
  std::set<std::pair<int, int>> infected_2edges;   // S2 (hyper mode)

  /** Validates all invariants; throws InputError naming the offence. */
  void validate() const;

  std::vector<int> neighbours(int v) const;
  std::vector<int> neighbours_in_type(int v, const std::string& type) const;
  /** Distinct edge type labels in first-appearance order. */
  std::vector<std::string> edge_types() const;
  bool has_edge(int u, int v) const;
};

enum class Provenance { UserSupplied, Sampled };

/** Named coupling values, with per-symbol provenance. */
struct CoefficientAssignment {
  std::map<std::string, Rational> values;
  std::map<std::string, Provenance> provenance;
  std::optional<std::uint64_t> seed;

  const Rational& at(const std::string& name) const;
  bool has(const std::string& name) const { return values.count(name) != 0; }
  void set(const std::string& name, Rational v, Provenance p = Provenance::UserSupplied);
};

/** Sampling constraints; violations trigger a deterministic resample. */
enum class Constraint {
  Nonzero,          // every sampled value nonzero (always true for the sampler's range)
  DistinctSquares,  // all pairwise: a^2 != b^2 across the sampled symbols
  AvoidGammaDegenerate,  // gAB^2 != 4*gBA^2 and gAB^2 != gBA^2
};

/**
 * Deterministic generic rationals: numerator and denominator uniform in
 * [2, 10^6]. Constraints are verified post-sampling with bounded retries.
 */
CoefficientAssignment sample_generic_coefficients(const std::vector<std::string>& symbols,
                                                  std::uint64_t seed,
                                                  const std::vector<Constraint>& constraints);

struct ChainOperators {
  Operator hz, hx;
  Operator h_a, h_b, h_ab, h_ba;
  Operator x_even, x_odd;
};

/**
 * The 1-D chain pair: hz = wA*H_A + wB*H_B + gAB*H_AB + gBA*H_BA over the
 * parity-split index ranges, hx = sum_j X_j. Requires wA, wB, gAB, gBA.
 */
ChainOperators build_chain(int n, const CoefficientAssignment& coeffs);

/**
 * Graph cost Hamiltonian: sum_k gamma_k * sum_{(i,j) in E_k} Z_i Z_j
 * + sum_{i in S} w<i> Z_i + w * sum_{i not in S} Z_i. Single-type graphs
 * use the symbol "gamma"; typed edges use "gamma_<type>".
 */
std::pair<Operator, Operator> build_graph_hamiltonian(const GraphSpec& g,
                                                      const CoefficientAssignment& coeffs);

/**
 * Hyperchain pair: delta * sum Z_k Z_{k+1} Z_{k+2} + gamma * Z1 Z2
 * + w1 * Z1 + w * sum_{i != 1} Z_i. gamma = 0 is allowed.
 */
std::pair<Operator, Operator> build_hyperchain(int n, const CoefficientAssignment& coeffs);

enum class Family { Chain, Graph, MultitypeGraph, Grid, Hyperchain, Custom };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct CustomTerm {
  std::vector<int> qubits;  // Z on each listed qubit
  Rational coeff;
};

/**
 * A fully validated problem: family, size, graph data, coefficients.
 * `build()` produces the (H_Z, H_X) pair; H_Z is always diagonal and H_X
 * is always sum_j X_j.
 */
struct ProblemSpec {
  Family family = Family::Chain;
  int n = 0;     // qubit count
  int side = 0;  // grid only
  std::optional<GraphSpec> graph;
  CoefficientAssignment coefficients;
  std::uint64_t seed = 1;
  std::vector<CustomTerm> custom_terms;

  struct Hamiltonians {
    Operator hz, hx;
  };
  Hamiltonians build() const;

  /** Symbols this family requires (before sampling). */
  std::vector<std::string> required_symbols() const;
};

/**
 * Square grid of side^2 vertices (row-major, 1-based) plus pendant vertex
 * N+1 on v_1 (edge type B) and pendant N+2 on v_side (edge type C); grid
 * edges carry type A. Requires wA, wB, wC, gA, gB, gC.
 */
ProblemSpec build_grid(int side, const CoefficientAssignment& coeffs);

/** Parses and fully validates a problem document. Errors cite JSON paths. */
ProblemSpec parse_spec(const nlohmann::json& doc);
ProblemSpec parse_spec_text(const std::string& text);
ProblemSpec parse_spec_file(const std::string& path);
nlohmann::json serialize(const ProblemSpec& spec);

}  // namespace qlie
