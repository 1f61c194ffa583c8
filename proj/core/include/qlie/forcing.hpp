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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "qlie/closure.hpp"
#include "qlie/hamlib.hpp"

namespace qlie {

enum class ForcingMode { Basic, Generalized, Hyper };

ForcingMode forcing_mode_from_name(const std::string& name);
std::string forcing_mode_name(ForcingMode mode);

struct TraceStep {
  std::string rule;               // "basic" | "typed:<k>" | "hyper-pair"
  std::vector<int> by;            // forcing vertex or pair
  std::optional<int> infects_vertex;
  std::optional<std::pair<int, int>> infects_2edge;
};

/**
 * Evolving infection state plus the ordered step trace. Steps are
 * replayable: each one's rule condition holds at its point in the trace.
 */
struct ForcingState {
  std::set<int> infected;
  std::set<std::pair<int, int>> infected_2edges;
  std::vector<TraceStep> trace;

  bool all_infected(const GraphSpec& g) const {
    return static_cast<int>(infected.size()) == g.num_vertices;
  }
};

/** How generalized rounds see infections made earlier in the same round. */
enum class RoundStrictness {
  Sequential,  // stages use the up-to-date infected set (default)
  Snapshot,    // stages all use the set from the round start
};

/**
 * Basic zero forcing: an infected vertex with exactly one uninfected
 * neighbour infects it. Deterministic scan order (lowest vertex first);
 * the terminal set is order-independent.
 */
ForcingState zero_forcing_run(const GraphSpec& g, const std::set<int>& s);

/**
 * Multi-type rounds: the basic rule within subgraph G_1, then G_2, ...,
 * repeated to fixpoint. Trace steps record the subgraph index.
 */
ForcingState generalized_forcing_run(const GraphSpec& g, const std::set<int>& s,
                                     RoundStrictness strictness = RoundStrictness::Sequential);

/**
 * Hyper rule on hyperedges of size <= 3: an infected pair with an
 * infected 2-edge infects its unique uninfected 3-neighbour; the two new
 * 2-edges to the fresh vertex become infected.
 */
ForcingState hyper_forcing_run(const GraphSpec& g, const std::set<int>& s1,
                               const std::set<std::pair<int, int>>& s2);

bool is_forcing_set(const GraphSpec& g, const std::set<int>& s,
                    const std::optional<std::set<std::pair<int, int>>>& s2, ForcingMode mode);

/**
 * Brute-force enumeration in size order; returns every forcing set of the
 * minimum cardinality (empty when none exists under max_size). Hyper mode
 * seeds S2 with all pairs inside the candidate S1. Requires <= 20 vertices.
 */
std::vector<std::set<int>> minimal_forcing_search(const GraphSpec& g, ForcingMode mode, int max_size);

struct ForcingUniversalityReport {
  bool forcing = false;
  ClosureReport closure;
  struct Target {
    std::string render;
    bool member = false;
  };
  std::vector<Target> pair_targets;    // Z_k Z_j over edges / hyper neighbours
  std::vector<Target> vertex_targets;  // X_k over vertices
  // Only meaningful when forcing holds: the forcing theorems predict all
  // memberships; any miss is a finding.
  std::size_t mismatches = 0;
};

/**
 * Juxtaposes the forcing verdict with closure membership of every edge
 * pair Z_k Z_j and vertex X_k. No claim is derived from a negative
 * forcing verdict.
 */
ForcingUniversalityReport forcing_to_universality(const GraphSpec& g, const std::set<int>& s,
                                                  const std::optional<std::set<std::pair<int, int>>>& s2,
                                                  const CoefficientAssignment& coeffs, ForcingMode mode,
                                                  const ClosureOptions& options = {});

nlohmann::ordered_json trace_to_json(const ForcingState& state);

}  // namespace qlie
