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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlie/hamlib.hpp"

using namespace qlie;
using nlohmann::json;

namespace {

CoefficientAssignment unit_chain_coeffs() {
  CoefficientAssignment c;
  c.set("wA", Rational(1));
  c.set("wB", Rational(1));
  c.set("gAB", Rational(1));
  c.set("gBA", Rational(1));
  return c;
}

Operator op(std::uint32_t n, const std::string& text) { return parse_operator(n, text); }

}  // namespace

TEST_CASE("chain index ranges follow the parity split") {
  auto c = unit_chain_coeffs();
  auto three = build_chain(3, c);
  CHECK(three.h_ab == op(3, "Z2*Z3"));
  CHECK(three.h_ba == op(3, "Z1*Z2"));
  CHECK(three.h_a == op(3, "Z2"));
  CHECK(three.h_b == op(3, "Z1 + Z3"));

  auto four = build_chain(4, c);
  CHECK(four.h_ba == op(4, "Z1*Z2 + Z3*Z4"));
  CHECK(four.h_ab == op(4, "Z2*Z3"));

  auto two = build_chain(2, c);
  CHECK(two.h_ab.is_zero());
  CHECK(two.h_ba == op(2, "Z1*Z2"));
  CHECK_THROWS_AS(build_chain(1, c), InputError);
}

TEST_CASE("chain term counts for all n") {
  auto c = unit_chain_coeffs();
  for (int n = 2; n <= 12; ++n) {
    auto ops = build_chain(n, c);
    CHECK(ops.h_a.size() == static_cast<std::size_t>(n / 2));
    CHECK(ops.h_b.size() == static_cast<std::size_t>((n + 1) / 2));
    CHECK(ops.h_ab.size() + ops.h_ba.size() == static_cast<std::size_t>(n - 1));
    CHECK(ops.hx.size() == static_cast<std::size_t>(n));
    // H_Z diagonal, H_X the full mixer
    for (const auto& [p, coeff] : ops.hz.terms()) CHECK(p.x == 0);
    CHECK(ops.hx == ops.x_even + ops.x_odd);
  }
}

TEST_CASE("graph hamiltonian instantiates the forcing-set pattern") {
  GraphSpec g;
  g.num_vertices = 3;
  g.edges = {{1, 2, ""}, {2, 3, ""}};
  g.infected_vertices = {1};
  CoefficientAssignment c;
  c.set("gamma", Rational(2));
  c.set("w1", Rational(5));
  c.set("w", Rational(7));
  auto [hz, hx] = build_graph_hamiltonian(g, c);
  CHECK(hz == op(3, "2*Z1*Z2 + 2*Z2*Z3 + 5*Z1 + 7*Z2 + 7*Z3"));
  CHECK(hx == op(3, "X1 + X2 + X3"));
}

TEST_CASE("graph hamiltonian single vertex") {
  GraphSpec g;
  g.num_vertices = 1;
  g.infected_vertices = {1};
  CoefficientAssignment c;
  c.set("w1", Rational(3));
  auto [hz, hx] = build_graph_hamiltonian(g, c);
  CHECK(hz == op(1, "3*Z1"));
}

TEST_CASE("multi-type edges group by their gamma symbols") {
  GraphSpec g;
  g.num_vertices = 3;
  g.edges = {{1, 2, "A"}, {2, 3, "A"}, {1, 3, "B"}};
  g.infected_vertices = {1};
  CoefficientAssignment c;
  c.set("gamma_A", Rational(2));
  c.set("gamma_B", Rational(3));
  c.set("w1", Rational(5));
  c.set("w", Rational(7));
  auto [hz, hx] = build_graph_hamiltonian(g, c);
  CHECK(hz == op(3, "2*Z1*Z2 + 2*Z2*Z3 + 3*Z1*Z3 + 5*Z1 + 7*Z2 + 7*Z3"));
}

TEST_CASE("graph validation catches loops, duplicates and strays") {
  GraphSpec g;
  g.num_vertices = 3;
  g.edges = {{2, 2, ""}};
  CHECK_THROWS_WITH_AS(g.validate(), doctest::Contains("loop edge (2,2)"), InputError);
  g.edges = {{1, 2, ""}, {2, 1, ""}};
  CHECK_THROWS_WITH_AS(g.validate(), doctest::Contains("duplicate edge"), InputError);
  g.edges = {{1, 4, ""}};
  CHECK_THROWS_AS(g.validate(), InputError);
  g.edges.clear();
  g.infected_vertices = {9};
  CHECK_THROWS_AS(g.validate(), InputError);
}

TEST_CASE("grid numbering and pendants") {
  CoefficientAssignment c;
  for (const auto& sym : {"wA", "wB", "wC", "gA", "gB", "gC"}) c.set(sym, Rational(1));
  auto spec = build_grid(2, c);
  CHECK(spec.n == 6);
  REQUIRE(spec.graph.has_value());
  const auto& g = *spec.graph;
  CHECK(g.edges.size() == 6);  // 4 grid + 2 pendant
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(3, 4));
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(2, 4));
  CHECK(g.has_edge(1, 5));  // pendant B on v1
  CHECK(g.has_edge(2, 6));  // pendant C on v_side
  CHECK(g.neighbours(5) == std::vector<int>{1});
  CHECK(g.neighbours(6) == std::vector<int>{2});

  auto five = build_grid(5, c);
  CHECK(five.n == 27);
  CHECK(five.graph->has_edge(5, 27));  // pendant C on the end of the first row
  CHECK(five.graph->has_edge(1, 26));
  CHECK_THROWS_AS(build_grid(1, c), InputError);

  // connectivity of the grid graph
  std::set<int> seen{1};
  std::vector<int> queue{1};
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int w : five.graph->neighbours(v)) {
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  CHECK(seen.size() == 27);
}

TEST_CASE("hyperchain spans the cubic ladder") {
  CoefficientAssignment c;
  c.set("delta", Rational(1));
  c.set("gamma", Rational(1));
  c.set("w1", Rational(1));
  c.set("w", Rational(1));
  auto [hz3, hx3] = build_hyperchain(3, c);
  CHECK(hz3 == op(3, "Z1*Z2*Z3 + Z1*Z2 + Z1 + Z2 + Z3"));
  auto [hz6, hx6] = build_hyperchain(6, c);
  std::size_t cubic = 0;
  for (const auto& [p, coeff] : hz6.terms()) cubic += p.weight() == 3;
  CHECK(cubic == 4);
  c.set("gamma", Rational(0));
  auto [hz4, hx4] = build_hyperchain(4, c);
  for (const auto& [p, coeff] : hz4.terms()) CHECK(p.weight() != 2);
  CHECK_THROWS_AS(build_hyperchain(2, c), InputError);
}

TEST_CASE("sampling is deterministic and respects constraints") {
  auto a = sample_generic_coefficients({"wA", "wB"}, 7, {Constraint::Nonzero, Constraint::DistinctSquares});
  auto b = sample_generic_coefficients({"wA", "wB"}, 7, {Constraint::Nonzero, Constraint::DistinctSquares});
  CHECK(a.at("wA") == b.at("wA"));
  CHECK(a.at("wB") == b.at("wB"));
  CHECK(!(a.at("wA") * a.at("wA") == a.at("wB") * a.at("wB")));

  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto s = sample_generic_coefficients(
        {"gAB", "gBA"}, seed, {Constraint::Nonzero, Constraint::AvoidGammaDegenerate});
    const Rational &gAB = s.at("gAB"), &gBA = s.at("gBA");
    REQUIRE(!gAB.is_zero());
    REQUIRE(!gBA.is_zero());
    REQUIRE(!(gAB * gAB == gBA * gBA));
    REQUIRE(!(gAB * gAB == Rational(4) * gBA * gBA));
  }
}

TEST_CASE("parse_spec accepts a minimal chain document") {
  json doc = {{"family", "chain"},
              {"n", 3},
              {"coefficients",
               {{"wA", "1/2"}, {"wB", "1/3"}, {"gAB", "2"}, {"gBA", "5/7"}}}};
  ProblemSpec spec = parse_spec(doc);
  CHECK(spec.family == Family::Chain);
  CHECK(spec.n == 3);
  auto built = spec.build();
  CHECK(built.hz.size() == 5);
  CHECK(built.hx == op(3, "X1 + X2 + X3"));
}

TEST_CASE("parse_spec rejects bad documents with the JSON path") {
  json loop = {{"family", "graph"},
               {"n", 2},
               {"graph", {{"edges", {{2, 2}}}}},
               {"coefficients", {{"gamma", "1"}, {"w", "1"}}}};
  CHECK_THROWS_WITH_AS(parse_spec(loop), doctest::Contains("$/graph"), InputError);
  CHECK_THROWS_WITH_AS(parse_spec(loop), doctest::Contains("loop edge (2,2)"), InputError);

  json unknown = {{"family", "chain"}, {"n", 3}, {"bogus", 1}, {"coefficients", json::object()}};
  CHECK_THROWS_WITH_AS(parse_spec(unknown), doctest::Contains("$/bogus"), InputError);

  json missing = {{"family", "chain"}, {"n", 3}, {"coefficients", {{"wA", "1"}}}};
  CHECK_THROWS_WITH_AS(parse_spec(missing), doctest::Contains("$/coefficients/"), InputError);

  json custom_x = {{"family", "custom"},
                   {"n", 2},
                   {"custom_terms",
                    {{{"paulis", {{{"qubit", 1}, {"axis", "X"}}}}, {"coeff", "1"}}}}};
  CHECK_THROWS_WITH_AS(parse_spec(custom_x), doctest::Contains("must be diagonal"), InputError);

  json bad_side = {{"family", "grid"}, {"side", 1}, {"coefficients", json::object()}};
  CHECK_THROWS_WITH_AS(parse_spec(bad_side), doctest::Contains("$/side"), InputError);
}

TEST_CASE("custom family builds an arbitrary diagonal cost operator") {
  json doc = {{"family", "custom"},
              {"n", 3},
              {"custom_terms",
               {{{"paulis", {{{"qubit", 1}, {"axis", "Z"}}, {{"qubit", 3}, {"axis", "Z"}}}},
                 {"coeff", "3/4"}},
                {{"paulis", {{{"qubit", 2}, {"axis", "Z"}}}}, {"coeff", "-2"}}}}};
  ProblemSpec spec = parse_spec(doc);
  auto built = spec.build();
  CHECK(built.hz == op(3, "3/4*Z1*Z3 + -2*Z2"));
}

TEST_CASE("spec serialization round trips") {
  json doc = {{"family", "multitype-graph"},
              {"n", 3},
              {"seed", 9},
              {"graph",
               {{"vertices", {1, 2, 3}},
                {"edges", {{1, 2, "A"}, {2, 3, "B"}}},
                {"infected_vertices", {1}}}},
              {"coefficients",
               {{"gamma_A", "1/2"}, {"gamma_B", "2"}, {"w1", "3"}, {"w", "4"}}}};
  ProblemSpec spec = parse_spec(doc);
  ProblemSpec again = parse_spec(serialize(spec));
  CHECK(again.family == spec.family);
  CHECK(again.n == spec.n);
  CHECK(again.graph->edges == spec.graph->edges);
  CHECK(again.coefficients.values == spec.coefficients.values);
  CHECK(serialize(again) == serialize(spec));
}

TEST_CASE("sampled coefficients honour the document seed") {
  json doc = {{"family", "chain"},
              {"n", 3},
              {"seed", 42},
              {"coefficients",
               {{"wA", {{"sample", true}}},
                {"wB", {{"sample", true}}},
                {"gAB", {{"sample", true}}},
                {"gBA", {{"sample", true}}}}}};
  ProblemSpec a = parse_spec(doc);
  ProblemSpec b = parse_spec(doc);
  CHECK(a.coefficients.values == b.coefficients.values);
  CHECK(a.coefficients.provenance.at("wA") == Provenance::Sampled);
  doc["seed"] = 43;
  ProblemSpec c = parse_spec(doc);
  CHECK(!(a.coefficients.values == c.coefficients.values));
}
