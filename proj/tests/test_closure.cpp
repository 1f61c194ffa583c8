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

#include <algorithm>
#include <random>

#include "qlie/closure.hpp"
#include "qlie/hamlib.hpp"

using namespace qlie;

namespace {

Operator op(std::uint32_t n, const std::string& text) { return parse_operator(n, text); }

CoefficientAssignment chain_coeffs(std::uint64_t seed) {
  return sample_generic_coefficients(
      {"wA", "wB", "gAB", "gBA"}, seed,
      {Constraint::Nonzero, Constraint::DistinctSquares, Constraint::AvoidGammaDegenerate});
}

Operator random_traceless(std::mt19937_64& rng, std::uint32_t n, int max_terms) {
  std::vector<Operator::Term> terms;
  std::uint64_t lim = (1ULL << n) - 1;
  std::uniform_int_distribution<long> coeff(-20, 20);
  for (int i = 0; i < max_terms; ++i) {
    std::uint64_t x = rng() & lim, z = rng() & lim;
    if (x == 0 && z == 0) continue;
    long c = coeff(rng);
    if (c == 0) c = 3;
    terms.emplace_back(PauliString::from_masks(n, x, z), Rational(c, 7));
  }
  if (terms.empty()) terms.emplace_back(PauliString::single(n, 1, 'Y'), Rational(2));
  return Operator::from_terms(n, std::move(terms));
}

}  // namespace

TEST_CASE("singleton generator spans one direction") {
  auto [basis, report] = lie_closure<Rational>({op(1, "Z1")});
  CHECK(report.dimension == 1);
  CHECK(!report.universal);
  CHECK(!report.early_exit);
}

TEST_CASE("closure rejects identity components and empty input") {
  CHECK_THROWS_AS(lie_closure<Rational>({}), InputError);
  CHECK_THROWS_AS(lie_closure<Rational>({op(1, "I + Z1")}), InputError);
}

TEST_CASE("chain n=3 with generic couplings reaches the full algebra") {
  auto c = chain_coeffs(1);
  auto ops = build_chain(3, c);
  auto [basis, report] = lie_closure<Rational>({ops.hz, ops.hx});
  CHECK(report.dimension == 63);
  CHECK(report.universal);
  CHECK(report.dimension == dense_closure_oracle({ops.hz, ops.hx}));
}

TEST_CASE("chain n=2 agrees with the dense oracle") {
  auto c = chain_coeffs(3);
  auto ops = build_chain(2, c);
  auto [basis, report] = lie_closure<Rational>({ops.hz, ops.hx});
  CHECK(report.dimension == dense_closure_oracle({ops.hz, ops.hx}));
  CHECK(report.dimension == 15);  // generic even n=2 still fills su(4)
}

TEST_CASE("dense closure oracle basics") {
  CHECK(dense_closure_oracle({op(1, "Z1")}) == 1);
  // unit couplings make the n=2 chain swap-symmetric, so the oracle and
  // the sparse engine both land strictly below su(4)
  Operator hz = op(2, "Z1 + Z2 + Z1*Z2");
  Operator hx = op(2, "X1 + X2");
  auto [basis, report] = lie_closure<Rational>({hz, hx});
  CHECK(dense_closure_oracle({hz, hx}) == report.dimension);
  CHECK(report.dimension == 9);
  CHECK(!detect_permutation_symmetries(hz, hx).certificates.empty());
  CHECK_THROWS_AS(dense_closure_oracle({op(4, "Z1")}), InputError);
}

TEST_CASE("oracle agreement on assorted n<=3 instances") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    std::uint32_t n = 2 + trial % 2;
    Operator a = random_traceless(rng, n, 4);
    Operator b = random_traceless(rng, n, 4);
    auto [basis, report] = lie_closure<Rational>({a, b});
    REQUIRE(report.dimension == dense_closure_oracle({a, b}));
  }
}

TEST_CASE("reduce_against residuals") {
  auto c = chain_coeffs(5);
  auto ops = build_chain(3, c);
  auto [basis, report] = lie_closure<Rational>({ops.hz, ops.hx});
  // candidate = 3 * row0 reduces to zero
  Operator scaled = Rational(3) * basis.rows()[0];
  CHECK(basis.reduce(scaled).is_zero());
  // candidate orthogonal to every pivot comes back unchanged
  LieBasis<Rational> small(3, {});
  small.reduce_and_admit(op(3, "Z1"));
  Operator candidate = op(3, "X2 + Y3");
  CHECK(small.reduce(candidate) == candidate);
}

TEST_CASE("exact and float closures agree on rank verdicts") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    Operator a = random_traceless(rng, 3, 5);
    Operator b = random_traceless(rng, 3, 5);
    auto [eb, er] = lie_closure<Rational>({a, b});
    ClosureOptions fopt;
    fopt.tolerance = 1e-9;
    auto [fb, fr] = lie_closure<double>({to_float(a), to_float(b)}, fopt);
    REQUIRE(er.dimension == fr.dimension);
  }
}

TEST_CASE("membership of generators and paper targets") {
  auto c = chain_coeffs(1);
  auto ops = build_chain(3, c);
  auto [basis, report] = lie_closure<Rational>({ops.hz, ops.hx});
  CHECK(membership(basis, ops.hz).member);
  Operator hz1 = linear_combine<Rational>({{c.at("wA"), ops.h_a}, {c.at("wB"), ops.h_b}});
  CHECK(membership(basis, hz1).member);
  for (const Operator* target : {&ops.h_a, &ops.h_b, &ops.h_ab, &ops.h_ba}) {
    CHECK(membership(basis, *target).member);
  }
}

TEST_CASE("membership expansion reproduces the target exactly") {
  Operator g1 = op(2, "Z1 + 2*Z2");
  Operator g2 = op(2, "X1 + X2");
  auto [basis, report] = lie_closure<Rational>({g1, g2});
  Operator target = op(2, "Z1 + 2*Z2");
  auto m = membership(basis, target);
  REQUIRE(m.member);
  Operator rebuilt(2);
  for (const auto& [pivot, coeff] : m.expansion) {
    auto it = std::find_if(basis.rows().begin(), basis.rows().end(), [&](const Operator& row) {
      return row.terms().front().first == pivot;
    });
    REQUIRE(it != basis.rows().end());
    rebuilt.axpy(coeff, *it);
  }
  CHECK(rebuilt == target);
  // non-member
  LieBasis<Rational> single(1, {});
  single.reduce_and_admit(op(1, "Z1"));
  CHECK(!membership(single, op(1, "X1")).member);
}

TEST_CASE("closure dimension is invariant under reordering and scaling") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    std::uint32_t n = 2 + trial % 2;
    Operator a = random_traceless(rng, n, 4);
    Operator b = random_traceless(rng, n, 4);
    auto [b1, r1] = lie_closure<Rational>({a, b});
    auto [b2, r2] = lie_closure<Rational>({b, a});
    auto [b3, r3] = lie_closure<Rational>({Rational(-7, 3) * a, Rational(5) * b});
    REQUIRE(r1.dimension == r2.dimension);
    REQUIRE(r1.dimension == r3.dimension);
  }
}

TEST_CASE("generators stay inside the final span") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    Operator a = random_traceless(rng, 3, 5);
    Operator b = random_traceless(rng, 3, 5);
    auto [basis, report] = lie_closure<Rational>({a, b});
    REQUIRE(membership(basis, a).member);
    REQUIRE(membership(basis, b).member);
  }
}

TEST_CASE("identity string never appears in basis rows") {
  auto c = chain_coeffs(2);
  auto ops = build_chain(4, c);
  auto [basis, report] = lie_closure<Rational>({ops.hz, ops.hx});
  for (const auto& row : basis.rows()) {
    REQUIRE(row.is_traceless());
  }
  CHECK(report.dimension <= ambient_dimension(4));
}

TEST_CASE("early exit implies full-dimension membership of anything traceless") {
  auto c = chain_coeffs(1);
  auto ops = build_chain(3, c);
  auto [basis, report] = lie_closure<Rational>({ops.hz, ops.hx});
  REQUIRE(report.dimension == ambient_dimension(3));
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 25; ++trial) {
    REQUIRE(membership(basis, random_traceless(rng, 3, 6)).member);
  }
}

TEST_CASE("frozen dimensions for the paper families") {
  // chain n=4, wA == wB: mirror-symmetric, strictly below full
  CoefficientAssignment c = chain_coeffs(1);
  c.set("wA", Rational(3, 7));
  c.set("wB", Rational(3, 7));
  auto ops = build_chain(4, c);
  auto [b4, r4] = lie_closure<Rational>({ops.hz, ops.hx});
  CHECK(r4.dimension == 135);

  // hyperchain n=4 with gamma = 0 (the no-go family)
  CoefficientAssignment h;
  h.set("delta", Rational(5, 3));
  h.set("gamma", Rational(0));
  h.set("w1", Rational(7, 2));
  h.set("w", Rational(11, 6));
  auto [hz, hx] = build_hyperchain(4, h);
  auto [bh, rh] = lie_closure<Rational>({hz, hx});
  CHECK(rh.dimension == 72);

  // hyperchain n=3 with gamma = 0
  auto [hz3, hx3] = build_hyperchain(3, h);
  auto [bh3, rh3] = lie_closure<Rational>({hz3, hx3});
  CHECK(rh3.dimension == 24);
  CHECK(rh3.dimension == dense_closure_oracle({hz3, hx3}));
}

TEST_CASE("thread count does not change the result") {
  auto c = chain_coeffs(8);
  auto ops = build_chain(4, c);
  ClosureOptions one, four;
  one.threads = 1;
  four.threads = 4;
  auto [b1, r1] = lie_closure<Rational>({ops.hz, ops.hx}, one);
  auto [b2, r2] = lie_closure<Rational>({ops.hz, ops.hx}, four);
  CHECK(r1.dimension == r2.dimension);
  CHECK(r1.bracket_count == r2.bracket_count);
  REQUIRE(b1.rows().size() == b2.rows().size());
  for (std::size_t i = 0; i < b1.rows().size(); ++i) REQUIRE(b1.rows()[i] == b2.rows()[i]);
}

TEST_CASE("symmetry detection finds the even-chain mirror") {
  CoefficientAssignment c = chain_coeffs(1);
  c.set("wA", Rational(2, 5));
  c.set("wB", Rational(2, 5));
  auto ops = build_chain(4, c);
  auto result = detect_permutation_symmetries(ops.hz, ops.hx);
  CHECK(result.complete);
  bool found = false;
  for (const auto& cert : result.certificates) {
    if (cert.pi.cycles() == "(1 4)(2 3)") found = true;
    // every certificate fixes both Hamiltonians exactly
    REQUIRE(apply_permutation(ops.hz, cert.pi) == ops.hz);
    REQUIRE(apply_permutation(ops.hx, cert.pi) == ops.hx);
    REQUIRE(!cert.pi.is_identity());
  }
  CHECK(found);
}

TEST_CASE("generic odd chain has no nontrivial symmetry") {
  auto c = chain_coeffs(1);
  auto ops = build_chain(3, c);
  auto result = detect_permutation_symmetries(ops.hz, ops.hx);
  CHECK(result.complete);
  CHECK(result.certificates.empty());
}

TEST_CASE("symmetry certificates map the basis span to itself") {
  CoefficientAssignment c = chain_coeffs(1);
  c.set("wA", Rational(1, 2));
  c.set("wB", Rational(1, 2));
  auto ops = build_chain(4, c);
  auto [basis, report] = lie_closure<Rational>({ops.hz, ops.hx});
  CHECK(report.dimension < 255);
  auto result = detect_permutation_symmetries(ops.hz, ops.hx);
  REQUIRE(!result.certificates.empty());
  const Permutation& pi = result.certificates.front().pi;
  for (const auto& row : basis.rows()) {
    REQUIRE(membership(basis, apply_permutation(row, pi)).member);
  }
}

TEST_CASE("separability check") {
  auto c = chain_coeffs(1);
  auto ops = build_chain(3, c);
  Operator hz1 = linear_combine<Rational>({{c.at("wA"), ops.h_a}, {c.at("wB"), ops.h_b}});
  CHECK(separability_check(hz1, {c.at("wA") * ops.h_a, c.at("wB") * ops.h_b}));
  CHECK(!separability_check(op(1, "Z1 + X1"), {op(1, "Z1"), op(1, "X1")}));
  CHECK_THROWS_AS(separability_check(op(1, "Z1"), {op(1, "X1")}), InputError);
}

TEST_CASE("overflow guard surfaces through the closure") {
  auto c = chain_coeffs(1);
  auto ops = build_chain(4, c);
  c.set("wA", Rational(3, 7));
  c.set("wB", Rational(3, 7));  // symmetric: forces the rational engine
  auto sym = build_chain(4, c);
  ClosureOptions opt;
  opt.bit_budget = 8;
  CHECK_THROWS_AS(lie_closure<Rational>({sym.hz, sym.hx}, opt), OverflowGuard);
}
