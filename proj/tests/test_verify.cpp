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

#include "qlie/verify.hpp"

using namespace qlie;

namespace {

CoefficientAssignment chain_coeffs(std::uint64_t seed) {
  return sample_generic_coefficients(
      {"wA", "wB", "gAB", "gBA"}, seed,
      {Constraint::Nonzero, Constraint::DistinctSquares, Constraint::AvoidGammaDegenerate});
}

CoefficientAssignment hyper_coeffs(std::uint64_t seed) {
  return sample_generic_coefficients({"delta", "gamma", "w1", "w"}, seed, {Constraint::Nonzero});
}

CoefficientAssignment grid_coeffs(std::uint64_t seed) {
  return sample_generic_coefficients({"wA", "wB", "wC", "gA", "gB", "gC"}, seed,
                                     {Constraint::Nonzero});
}

}  // namespace

TEST_CASE("decoupling chain passes for both parities") {
  for (int n : {3, 4, 5, 6}) {
    auto cs = verify_lemma_decouple(n, chain_coeffs(1));
    CHECK(!cs.skipped());
    CHECK(cs.passed());
  }
}

TEST_CASE("decoupling passes trivially with zero pair couplings") {
  auto c = chain_coeffs(1);
  c.set("gAB", Rational(0));
  c.set("gBA", Rational(0));
  auto cs = verify_lemma_decouple(3, c);
  CHECK(cs.passed());
}

TEST_CASE("even-odd split passes generically and gates its hypothesis") {
  for (int n : {3, 4, 5, 6}) {
    auto cs = verify_even_odd(n, chain_coeffs(2));
    CHECK(cs.passed());
  }
  auto sym = chain_coeffs(2);
  sym.set("wB", sym.at("wA"));
  auto gated = verify_even_odd(3, sym);
  CHECK(gated.skipped());
  CHECK(gated.skip_reason.find("wA^2 != wB^2") != std::string::npos);
}

TEST_CASE("generator separation passes on both branches") {
  auto odd = verify_sep_generators(5, chain_coeffs(3));
  CHECK(odd.passed());
  CHECK(odd.params.at("branch") == "odd");
  auto even = verify_sep_generators(6, chain_coeffs(3));
  CHECK(even.passed());
  CHECK(even.params.at("branch") == "even");
  // the even branch records the degeneracy findings as passing checks
  bool found_finding = false;
  for (const auto& check : even.checks) {
    if (check.name.find("finding") != std::string::npos) {
      found_finding = true;
      CHECK(check.status == IdentityStatus::Pass);
    }
  }
  CHECK(found_finding);
}

TEST_CASE("generator separation gates on the coupling constraints") {
  auto c = chain_coeffs(3);
  c.set("gAB", Rational(2));
  c.set("gBA", Rational(1));  // gAB^2 == 4 gBA^2
  auto cs = verify_sep_generators(6, c);
  CHECK(cs.skipped());
  CHECK(cs.skip_reason.find("gamma") != std::string::npos);

  c.set("gBA", Rational(2));  // gAB^2 == gBA^2
  CHECK(verify_sep_generators(6, c).skipped());
}

TEST_CASE("X ladder covers every k on odd chains and refuses even n") {
  for (int n : {3, 5}) {
    for (int k = 1; k <= n; ++k) {
      auto cs = verify_separation_X(n, k, chain_coeffs(4));
      CHECK(!cs.skipped());
      CHECK(cs.passed());
    }
  }
  auto refused = verify_separation_X(4, 4, chain_coeffs(4));
  CHECK(refused.skipped());
  CHECK(refused.skip_reason.find("odd") != std::string::npos);
}

TEST_CASE("cnot identity passes at the exact angle and fails off it") {
  auto cs = verify_cnot_identity();
  CHECK(cs.passed());
  auto off = verify_cnot_identity(0.01);
  CHECK(!off.passed());
}

TEST_CASE("grid recursion replays for sides 2 and 3") {
  for (int side : {2, 3}) {
    auto cs = verify_grid_recursion(side, grid_coeffs(5));
    CHECK(!cs.skipped());
    CHECK(cs.passed());
  }
  CHECK(verify_grid_recursion(4, grid_coeffs(5)).skipped());
}

TEST_CASE("hyper walk passes and halts cleanly at delta zero") {
  for (int n : {3, 4, 6}) {
    auto cs = verify_hyper_step(n, hyper_coeffs(6));
    CHECK(cs.passed());
  }
  auto frozen = hyper_coeffs(6);
  frozen.set("delta", Rational(0));
  auto halted = verify_hyper_step(3, frozen);
  CHECK(halted.passed());
  bool saw_halt = false;
  for (const auto& check : halted.checks) saw_halt |= check.name == "walk-halted-delta-zero";
  CHECK(saw_halt);
}

TEST_CASE("identity outcomes are coefficient generic across seeds") {
  for (std::uint64_t seed = 10; seed < 20; ++seed) {
    CHECK(verify_lemma_decouple(4, chain_coeffs(seed)).passed());
    CHECK(verify_even_odd(5, chain_coeffs(seed)).passed());
    CHECK(verify_sep_generators(5, chain_coeffs(seed)).passed());
    CHECK(verify_sep_generators(6, chain_coeffs(seed)).passed());
    CHECK(verify_separation_X(5, 5, chain_coeffs(seed)).passed());
    CHECK(verify_hyper_step(4, hyper_coeffs(seed)).passed());
  }
}

TEST_CASE("run_all aggregates every family and its negative controls") {
  auto report = run_all(1);
  CHECK(report.all_pass);
  CHECK(report.negative_controls_total >= 7);
  CHECK(report.negative_controls_failed_as_expected == report.negative_controls_total);
  std::size_t regular = 0, skipped = 0;
  for (const auto& cs : report.cases) {
    if (cs.name.rfind("control/", 0) == 0) continue;
    ++regular;
    skipped += cs.skipped();
  }
  CHECK(regular >= 17);
  CHECK(skipped == 0);
}

TEST_CASE("adversarial seeds skip with a reason instead of failing") {
  auto c = chain_coeffs(1);
  c.set("wA", Rational(1, 2));
  c.set("wB", Rational(-1, 2));  // wA^2 == wB^2
  auto cs = verify_even_odd(4, c);
  CHECK(cs.skipped());
  CHECK(!cs.passed());
  CHECK(cs.skip_reason.size() > 0);
}
