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

#include <random>

#include "qlie/dense.hpp"
#include "qlie/operator.hpp"

using namespace qlie;

namespace {

Operator op(std::uint32_t n, const std::string& text) { return parse_operator(n, text); }

Operator random_operator(std::mt19937_64& rng, std::uint32_t n, int max_terms, bool traceless = false) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<long> coeff(-50, 50);
  std::uniform_int_distribution<long> den(1, 9);
  std::vector<Operator::Term> terms;
  std::uint64_t lim = (1ULL << n) - 1;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    std::uint64_t x = rng() & lim, z = rng() & lim;
    if (traceless && x == 0 && z == 0) continue;
    long c = coeff(rng);
    if (c == 0) c = 1;
    terms.emplace_back(PauliString::from_masks(n, x, z), Rational(c, den(rng)));
  }
  if (terms.empty()) terms.emplace_back(PauliString::single(n, 1, 'Z'), Rational(1));
  return Operator::from_terms(n, std::move(terms));
}

}  // namespace

TEST_CASE("bracket of commuting single strings vanishes") {
  CHECK(bracket(op(2, "Z1"), op(2, "Z2")).is_zero());
}

TEST_CASE("bracket reproduces the decoupling pattern at n=2") {
  // (1/2i)[Z1 + Z2 + Z1 Z2, X1 + X2] = Y1 + Y2 + Y1 Z2 + Z1 Y2
  Operator hz = op(2, "Z1 + Z2 + Z1*Z2");
  Operator hx = op(2, "X1 + X2");
  CHECK(bracket(hz, hx) == op(2, "Y1 + Y2 + Y1*Z2 + Z1*Y2"));
}

TEST_CASE("bracket reproduces the hyperchain pair-infection step") {
  // (1/2i)[Z1 Y2, Z1 Z2 Z3] = X2 Z3
  CHECK(bracket(op(3, "Z1*Y2"), op(3, "Z1*Z2*Z3")) == op(3, "X2*Z3"));
}

TEST_CASE("linear_combine basics") {
  CHECK(linear_combine<Rational>({{Rational(1), op(1, "Z1")}, {Rational(-1), op(1, "Z1")}}).is_zero());
  CHECK(linear_combine<Rational>({{Rational(2), op(2, "Z1")}, {Rational(3), op(2, "Z2")}}) ==
        op(2, "2*Z1 + 3*Z2"));
}

TEST_CASE("apply_permutation relabels strings") {
  Operator a = op(4, "Z1 + 2*Z4");
  Permutation pi = Permutation::from_cycles(4, "(1 4)(2 3)");
  CHECK(apply_permutation(a, pi) == op(4, "Z4 + 2*Z1"));
  CHECK(apply_permutation(op(2, "Z1*Z2"), Permutation::identity(2)) == op(2, "Z1*Z2"));
  CHECK_THROWS_AS(Permutation(std::vector<std::uint32_t>{1, 1}), InputError);
}

TEST_CASE("permutation cycle round trip") {
  Permutation pi = Permutation::from_cycles(5, "(1 4)(2 3)");
  CHECK(pi.cycles() == "(1 4)(2 3)");
  CHECK(Permutation::from_cycles(5, pi.cycles()) == pi);
  CHECK(Permutation::identity(5).is_identity());
  CHECK(!pi.is_identity());
}

TEST_CASE("rendering follows the canonical term order") {
  Operator a = op(3, "-1*X3 + 3/2*Z1*Z2");
  CHECK(render_operator(a) == "(-1)*X3 + (3/2)*Z1*Z2");
  CHECK(render_operator(Operator(2)) == "0");
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(op(2, "Z1**"), InputError);
  CHECK_THROWS_AS(op(2, "Z9"), InputError);
  CHECK_THROWS_AS(op(2, "Q1"), InputError);
  CHECK_THROWS_AS(op(2, "Z1 Z2"), InputError);
  CHECK_THROWS_AS(op(2, ""), InputError);
  CHECK_THROWS_AS(op(2, "Z1*Z1"), InputError);
  CHECK_THROWS_AS(op(2, "3/0*Z1"), InputError);
}

TEST_CASE("parse-print-parse round trips on random operators") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::uint32_t n = 1 + rng() % 5;
    Operator a = random_operator(rng, n, 8);
    Operator b = parse_operator(n, render_operator(a));
    REQUIRE(a == b);
  }
}

TEST_CASE("bracket properties on randomized operators") {
  std::mt19937_64 rng(17);
  int jacobi_trials = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    std::uint32_t n = 1 + rng() % 4;
    Operator a = random_operator(rng, n, 6);
    Operator b = random_operator(rng, n, 6);

    // antisymmetry
    REQUIRE(bracket(a, b) == -bracket(b, a));

    // reality and canonical form are implicit in the type; tracelessness:
    Operator at = random_operator(rng, n, 6, true);
    Operator bt = random_operator(rng, n, 6, true);
    REQUIRE(bracket(at, bt).is_traceless());

    if (trial % 3 == 0) {
      Operator c = random_operator(rng, n, 4);
      Operator jacobi = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
      REQUIRE(jacobi.is_zero());
      ++jacobi_trials;
    }
  }
  CHECK(jacobi_trials >= 300);
}

TEST_CASE("dense consistency of the bracket") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    std::uint32_t n = 1 + rng() % 3;
    Operator a = random_operator(rng, n, 5);
    Operator b = random_operator(rng, n, 5);
    Eigen::MatrixXcd da = to_dense(a), db = to_dense(b);
    Eigen::MatrixXcd expect = (da * db - db * da) / std::complex<double>(0, 2);
    Eigen::MatrixXcd got = to_dense(bracket(a, b));
    REQUIRE((got - expect).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("to_dense basics") {
  CHECK((to_dense(op(1, "I")) - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
  Eigen::MatrixXcd z = to_dense(op(1, "Z1"));
  CHECK(z(0, 0) == std::complex<double>(1, 0));
  CHECK(z(1, 1) == std::complex<double>(-1, 0));
  // (I + Z1 + X2 - Z1 X2)/2 is the controlled-not matrix
  Eigen::MatrixXcd cnot = to_dense(op(2, "1/2*I + 1/2*Z1 + 1/2*X2 + -1/2*Z1*X2"));
  Eigen::MatrixXcd expect(4, 4);
  expect << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
  CHECK((cnot - expect).cwiseAbs().maxCoeff() < 1e-15);
  CHECK_THROWS_AS(to_dense(Operator(7)), InputError);
}

TEST_CASE("bracket dimension mismatch") {
  CHECK_THROWS_AS(bracket(op(2, "Z1"), op(3, "Z1")), DimensionMismatch);
}

TEST_CASE("overflow guard reports oversized coefficients") {
  Operator big = op(1, "123456789123456789123456789/2*Z1");
  CHECK_THROWS_AS(enforce_bit_budget(big, 16), OverflowGuard);
  enforce_bit_budget(big, 4096);  // no throw
  CHECK(max_coefficient_bits(big) > 64);
}

TEST_CASE("content normalization scales to a primitive integer vector") {
  Operator a = op(2, "2/3*Z1 + 4/9*Z2");
  Operator na = content_normalized(a);
  CHECK(na == op(2, "3*Z1 + 2*Z2"));
  CHECK(content_normalized(-a) == na);
  CHECK(content_normalized(Operator(2)).is_zero());
}

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse(" 7 ") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::parse("a/b"), InputError);
  CHECK_THROWS_AS(Rational::parse("1.5"), InputError);
}
