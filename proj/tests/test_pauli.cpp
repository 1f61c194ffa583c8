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

#include <complex>
#include <random>

#include "qlie/dense.hpp"
#include "qlie/pauli.hpp"

using namespace qlie;

namespace {

Eigen::Matrix2cd axis_matrix(char a) {
  Eigen::Matrix2cd m;
  const std::complex<double> i(0, 1);
  switch (a) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

Eigen::MatrixXcd string_matrix(const PauliString& p) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (std::uint32_t q = 1; q <= p.n; ++q) {
    Eigen::Matrix2cd f = axis_matrix(p.axis_at(q));
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    next.setZero();
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) next.block(r * m.rows(), c * m.cols(), m.rows(), m.cols()) = f(r, c) * m;
    }
    m = next;
  }
  return m;
}

}  // namespace

TEST_CASE("single-qubit relations") {
  auto z = PauliString::single(1, 1, 'Z');
  auto x = PauliString::single(1, 1, 'X');
  auto y = PauliString::single(1, 1, 'Y');

  // Z*Z = I
  auto p = pauli_product(z, z);
  CHECK(p.phase_exponent == 0);
  CHECK(p.result.is_identity());

  // Z*X = i Y
  p = pauli_product(z, x);
  CHECK(p.phase_exponent == 1);
  CHECK(p.result == y);

  CHECK(!commutes(z, x));
  CHECK(commutes(z, z));
}

TEST_CASE("two-qubit product phase from dense matrices") {
  // (Z1 Z2)(X1 X2) = i^2 Y1 Y2, derived by multiplying the 4x4 matrices
  auto zz = PauliString::from_masks(2, 0b00, 0b11);
  auto xx = PauliString::from_masks(2, 0b11, 0b00);
  auto yy = PauliString::from_masks(2, 0b11, 0b11);
  auto p = pauli_product(zz, xx);
  CHECK(p.phase_exponent == 2);
  CHECK(p.result == yy);
  CHECK(commutes(zz, xx));

  Eigen::MatrixXcd lhs = string_matrix(zz) * string_matrix(xx);
  Eigen::MatrixXcd rhs = std::pow(std::complex<double>(0, 1), p.phase_exponent) * string_matrix(yy);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("disjoint support commutes") {
  auto z1 = PauliString::single(2, 1, 'Z');
  auto z2 = PauliString::single(2, 2, 'Z');
  CHECK(commutes(z1, z2));
}

TEST_CASE("product phase matches dense matrices exhaustively for n <= 2") {
  for (std::uint32_t n = 1; n <= 2; ++n) {
    std::uint64_t lim = 1ULL << n;
    for (std::uint64_t x1 = 0; x1 < lim; ++x1) {
      for (std::uint64_t z1 = 0; z1 < lim; ++z1) {
        for (std::uint64_t x2 = 0; x2 < lim; ++x2) {
          for (std::uint64_t z2 = 0; z2 < lim; ++z2) {
            auto p = PauliString::from_masks(n, x1, z1);
            auto q = PauliString::from_masks(n, x2, z2);
            auto pr = pauli_product(p, q);
            Eigen::MatrixXcd lhs = string_matrix(p) * string_matrix(q);
            Eigen::MatrixXcd rhs =
                std::pow(std::complex<double>(0, 1), pr.phase_exponent) * string_matrix(pr.result);
            REQUIRE((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
            bool comm = (string_matrix(p) * string_matrix(q) - string_matrix(q) * string_matrix(p))
                            .cwiseAbs()
                            .maxCoeff() < 1e-13;
            REQUIRE(commutes(p, q) == comm);
          }
        }
      }
    }
  }
}

TEST_CASE("weight and identity invariants") {
  auto id = PauliString::identity(4);
  CHECK(id.weight() == 0);
  CHECK(id.is_identity());
  auto s = PauliString::from_masks(4, 0b0101, 0b0011);
  CHECK(s.weight() == 3);
  CHECK(s.axis_at(1) == 'Y');
  CHECK(s.axis_at(2) == 'Z');
  CHECK(s.axis_at(3) == 'X');
  CHECK(s.axis_at(4) == 'I');
  CHECK(s.str() == "Y1*Z2*X3");
}

TEST_CASE("mask bounds are enforced") {
  CHECK_THROWS_AS(PauliString::from_masks(2, 0b100, 0), InputError);
  CHECK_THROWS_AS(PauliString::single(2, 3, 'Z'), InputError);
  CHECK_THROWS_AS(PauliString::single(2, 1, 'Q'), InputError);
  auto a = PauliString::single(2, 1, 'Z');
  auto b = PauliString::single(3, 1, 'Z');
  CHECK_THROWS_AS(pauli_product(a, b), DimensionMismatch);
  CHECK_THROWS_AS(commutes(a, b), DimensionMismatch);
}

TEST_CASE("canonical order sorts by weight then masks") {
  auto z1 = PauliString::single(2, 1, 'Z');
  auto x1 = PauliString::single(2, 1, 'X');
  auto zz = PauliString::from_masks(2, 0, 0b11);
  CHECK(canonical_less(z1, zz));
  CHECK(canonical_less(x1, zz));
  CHECK(canonical_less(z1, x1));  // x mask 0 before x mask 1
  CHECK(!canonical_less(z1, z1));
}

TEST_CASE("randomized product properties") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    std::uint32_t n = 1 + rng() % 4;
    std::uint64_t lim = (1ULL << n) - 1;
    auto p = PauliString::from_masks(n, rng() & lim, rng() & lim);
    auto q = PauliString::from_masks(n, rng() & lim, rng() & lim);
    auto pq = pauli_product(p, q);
    auto qp = pauli_product(q, p);
    CHECK(pq.result == qp.result);
    if (commutes(p, q)) {
      CHECK(pq.phase_exponent == qp.phase_exponent);
    } else {
      CHECK((pq.phase_exponent + 2) % 4 == qp.phase_exponent);
      CHECK(pq.phase_exponent % 2 == 1);  // anticommuting product is imaginary
    }
    // involution: P*P = I with no phase
    auto sq = pauli_product(p, p);
    CHECK(sq.result.is_identity());
    CHECK(sq.phase_exponent == 0);
  }
}
