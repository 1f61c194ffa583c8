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

#include "qlie/dense.hpp"

#include <bit>
#include <complex>

namespace qlie {

namespace {

// Index bit of qubit q (1-based) with qubit 1 most significant.
std::uint64_t index_mask(std::uint32_t n, std::uint64_t qubit_mask) {
  std::uint64_t out = 0;
  for (std::uint32_t q = 1; q <= n; ++q) {
    if (qubit_mask & (1ULL << (q - 1))) out |= 1ULL << (n - q);
  }
  return out;
}

template <class Scalar>
Eigen::MatrixXcd to_dense_impl(const BasicOperator<Scalar>& a, std::uint32_t dense_limit) {
  std::uint32_t n = a.num_qubits();
  if (n > dense_limit) {
    throw InputError("dense conversion limited to " + std::to_string(dense_limit) + " qubits");
  }
  const std::uint64_t dim = 1ULL << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  static const std::complex<double> kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& [p, c] : a.terms()) {
    std::uint64_t xi = index_mask(n, p.x);
    std::uint64_t zi = index_mask(n, p.z);
    std::complex<double> base = kPhase[std::popcount(p.x & p.z) % 4] * to_double(c);
    for (std::uint64_t col = 0; col < dim; ++col) {
      double sign = (std::popcount(zi & col) & 1) ? -1.0 : 1.0;
      m(col ^ xi, col) += base * sign;
    }
  }
  return m;
}

}  // namespace

Eigen::MatrixXcd to_dense(const Operator& a, std::uint32_t dense_limit) {
  return to_dense_impl(a, dense_limit);
}

Eigen::MatrixXcd to_dense(const OperatorF& a, std::uint32_t dense_limit) {
  return to_dense_impl(a, dense_limit);
}

Eigen::MatrixXcd hermitian_exp(const Eigen::MatrixXcd& h, double theta) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXcd phases(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    phases(i) = std::exp(std::complex<double>(0, theta * es.eigenvalues()(i)));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace qlie
