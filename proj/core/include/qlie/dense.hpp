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

#include <Eigen/Dense>

#include "qlie/operator.hpp"

namespace qlie {

inline constexpr std::uint32_t kDefaultDenseLimit = 6;

/**
 * Dense 2^n x 2^n matrix of the operator. Qubit 1 is the leftmost tensor
 * factor (most significant index bit). Intended as the oracle path only;
 * refuses n above the dense limit.
 */
Eigen::MatrixXcd to_dense(const Operator& a, std::uint32_t dense_limit = kDefaultDenseLimit);
Eigen::MatrixXcd to_dense(const OperatorF& a, std::uint32_t dense_limit = kDefaultDenseLimit);

/** exp(i*theta*H) for Hermitian H, via eigendecomposition. */
Eigen::MatrixXcd hermitian_exp(const Eigen::MatrixXcd& h, double theta);

}  // namespace qlie
