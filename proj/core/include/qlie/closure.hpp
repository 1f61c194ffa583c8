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
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qlie/operator.hpp"

namespace qlie {

struct ClosureOptions {
  double tolerance = 1e-9;       // float mode rank decisions
  std::size_t bit_budget = 4096; // exact mode overflow guard
  int threads = 1;               // bracket generation within a round
  std::optional<std::size_t> max_dim;  // defaults to 4^n - 1
};

/**
 * Echelon-reduced spanning set of the generated Lie algebra. Rows are kept
 * fully reduced: each row's pivot string (its canonically smallest string,
 * normalized to coefficient one) occurs in no other row.
 */
template <class Scalar>
class LieBasis {
 public:
  LieBasis(std::uint32_t n, ClosureOptions options)
      : n_(n), options_(std::move(options)) {}

  std::uint32_t num_qubits() const { return n_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<BasicOperator<Scalar>>& rows() const { return rows_; }
  const ClosureOptions& options() const { return options_; }

  /**
   * Residual of the candidate against the basis: candidate minus its
   * projection on the pivots. Zero iff the candidate lies in the span.
   * If `expansion` is given, records (row index, coefficient) pairs such
   * that candidate = sum coeff*row + residual.
   */
  BasicOperator<Scalar> reduce(const BasicOperator<Scalar>& candidate,
                               std::vector<std::pair<std::size_t, Scalar>>* expansion = nullptr) const;

  /**
   * Reduces and, when the residual is nonzero, normalizes it to pivot
   * coefficient one, eliminates the new pivot from existing rows and
   * appends. Returns the new row index, or nullopt if the candidate was
   * already in the span.
   */
  std::optional<std::size_t> reduce_and_admit(const BasicOperator<Scalar>& candidate);

 private:
  std::uint32_t n_;
  ClosureOptions options_;
  std::vector<BasicOperator<Scalar>> rows_;
  std::unordered_map<PauliString, std::size_t, PauliStringHash> pivot_of_;
};

struct SymmetryCertificate {
  Permutation pi;
  // Certificates are constructed only after both residuals
  // apply_permutation(H, pi) - H verified exactly zero.
};

struct ClosureReport {
  std::uint32_t n = 0;
  std::size_t dimension = 0;
  bool universal = false;   // dimension == 4^n - 1
  bool early_exit = false;  // stopped because the cap was reached with work pending
  std::size_t rounds = 0;
  std::size_t bracket_count = 0;
  double wall_ms = 0.0;
};

/** 4^n - 1, the ambient traceless dimension. */
std::size_t ambient_dimension(std::uint32_t n);

/**
 * Computes the generated Lie algebra of iH for the given Hermitian
 * generators, bracketing each newly admitted row against every generator
 * (left-normed strategy). Candidates of one round are sorted canonically
 * before admission so results do not depend on thread count.
 */
template <class Scalar>
std::pair<LieBasis<Scalar>, ClosureReport> lie_closure(const std::vector<BasicOperator<Scalar>>& generators,
                                                       const ClosureOptions& options = {});

template <class Scalar>
struct MembershipResult {
  bool member = false;
  // target = sum coeff * row(pivot); pivots identify basis rows.
  std::vector<std::pair<PauliString, Scalar>> expansion;
};

template <class Scalar>
MembershipResult<Scalar> membership(const LieBasis<Scalar>& basis, const BasicOperator<Scalar>& target);

struct SymmetrySearchOptions {
  std::uint32_t exhaustive_limit = 10;     // full S_n scan up to here
  std::uint64_t max_checks = 20'000'000;   // invariance checks budget
};

struct SymmetrySearchResult {
  std::vector<SymmetryCertificate> certificates;
  bool complete = true;  // false when the budget cut the search short
};

/**
 * Finds nontrivial qubit permutations fixing both Hamiltonians exactly.
 * Above the exhaustive limit only involution candidates assembled from
 * compatible vertex pairs are tried, and the result is flagged incomplete.
 */
SymmetrySearchResult detect_permutation_symmetries(const Operator& hz, const Operator& hx,
                                                   const SymmetrySearchOptions& options = {});

/**
 * Independent verification path: dense skew-Hermitian matrices, float
 * Gram-Schmidt rank decisions. Only to_dense is shared with the sparse
 * engine. Requires n <= 3.
 */
std::size_t dense_closure_oracle(const std::vector<Operator>& generators, double tolerance = 1e-8);

/**
 * True iff the parts (which must sum to the whole exactly) pairwise
 * commute. Throws InputError when the sum check fails.
 */
bool separability_check(const Operator& whole, const std::vector<Operator>& parts);

extern template class LieBasis<Rational>;
extern template class LieBasis<double>;
extern template std::pair<LieBasis<Rational>, ClosureReport> lie_closure(const std::vector<Operator>&, const ClosureOptions&);
extern template std::pair<LieBasis<double>, ClosureReport> lie_closure(const std::vector<OperatorF>&, const ClosureOptions&);
extern template MembershipResult<Rational> membership(const LieBasis<Rational>&, const Operator&);
extern template MembershipResult<double> membership(const LieBasis<double>&, const OperatorF&);

}  // namespace qlie
