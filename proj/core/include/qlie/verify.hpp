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
#include <string>
#include <vector>

#include "qlie/hamlib.hpp"
#include "qlie/operator.hpp"

namespace qlie {

enum class IdentityStatus { Pass, Fail, Skipped };

std::string identity_status_name(IdentityStatus s);

struct IdentityCheck {
  std::string name;
  IdentityStatus status = IdentityStatus::Pass;
  std::string detail;  // failure diff or skip reason
};

/**
 * One replayed derivation: a named list of exact operator identities.
 * Every check is equality of canonical term maps; a failing check names
 * itself and renders the difference.
 */
struct IdentityCase {
  std::string name;
  std::map<std::string, std::string> params;
  std::vector<IdentityCheck> checks;
  std::string skip_reason;  // nonempty when the whole case was gated off

  bool skipped() const { return !skip_reason.empty(); }
  bool passed() const;
  std::size_t failed_count() const;
  const IdentityCheck* first_failure() const;
};

/**
 * The decoupling chain: H_YZ = br(H_Z,H_X), H_(1) = br(H_YZ,H_X) + H_Z,
 * H_(2) = br(H_(1),H_X); checks br(H_YZ + (1/3)H_(2), H_X) = -H_Z1 and
 * H_Z2 = H_Z - H_Z1, which yields both split components.
 */
IdentityCase verify_lemma_decouple(int n, const CoefficientAssignment& coeffs);

/**
 * Even/odd splitting: H_Y1 = br(H_Z1,H_X), then
 * wA^2*H_X + br(H_Z1,H_Y1) = (wA^2 - wB^2) * X_odd. Requires wA^2 != wB^2,
 * otherwise the case is skipped with the reason.
 */
IdentityCase verify_even_odd(int n, const CoefficientAssignment& coeffs);

/**
 * The full generator-separation chain for the applicable parity branch,
 * one check per derived identity, ending with reconstruction of H_AB and
 * H_BA (odd branch) or the degeneracy finding of the even branch.
 */
IdentityCase verify_sep_generators(int n, const CoefficientAssignment& coeffs);

/**
 * The X_j extraction ladder (n odd): X_1 from H_AB and H_X, then the
 * four-step commutator ladder climbing to X_k.
 */
IdentityCase verify_separation_X(int n, int k, const CoefficientAssignment& coeffs);

/**
 * Dense check that exp(i*(pi/4 + angle_offset) * (I - X_2 - Z_1 + Z_1 X_2))
 * equals CNOT up to global phase within 1e-12, plus the algebraic
 * expansion CNOT = (I + Z_1 + X_2 - Z_1 X_2)/2. A nonzero offset is the
 * negative control.
 */
IdentityCase verify_cnot_identity(double angle_offset = 0.0);

/**
 * Replays the square-grid first-row induction: builds H^(2) from the
 * pendant edge, runs the inductive bracket recipe with mechanical support
 * checks, and extracts every first-row X_j, Z_j and Z_j Z_{j+1}. Finishes
 * with the zero-forcing handoff from the controlled first row.
 */
IdentityCase verify_grid_recursion(int side, const CoefficientAssignment& coeffs);

/**
 * Hyperchain walk: separates Z_1 Z_2 Z_3, extracts X_2, then iterates the
 * pair-infection bracket pattern to the end of the chain. With delta = 0
 * the walk halts immediately (all cubic brackets vanish).
 */
IdentityCase verify_hyper_step(int n, const CoefficientAssignment& coeffs);

struct VerifyReport {
  std::vector<IdentityCase> cases;
  bool all_pass = false;
  std::size_t negative_controls_failed_as_expected = 0;
  std::size_t negative_controls_total = 0;
};

/**
 * Runs every identity case at the default parameter grid (n in {3,4,5,6},
 * side in {2,3}, ladder k sweeps) with seed-sampled generic coefficients,
 * plus one deliberately perturbed negative control per family, which must
 * fail.
 */
VerifyReport run_all(std::uint64_t seed);

}  // namespace qlie
