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

#include <bit>
#include <cstdint>
#include <functional>
#include <string>

#include "qlie/errors.hpp"

namespace qlie {

/**
 * One tensor product of I/X/Y/Z over n qubits (n <= 64), encoded as two
 * bit masks: bit j-1 of x is set iff qubit j carries X or Y, bit j-1 of z
 * is set iff qubit j carries Z or Y. Qubit indices are 1-based in the API.
 */
struct PauliString {
  std::uint32_t n = 0;
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  static PauliString identity(std::uint32_t n);
  /** axis is one of 'X', 'Y', 'Z'. */
  static PauliString single(std::uint32_t n, std::uint32_t qubit, char axis);
  static PauliString from_masks(std::uint32_t n, std::uint64_t x, std::uint64_t z);

  bool is_identity() const { return x == 0 && z == 0; }
  std::uint32_t weight() const { return static_cast<std::uint32_t>(std::popcount(x | z)); }
  /** 'I', 'X', 'Y' or 'Z' at a 1-based qubit index. */
  char axis_at(std::uint32_t qubit) const;

  std::string str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

/** Canonical order: weight first, then (x, z) as unsigned integers. */
bool canonical_less(const PauliString& a, const PauliString& b);

/** True iff the strings commute (symplectic form is zero). */
bool commutes(const PauliString& p, const PauliString& q);

struct PauliProduct {
  int phase_exponent;  // P*Q = i^phase_exponent * result, mod 4
  PauliString result;
};

/** Group law of the Pauli group: P*Q with its i^k phase. */
PauliProduct pauli_product(const PauliString& p, const PauliString& q);

struct PauliStringHash {
  std::size_t operator()(const PauliString& p) const noexcept {
    std::uint64_t h = p.x * 0x9e3779b97f4a7c15ULL;
    h ^= h >> 32;
    h += p.z * 0xc2b2ae3d27d4eb4fULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace qlie
