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

#include "qlie/pauli.hpp"

namespace qlie {

namespace {

void check_qubit_count(std::uint32_t n) {
  if (n == 0 || n > 64) throw InputError("qubit count must be in 1..64");
}

std::uint64_t mask_for(std::uint32_t n) {
  return n == 64 ? ~0ULL : ((1ULL << n) - 1);
}

}  // namespace

PauliString PauliString::identity(std::uint32_t n) {
  check_qubit_count(n);
  return PauliString{n, 0, 0};
}

PauliString PauliString::single(std::uint32_t n, std::uint32_t qubit, char axis) {
  check_qubit_count(n);
  if (qubit < 1 || qubit > n) throw InputError("qubit index out of range");
  std::uint64_t bit = 1ULL << (qubit - 1);
  switch (axis) {
    case 'X':
      return PauliString{n, bit, 0};
    case 'Y':
      return PauliString{n, bit, bit};
    case 'Z':
      return PauliString{n, 0, bit};
    default:
      throw InputError(std::string("unknown Pauli axis '") + axis + "'");
  }
}

PauliString PauliString::from_masks(std::uint32_t n, std::uint64_t x, std::uint64_t z) {
  check_qubit_count(n);
  if ((x | z) & ~mask_for(n)) throw InputError("mask bits set beyond qubit count");
  return PauliString{n, x, z};
}

char PauliString::axis_at(std::uint32_t qubit) const {
  std::uint64_t bit = 1ULL << (qubit - 1);
  bool bx = x & bit, bz = z & bit;
  if (bx && bz) return 'Y';
  if (bx) return 'X';
  if (bz) return 'Z';
  return 'I';
}

std::string PauliString::str() const {
  if (is_identity()) return "I";
  std::string out;
  for (std::uint32_t q = 1; q <= n; ++q) {
    char a = axis_at(q);
    if (a == 'I') continue;
    if (!out.empty()) out += '*';
    out += a;
    out += std::to_string(q);
  }
  return out;
}

bool canonical_less(const PauliString& a, const PauliString& b) {
  std::uint32_t wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  if (a.x != b.x) return a.x < b.x;
  return a.z < b.z;
}

bool commutes(const PauliString& p, const PauliString& q) {
  if (p.n != q.n) throw DimensionMismatch("commutes: qubit counts differ");
  return (std::popcount((p.x & q.z) ^ (p.z & q.x)) & 1) == 0;
}

PauliProduct pauli_product(const PauliString& p, const PauliString& q) {
  if (p.n != q.n) throw DimensionMismatch("pauli_product: qubit counts differ");
  // With P(x,z) = i^{|x&z|} X^x Z^z, reordering Z^z1 past X^x2 picks up
  // (-1)^{|z1&x2|}; the remaining exponent balances the Y bookkeeping of
  // the inputs against the output.
  std::uint64_t x3 = p.x ^ q.x;
  std::uint64_t z3 = p.z ^ q.z;
  int k = std::popcount(p.x & p.z) + std::popcount(q.x & q.z) +
          2 * std::popcount(p.z & q.x) - std::popcount(x3 & z3);
  return PauliProduct{((k % 4) + 4) % 4, PauliString{p.n, x3, z3}};
}

}  // namespace qlie
