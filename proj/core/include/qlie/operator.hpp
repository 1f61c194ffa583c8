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

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qlie/pauli.hpp"
#include "qlie/rational.hpp"

namespace qlie {

/**
 * Hermitian operator as a sparse real-coefficient combination of Pauli
 * strings. Terms are kept sorted in canonical string order with no zero
 * coefficients, so equality is structural. The scalar is either Rational
 * (exact mode) or double (float mode).
 */
template <class Scalar>
class BasicOperator {
 public:
  using Term = std::pair<PauliString, Scalar>;

  BasicOperator() = default;
  explicit BasicOperator(std::uint32_t n) : n_(n) {}

  /** Canonicalizes: sorts, merges duplicates, drops zeros. */
  static BasicOperator from_terms(std::uint32_t n, std::vector<Term> terms) {
    BasicOperator out(n);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return canonical_less(a.first, b.first); });
    for (auto& t : terms) {
      if (t.first.n != n) throw DimensionMismatch("operator term qubit count differs from operator");
      if (!out.terms_.empty() && out.terms_.back().first == t.first) {
        out.terms_.back().second += t.second;
      } else {
        out.terms_.push_back(std::move(t));
      }
    }
    out.drop_zeros();
    return out;
  }

  std::uint32_t num_qubits() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /** Coefficient of a string, zero if absent. */
  Scalar coefficient(const PauliString& p) const {
    auto it = find(p);
    return it == terms_.end() ? Scalar{} : it->second;
  }

  bool contains(const PauliString& p) const { return find(p) != terms_.end(); }

  /** True iff no term is the identity string. */
  bool is_traceless() const {
    return terms_.empty() || !terms_.front().first.is_identity();
  }

  BasicOperator& operator+=(const BasicOperator& o) { axpy(scalar_from_int(Scalar{}, 1), o); return *this; }
  BasicOperator& operator-=(const BasicOperator& o) { axpy(scalar_from_int(Scalar{}, -1), o); return *this; }
  friend BasicOperator operator+(BasicOperator a, const BasicOperator& b) { return a += b; }
  friend BasicOperator operator-(BasicOperator a, const BasicOperator& b) { return a -= b; }
  friend BasicOperator operator*(const Scalar& s, const BasicOperator& a) { return a.scaled(s); }
  BasicOperator operator-() const { return scaled(-scalar_from_int(Scalar{}, 1)); }

  BasicOperator scaled(const Scalar& s) const {
    BasicOperator out(n_);
    if (scalar_is_zero(s)) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.second = t.second * s;
    return out;
  }

  /** this += s * o, merging sorted term lists. */
  void axpy(const Scalar& s, const BasicOperator& o) {
    if (o.n_ != n_) throw DimensionMismatch("operator qubit counts differ in sum");
    if (scalar_is_zero(s) || o.is_zero()) return;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && canonical_less(a->first, b->first))) {
        merged.push_back(*a++);
      } else if (a == terms_.end() || canonical_less(b->first, a->first)) {
        merged.emplace_back(b->first, s * b->second);
        ++b;
      } else {
        Scalar c = a->second + s * b->second;
        if (!scalar_is_zero(c)) merged.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(merged);
  }

  friend bool operator==(const BasicOperator& a, const BasicOperator& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  typename std::vector<Term>::const_iterator find(const PauliString& p) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                               [](const Term& t, const PauliString& s) { return canonical_less(t.first, s); });
    if (it != terms_.end() && it->first == p) return it;
    return terms_.end();
  }

  void drop_zeros() {
    std::erase_if(terms_, [](const Term& t) { return scalar_is_zero(t.second); });
  }

  std::uint32_t n_ = 0;
  std::vector<Term> terms_;
};

using Operator = BasicOperator<Rational>;
using OperatorF = BasicOperator<double>;

/**
 * The normalized Lie bracket (1/2i)[A, B]. Only anticommuting string pairs
 * contribute; each contributes one string with a real +- coefficient
 * product, so the result is again a real-coefficient Hermitian operator.
 */
template <class Scalar>
BasicOperator<Scalar> bracket(const BasicOperator<Scalar>& a, const BasicOperator<Scalar>& b) {
  if (a.num_qubits() != b.num_qubits()) throw DimensionMismatch("bracket operands differ in qubit count");
  std::unordered_map<PauliString, Scalar, PauliStringHash> acc;
  acc.reserve(a.size() * 2);
  for (const auto& [p, cp] : a.terms()) {
    for (const auto& [q, cq] : b.terms()) {
      if (commutes(p, q)) continue;
      PauliProduct pr = pauli_product(p, q);
      // (1/2i)(PQ - QP) = (1/2i) * 2 * i^k * R = i^(k-1) * R with k odd.
      Scalar c = cp * cq;
      if (pr.phase_exponent == 3) c = -c;
      auto [it, fresh] = acc.try_emplace(pr.result, c);
      if (!fresh) it->second += c;
    }
  }
  std::vector<typename BasicOperator<Scalar>::Term> terms;
  terms.reserve(acc.size());
  for (auto& kv : acc) terms.emplace_back(kv.first, std::move(kv.second));
  return BasicOperator<Scalar>::from_terms(a.num_qubits(), std::move(terms));
}

/** Canonical sparse sum of scaled operators. */
template <class Scalar>
BasicOperator<Scalar> linear_combine(const std::vector<std::pair<Scalar, BasicOperator<Scalar>>>& parts) {
  if (parts.empty()) return BasicOperator<Scalar>();
  std::uint32_t n = parts.front().second.num_qubits();
  BasicOperator<Scalar> out(n);
  for (const auto& [c, op] : parts) {
    if (op.num_qubits() != n) throw DimensionMismatch("linear_combine operands differ in qubit count");
    out.axpy(c, op);
  }
  return out;
}

/** A bijection of {1..n}; image(i) is 1-based. */
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> image_1based);
  static Permutation identity(std::uint32_t n);
  /** Parses cycle notation, e.g. "(1 4)(2 3)". Fixed points may be omitted. */
  static Permutation from_cycles(std::uint32_t n, const std::string& cycles);

  std::uint32_t size() const { return static_cast<std::uint32_t>(image_.size()); }
  std::uint32_t apply(std::uint32_t qubit) const { return image_[qubit - 1]; }
  bool is_identity() const;
  std::string cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> image_;
};

template <class Scalar>
BasicOperator<Scalar> apply_permutation(const BasicOperator<Scalar>& a, const Permutation& pi) {
  if (pi.size() != a.num_qubits()) throw InputError("permutation size differs from operator qubit count");
  std::vector<typename BasicOperator<Scalar>::Term> terms;
  terms.reserve(a.size());
  for (const auto& [p, c] : a.terms()) {
    std::uint64_t x = 0, z = 0;
    for (std::uint32_t q = 1; q <= a.num_qubits(); ++q) {
      std::uint64_t bit = 1ULL << (q - 1);
      std::uint64_t ibit = 1ULL << (pi.apply(q) - 1);
      if (p.x & bit) x |= ibit;
      if (p.z & bit) z |= ibit;
    }
    terms.emplace_back(PauliString::from_masks(a.num_qubits(), x, z), c);
  }
  return BasicOperator<Scalar>::from_terms(a.num_qubits(), std::move(terms));
}

/**
 * Canonical text rendering: terms sorted by (weight, lexicographic mask
 * order), e.g. "(3/2)*Z1*Z2 + (-1)*X3". The identity string renders as I.
 */
template <class Scalar>
std::string render_operator(const BasicOperator<Scalar>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [p, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + scalar_str(c) + ")*" + p.str();
  }
  return out;
}

/**
 * Parses the operator text grammar: terms joined by +/-, each
 * `coeff '*' factor ('*' factor)*` or a bare factor product; factor is an
 * axis letter with a 1-based qubit index; coeff is an integer or "p/q".
 */
Operator parse_operator(std::uint32_t n, const std::string& text);

OperatorF to_float(const Operator& a);

/**
 * The canonical representative of the ray through `a`: exact operators are
 * scaled to a primitive integer coefficient vector with positive leading
 * coefficient; float operators to leading coefficient one. Used by the
 * closure to contain coefficient growth (scaling never changes spans).
 */
Operator content_normalized(const Operator& a);
OperatorF content_normalized(const OperatorF& a);

/** Largest coefficient bit size in the operator (exact mode). */
std::size_t max_coefficient_bits(const Operator& a);

/** Throws OverflowGuard if any coefficient exceeds the bit budget. */
void enforce_bit_budget(const Operator& a, std::size_t bit_budget);
inline void enforce_bit_budget(const OperatorF&, std::size_t) {}

}  // namespace qlie
