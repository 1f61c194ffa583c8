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

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qlie {

/**
 * Exact rational coefficient, always in lowest terms with positive
 * denominator. Thin wrapper over GMP's mpq_class that adds the text format
 * used in problem files ("p/q" or "p") and bit-size accounting for the
 * overflow guard.
 */
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long num) : value_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /** Parses "p", "-p", or "p/q". Throws InputError on malformed text. */
  static Rational parse(const std::string& text);

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  /** Bits in numerator plus bits in denominator. */
  std::size_t bit_size() const;

  std::string str() const;

  const mpq_class& raw() const { return value_; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

 private:
  mpq_class value_;
};

inline bool scalar_is_zero(const Rational& v) { return v.is_zero(); }
inline bool scalar_is_zero(double v) { return v == 0.0; }
inline double to_double(const Rational& v) { return v.to_double(); }
inline double to_double(double v) { return v; }
inline Rational scalar_from_int(const Rational&, long k) { return Rational(k); }
inline double scalar_from_int(double, long k) { return static_cast<double>(k); }

std::string scalar_str(const Rational& v);
std::string scalar_str(double v);

}  // namespace qlie
