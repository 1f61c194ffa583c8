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

#include "qlie/rational.hpp"

#include <cctype>
#include <sstream>

#include "qlie/errors.hpp"

namespace qlie {

Rational::Rational(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("division by zero rational");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw InputError("empty rational literal");
  auto is_int = [](const std::string& t) {
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int(s)) throw InputError("malformed rational literal: " + text);
    return Rational(mpq_class(mpz_class(s)));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) throw InputError("malformed rational literal: " + text);
  mpz_class d(den);
  if (d == 0) throw InputError("rational with zero denominator: " + text);
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return Rational(q);
}

std::size_t Rational::bit_size() const {
  if (is_zero()) return 1;
  return mpz_sizeinbase(value_.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(value_.get_den().get_mpz_t(), 2);
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string scalar_str(const Rational& v) { return v.str(); }

std::string scalar_str(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace qlie
