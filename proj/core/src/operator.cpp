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

#include "qlie/operator.hpp"

#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qlie {

Permutation::Permutation(std::vector<std::uint32_t> image_1based) : image_(std::move(image_1based)) {
  std::uint32_t n = static_cast<std::uint32_t>(image_.size());
  if (n == 0) throw InputError("empty permutation");
  std::vector<bool> seen(n, false);
  for (std::uint32_t v : image_) {
    if (v < 1 || v > n || seen[v - 1]) throw InputError("permutation is not a bijection on 1..n");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(std::uint32_t n) {
  std::vector<std::uint32_t> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(std::uint32_t n, const std::string& cycles) {
  std::vector<std::uint32_t> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < cycles.size() && std::isspace(static_cast<unsigned char>(cycles[i]))) ++i;
  };
  skip_ws();
  while (i < cycles.size()) {
    if (cycles[i] != '(') throw InputError("cycle notation: expected '('");
    ++i;
    std::vector<std::uint32_t> cyc;
    while (true) {
      skip_ws();
      if (i < cycles.size() && cycles[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[i]))) ++i;
      if (start == i) throw InputError("cycle notation: expected vertex number");
      std::uint32_t v = static_cast<std::uint32_t>(std::stoul(cycles.substr(start, i - start)));
      if (v < 1 || v > n) throw InputError("cycle notation: vertex out of range");
      cyc.push_back(v);
    }
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      im[cyc[j] - 1] = cyc[(j + 1) % cyc.size()];
    }
    skip_ws();
  }
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (std::uint32_t q = 1; q <= size(); ++q) {
    if (apply(q) != q) return false;
  }
  return true;
}

std::string Permutation::cycles() const {
  std::vector<bool> seen(size(), false);
  std::string out;
  for (std::uint32_t q = 1; q <= size(); ++q) {
    if (seen[q - 1] || apply(q) == q) continue;
    std::string cyc = "(" + std::to_string(q);
    seen[q - 1] = true;
    for (std::uint32_t v = apply(q); v != q; v = apply(v)) {
      seen[v - 1] = true;
      cyc += " " + std::to_string(v);
    }
    out += cyc + ")";
  }
  return out.empty() ? "()" : out;
}

namespace {

struct OperatorLexer {
  const std::string& text;
  std::size_t i = 0;

  void skip_ws() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= text.size();
  }
  char peek() {
    skip_ws();
    return i < text.size() ? text[i] : '\0';
  }
  char take() {
    skip_ws();
    return text[i++];
  }
};

}  // namespace

Operator parse_operator(std::uint32_t n, const std::string& text) {
  OperatorLexer lx{text};
  std::vector<Operator::Term> terms;
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      lx.take();
      sign = (c == '-') ? -1 : 1;
    } else if (!first) {
      throw InputError("operator text: expected '+' or '-' between terms");
    }
    first = false;

    // one term: factors and at most one leading coefficient, '*'-separated
    Rational coeff(sign);
    bool saw_coeff = false, saw_factor = false;
    std::uint64_t x = 0, z = 0;
    bool expect_atom = true;
    while (expect_atom) {
      char p = lx.peek();
      bool paren = false;
      if (p == '(') {
        lx.take();
        paren = true;
        p = lx.peek();
      }
      if (std::isdigit(static_cast<unsigned char>(p)) || p == '-' || p == '+') {
        if (saw_coeff || saw_factor) throw InputError("operator text: coefficient must lead its term");
        std::size_t start = lx.i;
        if (p == '-' || p == '+') ++lx.i;
        while (lx.i < lx.text.size() &&
               (std::isdigit(static_cast<unsigned char>(lx.text[lx.i])) || lx.text[lx.i] == '/')) {
          ++lx.i;
        }
        coeff = coeff * Rational::parse(lx.text.substr(start, lx.i - start));
        saw_coeff = true;
      } else if (p == 'X' || p == 'Y' || p == 'Z' || p == 'I') {
        lx.take();
        if (p != 'I') {
          std::size_t start = lx.i;
          while (lx.i < lx.text.size() && std::isdigit(static_cast<unsigned char>(lx.text[lx.i]))) ++lx.i;
          if (start == lx.i) throw InputError("operator text: axis letter needs a qubit index");
          std::uint32_t q = static_cast<std::uint32_t>(std::stoul(lx.text.substr(start, lx.i - start)));
          if (q < 1 || q > n) throw InputError("operator text: qubit index out of range");
          std::uint64_t bit = 1ULL << (q - 1);
          if ((x | z) & bit) throw InputError("operator text: repeated qubit in one term");
          if (p == 'X' || p == 'Y') x |= bit;
          if (p == 'Z' || p == 'Y') z |= bit;
        }
        saw_factor = true;
      } else {
        throw InputError("operator text: unexpected character");
      }
      if (paren) {
        if (lx.peek() != ')') throw InputError("operator text: missing ')'");
        lx.take();
      }
      if (lx.peek() == '*') {
        lx.take();
        expect_atom = true;
      } else {
        expect_atom = false;
      }
    }
    if (!saw_factor && !saw_coeff) throw InputError("operator text: empty term");
    if (!saw_factor) {
      // bare coefficient means a multiple of the identity string
      terms.emplace_back(PauliString::identity(n), coeff);
    } else {
      terms.emplace_back(PauliString::from_masks(n, x, z), coeff);
    }
  }
  if (terms.empty()) throw InputError("operator text: no terms");
  return Operator::from_terms(n, std::move(terms));
}

OperatorF to_float(const Operator& a) {
  std::vector<OperatorF::Term> terms;
  terms.reserve(a.size());
  for (const auto& [p, c] : a.terms()) terms.emplace_back(p, c.to_double());
  return OperatorF::from_terms(a.num_qubits(), std::move(terms));
}

Operator content_normalized(const Operator& a) {
  if (a.is_zero()) return a;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& [p, c] : a.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num().get_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (a.terms().front().second.sign() < 0) scale = -scale;
  return a.scaled(Rational(scale));
}

OperatorF content_normalized(const OperatorF& a) {
  if (a.is_zero()) return a;
  double big = 0;
  for (const auto& [p, c] : a.terms()) big = std::max(big, std::abs(c));
  return a.scaled(1.0 / (a.terms().front().second < 0 ? -big : big));
}

std::size_t max_coefficient_bits(const Operator& a) {
  std::size_t m = 0;
  for (const auto& [p, c] : a.terms()) m = std::max(m, c.bit_size());
  return m;
}

void enforce_bit_budget(const Operator& a, std::size_t bit_budget) {
  for (const auto& [p, c] : a.terms()) {
    if (c.bit_size() > bit_budget) {
      throw OverflowGuard("exact coefficient exceeded the " + std::to_string(bit_budget) +
                          "-bit budget at " + p.str() +
                          "; renormalize the generators or switch to float mode");
    }
  }
}

}  // namespace qlie
