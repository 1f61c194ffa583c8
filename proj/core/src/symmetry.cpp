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

#include <algorithm>
#include <map>
#include <numeric>

#include "qlie/closure.hpp"

namespace qlie {

namespace {

PauliString permute_string(const PauliString& p, const std::vector<std::uint32_t>& image) {
  std::uint64_t x = 0, z = 0;
  std::uint64_t rest = p.x | p.z;
  while (rest) {
    int b = std::countr_zero(rest);
    rest &= rest - 1;
    std::uint64_t bit = 1ULL << b;
    std::uint64_t ibit = 1ULL << (image[b] - 1);
    if (p.x & bit) x |= ibit;
    if (p.z & bit) z |= ibit;
  }
  return PauliString{p.n, x, z};
}

// Invariance without materializing the permuted operator: every term must
// map onto a term with the same coefficient (term counts match, and the
// permutation acts bijectively on strings).
bool invariant_under(const Operator& op, const std::vector<std::uint32_t>& image) {
  for (const auto& [p, c] : op.terms()) {
    if (!(op.coefficient(permute_string(p, image)) == c)) return false;
  }
  return true;
}

}  // namespace

SymmetrySearchResult detect_permutation_symmetries(const Operator& hz, const Operator& hx,
                                                   const SymmetrySearchOptions& options) {
  if (hz.num_qubits() != hx.num_qubits()) throw DimensionMismatch("symmetry search: qubit counts differ");
  const std::uint32_t n = hz.num_qubits();
  SymmetrySearchResult out;
  std::uint64_t checks = 0;

  if (n <= options.exhaustive_limit) {
    std::vector<std::uint32_t> image(n);
    std::iota(image.begin(), image.end(), 1);
    do {
      if (++checks > options.max_checks) {
        out.complete = false;
        return out;
      }
      bool identity = true;
      for (std::uint32_t q = 0; q < n; ++q) {
        if (image[q] != q + 1) {
          identity = false;
          break;
        }
      }
      if (identity) continue;
      if (invariant_under(hz, image) && invariant_under(hx, image)) {
        out.certificates.push_back({Permutation(image)});
      }
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
  }

  // Beyond the exhaustive limit: assemble involutions out of vertex pairs
  // whose local term structure matches, and test each candidate exactly.
  out.complete = false;
  auto signature = [&](std::uint32_t v) {
    std::vector<std::string> sig;
    std::uint64_t bit = 1ULL << (v - 1);
    for (const auto& [p, c] : hz.terms()) {
      if ((p.x | p.z) & bit) {
        sig.push_back(std::to_string(p.weight()) + "|" + std::string(1, p.axis_at(v)) + "|" + c.str());
      }
    }
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  std::vector<std::vector<std::string>> sigs(n + 1);
  for (std::uint32_t v = 1; v <= n; ++v) sigs[v] = signature(v);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> compatible;
  for (std::uint32_t u = 1; u <= n; ++u) {
    for (std::uint32_t v = u + 1; v <= n; ++v) {
      if (sigs[u] == sigs[v]) compatible.emplace_back(u, v);
    }
  }
  std::vector<std::uint32_t> image(n);
  std::iota(image.begin(), image.end(), 1);
  // Try single swaps and greedy products of disjoint compatible swaps.
  for (std::size_t i = 0; i < compatible.size() && checks < options.max_checks; ++i) {
    auto reset = image;
    std::swap(image[compatible[i].first - 1], image[compatible[i].second - 1]);
    ++checks;
    if (invariant_under(hz, image) && invariant_under(hx, image)) {
      out.certificates.push_back({Permutation(image)});
    }
    for (std::size_t j = i + 1; j < compatible.size() && checks < options.max_checks; ++j) {
      auto [a, b] = compatible[i];
      auto [c, d] = compatible[j];
      if (a == c || a == d || b == c || b == d) continue;
      std::swap(image[c - 1], image[d - 1]);
      ++checks;
      if (invariant_under(hz, image) && invariant_under(hx, image)) {
        out.certificates.push_back({Permutation(image)});
      }
      std::swap(image[c - 1], image[d - 1]);
    }
    image = reset;
  }
  return out;
}

}  // namespace qlie
