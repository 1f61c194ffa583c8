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

#include "qlie/closure.hpp"

#include <chrono>
#include <cmath>
#include <thread>

#include "qlie/dense.hpp"

namespace qlie {

std::size_t ambient_dimension(std::uint32_t n) {
  if (n > 30) throw InputError("closure supports at most 30 qubits");
  return (std::size_t{1} << (2 * n)) - 1;
}

namespace {

// Prime-field scalar used by the exact engine's certifying accelerator:
// rank over F_p is a lower bound on rank over Q, so reaching the ambient
// dimension modulo p proves the rational verdict without rational fill.
struct Fp {
  static constexpr std::uint64_t kP = (1ULL << 61) - 1;  // Mersenne prime
  std::uint64_t v = 0;

  friend Fp operator+(Fp a, Fp b) { return {(a.v + b.v) % kP}; }
  friend Fp operator-(Fp a, Fp b) { return {(a.v + kP - b.v) % kP}; }
  friend Fp operator*(Fp a, Fp b) {
    return {static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.v) * b.v) % kP)};
  }
  Fp operator-() const { return {v == 0 ? 0 : kP - v}; }
  Fp& operator+=(Fp o) { v = (v + o.v) % kP; return *this; }
  Fp& operator-=(Fp o) { v = (v + kP - o.v) % kP; return *this; }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }
  friend bool operator<(Fp a, Fp b) { return a.v < b.v; }

  Fp pow(std::uint64_t e) const {
    Fp base = *this, acc{1};
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }
};

Fp inverse(Fp a) { return a.pow(Fp::kP - 2); }

inline bool scalar_is_zero(Fp a) { return a.v == 0; }
inline Fp scalar_from_int(Fp, long k) {
  long long m = k % static_cast<long long>(Fp::kP);
  if (m < 0) m += Fp::kP;
  return Fp{static_cast<std::uint64_t>(m)};
}
inline void enforce_bit_budget(const BasicOperator<Fp>&, std::size_t) {}
inline BasicOperator<Fp> content_normalized(const BasicOperator<Fp>& a) {
  if (a.is_zero()) return a;
  return a.scaled(inverse(a.terms().front().second));
}

template <class S>
inline constexpr bool kExactScalar = !std::is_same_v<S, double>;

double abs_value(const Rational& v) { return std::abs(v.to_double()); }
double abs_value(double v) { return std::abs(v); }
double abs_value(Fp) { return 1.0; }

template <class Scalar>
Scalar invert(const Scalar& v);

template <>
Rational invert(const Rational& v) { return Rational(1) / v; }

template <>
double invert(const double& v) { return 1.0 / v; }

template <>
Fp invert(const Fp& v) { return inverse(v); }

std::optional<Fp> to_fp(const Rational& r) {
  const mpz_class p_mpz(static_cast<unsigned long>(Fp::kP));
  mpz_class nm = r.raw().get_num() % p_mpz;
  mpz_class dm = r.raw().get_den() % p_mpz;
  if (nm < 0) nm += p_mpz;
  if (dm == 0) return std::nullopt;
  return Fp{nm.get_ui()} * inverse(Fp{dm.get_ui()});
}

std::optional<BasicOperator<Fp>> to_fp(const Operator& a) {
  std::vector<BasicOperator<Fp>::Term> terms;
  terms.reserve(a.size());
  for (const auto& [p, c] : a.terms()) {
    auto f = to_fp(c);
    if (!f) return std::nullopt;
    terms.emplace_back(p, *f);
  }
  return BasicOperator<Fp>::from_terms(a.num_qubits(), std::move(terms));
}

// Deterministic total order on operators for round-stable admission.
template <class Scalar>
bool operator_less(const BasicOperator<Scalar>& a, const BasicOperator<Scalar>& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    if (!(ta[i].first == tb[i].first)) return canonical_less(ta[i].first, tb[i].first);
    if (ta[i].second != tb[i].second) return ta[i].second < tb[i].second;
  }
  return ta.size() < tb.size();
}

}  // namespace

template <class Scalar>
BasicOperator<Scalar> LieBasis<Scalar>::reduce(const BasicOperator<Scalar>& candidate,
                                               std::vector<std::pair<std::size_t, Scalar>>* expansion) const {
  if (candidate.num_qubits() != n_) throw DimensionMismatch("reduce: qubit counts differ");
  std::unordered_map<PauliString, Scalar, PauliStringHash> acc;
  acc.reserve(candidate.size() * 2);
  double norm_ref = 1.0;
  std::vector<std::pair<std::size_t, Scalar>> hits;
  for (const auto& [p, c] : candidate.terms()) {
    acc.emplace(p, c);
    norm_ref = std::max(norm_ref, abs_value(c));
    auto it = pivot_of_.find(p);
    if (it != pivot_of_.end()) hits.emplace_back(it->second, c);
  }
  for (const auto& [ri, c] : hits) {
    for (const auto& [s, v] : rows_[ri].terms()) {
      auto [it, fresh] = acc.try_emplace(s, Scalar{});
      Scalar sub = c * v;
      if constexpr (!kExactScalar<Scalar>) {
        // snap relative to the largest magnitude that entered the sum
        norm_ref = std::max(norm_ref, abs_value(sub));
      }
      it->second -= sub;
    }
    if (expansion) expansion->emplace_back(ri, c);
  }
  std::vector<typename BasicOperator<Scalar>::Term> terms;
  terms.reserve(acc.size());
  for (auto& [s, v] : acc) {
    if (scalar_is_zero(v)) continue;
    if (!kExactScalar<Scalar> && abs_value(v) <= options_.tolerance * norm_ref) continue;
    terms.emplace_back(s, std::move(v));
  }
  return BasicOperator<Scalar>::from_terms(n_, std::move(terms));
}

template <class Scalar>
std::optional<std::size_t> LieBasis<Scalar>::reduce_and_admit(const BasicOperator<Scalar>& candidate) {
  BasicOperator<Scalar> residual = reduce(candidate);
  if (residual.is_zero()) return std::nullopt;
  if (!residual.is_traceless()) {
    throw InputError("closure encountered an identity component; generators must be traceless");
  }
  const PauliString pivot = residual.terms().front().first;
  BasicOperator<Scalar> row = residual.scaled(invert(residual.terms().front().second));
  enforce_bit_budget(row, options_.bit_budget);
  for (std::size_t ri = 0; ri < rows_.size(); ++ri) {
    Scalar c = rows_[ri].coefficient(pivot);
    if (!scalar_is_zero(c)) {
      rows_[ri].axpy(-c, row);
      enforce_bit_budget(rows_[ri], options_.bit_budget);
    }
  }
  std::size_t index = rows_.size();
  rows_.push_back(std::move(row));
  pivot_of_.emplace(pivot, index);
  return index;
}

namespace {

std::optional<std::pair<LieBasis<Rational>, ClosureReport>> modular_full_rank_shortcut(
    const std::vector<Operator>& generators, const ClosureOptions& options);

template <class Scalar>
std::optional<std::pair<LieBasis<Scalar>, ClosureReport>> exact_shortcut(
    const std::vector<BasicOperator<Scalar>>& generators, const ClosureOptions& options) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return modular_full_rank_shortcut(generators, options);
  } else {
    (void)generators;
    (void)options;
    return std::nullopt;
  }
}

}  // namespace

template <class Scalar>
std::pair<LieBasis<Scalar>, ClosureReport> lie_closure(const std::vector<BasicOperator<Scalar>>& generators,
                                                       const ClosureOptions& options) {
  if (generators.empty()) throw InputError("lie_closure requires at least one generator");
  std::uint32_t n = generators.front().num_qubits();
  for (const auto& g : generators) {
    if (g.num_qubits() != n) throw DimensionMismatch("generators act on different qubit counts");
    if (!g.is_traceless()) throw InputError("generator has an identity component");
  }
  if (auto shortcut = exact_shortcut(generators, options)) return std::move(*shortcut);
  const std::size_t cap = options.max_dim.value_or(ambient_dimension(n));
  LieBasis<Scalar> basis(n, options);
  ClosureReport report;
  report.n = n;
  auto t0 = std::chrono::steady_clock::now();

  // The worklist carries the admitted candidates themselves (left-normed
  // brackets of the generators), not the reduced rows: bracketing raw
  // candidates explores the same span while keeping coefficient growth
  // bounded by the bracket depth instead of the elimination fill.
  std::vector<BasicOperator<Scalar>> frontier;
  for (const auto& g : generators) {
    if (basis.dimension() >= cap) break;
    if (basis.reduce_and_admit(g)) frontier.push_back(content_normalized(g));
  }

  bool work_pending = false;
  while (!frontier.empty() && basis.dimension() < cap) {
    ++report.rounds;
    const std::size_t pairs = frontier.size() * generators.size();
    std::vector<BasicOperator<Scalar>> candidates(pairs);
    auto compute_range = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t k = lo; k < hi; ++k) {
        const auto& src = frontier[k / generators.size()];
        const auto& gen = generators[k % generators.size()];
        candidates[k] = content_normalized(bracket(src, gen));
      }
    };
    int threads = std::max(1, options.threads);
    if (threads == 1 || pairs < 4) {
      compute_range(0, pairs);
    } else {
      std::vector<std::thread> pool;
      std::size_t chunk = (pairs + threads - 1) / threads;
      for (int t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk, hi = std::min(pairs, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(compute_range, lo, hi);
      }
      for (auto& th : pool) th.join();
    }
    report.bracket_count += pairs;
    std::erase_if(candidates, [](const BasicOperator<Scalar>& c) { return c.is_zero(); });
    std::sort(candidates.begin(), candidates.end(), operator_less<Scalar>);

    frontier.clear();
    for (auto& cand : candidates) {
      if (basis.dimension() >= cap) {
        work_pending = true;
        break;
      }
      enforce_bit_budget(cand, options.bit_budget);
      if (basis.reduce_and_admit(cand)) frontier.push_back(std::move(cand));
    }
  }

  report.dimension = basis.dimension();
  report.universal = report.dimension == ambient_dimension(n);
  report.early_exit = basis.dimension() >= cap && (work_pending || !frontier.empty());
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return {std::move(basis), report};
}

namespace {

// Runs the same worklist engine over F_p. Rank over the prime field never
// exceeds the rational rank, so a full-dimensional outcome certifies the
// exact verdict while keeping every coefficient one machine word; the
// reduced basis of the full traceless space is the singleton strings. A
// sub-full modular outcome falls back to the rational engine.
std::optional<std::pair<LieBasis<Rational>, ClosureReport>> modular_full_rank_shortcut(
    const std::vector<Operator>& generators, const ClosureOptions& options) {
  const std::uint32_t n = generators.front().num_qubits();
  const std::size_t ambient = ambient_dimension(n);
  if (options.max_dim && *options.max_dim < ambient) return std::nullopt;
  std::vector<BasicOperator<Fp>> projected;
  projected.reserve(generators.size());
  for (const auto& g : generators) {
    auto f = to_fp(g);
    if (!f || f->size() != g.size()) return std::nullopt;  // degenerate projection
    projected.push_back(std::move(*f));
  }
  auto t0 = std::chrono::steady_clock::now();
  auto [fp_basis, fp_report] = lie_closure<Fp>(projected, options);
  if (fp_report.dimension != ambient) return std::nullopt;

  LieBasis<Rational> basis(n, options);
  for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
    for (std::uint64_t z = 0; z < (1ULL << n); ++z) {
      if (x == 0 && z == 0) continue;
      basis.reduce_and_admit(
          Operator::from_terms(n, {{PauliString::from_masks(n, x, z), Rational(1)}}));
    }
  }
  ClosureReport report = fp_report;
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return std::make_pair(std::move(basis), report);
}

}  // namespace

template <class Scalar>
MembershipResult<Scalar> membership(const LieBasis<Scalar>& basis, const BasicOperator<Scalar>& target) {
  std::vector<std::pair<std::size_t, Scalar>> expansion;
  BasicOperator<Scalar> residual = basis.reduce(target, &expansion);
  MembershipResult<Scalar> out;
  out.member = residual.is_zero();
  if (out.member) {
    for (const auto& [ri, c] : expansion) {
      if (scalar_is_zero(c)) continue;
      out.expansion.emplace_back(basis.rows()[ri].terms().front().first, c);
    }
  }
  return out;
}

std::size_t dense_closure_oracle(const std::vector<Operator>& generators, double tolerance) {
  if (generators.empty()) throw InputError("dense closure oracle requires at least one generator");
  std::uint32_t n = generators.front().num_qubits();
  if (n > 3) throw InputError("dense closure oracle supports at most 3 qubits");
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::Index dof = 2 * dim * dim;

  auto vectorize = [&](const Eigen::MatrixXcd& m) {
    Eigen::VectorXd v(dof);
    Eigen::Index k = 0;
    for (Eigen::Index r = 0; r < dim; ++r) {
      for (Eigen::Index c = 0; c < dim; ++c) {
        v(k++) = m(r, c).real();
        v(k++) = m(r, c).imag();
      }
    }
    return v;
  };

  std::vector<Eigen::VectorXd> ortho;
  std::vector<Eigen::MatrixXcd> work;
  auto admit = [&](const Eigen::MatrixXcd& m) {
    Eigen::VectorXd v = vectorize(m);
    double nv = v.norm();
    if (nv < 1e-14) return false;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : ortho) v -= b.dot(v) * b;
    }
    double nr = v.norm();
    if (nr < tolerance * std::max(1.0, nv)) return false;
    ortho.push_back(v / nr);
    return true;
  };

  const std::complex<double> ii(0, 1);
  for (const auto& g : generators) {
    Eigen::MatrixXcd m = ii * to_dense(g, 3);
    if (admit(m)) work.push_back(m);
  }
  std::size_t next = 0;
  const std::size_t limit = ambient_dimension(n) + 1;
  while (next < work.size() && ortho.size() < 2 * limit) {
    Eigen::MatrixXcd cur = work[next++];
    for (const auto& g : generators) {
      Eigen::MatrixXcd gen = ii * to_dense(g, 3);
      Eigen::MatrixXcd cand = cur * gen - gen * cur;
      if (admit(cand)) work.push_back(cand);
    }
  }
  return ortho.size();
}

bool separability_check(const Operator& whole, const std::vector<Operator>& parts) {
  Operator sum(whole.num_qubits());
  for (const auto& p : parts) sum += p;
  if (!(sum == whole)) throw InputError("separability check: parts do not sum to the whole");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (!bracket(parts[i], parts[j]).is_zero()) return false;
    }
  }
  return true;
}

template class LieBasis<Rational>;
template class LieBasis<double>;
template std::pair<LieBasis<Rational>, ClosureReport> lie_closure(const std::vector<Operator>&, const ClosureOptions&);
template std::pair<LieBasis<double>, ClosureReport> lie_closure(const std::vector<OperatorF>&, const ClosureOptions&);
template MembershipResult<Rational> membership(const LieBasis<Rational>&, const Operator&);
template MembershipResult<double> membership(const LieBasis<double>&, const OperatorF&);

}  // namespace qlie
