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

#include "qlie/verify.hpp"

#include <complex>

#include "qlie/closure.hpp"
#include "qlie/dense.hpp"
#include "qlie/forcing.hpp"

namespace qlie {

std::string identity_status_name(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::Pass: return "pass";
    case IdentityStatus::Fail: return "fail";
    case IdentityStatus::Skipped: return "skipped";
  }
  return "?";
}

bool IdentityCase::passed() const {
  if (skipped()) return false;
  for (const auto& c : checks) {
    if (c.status == IdentityStatus::Fail) return false;
  }
  return true;
}

std::size_t IdentityCase::failed_count() const {
  std::size_t k = 0;
  for (const auto& c : checks) k += c.status == IdentityStatus::Fail;
  return k;
}

const IdentityCheck* IdentityCase::first_failure() const {
  for (const auto& c : checks) {
    if (c.status == IdentityStatus::Fail) return &c;
  }
  return nullptr;
}

namespace {

const Rational kOne(1);

void check_equal(IdentityCase& cs, const std::string& name, const Operator& lhs, const Operator& rhs) {
  if (lhs == rhs) {
    cs.checks.push_back({name, IdentityStatus::Pass, ""});
  } else {
    Operator diff = lhs - rhs;
    cs.checks.push_back({name, IdentityStatus::Fail,
                         "lhs = " + render_operator(lhs) + " ; rhs = " + render_operator(rhs) +
                             " ; diff = " + render_operator(diff)});
  }
}

void check_true(IdentityCase& cs, const std::string& name, bool ok, const std::string& on_fail) {
  cs.checks.push_back({name, ok ? IdentityStatus::Pass : IdentityStatus::Fail, ok ? "" : on_fail});
}

Operator zstring(std::uint32_t n, std::initializer_list<int> sites) {
  std::uint64_t m = 0;
  for (int s : sites) m |= 1ULL << (s - 1);
  return Operator::from_terms(n, {{PauliString::from_masks(n, 0, m), kOne}});
}

Operator pstring(std::uint32_t n, std::initializer_list<std::pair<int, char>> factors) {
  std::uint64_t x = 0, z = 0;
  for (auto [q, a] : factors) {
    std::uint64_t bit = 1ULL << (q - 1);
    if (a == 'X' || a == 'Y') x |= bit;
    if (a == 'Z' || a == 'Y') z |= bit;
  }
  return Operator::from_terms(n, {{PauliString::from_masks(n, x, z), kOne}});
}

Operator single_axis(std::uint32_t n, int q, char a) {
  return Operator::from_terms(n, {{PauliString::single(n, q, a), kOne}});
}

struct ChainContext {
  ChainOperators ops;
  Rational wA, wB, gAB, gBA;
  Operator hz1, hz2;
};

ChainContext chain_context(int n, const CoefficientAssignment& coeffs) {
  ChainContext ctx;
  ctx.ops = build_chain(n, coeffs);
  ctx.wA = coeffs.at("wA");
  ctx.wB = coeffs.at("wB");
  ctx.gAB = coeffs.at("gAB");
  ctx.gBA = coeffs.at("gBA");
  ctx.hz1 = linear_combine<Rational>({{ctx.wA, ctx.ops.h_a}, {ctx.wB, ctx.ops.h_b}});
  ctx.hz2 = linear_combine<Rational>({{ctx.gAB, ctx.ops.h_ab}, {ctx.gBA, ctx.ops.h_ba}});
  return ctx;
}

}  // namespace

IdentityCase verify_lemma_decouple(int n, const CoefficientAssignment& coeffs) {
  IdentityCase cs;
  cs.name = "lemma-decouple";
  cs.params["n"] = std::to_string(n);
  if (n < 3) {
    cs.skip_reason = "decoupling chain needs n >= 3";
    return cs;
  }
  auto ctx = chain_context(n, coeffs);
  const Operator& hz = ctx.ops.hz;
  const Operator& hx = ctx.ops.hx;
  Operator hyz = bracket(hz, hx);
  Operator h1 = bracket(hyz, hx) + hz;
  Operator h2 = bracket(h1, hx);
  // The chain's final bracket lands on -H_Z1 (the displayed H_Z2 does not
  // match any normalization of the bracket); H_Z2 then follows by
  // subtraction, which is what the statement needs.
  Operator final = bracket(linear_combine<Rational>({{kOne, hyz}, {Rational(1, 3), h2}}), hx);
  check_equal(cs, "final-bracket-recovers-HZ1", final, -ctx.hz1);
  check_equal(cs, "HZ2-by-subtraction", hz - ctx.hz1, ctx.hz2);
  return cs;
}

IdentityCase verify_even_odd(int n, const CoefficientAssignment& coeffs) {
  IdentityCase cs;
  cs.name = "even-odd-split";
  cs.params["n"] = std::to_string(n);
  if (n < 2) {
    cs.skip_reason = "chain needs n >= 2";
    return cs;
  }
  auto ctx = chain_context(n, coeffs);
  if (ctx.wA * ctx.wA == ctx.wB * ctx.wB) {
    cs.skip_reason = "hypothesis wA^2 != wB^2 fails for this assignment";
    return cs;
  }
  Operator hy1 = bracket(ctx.hz1, ctx.ops.hx);
  // H_Y1 is the Z->Y image of H_Z1.
  std::vector<Operator::Term> yt;
  for (const auto& [p, c] : ctx.hz1.terms()) {
    yt.emplace_back(PauliString::from_masks(p.n, p.z, p.z), c);
  }
  check_equal(cs, "HY1-definition", hy1, Operator::from_terms(hy1.num_qubits(), std::move(yt)));
  Operator lhs = ctx.wA * ctx.wA * ctx.ops.hx + bracket(ctx.hz1, hy1);
  Operator rhs = (ctx.wA * ctx.wA - ctx.wB * ctx.wB) * ctx.ops.x_odd;
  check_equal(cs, "X_odd-extraction", lhs, rhs);
  check_equal(cs, "X_even-complement", ctx.ops.hx - ctx.ops.x_odd, ctx.ops.x_even);
  return cs;
}

namespace {

Operator chain_interior_ba(std::uint32_t n) {
  // sum_{j=1}^{n/2-2} Z_{2j+1} Z_{2j+2} (even n): the BA pairs without
  // the two end pairs.
  std::vector<Operator::Term> t;
  for (int j = 1; j <= static_cast<int>(n) / 2 - 2; ++j) {
    std::uint64_t m = (1ULL << (2 * j)) | (1ULL << (2 * j + 1));
    t.emplace_back(PauliString::from_masks(n, 0, m), kOne);
  }
  return Operator::from_terms(n, std::move(t));
}

void sep_generators_odd(IdentityCase& cs, const ChainContext& ctx) {
  const std::uint32_t n = ctx.ops.hz.num_qubits();
  const Rational &gAB = ctx.gAB, &gBA = ctx.gBA;
  Operator hyz_e = bracket(ctx.hz2, ctx.ops.x_even);
  std::vector<Operator::Term> t;
  for (int j = 1; 2 * j + 1 <= static_cast<int>(n); ++j) {
    std::uint64_t x = 1ULL << (2 * j - 1);
    std::uint64_t z = (1ULL << (2 * j - 1)) | (1ULL << (2 * j));
    t.emplace_back(PauliString::from_masks(n, x, z), gAB);  // Y_{2j} Z_{2j+1}
  }
  for (int j = 0; 2 * j + 2 <= static_cast<int>(n); ++j) {
    std::uint64_t x = 1ULL << (2 * j + 1);
    std::uint64_t z = (1ULL << (2 * j)) | (1ULL << (2 * j + 1));
    t.emplace_back(PauliString::from_masks(n, x, z), gBA);  // Z_{2j+1} Y_{2j+2}
  }
  check_equal(cs, "odd/HYZe-definition", hyz_e, Operator::from_terms(n, std::move(t)));

  std::vector<Operator::Term> zxz;
  for (int j = 1; 2 * j + 1 <= static_cast<int>(n); ++j) {
    std::uint64_t x = 1ULL << (2 * j - 1);
    std::uint64_t z = (1ULL << (2 * j - 2)) | (1ULL << (2 * j));
    zxz.emplace_back(PauliString::from_masks(n, x, z), kOne);  // Z_{2j-1} X_{2j} Z_{2j+1}
  }
  Operator h_zxz = Operator::from_terms(n, std::move(zxz));
  check_equal(cs, "odd/second-bracket", bracket(hyz_e, ctx.hz2),
              linear_combine<Rational>({{gAB * gAB + gBA * gBA, ctx.ops.x_even}, {Rational(2) * gAB * gBA, h_zxz}}));
  // The ZXZ ladder, freed of its X_even part via the split from the
  // even/odd proposition.
  Operator w = -bracket(hyz_e, h_zxz);
  check_equal(cs, "odd/third-bracket", w,
              linear_combine<Rational>({{gAB, ctx.ops.h_ba}, {gBA, ctx.ops.h_ab}}));
  check_equal(cs, "odd/pair-elimination", gAB * w - gBA * ctx.hz2,
              (gAB * gAB - gBA * gBA) * ctx.ops.h_ba);
  Operator h_ba = Rational(1) / (gAB * gAB - gBA * gBA) * (gAB * w - gBA * ctx.hz2);
  check_equal(cs, "odd/HBA-recovered", h_ba, ctx.ops.h_ba);
  check_equal(cs, "odd/HAB-recovered", Rational(1) / gAB * (ctx.hz2 - gBA * h_ba), ctx.ops.h_ab);
}

void sep_generators_even(IdentityCase& cs, const ChainContext& ctx) {
  const std::uint32_t n = ctx.ops.hz.num_qubits();
  const int ni = static_cast<int>(n);
  const Rational &gAB = ctx.gAB, &gBA = ctx.gBA;
  const Rational gamma = gAB * gAB - Rational(4) * gBA * gBA;
  Operator x1 = single_axis(n, 1, 'X');
  Operator xn = single_axis(n, ni, 'X');

  Operator hyz_oo = bracket(ctx.hz2, ctx.ops.x_odd);
  std::vector<Operator::Term> t;
  for (int j = 1; j <= ni / 2 - 1; ++j) {
    std::uint64_t x = 1ULL << (2 * j);
    std::uint64_t z = (1ULL << (2 * j - 1)) | (1ULL << (2 * j));
    t.emplace_back(PauliString::from_masks(n, x, z), gAB);  // Z_{2j} Y_{2j+1}
  }
  for (int j = 0; j <= ni / 2 - 1; ++j) {
    std::uint64_t x = 1ULL << (2 * j);
    std::uint64_t z = (1ULL << (2 * j)) | (1ULL << (2 * j + 1));
    t.emplace_back(PauliString::from_masks(n, x, z), gBA);  // Y_{2j+1} Z_{2j+2}
  }
  check_equal(cs, "even/HYZoo-definition", hyz_oo, Operator::from_terms(n, std::move(t)));

  std::vector<Operator::Term> zxz1;
  for (int j = 1; j <= ni / 2 - 1; ++j) {
    std::uint64_t x = 1ULL << (2 * j);
    std::uint64_t z = (1ULL << (2 * j - 1)) | (1ULL << (2 * j + 1));
    zxz1.emplace_back(PauliString::from_masks(n, x, z), kOne);  // Z_{2j} X_{2j+1} Z_{2j+2}
  }
  Operator h_zxz_odd = Operator::from_terms(n, std::move(zxz1));
  check_equal(cs, "even/bracket-with-Xodd", bracket(hyz_oo, ctx.hz2),
              linear_combine<Rational>({{gAB * gAB, ctx.ops.x_odd - x1},
                                        {gBA * gBA, ctx.ops.x_odd},
                                        {Rational(2) * gAB * gBA, h_zxz_odd}}));
  // Removing (gAB^2 + gBA^2) X_odd leaves the X1-anchored ladder; the
  // paper prints this operator with Z letters but the bracket algebra
  // forces X on the anchor and the ladder middles.
  Operator h_zzz1 = Rational(1) / gAB * (bracket(hyz_oo, ctx.hz2) - (gAB * gAB + gBA * gBA) * ctx.ops.x_odd);
  check_equal(cs, "even/HZZZ1-definition", h_zzz1,
              linear_combine<Rational>({{-gAB, x1}, {Rational(2) * gBA, h_zxz_odd}}));
  Operator h12 = Rational(-1) / gBA * bracket(hyz_oo, h_zzz1);
  Operator z12 = zstring(n, {1, 2});
  check_equal(cs, "even/H12", h12,
              linear_combine<Rational>({{Rational(-3) * gAB, z12},
                                        {Rational(2) * gAB, ctx.ops.h_ba},
                                        {Rational(2) * gBA, ctx.ops.h_ab}}));

  Operator hyz_ee = bracket(ctx.hz2, ctx.ops.x_even);
  std::vector<Operator::Term> t2;
  for (int j = 1; j <= ni / 2 - 1; ++j) {
    std::uint64_t x = 1ULL << (2 * j - 1);
    std::uint64_t z = (1ULL << (2 * j - 1)) | (1ULL << (2 * j));
    t2.emplace_back(PauliString::from_masks(n, x, z), gAB);  // Y_{2j} Z_{2j+1}
  }
  for (int j = 0; j <= ni / 2 - 1; ++j) {
    std::uint64_t x = 1ULL << (2 * j + 1);
    std::uint64_t z = (1ULL << (2 * j)) | (1ULL << (2 * j + 1));
    t2.emplace_back(PauliString::from_masks(n, x, z), gBA);  // Z_{2j+1} Y_{2j+2}
  }
  check_equal(cs, "even/HYZee-definition", hyz_ee, Operator::from_terms(n, std::move(t2)));

  std::vector<Operator::Term> zxz2;
  for (int j = 1; j <= ni / 2 - 1; ++j) {
    std::uint64_t x = 1ULL << (2 * j - 1);
    std::uint64_t z = (1ULL << (2 * j - 2)) | (1ULL << (2 * j));
    zxz2.emplace_back(PauliString::from_masks(n, x, z), kOne);  // Z_{2j-1} X_{2j} Z_{2j+1}
  }
  Operator h_zxz_even = Operator::from_terms(n, std::move(zxz2));
  check_equal(cs, "even/bracket-with-Xeven", bracket(hyz_ee, ctx.hz2),
              linear_combine<Rational>({{gAB * gAB, ctx.ops.x_even - xn},
                                        {gBA * gBA, ctx.ops.x_even},
                                        {Rational(2) * gAB * gBA, h_zxz_even}}));
  Operator h_zzzn = Rational(1) / gAB * (bracket(hyz_ee, ctx.hz2) - (gAB * gAB + gBA * gBA) * ctx.ops.x_even);
  check_equal(cs, "even/HZZZn-definition", h_zzzn,
              linear_combine<Rational>({{-gAB, xn}, {Rational(2) * gBA, h_zxz_even}}));
  Operator hn1n = Rational(-1) / gBA * bracket(hyz_ee, h_zzzn);
  Operator zn1n = zstring(n, {ni - 1, ni});
  check_equal(cs, "even/Hn-1n", hn1n,
              linear_combine<Rational>({{Rational(-3) * gAB, zn1n},
                                        {Rational(2) * gAB, ctx.ops.h_ba},
                                        {Rational(2) * gBA, ctx.ops.h_ab}}));

  Operator h2 = h12 + hn1n;
  Operator interior = chain_interior_ba(n);
  Operator ends = z12 + zn1n;
  check_equal(cs, "even/H2-sum", h2,
              linear_combine<Rational>({{gAB, ends}, {Rational(4) * gAB, interior}, {Rational(4) * gBA, ctx.ops.h_ab}}));
  check_equal(cs, "even/H3-precursor", gAB * h2 - Rational(4) * gBA * ctx.hz2,
              linear_combine<Rational>({{gamma, ctx.ops.h_ba}, {Rational(3) * gAB * gAB, interior}}));
  Operator h3 = Rational(1) / gamma * (gAB * h2 - Rational(4) * gBA * ctx.hz2);
  check_equal(cs, "even/H3-definition", h3,
              linear_combine<Rational>({{kOne, ctx.ops.h_ba}, {Rational(3) * gAB * gAB / gamma, interior}}));
  Rational gt2 = Rational(3) * gAB * gBA / gamma;
  Operator h_star = Rational(1) / gAB * (ctx.hz2 - gBA * h3);
  check_equal(cs, "even/Hstar-definition", h_star,
              linear_combine<Rational>({{kOne, ctx.ops.h_ab}, {-gt2, interior}}));
  Rational gt1 = Rational(3) * gAB * (kOne - gAB * gAB / gamma) / (Rational(4) * gBA);
  Operator h_box = Rational(1) / (Rational(4) * gBA) * (h2 - gAB * h3);
  check_equal(cs, "even/Hbox-definition", h_box,
              linear_combine<Rational>({{kOne, ctx.ops.h_ab}, {gt1, interior}}));
  // Findings: the two tilde couplings cancel identically, so the final
  // displayed extraction collapses (H_box == H_star and their difference
  // is the zero operator, not a multiple of the interior pairs). The
  // membership claims for H_AB/H_BA on even chains are checked against
  // the computed closure instead (see the closure test suites).
  check_true(cs, "even/finding-gt1-plus-gt2-zero", gt1 + gt2 == Rational(0),
             "expected gt1 == -gt2, got gt1+gt2 = " + (gt1 + gt2).str());
  check_equal(cs, "even/finding-Hbox-equals-Hstar", h_box - h_star, Operator(n));
}

}  // namespace

IdentityCase verify_sep_generators(int n, const CoefficientAssignment& coeffs) {
  IdentityCase cs;
  cs.name = "separate-generators";
  cs.params["n"] = std::to_string(n);
  cs.params["branch"] = n % 2 == 0 ? "even" : "odd";
  if (n < 3) {
    cs.skip_reason = "separation chain needs n >= 3";
    return cs;
  }
  auto ctx = chain_context(n, coeffs);
  if (ctx.gAB.is_zero() || ctx.gBA.is_zero()) {
    cs.skip_reason = "hypothesis gAB != 0, gBA != 0 fails";
    return cs;
  }
  if (ctx.gAB * ctx.gAB == ctx.gBA * ctx.gBA) {
    cs.skip_reason = "hypothesis gAB^2 != gBA^2 fails";
    return cs;
  }
  if (ctx.gAB * ctx.gAB == Rational(4) * ctx.gBA * ctx.gBA) {
    cs.skip_reason = "hypothesis gamma = gAB^2 - 4*gBA^2 != 0 fails";
    return cs;
  }
  if (n % 2 == 1) {
    sep_generators_odd(cs, ctx);
  } else {
    sep_generators_even(cs, ctx);
  }
  return cs;
}

IdentityCase verify_separation_X(int n, int k, const CoefficientAssignment& coeffs) {
  IdentityCase cs;
  cs.name = "separation-X";
  cs.params["n"] = std::to_string(n);
  cs.params["k"] = std::to_string(k);
  if (n % 2 == 0) {
    cs.skip_reason = "the X ladder assumes n odd";
    return cs;
  }
  if (k < 1 || k > n) {
    cs.skip_reason = "k must lie in 1..n";
    return cs;
  }
  auto ctx = chain_context(n, coeffs);
  const std::uint32_t un = ctx.ops.hz.num_qubits();
  const Operator &h_ab = ctx.ops.h_ab, &h_ba = ctx.ops.h_ba, &hx = ctx.ops.hx;

  // X_even / X_odd out of the ladder's own generator set.
  Operator x_even = -bracket(ctx.ops.h_a, bracket(ctx.ops.h_a, hx));
  Operator x_odd = -bracket(ctx.ops.h_b, bracket(ctx.ops.h_b, hx));
  check_equal(cs, "X_even-recipe", x_even, ctx.ops.x_even);
  check_equal(cs, "X_odd-recipe", x_odd, ctx.ops.x_odd);

  Operator hyz_ab = bracket(h_ab, hx);
  Operator x1 = hx - bracket(hyz_ab, h_ab);
  check_equal(cs, "X1-extraction", x1, single_axis(un, 1, 'X'));
  Operator xk = x1;
  for (int j = 2; j <= k; ++j) {
    std::string tag = "k" + std::to_string(j);
    const bool even_j = j % 2 == 0;
    const Operator& pair_ham = even_j ? h_ba : h_ab;
    const Operator& x_parity = even_j ? x_even : x_odd;
    Operator yz = bracket(pair_ham, xk);
    check_equal(cs, tag + "/YZ", yz, pstring(un, {{j - 1, 'Y'}, {j, 'Z'}}));
    Operator zz = -bracket(yz, xk);
    check_equal(cs, tag + "/ZZ", zz, zstring(un, {j - 1, j}));
    Operator zy = -bracket(x_parity, zz);
    check_equal(cs, tag + "/ZY", zy, pstring(un, {{j - 1, 'Z'}, {j, 'Y'}}));
    Operator next = -bracket(pair_ham, zy);
    check_equal(cs, tag + "/X", next, single_axis(un, j, 'X'));
    xk = next;
  }
  return cs;
}

IdentityCase verify_cnot_identity(double angle_offset) {
  IdentityCase cs;
  cs.name = "cnot-identity";
  cs.params["angle_offset"] = std::to_string(angle_offset);
  const std::uint32_t n = 2;
  Operator ii = parse_operator(n, "I");
  Operator m = ii - pstring(n, {{2, 'X'}}) - pstring(n, {{1, 'Z'}}) + pstring(n, {{1, 'Z'}, {2, 'X'}});
  Eigen::MatrixXcd u = hermitian_exp(to_dense(m), 3.14159265358979323846 / 4 + angle_offset);
  Eigen::MatrixXcd cnot(4, 4);
  cnot << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
  // strip the global phase using the top-left entry
  std::complex<double> lambda = u(0, 0);
  bool phase_ok = std::abs(std::abs(lambda) - 1.0) < 1e-12;
  double err = (u - lambda * cnot).cwiseAbs().maxCoeff();
  check_true(cs, "dense-exponential", phase_ok && err < 1e-12,
             "entrywise deviation " + std::to_string(err));
  double overlap = std::abs((u.adjoint() * cnot).trace()) / 4.0;
  check_true(cs, "phase-quotient-overlap", std::abs(overlap - 1.0) < 1e-12,
             "overlap " + std::to_string(overlap));
  Operator expansion = Rational(1, 2) * (ii + pstring(n, {{1, 'Z'}}) + pstring(n, {{2, 'X'}}) -
                                         pstring(n, {{1, 'Z'}, {2, 'X'}}));
  double exp_err = (to_dense(expansion) - cnot).cwiseAbs().maxCoeff();
  check_true(cs, "algebraic-expansion", exp_err < 1e-12,
             "entrywise deviation " + std::to_string(exp_err));
  return cs;
}

namespace {

std::uint64_t support_mask(const Operator& a) {
  std::uint64_t m = 0;
  for (const auto& [p, c] : a.terms()) m |= p.x | p.z;
  return m;
}

std::uint64_t grid_column_mask(int side, int col_from, int col_to) {
  std::uint64_t m = 0;
  for (int v = 1; v <= side * side; ++v) {
    int col = (v - 1) % side + 1;
    if (col >= col_from && col <= col_to) m |= 1ULL << (v - 1);
  }
  return m;
}

}  // namespace

IdentityCase verify_grid_recursion(int side, const CoefficientAssignment& coeffs) {
  IdentityCase cs;
  cs.name = "grid-recursion";
  cs.params["side"] = std::to_string(side);
  if (side < 2 || side > 3) {
    cs.skip_reason = "grid replay covers side 2..3";
    return cs;
  }
  const int nn = side;
  const int N = side * side;
  const std::uint32_t n = static_cast<std::uint32_t>(N + 2);

  ProblemSpec spec = build_grid(side, coeffs);
  auto built = spec.build();

  // Granted separated pieces (unit coefficients).
  std::vector<Operator::Term> a1t, a2t, xgt;
  for (int v = 1; v <= N; ++v) {
    a1t.emplace_back(PauliString::single(n, v, 'Z'), kOne);
    xgt.emplace_back(PauliString::single(n, v, 'X'), kOne);
  }
  for (const auto& e : spec.graph->edges) {
    if (e.type != "A") continue;
    std::uint64_t m = (1ULL << (e.u - 1)) | (1ULL << (e.v - 1));
    a2t.emplace_back(PauliString::from_masks(n, 0, m), kOne);
  }
  Operator h_a1 = Operator::from_terms(n, std::move(a1t));
  Operator h_a2 = Operator::from_terms(n, std::move(a2t));
  Operator x_grid = Operator::from_terms(n, std::move(xgt));
  Operator z1zn1 = zstring(n, {1, N + 1});
  Operator znzn2 = zstring(n, {nn, N + 2});

  // The built H_Z splits into the granted pieces, which pairwise commute.
  Operator recombined = linear_combine<Rational>({{coeffs.at("wA"), h_a1},
                                                  {coeffs.at("wB"), single_axis(n, N + 1, 'Z')},
                                                  {coeffs.at("wC"), single_axis(n, N + 2, 'Z')},
                                                  {coeffs.at("gA"), h_a2},
                                                  {coeffs.at("gB"), z1zn1},
                                                  {coeffs.at("gC"), znzn2}});
  check_equal(cs, "HZ-decomposition", built.hz, recombined);
  check_true(cs, "HZ-parts-commute",
             separability_check(built.hz, {coeffs.at("wA") * h_a1, coeffs.at("wB") * single_axis(n, N + 1, 'Z'),
                                           coeffs.at("wC") * single_axis(n, N + 2, 'Z'), coeffs.at("gA") * h_a2,
                                           coeffs.at("gB") * z1zn1, coeffs.at("gC") * znzn2}),
             "all-Z parts must commute");

  Operator e1 = bracket(z1zn1, x_grid);
  check_equal(cs, "pendant-B/YZ", e1, pstring(n, {{1, 'Y'}, {N + 1, 'Z'}}));
  Operator x1 = bracket(e1, z1zn1);
  check_equal(cs, "pendant-B/X1", x1, single_axis(n, 1, 'X'));
  Operator y1 = -bracket(x1, h_a1);
  check_equal(cs, "pendant-B/Y1", y1, single_axis(n, 1, 'Y'));
  check_equal(cs, "pendant-B/Z1", -bracket(y1, x1), single_axis(n, 1, 'Z'));
  Operator g5 = bracket(e1, h_a2);
  check_equal(cs, "corner/XZZ-pair", g5,
              pstring(n, {{1, 'X'}, {2, 'Z'}, {N + 1, 'Z'}}) + pstring(n, {{1, 'X'}, {1 + nn, 'Z'}, {N + 1, 'Z'}}));
  Operator w6 = -bracket(y1, g5);
  check_equal(cs, "corner/ZZZ-pair", w6,
              zstring(n, {1, 2, N + 1}) + zstring(n, {1, 1 + nn, N + 1}));
  Operator g7 = bracket(e1, w6);
  check_equal(cs, "corner/XZ-pair", g7,
              pstring(n, {{1, 'X'}, {2, 'Z'}}) + pstring(n, {{1, 'X'}, {1 + nn, 'Z'}}));
  Operator h_cur = -bracket(y1, g7);
  check_equal(cs, "corner/H2", h_cur, zstring(n, {1, 2}) + zstring(n, {1, 1 + nn}));

  std::vector<Operator> h_line(nn + 1, Operator(n));
  h_line[2] = h_cur;
  Operator a1_cur = x_grid - x1;
  Operator a2_cur = h_a2 - h_cur;

  for (int k = 2; k <= nn - 1; ++k) {
    std::string tag = "induction-k" + std::to_string(k);
    Operator r = h_line[k] - zstring(n, {k - 1, k});
    std::uint64_t excluded = grid_column_mask(side, k, nn);
    check_true(cs, tag + "/R-support", (support_mask(r) & excluded) == 0,
               "R^(k) leaks into columns k..n");
    Operator x_sum(n);
    for (int j = k; j <= nn; ++j) x_sum += single_axis(n, j, 'X');
    Operator x_r = a1_cur - x_sum;
    std::uint64_t sites_k = (1ULL << (k - 2)) | (1ULL << (k - 1));
    check_true(cs, tag + "/XR-support", (support_mask(x_r) & sites_k) == 0,
               "X_R^(k) touches sites k-1 or k");
    Operator c = bracket(r, x_r);
    Operator t1 = bracket(h_line[k], a1_cur);
    check_equal(cs, tag + "/T1", t1, pstring(n, {{k - 1, 'Z'}, {k, 'Y'}}) + c);
    Operator t2 = bracket(t1, a2_cur);
    check_equal(cs, tag + "/T2", t2,
                pstring(n, {{k - 1, 'Z'}, {k, 'X'}, {k + 1, 'Z'}}) +
                    pstring(n, {{k - 1, 'Z'}, {k, 'X'}, {k + nn, 'Z'}}) + bracket(c, a2_cur));
    Operator h_next = -bracket(t1, t2);
    Operator r_next = h_next - zstring(n, {k, k + 1});
    std::uint64_t excluded_next = grid_column_mask(side, k + 1, nn);
    check_true(cs, tag + "/Hnext-structure", (support_mask(r_next) & excluded_next) == 0,
               "R^(k+1) leaks into columns k+1..n");
    h_line[k + 1] = h_next;
    a1_cur = a1_cur - single_axis(n, k, 'X') - bracket(c, r);
    a2_cur = a2_cur - h_next;
  }

  // Finale: walk the first row backwards from the C pendant.
  Operator en = bracket(znzn2, x_grid);
  check_equal(cs, "finale/YZ-anchor", en, pstring(n, {{nn, 'Y'}, {N + 2, 'Z'}}));
  std::vector<Operator> x_single(nn + 1, Operator(n));
  x_single[1] = x1;
  x_single[nn] = bracket(en, znzn2);
  check_equal(cs, "finale/Xn", x_single[nn], single_axis(n, nn, 'X'));
  Operator mn = bracket(en, h_line[nn]);
  check_equal(cs, "finale/ZXZ", mn, pstring(n, {{nn - 1, 'Z'}, {nn, 'X'}, {N + 2, 'Z'}}));
  std::vector<Operator> row_pair(nn + 1, Operator(n));
  row_pair[nn - 1] = bracket(mn, en);
  check_equal(cs, "finale/last-pair", row_pair[nn - 1], zstring(n, {nn - 1, nn}));
  for (int k = nn - 1; k >= 2; --k) {
    std::string tag = "walkback-k" + std::to_string(k);
    Operator zy = bracket(row_pair[k], x_single[k + 1]);
    check_equal(cs, tag + "/ZY", zy, pstring(n, {{k, 'Z'}, {k + 1, 'Y'}}));
    Operator ek = bracket(row_pair[k], x_grid) - zy;
    check_equal(cs, tag + "/YZ", ek, pstring(n, {{k, 'Y'}, {k + 1, 'Z'}}));
    x_single[k] = bracket(ek, row_pair[k]);
    check_equal(cs, tag + "/X", x_single[k], single_axis(n, k, 'X'));
    Operator mk = bracket(ek, h_line[k]);
    check_equal(cs, tag + "/ZXZ", mk, pstring(n, {{k - 1, 'Z'}, {k, 'X'}, {k + 1, 'Z'}}));
    row_pair[k - 1] = bracket(mk, ek);
    check_equal(cs, tag + "/pair", row_pair[k - 1], zstring(n, {k - 1, k}));
  }
  for (int k = 1; k <= nn; ++k) {
    Operator yk = -bracket(x_single[k], h_a1);
    check_equal(cs, "singles/Y" + std::to_string(k), yk, single_axis(n, k, 'Y'));
    check_equal(cs, "singles/Z" + std::to_string(k), -bracket(yk, x_single[k]), single_axis(n, k, 'Z'));
  }

  // Zero-forcing handoff: with the first row and the two pendants
  // controlled, the infection covers the whole grid.
  std::set<int> s;
  for (int k = 1; k <= nn; ++k) s.insert(k);
  s.insert(N + 1);
  s.insert(N + 2);
  check_true(cs, "forcing-handoff", is_forcing_set(*spec.graph, s, std::nullopt, ForcingMode::Basic),
             "first row + pendants failed to infect the grid");
  return cs;
}

IdentityCase verify_hyper_step(int n, const CoefficientAssignment& coeffs) {
  IdentityCase cs;
  cs.name = "hyper-step";
  cs.params["n"] = std::to_string(n);
  if (n < 3) {
    cs.skip_reason = "hyperchain walk needs n >= 3";
    return cs;
  }
  const std::uint32_t un = static_cast<std::uint32_t>(n);
  auto [hz, hx] = build_hyperchain(n, coeffs);
  const Rational& delta = coeffs.at("delta");

  std::vector<Operator::Term> cub;
  for (int k = 1; k <= n - 2; ++k) {
    std::uint64_t m = (1ULL << (k - 1)) | (1ULL << k) | (1ULL << (k + 1));
    cub.emplace_back(PauliString::from_masks(un, 0, m), kOne);
  }
  Operator h_delta = Operator::from_terms(un, std::move(cub));
  std::vector<Operator::Term> hv;
  for (int i = 2; i <= n; ++i) hv.emplace_back(PauliString::single(un, i, 'Z'), kOne);
  Operator h_v = Operator::from_terms(un, std::move(hv));
  Operator z1 = single_axis(un, 1, 'Z');
  Operator z12 = zstring(un, {1, 2});

  check_equal(cs, "HZ-decomposition", hz,
              linear_combine<Rational>({{delta, h_delta},
                                        {coeffs.at("gamma"), z12},
                                        {coeffs.at("w1"), z1},
                                        {coeffs.at("w"), h_v}}));

  Operator y1 = bracket(z1, hx);
  check_equal(cs, "prewalk/Y1", y1, single_axis(un, 1, 'Y'));
  Operator x1 = -bracket(z1, y1);
  check_equal(cs, "prewalk/X1", x1, single_axis(un, 1, 'X'));
  Operator g1 = bracket(delta * h_delta, x1);
  check_equal(cs, "prewalk/first-cubic-tagged", g1, delta * pstring(un, {{1, 'Y'}, {2, 'Z'}, {3, 'Z'}}));
  if (delta.is_zero()) {
    check_true(cs, "walk-halted-delta-zero", true, "");
    return cs;
  }
  Operator t1 = Rational(-1) / delta * bracket(g1, x1);
  check_equal(cs, "prewalk/first-cubic", t1, zstring(un, {1, 2, 3}));
  Operator w = -bracket(z12, y1);
  check_equal(cs, "prewalk/XZ", w, pstring(un, {{1, 'X'}, {2, 'Z'}}));
  Operator u = bracket(w, hx);
  check_equal(cs, "prewalk/XY", u, pstring(un, {{1, 'X'}, {2, 'Y'}}));
  Operator x2 = bracket(u, w);
  check_equal(cs, "prewalk/X2", x2, single_axis(un, 2, 'X'));

  std::vector<Operator> cubic(n, Operator(un)), xs(n + 2, Operator(un));
  cubic[1] = t1;
  xs[1] = x1;
  xs[2] = x2;
  Operator zz_cur = z12;
  for (int k = 1; k <= n - 2; ++k) {
    std::string tag = "walk-k" + std::to_string(k);
    Operator vk = bracket(zz_cur, xs[k + 1]);
    check_equal(cs, tag + "/ZY", vk, pstring(un, {{k, 'Z'}, {k + 1, 'Y'}}));
    Operator wk = bracket(vk, cubic[k]);
    check_equal(cs, tag + "/pair-infection", wk, pstring(un, {{k + 1, 'X'}, {k + 2, 'Z'}}));
    Operator uk = bracket(wk, hx);
    check_equal(cs, tag + "/XY", uk, pstring(un, {{k + 1, 'X'}, {k + 2, 'Y'}}));
    xs[k + 2] = bracket(uk, wk);
    check_equal(cs, tag + "/X-next", xs[k + 2], single_axis(un, k + 2, 'X'));
    Operator yk1 = -bracket(xs[k + 1], h_v);
    check_equal(cs, tag + "/Y-mid", yk1, single_axis(un, k + 1, 'Y'));
    zz_cur = bracket(wk, yk1);
    check_equal(cs, tag + "/ZZ-next", zz_cur, zstring(un, {k + 1, k + 2}));
    if (k + 1 <= n - 2) {
      Operator remaining = h_delta;
      for (int m = 1; m <= k; ++m) remaining -= cubic[m];
      Operator gk = bracket(remaining, xs[k + 1]);
      check_equal(cs, tag + "/next-cubic-tagged", gk,
                  pstring(un, {{k + 1, 'Y'}, {k + 2, 'Z'}, {k + 3, 'Z'}}));
      cubic[k + 1] = -bracket(gk, xs[k + 1]);
      check_equal(cs, tag + "/next-cubic", cubic[k + 1], zstring(un, {k + 1, k + 2, k + 3}));
    }
  }
  return cs;
}

VerifyReport run_all(std::uint64_t seed) {
  VerifyReport report;
  auto chain_coeffs = sample_generic_coefficients(
      {"wA", "wB", "gAB", "gBA"}, seed,
      {Constraint::Nonzero, Constraint::DistinctSquares, Constraint::AvoidGammaDegenerate});
  auto hyper_coeffs = sample_generic_coefficients({"delta", "gamma", "w1", "w"}, seed + 1,
                                                  {Constraint::Nonzero});
  auto grid_coeffs = sample_generic_coefficients({"wA", "wB", "wC", "gA", "gB", "gC"}, seed + 2,
                                                 {Constraint::Nonzero, Constraint::DistinctSquares});

  for (int n : {3, 4, 5, 6}) report.cases.push_back(verify_lemma_decouple(n, chain_coeffs));
  for (int n : {3, 4, 5, 6}) report.cases.push_back(verify_even_odd(n, chain_coeffs));
  report.cases.push_back(verify_sep_generators(5, chain_coeffs));
  report.cases.push_back(verify_sep_generators(6, chain_coeffs));
  report.cases.push_back(verify_separation_X(3, 3, chain_coeffs));
  report.cases.push_back(verify_separation_X(5, 5, chain_coeffs));
  report.cases.push_back(verify_cnot_identity());
  report.cases.push_back(verify_grid_recursion(2, grid_coeffs));
  report.cases.push_back(verify_grid_recursion(3, grid_coeffs));
  report.cases.push_back(verify_hyper_step(3, hyper_coeffs));
  report.cases.push_back(verify_hyper_step(6, hyper_coeffs));

  // Negative controls: each family run once with a deliberate defect; the
  // report counts how many correctly fail.
  std::vector<IdentityCase> controls;
  {
    auto ctx = chain_context(3, chain_coeffs);
    IdentityCase c;
    c.name = "control/lemma-decouple-wrong-weight";
    Operator hyz = bracket(ctx.ops.hz, ctx.ops.hx);
    Operator h2 = bracket(bracket(hyz, ctx.ops.hx) + ctx.ops.hz, ctx.ops.hx);
    Operator final = bracket(linear_combine<Rational>({{kOne, hyz}, {Rational(1, 2), h2}}), ctx.ops.hx);
    check_equal(c, "final-bracket-recovers-HZ1", final, -ctx.hz1);
    controls.push_back(std::move(c));
  }
  {
    auto ctx = chain_context(4, chain_coeffs);
    IdentityCase c;
    c.name = "control/even-odd-wrong-sign";
    Operator hy1 = bracket(ctx.hz1, ctx.ops.hx);
    check_equal(c, "X_odd-extraction",
                ctx.wA * ctx.wA * ctx.ops.hx - bracket(ctx.hz1, hy1),
                (ctx.wA * ctx.wA - ctx.wB * ctx.wB) * ctx.ops.x_odd);
    controls.push_back(std::move(c));
  }
  {
    auto ctx = chain_context(5, chain_coeffs);
    IdentityCase c;
    c.name = "control/separate-generators-swapped";
    Operator hyz_e = bracket(ctx.hz2, ctx.ops.x_even);
    // swapped roles of H_AB and H_BA must break the elimination identity
    Operator wrong = linear_combine<Rational>({{ctx.gAB, ctx.ops.h_ab}, {ctx.gBA, ctx.ops.h_ba}});
    check_equal(c, "pair-elimination", ctx.gAB * wrong - ctx.gBA * ctx.hz2,
                (ctx.gAB * ctx.gAB - ctx.gBA * ctx.gBA) * ctx.ops.h_ba);
    controls.push_back(std::move(c));
  }
  {
    auto ctx = chain_context(5, chain_coeffs);
    IdentityCase c;
    c.name = "control/separation-X-wrong-ladder";
    Operator x1 = ctx.ops.hx - bracket(bracket(ctx.ops.h_ab, ctx.ops.hx), ctx.ops.h_ab);
    Operator yz = bracket(ctx.ops.h_ab, x1);  // even step needs H_BA
    check_equal(c, "k2/YZ", yz, pstring(ctx.ops.hz.num_qubits(), {{1, 'Y'}, {2, 'Z'}}));
    controls.push_back(std::move(c));
  }
  controls.push_back(verify_cnot_identity(0.01));
  controls.back().name = "control/cnot-perturbed-angle";
  {
    IdentityCase c;
    c.name = "control/grid-wrong-corner";
    const std::uint32_t n = 6;
    Operator z1z5 = zstring(n, {1, 5});
    std::vector<Operator::Term> xg;
    for (int v = 1; v <= 4; ++v) xg.emplace_back(PauliString::single(n, v, 'X'), kOne);
    Operator x_grid = Operator::from_terms(n, std::move(xg));
    // wrong pendant anchor: the bracket lands on Y1 Z5, not Y2 Z5
    check_equal(c, "pendant/YZ", bracket(z1z5, x_grid), pstring(n, {{2, 'Y'}, {5, 'Z'}}));
    controls.push_back(std::move(c));
  }
  {
    IdentityCase c;
    c.name = "control/hyper-scaled-cubic";
    const std::uint32_t n = 4;
    Operator z1y2 = pstring(n, {{1, 'Z'}, {2, 'Y'}});
    Operator cube = Rational(2) * zstring(n, {1, 2, 3});
    check_equal(c, "pair-infection", bracket(z1y2, cube), pstring(n, {{2, 'X'}, {3, 'Z'}}));
    controls.push_back(std::move(c));
  }

  report.negative_controls_total = controls.size();
  for (auto& c : controls) {
    if (!c.passed() && !c.skipped()) ++report.negative_controls_failed_as_expected;
    report.cases.push_back(std::move(c));
  }

  report.all_pass = report.negative_controls_failed_as_expected == report.negative_controls_total;
  for (const auto& c : report.cases) {
    if (c.name.rfind("control/", 0) == 0) continue;
    if (c.skipped() || !c.passed()) report.all_pass = false;
  }
  return report;
}

}  // namespace qlie
