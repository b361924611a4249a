// Copyright 2026 The zetasums Authors
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

// The acceptance grid: fifteen criteria, each a list of numerical checks
// with a threshold. Shared by the `suite` subcommand and the test binary.
//
// Random points come from mt19937_64 with a fixed seed per criterion, so
// every run checks the same parameters.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "zetasums/double_sums.hpp"
#include "zetasums/hypergeometric.hpp"
#include "zetasums/integrals.hpp"
#include "zetasums/moments.hpp"
#include "zetasums/quadrature.hpp"
#include "zetasums/report.hpp"
#include "zetasums/special.hpp"

namespace zetasums {

struct Check {
  std::string label;
  double measured = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::vector<std::string> modules;
  std::vector<Check> checks;
  std::string failure;  // set when a check threw

  bool passed() const {
    if (!failure.empty() || checks.empty()) return false;
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  /// The first failing check with the largest measured/threshold ratio, or
  /// the passing check closest to its threshold.
  const Check* tightest() const {
    const Check* worst = nullptr;
    double worst_ratio = -1.0;
    bool worst_failed = false;
    for (const auto& c : checks) {
      const double ratio = c.threshold > 0.0 ? c.measured / c.threshold : c.measured;
      const bool failed = !c.passed;
      if (!worst || (failed && !worst_failed) || (failed == worst_failed && ratio > worst_ratio)) {
        worst = &c;
        worst_ratio = ratio;
        worst_failed = failed;
      }
    }
    return worst;
  }
};

struct AcceptanceOptions {
  double tol_floor = 0.0;  // thresholds are raised to at least this value
  std::string only;        // module name; empty or "cli" runs everything
};

namespace detail {

class CheckList {
 public:
  explicit CheckList(const AcceptanceOptions& opt) : floor_(opt.tol_floor) {}

  // measured <= max(threshold, tol floor)
  void within(const std::string& label, double measured, double threshold) {
    const double t = std::max(threshold, floor_);
    checks_.push_back({label, measured, t, std::isfinite(measured) && measured <= t});
  }

  // exact comparisons are not loosened by the tolerance floor
  void exact(const std::string& label, bool equal) { checks_.push_back({label, equal ? 0.0 : 1.0, 0.0, equal}); }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  double floor_;
  std::vector<Check> checks_;
};

inline std::string pt(cplx a) { return format_complex(a); }
inline std::string pt(cplx a, cplx b) { return "(" + format_complex(a) + ", " + format_complex(b) + ")"; }

// Representation grid for I and J: the 5 x 5 real grid plus two complex points.
inline std::vector<std::pair<cplx, cplx>> integral_grid() {
  static constexpr std::array<double, 5> kAxis = {1.3, 2.3, 3.7, 4.5, 5.1};
  std::vector<std::pair<cplx, cplx>> g;
  for (double a : kAxis) {
    for (double b : kAxis) g.emplace_back(a, b);
  }
  g.emplace_back(2.5, cplx(2.5, 0.5));
  g.emplace_back(cplx(2.3, 0.7), cplx(3.7, -0.4));
  return g;
}

inline bool near_integer_by(cplx z, double gap) { return std::abs(z - std::round(z.real())) < gap; }

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  // real with probability 1/2, otherwise with imaginary part in (-im, im)
  cplx maybe_complex(double lo, double hi, double im) {
    const double re = uniform(lo, hi);
    const bool real = integer(0, 1) == 0;
    return {re, real ? 0.0 : uniform(-im, im)};
  }

 private:
  std::mt19937_64 rng_;
};

inline std::uint64_t seed_for(int id) { return 0x5eedULL * 1000003ULL + static_cast<std::uint64_t>(id); }

// ---------------------------------------------------------------------------

inline std::vector<Check> representation_equivalence_I(const AcceptanceOptions& opt) {
  CheckList c(opt);
  for (const auto& [a, b] : integral_grid()) {
    const auto p = ParameterPair::make(a, b);
    c.within("I_2F1 vs I_ZETA at " + pt(a, b), relative_difference(I_via_2f1(p).value, I_via_zeta(p).value), 1e-9);
  }
  return c.take();
}

inline std::vector<Check> representation_equivalence_J(const AcceptanceOptions& opt) {
  CheckList c(opt);
  for (const auto& [a, b] : integral_grid()) {
    const auto p = ParameterPair::make(a, b);
    const cplx f = J_via_2f1(p).value;
    const cplx z = J_via_zeta(p).value;
    const cplx alt = J_via_alt(p).value;
    c.within("J_2F1 vs J_ZETA at " + pt(a, b), relative_difference(f, z), 1e-9);
    c.within("J_2F1 vs J_ALT at " + pt(a, b), relative_difference(f, alt), 1e-9);
    c.within("J_ZETA vs J_ALT at " + pt(a, b), relative_difference(z, alt), 1e-9);
  }
  return c.take();
}

inline std::vector<Check> oracle_agreement(const AcceptanceOptions& opt) {
  CheckList c(opt);
  for (const auto& [a, b] : integral_grid()) {
    const auto p = ParameterPair::make(a, b);
    const cplx qi = oracle_I(a, b).value;
    const cplx qj = oracle_J(a, b).value;
    c.within("I_2F1 vs quadrature at " + pt(a, b), relative_difference(I_via_2f1(p).value, qi), 1e-8);
    c.within("I_ZETA vs quadrature at " + pt(a, b), relative_difference(I_via_zeta(p).value, qi), 1e-8);
    c.within("J_2F1 vs quadrature at " + pt(a, b), relative_difference(J_via_2f1(p).value, qj), 1e-8);
    c.within("J_ZETA vs quadrature at " + pt(a, b), relative_difference(J_via_zeta(p).value, qj), 1e-8);
    c.within("J_ALT vs quadrature at " + pt(a, b), relative_difference(J_via_alt(p).value, qj), 1e-8);
  }
  return c.take();
}

inline std::vector<Check> golden_moments(const AcceptanceOptions& opt) {
  using namespace constants;
  CheckList c(opt);
  const double h32 = 1.5 * log_two_pi - euler_gamma - 6.0 * log_glaisher;
  const double h43 = 3.0 * log_two_pi - 2.0 * euler_gamma - 12.0 * log_glaisher - pi * pi / 12.0;
  c.within("H_3(2) integer formula", relative_difference(H_integer(3, 2), h32), 1e-9);
  c.within("H_3(2) series", relative_difference(H_series(3, 2.0).value, h32), 1e-9);
  c.within("H_3(2) quadrature", relative_difference(oracle_moment(3, 2.0).value, h32), 1e-9);
  c.within("H_4(3) integer formula", relative_difference(H_integer(4, 3), h43), 1e-9);
  c.within("H_4(3) series", relative_difference(H_series(4, 3.0).value, h43), 1e-9);
  c.within("H_4(3) quadrature", relative_difference(oracle_moment(4, 3.0).value, h43), 1e-9);
  return c.take();
}

inline std::vector<Check> moment_summation_identity(const AcceptanceOptions& opt) {
  CheckList c(opt);
  Sampler s(seed_for(5));
  for (int i = 0; i < 50; ++i) {
    const int n = s.integer(1, 8);
    cplx a;
    do {
      a = s.maybe_complex(-3.0, n + 0.95, 2.0);
    } while (near_integer_by(a, 1e-2));
    c.within("n=" + std::to_string(n) + " a=" + pt(a), summation_identity_residual(static_cast<std::size_t>(n), a), 1e-9);
  }
  return c.take();
}

inline std::vector<Check> wilton_null(const AcceptanceOptions& opt) {
  CheckList c(opt);
  Sampler s(seed_for(6));
  for (int i = 0; i < 20; ++i) {
    const cplx alpha = s.maybe_complex(0.2, 5.0, 1.0);
    c.within("alpha=" + pt(alpha), std::abs(wilton_null_sum(alpha).value), 1e-8);
  }
  return c.take();
}

inline std::vector<Check> bernoulli_binomial(const AcceptanceOptions& opt) {
  CheckList c(opt);
  for (std::size_t N = 2; N <= 60; ++N) {
    const auto [lhs, rhs] = bernoulli_binomial_identity(N);
    c.exact("N=" + std::to_string(N), lhs == rhs);
  }
  return c.take();
}

inline std::vector<Check> s1_checks(const AcceptanceOptions& opt) {
  CheckList c(opt);
  Sampler s(seed_for(8));
  for (int i = 0; i < 10; ++i) {
    cplx a;
    cplx b;
    do {
      a = s.maybe_complex(-2.5, 0.95, 0.5);
      b = s.maybe_complex(-2.5, 0.95, 0.5);
    } while ((a + b).real() > 1.5);
    c.within("direct vs closed at " + pt(a, b), disagreement(S1_direct(a, b).value, S1_closed(a, b)), 1e-7);
  }
  for (int i = 0; i < 5; ++i) {
    const cplx a = s.maybe_complex(0.0, 0.5, 0.3);
    const cplx b = s.maybe_complex(0.0, 0.5, 0.3);
    c.within("closed vs quadrature at " + pt(a, b), disagreement(S1_closed(a, b), oracle_Jstar(a, b).value), 1e-7);
  }
  return c.take();
}

inline std::vector<Check> s2_checks(const AcceptanceOptions& opt) {
  CheckList c(opt);
  Sampler s(seed_for(9));
  auto generic = [](cplx a, cplx b) {
    return !near_integer_by(a, 2e-2) && !near_integer_by(b, 2e-2) && !near_integer_by(a + b, 2e-2);
  };
  for (int i = 0; i < 10; ++i) {
    cplx a;
    cplx b;
    do {
      a = s.maybe_complex(-2.5, 0.9, 0.5);
      b = s.maybe_complex(-2.5, 0.9, 0.5);
    } while ((a + b).real() >= 0.9 || !generic(a, b));
    c.within("direct vs closed at " + pt(a, b), disagreement(S2_direct(a, b).value, S2_closed(a, b)), 1e-7);
  }
  for (int i = 0; i < 5; ++i) {
    cplx a;
    cplx b;
    do {
      a = s.maybe_complex(-0.5, 0.45, 0.3);
      b = s.maybe_complex(-0.5, 0.45, 0.3);
    } while ((a + b).real() >= 0.8 || !generic(a, b));
    c.within("closed vs quadrature at " + pt(a, b), disagreement(S2_closed(a, b), oracle_Istar(a, b).value), 1e-7);
  }
  return c.take();
}

inline std::vector<Check> integer_sum_values(const AcceptanceOptions& opt) {
  using namespace constants;
  CheckList c(opt);
  const double even = 0.3 * pi / 12.0 / std::tan(0.3 * pi);
  c.within("S2(0.3, -0.3) integer-sum formula", relative_difference(S2_integer_sum(0.3, 0), even), 1e-10);
  c.within("S2(0.3, -0.3) direct", relative_difference(S2_direct(0.3, -0.3).value, even), 1e-10);
  const double a = 0.5;
  const double b = -1.0 - a;
  const double odd = a * b * zeta3 / (4.0 * pi * pi);
  c.within("S2(0.5, -1.5) integer-sum formula", relative_difference(S2_integer_sum(a, -1), odd), 1e-10);
  c.within("S2(0.5, -1.5) direct", relative_difference(S2_direct(a, b).value, odd), 1e-10);
  c.within("S2(0, 0) direct with limit terms", std::abs(S2_direct(0.0, 0.0).value - 1.0 / 12.0), 1e-9);
  return c.take();
}

inline std::vector<Check> finite_s1(const AcceptanceOptions& opt) {
  CheckList c(opt);
  for (std::size_t m = 0; m <= 6; ++m) {
    for (std::size_t n = 0; n <= 6; ++n) {
      if ((m + n) % 2 == 1) {
        c.exact("S1_finite(" + std::to_string(m) + ", " + std::to_string(n) + ") = 0", S1_finite_exact(m, n) == 0);
      }
    }
  }
  c.exact("S1_finite(0, 0) = -1/12", S1_finite_exact(0, 0) == rational(-1, 12));
  return c.take();
}

inline std::vector<Check> critical_line(const AcceptanceOptions& opt) {
  CheckList c(opt);
  for (double t : {0.5, 1.0, 2.0}) {
    const cplx s(0.5, t);
    const std::string at = "t=" + format_real(t);
    const SeriesValue i = I_critical_line(t);
    const SeriesValue j = J_critical_line(t);
    c.within("I vs quadrature at " + at, relative_difference(i.value, oracle_I(s, std::conj(s)).value), 1e-7);
    c.within("J vs quadrature at " + at, relative_difference(j.value, oracle_J(s, std::conj(s)).value), 1e-7);
    c.within("Im I at " + at, std::abs(i.value.imag()), 1e-12);
    c.within("Im J at " + at, std::abs(j.value.imag()), 1e-12);
  }
  return c.take();
}

inline std::vector<Check> epsilon_expansions(const AcceptanceOptions& opt) {
  CheckList c(opt);
  Sampler s(seed_for(13));
  constexpr double kEps = 1e-4;
  for (int i = 0; i < 10; ++i) {
    double a;
    double b;
    do {
      a = s.uniform(1.2, 4.8);
      b = s.uniform(1.2, 4.8);
    } while (near_integer_by(a, 5e-2) || near_integer_by(b, 5e-2));
    const double xi = s.uniform(0.05, 0.9);
    const auto one = epsilon_expansion_check(a, b, xi, kEps);
    const auto two = epsilon_expansion_check(a, b, xi, 2.0 * kEps);
    const std::string at = pt(a, b) + " xi=" + format_real(xi);
    c.within("scaled remainder at " + at, one.worst(), 1e3);
    // R(eps) = r(eps) eps^2; the fitted power log2(R(2 eps)/R(eps)) should be 2
    auto power = [](double r1, double r2) { return std::log2(4.0 * r2 / r1); };
    c.within("remainder power (argument xi) at " + at, std::abs(power(one.direct, two.direct) - 2.0), 0.05);
    c.within("remainder power (argument 1 - xi) at " + at,
             std::abs(power(one.complementary, two.complementary) - 2.0), 0.05);
  }
  return c.take();
}

inline std::vector<Check> half_argument_sum(const AcceptanceOptions& opt) {
  CheckList c(opt);
  Sampler s(seed_for(14));
  for (int i = 0; i < 10; ++i) {
    cplx a;
    cplx b;
    do {
      a = s.maybe_complex(-2.5, 2.5, 1.0);
      b = s.maybe_complex(-2.5, 2.5, 1.0);
    } while (near_integer_by(a, 5e-2) || near_integer_by(b, 5e-2));
    c.within("residual at " + pt(a, b), half_argument_beta_residual(a, b), 1e-10);
  }
  c.within("residual at (0, 0)", half_argument_beta_residual(0.0, 0.0), 1e-10);
  c.within("residual at (-1, 0)", half_argument_beta_residual(-1.0, 0.0), 1e-10);
  return c.take();
}

inline std::vector<Check> foundation(const AcceptanceOptions& opt) {
  using namespace constants;
  CheckList c(opt);
  for (int n = 1; n <= 5; ++n) {
    const double s = -2.0 * n;
    c.exact("zeta(" + std::to_string(-2 * n) + ") = 0", riemann_zeta(s) == 0.0);
    constexpr double h = 1e-5;
    const double fd = (riemann_zeta(s + h) - riemann_zeta(s - h)).real() / (2.0 * h);
    c.within("zeta'(" + std::to_string(-2 * n) + ") vs finite difference", relative_difference(zeta_deriv_neg_even(n), fd), 1e-7);
  }
  c.within("zeta'(0) = -log(2 pi)/2", std::abs(zeta_deriv(0.0).real() + 0.5 * log_two_pi), 1e-11);
  c.within("zeta'(-1) = 1/12 - log A", std::abs(zeta_deriv(-1.0).real() - (1.0 / 12.0 - log_glaisher)), 1e-12);
  constexpr double eps = 1e-6;
  c.within("eps zeta(1 + eps) - 1 - gamma_E eps at eps = 1e-6",
           std::abs(eps * riemann_zeta_near_one(eps) - 1.0 - euler_gamma * eps), 1e-10);
  return c.take();
}

struct CriterionDef {
  int id;
  const char* name;
  std::vector<std::string> modules;
  std::vector<Check> (*run)(const AcceptanceOptions&);
};

inline const std::vector<CriterionDef>& criteria() {
  static const std::vector<CriterionDef> list = {
      {1, "representation_equivalence_I", {"integrals_ij", "hyp2f1"}, representation_equivalence_I},
      {2, "representation_equivalence_J", {"integrals_ij", "hyp2f1"}, representation_equivalence_J},
      {3, "oracle_agreement_IJ", {"integrals_ij", "oracle_quadrature"}, oracle_agreement},
      {4, "golden_moment_values", {"moments", "oracle_quadrature"}, golden_moments},
      {5, "moment_summation_identity", {"moments"}, moment_summation_identity},
      {6, "wilton_null_sum", {"moments", "hurwitz"}, wilton_null},
      {7, "bernoulli_binomial_identity", {"moments", "core_special"}, bernoulli_binomial},
      {8, "s1_direct_closed_quadrature", {"double_sums", "oracle_quadrature"}, s1_checks},
      {9, "s2_direct_closed_quadrature", {"double_sums", "oracle_quadrature"}, s2_checks},
      {10, "s2_integer_sum_values", {"double_sums"}, integer_sum_values},
      {11, "s1_finite_parity", {"double_sums"}, finite_s1},
      {12, "critical_line", {"integrals_ij", "oracle_quadrature"}, critical_line},
      {13, "epsilon_expansion_remainder", {"hyp2f1"}, epsilon_expansions},
      {14, "half_argument_beta_sum", {"hyp2f1"}, half_argument_sum},
      {15, "foundation_values", {"core_special"}, foundation},
  };
  return list;
}

}  // namespace detail

inline std::vector<std::string> acceptance_modules() {
  return {"core_special", "hurwitz", "hyp2f1", "integrals_ij", "moments", "double_sums", "oracle_quadrature", "cli"};
}

inline CriterionResult run_criterion(int id, const AcceptanceOptions& opt = {}) {
  for (const auto& def : detail::criteria()) {
    if (def.id != id) continue;
    CriterionResult r{def.id, def.name, def.modules, {}, {}};
    try {
      r.checks = def.run(opt);
    } catch (const std::exception& e) {
      r.failure = e.what();
    }
    return r;
  }
  throw error(errc::domain, "no acceptance criterion " + std::to_string(id));
}

inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {}) {
  std::vector<CriterionResult> out;
  for (const auto& def : detail::criteria()) {
    if (!opt.only.empty() && opt.only != "cli" &&
        std::find(def.modules.begin(), def.modules.end(), opt.only) == def.modules.end()) {
      continue;
    }
    out.push_back(run_criterion(def.id, opt));
  }
  return out;
}

/// "PASS 01 name  worst=... threshold=... checks=N  [label]"
inline std::string summary_line(const CriterionResult& r) {
  char head[128];
  std::snprintf(head, sizeof head, "%s %02d %-30s", r.passed() ? "PASS" : "FAIL", r.id, r.name.c_str());
  std::string line = head;
  if (!r.failure.empty()) return line + " error: " + r.failure;
  if (const Check* c = r.tightest()) {
    char body[160];
    std::snprintf(body, sizeof body, " worst=%.3e threshold=%.1e checks=%zu", c->measured, c->threshold, r.checks.size());
    line += body;
    line += "  [" + c->label + "]";
  }
  return line;
}

inline nlohmann::ordered_json to_json_value(const CriterionResult& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["name"] = r.name;
  j["modules"] = r.modules;
  j["passed"] = r.passed();
  if (!r.failure.empty()) j["error"] = r.failure;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["label"] = c.label;
    e["measured"] = c.measured;
    e["threshold"] = c.threshold;
    e["passed"] = c.passed;
    checks.push_back(e);
  }
  j["checks"] = checks;
  return j;
}

}  // namespace zetasums
