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

// Tanh-sinh quadrature on (0, 1) and the reference integrals built on it.
//
// Nodes are generated from the distance to the nearer endpoint, so an
// integrand may ask for both x and 1 - x and receive each to full relative
// precision; no clamping away from the endpoints is done.

#pragma once

#include <cmath>
#include <cstddef>
#include <type_traits>

#include "zetasums/hurwitz.hpp"
#include "zetasums/types.hpp"

namespace zetasums {

struct QuadratureConfig {
  int max_level = 12;
  double target_abs_error = 1e-10;
  // Re parts of the algebraic exponents at x = 0 and x = 1 (x^p, (1-x)^q).
  double left_exponent = 0.0;
  double right_exponent = 0.0;
};

struct QuadratureResult {
  cplx value{};
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

namespace detail {

inline constexpr int kMinLevel = 3;
inline constexpr double kSmallestDistance = 1e-300;

template <class F>
cplx call_integrand(F& f, double x, double one_minus_x) {
  if constexpr (std::is_invocable_v<F&, double, double>) {
    return cplx(f(x, one_minus_x));
  } else {
    return cplx(f(x));
  }
}

// Contribution of the nodes t = k h, k odd (or all k at level 0).
template <class F>
cplx tanh_sinh_level(F& f, int level, std::size_t& evaluations) {
  const double h = std::ldexp(1.0, -level);
  const int step = level == 0 ? 1 : 2;
  const double half_pi = 0.5 * constants::pi;
  cplx sum = 0.0;
  if (level == 0) {
    sum += half_pi * 0.5 * call_integrand(f, 0.5, 0.5);
    ++evaluations;
  }
  for (int k = 1;; k += step) {
    const double t = k * h;
    const double u = half_pi * std::sinh(t);
    const double e = std::exp(-2.0 * u);
    const double d = e / (1.0 + e);  // distance to the nearer endpoint
    if (d < kSmallestDistance) break;
    const double w = half_pi * std::cosh(t) * 2.0 * e / ((1.0 + e) * (1.0 + e));
    const double far = 1.0 / (1.0 + e);
    const cplx left = call_integrand(f, d, far);
    const cplx right = call_integrand(f, far, d);
    evaluations += 2;
    if (!is_finite(left) || !is_finite(right)) {
      throw error(errc::nonconvergence, "quadrature integrand returned a non-finite value");
    }
    sum += w * (left + right);
  }
  return sum;
}

}  // namespace detail

/// Integral over (0, 1) of f, called as f(x) or f(x, 1 - x).
template <class F>
QuadratureResult integrate_unit_interval(F&& f, const QuadratureConfig& cfg = {}) {
  if (!(cfg.left_exponent > -1.0) || !(cfg.right_exponent > -1.0)) {
    throw error(errc::domain, "quadrature: endpoint exponent must exceed -1 for integrability");
  }
  QuadratureResult out;
  cplx raw = detail::tanh_sinh_level(f, 0, out.evaluations);
  cplx previous = raw;
  for (int level = 1; level <= cfg.max_level; ++level) {
    raw += detail::tanh_sinh_level(f, level, out.evaluations);
    const cplx current = raw * std::ldexp(1.0, -level);
    out.value = current;
    out.abs_error_estimate = std::abs(current - previous);
    previous = current;
    if (level >= detail::kMinLevel &&
        out.abs_error_estimate <= cfg.target_abs_error * std::max(1.0, std::abs(current))) {
      out.converged = true;
      break;
    }
  }
  return out;
}

/// Integral over (lo, hi) by the affine map onto (0, 1). The integrand takes
/// x, or x and its distances to both ends of the interval.
template <class F>
QuadratureResult integrate_interval(F&& f, double lo, double hi, const QuadratureConfig& cfg = {}) {
  const double len = hi - lo;
  auto mapped = [&](double s, double one_minus_s) {
    if constexpr (std::is_invocable_v<F&, double, double, double>) {
      return len * cplx(f(lo + len * s, len * s, len * one_minus_s));
    } else {
      return len * cplx(f(lo + len * s));
    }
  };
  return integrate_unit_interval(mapped, cfg);
}

// ---------------------------------------------------------------------------
// Reference integrals.

inline QuadratureConfig oracle_config() {
  QuadratureConfig cfg;
  cfg.target_abs_error = 1e-13;
  return cfg;
}

inline void require_not_one(cplx a, cplx b) {
  if (a == cplx(1.0, 0.0) || b == cplx(1.0, 0.0)) throw error(errc::pole, "oracle: exponent at 1");
}

/// int_0^1 zeta1(a, x) zeta1(b, x) dx
inline QuadratureResult oracle_I(cplx a, cplx b, QuadratureConfig cfg = oracle_config()) {
  require_not_one(a, b);
  return integrate_unit_interval([&](double x) { return zeta1(a, x) * zeta1(b, x); }, cfg);
}

/// int_0^1 zeta1(a, x) zeta1(b, 1 - x) dx
inline QuadratureResult oracle_J(cplx a, cplx b, QuadratureConfig cfg = oracle_config()) {
  require_not_one(a, b);
  return integrate_unit_interval([&](double x, double xc) { return zeta1(a, x) * zeta1(b, xc); }, cfg);
}

/// int_0^1 zeta(a, x) zeta(b, x) dx for Re a, Re b, Re(a + b) < 1
inline QuadratureResult oracle_Istar(cplx a, cplx b, QuadratureConfig cfg = oracle_config()) {
  if (!(a.real() < 1.0 && b.real() < 1.0 && (a + b).real() < 1.0)) {
    throw error(errc::domain, "oracle_Istar requires Re a, Re b, Re(a+b) < 1");
  }
  cfg.left_exponent = -(a + b).real();
  return integrate_unit_interval(
      [&](double x) { return (pow_neg(x, a) + zeta1(a, x)) * (pow_neg(x, b) + zeta1(b, x)); }, cfg);
}

/// int_0^1 zeta(a, x) zeta(b, 1 - x) dx for Re a, Re b < 1
inline QuadratureResult oracle_Jstar(cplx a, cplx b, QuadratureConfig cfg = oracle_config()) {
  if (!(a.real() < 1.0 && b.real() < 1.0)) throw error(errc::domain, "oracle_Jstar requires Re a, Re b < 1");
  cfg.left_exponent = -a.real();
  cfg.right_exponent = -b.real();
  return integrate_unit_interval(
      [&](double x, double xc) { return (pow_neg(x, a) + zeta1(a, x)) * (pow_neg(xc, b) + zeta1(b, xc)); }, cfg);
}

/// int_0^1 x^n zeta(a, x) dx for Re a < n + 1, a != 1
inline QuadratureResult oracle_moment(int n, cplx a, QuadratureConfig cfg = oracle_config()) {
  if (n < 0) throw error(errc::domain, "oracle_moment requires n >= 0");
  if (!(a.real() < n + 1.0)) throw error(errc::domain, "oracle_moment requires Re a < n + 1");
  if (a == cplx(1.0, 0.0)) throw error(errc::pole, "oracle_moment at a = 1");
  cfg.left_exponent = n - a.real();
  const double dn = n;
  return integrate_unit_interval(
      [&](double x) { return pow_neg(x, a - dn) + std::pow(x, dn) * zeta1(a, x); }, cfg);
}

}  // namespace zetasums
