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

// Foundation special functions on complex arguments: gamma, log-gamma,
// digamma, the Riemann zeta function and its derivative.
//
// Gamma on the real axis comes from the C library. Off the axis it uses the
// g = 7, n = 9 Lanczos approximation for Re z >= 1/2 and the reflection
// formula below that line. Zeta uses Euler-Maclaurin summation for
// Re s >= -1/2 and the functional equation for Re s < -1/2.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "zetasums/bernoulli.hpp"
#include "zetasums/types.hpp"

namespace zetasums {

// ---------------------------------------------------------------------------
// sin(pi z), cos(pi z) with exact zeros at the integers.

namespace detail {

inline double sinpi(double x) {
  if (x == std::floor(x)) return 0.0;
  double r = std::fmod(x, 2.0);  // (-2, 2)
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  // r in [-1, 1]; fold into [-1/2, 1/2]
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(constants::pi * r);
}

inline double cospi(double x) {
  if (x - 0.5 == std::floor(x - 0.5)) return 0.0;
  return sinpi(x + 0.5);
}

}  // namespace detail

inline cplx sin_pi(cplx z) {
  const double x = z.real();
  const double y = constants::pi * z.imag();
  return {detail::sinpi(x) * std::cosh(y), detail::cospi(x) * std::sinh(y)};
}

inline cplx cos_pi(cplx z) {
  const double x = z.real();
  const double y = constants::pi * z.imag();
  return {detail::cospi(x) * std::cosh(y), -detail::sinpi(x) * std::sinh(y)};
}

// ---------------------------------------------------------------------------
// Gamma family.

namespace detail {

inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczosCoef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// log Gamma(z) for Re z >= 1/2; imaginary part is not reduced.
inline cplx lanczos_log_gamma(cplx z) {
  z -= 1.0;
  cplx x = kLanczosCoef[0];
  for (std::size_t i = 1; i < kLanczosCoef.size(); ++i) x += kLanczosCoef[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * constants::log_two_pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

inline void require_off_poles(cplx z, const char* who) {
  if (is_nonpositive_integer(z)) throw error(errc::pole, std::string(who) + " at a non-positive integer");
}

}  // namespace detail

inline cplx gamma(cplx z) {
  detail::require_off_poles(z, "gamma");
  if (z.imag() == 0.0) return std::tgamma(z.real());
  if (z.real() < 0.5) return constants::pi / (sin_pi(z) * gamma(1.0 - z));
  return std::exp(detail::lanczos_log_gamma(z));
}

/// A logarithm of Gamma(z). The imaginary part is only defined modulo 2 pi,
/// which is all that is needed when the result is exponentiated.
inline cplx log_gamma(cplx z) {
  detail::require_off_poles(z, "log_gamma");
  if (z.imag() == 0.0) {
    int sign = 1;
    const double lg = ::lgamma_r(z.real(), &sign);
    return {lg, sign < 0 ? constants::pi : 0.0};
  }
  if (z.real() < 0.5) {
    return std::log(constants::pi) - std::log(sin_pi(z)) - log_gamma(1.0 - z);
  }
  return detail::lanczos_log_gamma(z);
}

/// 1/Gamma(z), entire; exactly zero at the poles of Gamma.
inline cplx rgamma(cplx z) {
  if (is_nonpositive_integer(z)) return 0.0;
  if (z.imag() == 0.0) return 1.0 / std::tgamma(z.real());
  if (z.real() < 0.5) return sin_pi(z) * gamma(1.0 - z) / constants::pi;
  return std::exp(-detail::lanczos_log_gamma(z));
}

inline cplx digamma(cplx z) {
  detail::require_off_poles(z, "digamma");
  cplx acc = 0.0;
  if (z.real() < 0.5) {
    // psi(z) = psi(1 - z) - pi cot(pi z)
    acc -= constants::pi * cos_pi(z) / sin_pi(z);
    z = 1.0 - z;
  }
  while (std::abs(z) < 15.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  const auto& table = BernoulliTable::instance();
  const cplx inv2 = 1.0 / (z * z);
  cplx zp = inv2;
  cplx series = 0.0;
  for (std::size_t k = 1; k <= 10; ++k) {
    series += table.value(2 * k) / (2.0 * static_cast<double>(k)) * zp;
    zp *= inv2;
  }
  return acc + std::log(z) - 0.5 / z - series;
}

/// psi(k) for a positive integer k, from the harmonic numbers.
inline double digamma_positive_integer(std::size_t k) {
  double h = 0.0;
  for (std::size_t i = 1; i < k; ++i) h += 1.0 / static_cast<double>(i);
  return h - constants::euler_gamma;
}

// ---------------------------------------------------------------------------
// Euler-Maclaurin core for sum_{k>=0} (k + x)^(-a).

namespace detail {

struct EulerMaclaurinPlan {
  int shift;      // number of directly summed terms
  int max_order;  // highest Bernoulli index pair used
};

inline EulerMaclaurinPlan em_plan(cplx a, int min_shift) {
  const int base = a.real() < 0.0 ? 8 : min_shift;
  return {base + static_cast<int>(std::ceil(std::abs(a.imag()))), 30};
}

// `am1` is a - 1 supplied separately so callers near the pole can pass it
// without the cancellation of forming (1 + eps) - 1.
inline cplx hurwitz_em(cplx a, cplx am1, double x, int min_shift = 16) {
  const auto plan = em_plan(a, min_shift);
  const auto& table = BernoulliTable::instance();
  cplx head = 0.0;
  for (int k = 0; k < plan.shift; ++k) head += pow_neg(static_cast<double>(k) + x, a);
  const double w = static_cast<double>(plan.shift) + x;
  const double lw = std::log(w);
  const cplx wa = std::exp(-a * lw);  // w^(-a)
  // w^(1-a)/(a-1) split as 1/(a-1) + (w^(1-a) - 1)/(a-1) keeps the pole term exact
  cplx tail;
  if (std::abs(am1) < 0.5) {
    tail = 1.0 / am1 + expm1(-am1 * lw) / am1;
  } else {
    tail = std::exp(-am1 * lw) / am1;
  }
  tail += 0.5 * wa;
  cplx poch = a;          // (a)_{2j-1}
  cplx wp = wa / w;       // w^(-a-2j+1)
  const double inv_w2 = 1.0 / (w * w);
  double previous = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= plan.max_order; ++j) {
    const cplx term = table.even_over_factorial(static_cast<std::size_t>(j)) * poch * wp;
    const double mag = std::abs(term);
    if (mag > previous) break;  // asymptotic series started to diverge
    tail += term;
    previous = mag;
    if (mag <= 1e-18 * std::abs(head + tail)) break;
    poch *= (a + static_cast<double>(2 * j - 1)) * (a + static_cast<double>(2 * j));
    wp *= inv_w2;
    if (poch == 0.0) break;  // negative integer a: expansion terminated exactly
  }
  return head + tail;
}

// d/da of sum_{k>=0} (k + x)^(-a) from the differentiated expansion.
inline cplx hurwitz_em_derivative(cplx a, double x, int min_shift = 16) {
  const auto plan = em_plan(a, min_shift);
  const auto& table = BernoulliTable::instance();
  cplx head = 0.0;
  for (int k = 0; k < plan.shift; ++k) {
    const double base = static_cast<double>(k) + x;
    head -= std::log(base) * pow_neg(base, a);
  }
  const double w = static_cast<double>(plan.shift) + x;
  const double lw = std::log(w);
  const cplx am1 = a - 1.0;
  const cplx w1a = std::exp(-am1 * lw);  // w^(1-a)
  cplx tail = -lw * w1a / am1 - w1a / (am1 * am1);
  const cplx wa = w1a / w;
  tail += -0.5 * lw * wa;
  // (a)_{2j-1} and its derivative, carried together
  cplx poch = a;
  cplx dpoch = 1.0;
  cplx wp = wa / w;
  const double inv_w2 = 1.0 / (w * w);
  double previous = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= plan.max_order; ++j) {
    const double c = table.even_over_factorial(static_cast<std::size_t>(j));
    const cplx term = c * (dpoch - poch * lw) * wp;
    const double mag = std::abs(term);
    if (mag > previous) break;
    tail += term;
    previous = mag;
    if (mag <= 1e-18 * std::abs(head + tail)) break;
    for (int i = 0; i < 2; ++i) {
      const cplx f = a + static_cast<double>(2 * j - 1 + i);
      dpoch = dpoch * f + poch;
      poch *= f;
    }
    wp *= inv_w2;
  }
  return head + tail;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Riemann zeta.

inline cplx riemann_zeta(cplx s);

namespace detail {

// chi(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s), so that zeta(s) = chi(s) zeta(1 - s)
inline cplx zeta_reflection_prefactor(cplx s) {
  const cplx lg = log_gamma(1.0 - s);
  return std::exp(s * constants::log_two_pi - std::log(constants::pi) + lg) * sin_pi(0.5 * s);
}

}  // namespace detail

inline cplx riemann_zeta(cplx s) {
  if (s == cplx(1.0, 0.0)) throw error(errc::pole, "riemann_zeta at s = 1");
  if (s.real() >= -0.5) return detail::hurwitz_em(s, s - 1.0, 1.0, 20);
  if (is_nonpositive_integer(s)) {
    const auto n = static_cast<std::size_t>(-s.real());
    return static_cast<double>(zeta_at_nonpositive_integer_exact(n));
  }
  return detail::zeta_reflection_prefactor(s) * riemann_zeta(1.0 - s);
}

/// zeta(1 + eps) with the pole term formed from eps directly.
inline cplx riemann_zeta_near_one(cplx eps) {
  if (eps == cplx(0.0, 0.0)) throw error(errc::pole, "riemann_zeta_near_one at eps = 0");
  const cplx s = 1.0 + eps;
  if (s.real() < -0.5) return riemann_zeta(s);
  return detail::hurwitz_em(s, eps, 1.0, 20);
}

/// zeta'(-2n) = (-1)^n (2n)! / (2^(2n+1) pi^(2n)) zeta(2n+1), n >= 1.
inline double zeta_deriv_neg_even(int n) {
  if (n < 1) throw error(errc::domain, "zeta_deriv_neg_even requires n >= 1");
  // (2n)! / (2 pi)^(2n) accumulated as a product to stay in range
  double ratio = 1.0;
  for (int k = 1; k <= 2 * n; ++k) ratio *= static_cast<double>(k) / (2.0 * constants::pi);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * 0.5 * ratio * riemann_zeta(cplx(2.0 * n + 1.0, 0.0)).real();
}

inline cplx zeta_deriv(cplx s) {
  if (s == cplx(1.0, 0.0)) throw error(errc::pole, "zeta_deriv at s = 1");
  if (s.real() >= -0.5) return detail::hurwitz_em_derivative(s, 1.0, 20);
  // zeta'(s) = chi'(s) zeta(1-s) - chi(s) zeta'(1-s), with chi' written so
  // that the zeros of sin(pi s / 2) need no special case.
  const cplx one_minus = 1.0 - s;
  const cplx mag = std::exp(s * constants::log_two_pi - std::log(constants::pi) + log_gamma(one_minus));
  const cplx sn = sin_pi(0.5 * s);
  const cplx cs = cos_pi(0.5 * s);
  const cplx chi = mag * sn;
  const cplx dchi = mag * ((constants::log_two_pi - digamma(one_minus)) * sn + 0.5 * constants::pi * cs);
  return dchi * riemann_zeta(one_minus) - chi * zeta_deriv(one_minus);
}

}  // namespace zetasums
