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

// Hurwitz zeta zeta(a, x), the shifted function zeta1(a, x) = zeta(a, x + 1),
// and Taylor expansions of zeta(a, .) about a fixed shift.

#pragma once

#include <cmath>
#include <cstddef>

#include "zetasums/bernoulli.hpp"
#include "zetasums/special.hpp"
#include "zetasums/types.hpp"

namespace zetasums {

/// zeta(a + k) with the distance to the pole formed as a + (k - 1), so that
/// a close to 1 - k keeps its full relative accuracy.
inline cplx zeta_at_offset(cplx a, std::size_t k) {
  const cplx s = a + static_cast<double>(k);
  const cplx eps = a + (static_cast<double>(k) - 1.0);
  if (eps == cplx(0.0, 0.0)) throw error(errc::pole, "zeta at s = 1");
  if (s.real() >= -0.5) return detail::hurwitz_em(s, eps, 1.0, 20);
  return riemann_zeta(s);
}

/// zeta(s) - 1 without the cancellation of subtracting 1 for large Re s.
inline cplx zeta_minus_one(cplx s) {
  if (s.real() >= 2.0) return detail::hurwitz_em(s, s - 1.0, 2.0, 20);
  return riemann_zeta(s) - 1.0;
}

/// zeta(a + k) - 1, with the pole distance handled as in zeta_at_offset.
inline cplx zeta_minus_one_at_offset(cplx a, std::size_t k) {
  const cplx s = a + static_cast<double>(k);
  if (s.real() >= 2.0) return detail::hurwitz_em(s, a + (static_cast<double>(k) - 1.0), 2.0, 20);
  return zeta_at_offset(a, k) - 1.0;
}

/// When a sits on -m and k = m + 1, (a)_k zeta(a + k) has a removable
/// singularity with limit (-1)^(k-1) (k-1)!. Returns true and the limit then.
/// `tol` is the distance from -m still treated as sitting on it.
inline bool pole_term_limit(cplx a, std::size_t k, double& limit, double tol = 0.0) {
  if (k == 0 || !is_near_nonpositive_integer(a, tol)) return false;
  const double m = -near_integer(a);
  if (static_cast<double>(k) != m + 1.0) return false;
  double f = 1.0;
  for (std::size_t i = 2; i < k; ++i) f *= static_cast<double>(i);
  limit = (k % 2 == 1) ? f : -f;
  return true;
}

// ---------------------------------------------------------------------------

namespace detail {

// sum_{k>=0} (a)_k / k! zeta(a + k) y^k = zeta(a, 1 - y), |y| <= 1/2
inline cplx hurwitz_taylor_at_one(cplx a, double y) {
  cplx sum = 0.0;
  cplx coef = 1.0;  // (a)_k y^k / k!
  int small = 0;
  for (std::size_t k = 0; k < 400; ++k) {
    cplx term;
    double limit = 0.0;
    if (pole_term_limit(a, k, limit)) {
      term = limit / std::tgamma(static_cast<double>(k) + 1.0) * std::pow(y, static_cast<double>(k));
    } else {
      term = coef == 0.0 ? cplx(0.0) : coef * zeta_at_offset(a, k);
    }
    sum += term;
    if (std::abs(term) <= 1e-17 * std::max(1.0, std::abs(sum))) {
      if (++small == 3) break;
    } else {
      small = 0;
    }
    coef *= (a + static_cast<double>(k)) * y / static_cast<double>(k + 1);
  }
  return sum;
}

}  // namespace detail

/// Hurwitz zeta sum_{k>=0} (k + x)^(-a), continued to all a != 1.
inline cplx hurwitz_zeta(cplx a, double x) {
  if (!(x > 0.0)) throw error(errc::domain, "hurwitz_zeta requires x > 0");
  if (a == cplx(1.0, 0.0)) throw error(errc::pole, "hurwitz_zeta at a = 1");
  if (is_nonpositive_integer(a)) {
    const auto n = static_cast<std::size_t>(-a.real());
    return -bernoulli_polynomial(n + 1, x) / static_cast<double>(n + 1);
  }
  if (a.real() < 0.0 && x <= 32.0) {
    // Euler-Maclaurin loses digits to cancellation here; expand about x = 1
    if (x < 0.5) return pow_neg(x, a) + detail::hurwitz_taylor_at_one(a, -x);
    // zeta(a, x) = zeta(a, y) - sum_{k<m} (y + k)^(-a) with y in [0.5, 1.5)
    const double m = std::floor(x - 0.5);
    const double y = x - m;
    cplx head = 0.0;
    for (double k = 0.0; k < m; k += 1.0) head += pow_neg(y + k, a);
    return detail::hurwitz_taylor_at_one(a, 1.0 - y) - head;
  }
  return detail::hurwitz_em(a, a - 1.0, x);
}

/// zeta(a, x) - x^(-a) = zeta(a, x + 1); finite at x = 0.
inline cplx zeta1(cplx a, double x) {
  if (!(x >= 0.0)) throw error(errc::domain, "zeta1 requires x >= 0");
  return hurwitz_zeta(a, x + 1.0);
}

namespace detail {

inline SeriesValue flagged_divergent() {
  return SeriesValue{0.0, std::numeric_limits<double>::infinity(), 0, false};
}

// (a)_k / k! zeta(a + k, shift) with the removable pole replaced by its limit
template <class ZetaFn>
cplx poch_zeta_over_factorial(cplx a, std::size_t k, cplx coef, ZetaFn&& zeta_at) {
  double limit = 0.0;
  if (pole_term_limit(a, k, limit)) return limit / std::tgamma(static_cast<double>(k) + 1.0);
  if (coef == 0.0) return 0.0;
  return coef * zeta_at(k);
}

}  // namespace detail

/// sum_k (a)_k / k! zeta(a + k, b) x^k, which is zeta(a, b - x) for |x| < b.
inline SeriesValue wilton_zeta_shift(cplx a, double b, cplx x, double tol = kDefaultTol,
                                     std::size_t max_terms = kDefaultMaxTerms) {
  if (a == cplx(1.0, 0.0)) throw error(errc::pole, "wilton_zeta_shift at a = 1");
  if (!(b > 0.0)) throw error(errc::domain, "wilton_zeta_shift requires b > 0");
  if (std::abs(x) >= b) return detail::flagged_divergent();
  // coefficients (a)_k / k! and powers x^k carried by recurrence
  cplx coef = 1.0;
  cplx power = 1.0;
  std::size_t at = 0;
  auto term = [&](std::size_t k) {
    while (at < k) {
      coef *= (a + static_cast<double>(at)) / static_cast<double>(at + 1);
      power *= x;
      ++at;
    }
    auto zeta_at = [&](std::size_t i) { return hurwitz_zeta(a + static_cast<double>(i), b); };
    return detail::poch_zeta_over_factorial(a, k, coef, zeta_at) * power;
  };
  return sum_series(term, SeriesControl{tol, max_terms});
}

/// sum_k (a)_k / k! zeta(a + k) x^k, which is zeta(a, 1 - x) for |x| < 1.
inline SeriesValue zeta_one_minus(cplx a, double x, double tol = kDefaultTol,
                                  std::size_t max_terms = kDefaultMaxTerms) {
  if (a == cplx(1.0, 0.0)) throw error(errc::pole, "zeta_one_minus at a = 1");
  if (std::abs(x) >= 1.0) return detail::flagged_divergent();
  cplx coef = 1.0;
  std::size_t at = 0;
  auto term = [&](std::size_t k) {
    while (at < k) {
      coef *= (a + static_cast<double>(at)) / static_cast<double>(at + 1);
      ++at;
    }
    auto zeta_at = [&](std::size_t i) { return zeta_at_offset(a, i); };
    return detail::poch_zeta_over_factorial(a, k, coef, zeta_at) * std::pow(x, static_cast<double>(k));
  };
  return sum_series(term, SeriesControl{tol, max_terms});
}

/// sum_{n>=0} w_n (a)_n (zeta(a + n) - 1), where w_0 is given and
/// w_{n+1} = w_n * ratio(n). The removable pole at a = -m, n = m + 1 takes
/// its limit, so the series is finite when a is a non-positive integer.
template <class Ratio>
SeriesValue poch_eta_series(cplx a, cplx w0, Ratio&& ratio, SeriesControl ctl = {}) {
  cplx c = w0;  // w_n (a)_n
  cplx w = w0;
  std::size_t at = 0;
  auto term = [&](std::size_t n) -> cplx {
    while (at < n) {
      const cplx r = ratio(at);
      c *= (a + static_cast<double>(at)) * r;
      w *= r;
      ++at;
    }
    double limit = 0.0;
    if (pole_term_limit(a, n, limit)) return w * limit;
    if (c == 0.0) return 0.0;
    return c * zeta_minus_one_at_offset(a, n);
  };
  return sum_series(term, ctl);
}

}  // namespace zetasums
