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

// Pochhammer symbol, beta function and the Gauss hypergeometric function
// 2F1(a, b; c; z) on the unit disk, with the z -> 1 - z connection used for
// real z close to 1.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "zetasums/special.hpp"
#include "zetasums/types.hpp"

namespace zetasums {

inline cplx pochhammer(cplx a, std::size_t n) {
  cplx r = 1.0;
  for (std::size_t i = 0; i < n; ++i) r *= a + static_cast<double>(i);
  return r;
}

/// B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y). When only x + y sits on a
/// pole the quotient is an exact zero and 0 is returned.
inline cplx beta_fn(cplx x, cplx y) {
  if (is_nonpositive_integer(x) || is_nonpositive_integer(y)) {
    throw error(errc::pole, "beta_fn: gamma argument at a non-positive integer");
  }
  if (is_nonpositive_integer(x + y)) return 0.0;
  const bool real = x.imag() == 0.0 && y.imag() == 0.0;
  if (real && std::abs(x.real()) < 150.0 && std::abs(y.real()) < 150.0 && std::abs((x + y).real()) < 150.0) {
    return std::tgamma(x.real()) * std::tgamma(y.real()) / std::tgamma((x + y).real());
  }
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

enum class Hyp2f1Method {
  automatic,    // direct series near 0, connection formula near 1
  direct,       // power series in z
  one_minus_z,  // connection formula in 1 - z; refuses integer c - a - b
  pfaff,        // (1 - z)^(-a) 2F1(a, c - b; c; z / (z - 1))
};

namespace detail {

inline SeriesValue hyp2f1_series(cplx a, cplx b, cplx c, cplx z, SeriesControl ctl) {
  cplx t = 1.0;
  std::size_t at = 0;
  auto term = [&](std::size_t n) {
    while (at < n) {
      const double k = static_cast<double>(at);
      t *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
      ++at;
    }
    return t;
  };
  return sum_series(term, ctl);
}

inline bool terminates(cplx a, cplx b) { return is_nonpositive_integer(a) || is_nonpositive_integer(b); }

inline void require_c_admissible(cplx a, cplx b, cplx c) {
  if (is_nonpositive_integer(c) && !terminates(a, b)) {
    throw error(errc::pole, "gauss_2f1: c at a non-positive integer");
  }
}

// 2F1(a, b; a + b + m; 1 - u), m = 0, 1, 2, ...; logarithmic connection
inline SeriesValue hyp2f1_log_plus(cplx a, cplx b, int m, double u, cplx p, SeriesControl ctl) {
  const double lu = std::log(u);
  const cplx c = a + b + static_cast<double>(m);
  SeriesValue out = exact_value(0.0);
  if (m > 0) {
    const cplx pre = gamma(static_cast<double>(m)) * gamma(c) * rgamma(a + static_cast<double>(m)) *
                     rgamma(b + static_cast<double>(m)) * std::exp(p * lu);
    cplx t = 1.0;
    cplx finite = 0.0;
    for (int n = 0; n < m; ++n) {
      finite += t;
      const double k = n;
      t *= (a + k) * (b + k) / ((k + 1.0) * (1.0 - m + k)) * u;
    }
    out.value += pre * finite;
  }
  const cplx pre = gamma(c) * rgamma(a) * rgamma(b);
  if (pre == 0.0) return out;
  // (z - 1)^m = (-u)^m
  const cplx sign_u = (m % 2 == 0 ? 1.0 : -1.0) * std::exp((p + static_cast<double>(m)) * lu);
  cplx psi_a = digamma(a + static_cast<double>(m));
  cplx psi_b = digamma(b + static_cast<double>(m));
  double psi_n1 = -constants::euler_gamma;             // psi(n + 1)
  double psi_nm1 = digamma_positive_integer(m + 1);    // psi(n + m + 1)
  double inv_fact = 1.0;                               // 1 / (n! (n + m)!)
  for (int i = 2; i <= m; ++i) inv_fact /= i;
  cplx poch = 1.0;  // (a + m)_n (b + m)_n u^n
  std::size_t at = 0;
  auto term = [&](std::size_t n) {
    while (at < n) {
      const double k = static_cast<double>(at);
      poch *= (a + static_cast<double>(m) + k) * (b + static_cast<double>(m) + k) * u;
      inv_fact /= (k + 1.0) * (k + m + 1.0);
      psi_a += 1.0 / (a + static_cast<double>(m) + k);
      psi_b += 1.0 / (b + static_cast<double>(m) + k);
      psi_n1 += 1.0 / (k + 1.0);
      psi_nm1 += 1.0 / (k + m + 1.0);
      ++at;
    }
    return poch * inv_fact * (lu - psi_n1 - psi_nm1 + psi_a + psi_b);
  };
  SeriesValue tail = sum_series(term, ctl);
  tail.value *= -sign_u * pre;
  tail.abs_error_estimate *= std::abs(sign_u * pre);
  out += tail;
  return out;
}

// 2F1(a, b; a + b - m; 1 - u), m = 1, 2, ...
inline SeriesValue hyp2f1_log_minus(cplx a, cplx b, int m, double u, cplx p, SeriesControl ctl) {
  const double lu = std::log(u);
  const cplx c = a + b - static_cast<double>(m);
  SeriesValue out = exact_value(0.0);
  {
    const cplx pre = gamma(static_cast<double>(m)) * gamma(c) * rgamma(a) * rgamma(b) * std::exp((p - static_cast<double>(m)) * lu);
    cplx t = 1.0;
    cplx finite = 0.0;
    for (int n = 0; n < m; ++n) {
      finite += t;
      const double k = n;
      t *= (a - static_cast<double>(m) + k) * (b - static_cast<double>(m) + k) / ((k + 1.0) * (1.0 - m + k)) * u;
    }
    out.value += pre * finite;
  }
  const cplx pre = gamma(c) * rgamma(a - static_cast<double>(m)) * rgamma(b - static_cast<double>(m)) * std::exp(p * lu);
  if (pre == 0.0) return out;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  cplx psi_a = digamma(a);
  cplx psi_b = digamma(b);
  double psi_n1 = -constants::euler_gamma;
  double psi_nm1 = digamma_positive_integer(m + 1);
  double inv_fact = 1.0;
  for (int i = 2; i <= m; ++i) inv_fact /= i;
  cplx poch = 1.0;
  std::size_t at = 0;
  auto term = [&](std::size_t n) {
    while (at < n) {
      const double k = static_cast<double>(at);
      poch *= (a + k) * (b + k) * u;
      inv_fact /= (k + 1.0) * (k + m + 1.0);
      psi_a += 1.0 / (a + k);
      psi_b += 1.0 / (b + k);
      psi_n1 += 1.0 / (k + 1.0);
      psi_nm1 += 1.0 / (k + m + 1.0);
      ++at;
    }
    return poch * inv_fact * (lu - psi_n1 - psi_nm1 + psi_a + psi_b);
  };
  SeriesValue tail = sum_series(term, ctl);
  tail.value *= -sign * pre;
  tail.abs_error_estimate *= std::abs(pre);
  out += tail;
  return out;
}

// Connection formula with c - a - b off the integers.
inline SeriesValue hyp2f1_connection(cplx a, cplx b, cplx c, double u, cplx p, SeriesControl ctl) {
  const cplx s = c - a - b;
  const cplx gc = gamma(c);
  const double lu = std::log(u);
  const cplx pre1 = gc * gamma(s) * rgamma(c - a) * rgamma(c - b) * std::exp(p * lu);
  const cplx pre2 = gc * gamma(-s) * rgamma(a) * rgamma(b) * std::exp((s + p) * lu);
  SeriesValue out = exact_value(0.0);
  if (pre1 != 0.0) {
    SeriesValue f1 = hyp2f1_series(a, b, 1.0 - s, u, ctl);
    out.value += pre1 * f1.value;
    out.abs_error_estimate += std::abs(pre1) * f1.abs_error_estimate;
    out.terms_used += f1.terms_used;
    out.converged = out.converged && f1.converged;
  }
  if (pre2 != 0.0) {
    SeriesValue f2 = hyp2f1_series(c - a, c - b, 1.0 + s, u, ctl);
    out.value += pre2 * f2.value;
    out.abs_error_estimate += std::abs(pre2) * f2.abs_error_estimate;
    out.terms_used += f2.terms_used;
    out.converged = out.converged && f2.converged;
  }
  return out;
}

}  // namespace detail

/// u^p 2F1(a, b; c; 1 - u) for 0 < u < 1. Taking u rather than z keeps
/// arguments very close to 1 accurate, and folding in u^p lets callers scale
/// away the algebraic singularity at u = 0 without overflow.
inline SeriesValue gauss_2f1_near_one_scaled(cplx a, cplx b, cplx c, double u, cplx p, double tol = kDefaultTol,
                                             std::size_t max_terms = kDefaultMaxTerms) {
  if (!(u > 0.0 && u < 1.0)) throw error(errc::domain, "gauss_2f1_near_one requires 0 < u < 1");
  detail::require_c_admissible(a, b, c);
  const SeriesControl ctl{tol, max_terms};
  if (detail::terminates(a, b) || u > 0.3) {
    SeriesValue v = detail::hyp2f1_series(a, b, c, 1.0 - u, ctl);
    if (p != 0.0) {
      const cplx scale = std::exp(p * std::log(u));
      v.value *= scale;
      v.abs_error_estimate *= std::abs(scale);
    }
    return v;
  }
  const cplx s = c - a - b;
  if (is_near_integer(s)) {
    const int m = static_cast<int>(near_integer(s));
    if (m >= 0) return detail::hyp2f1_log_plus(a, b, m, u, p, ctl);
    return detail::hyp2f1_log_minus(a, b, -m, u, p, ctl);
  }
  return detail::hyp2f1_connection(a, b, c, u, p, ctl);
}

/// 2F1(a, b; c; 1 - u) for 0 < u < 1.
inline SeriesValue gauss_2f1_near_one(cplx a, cplx b, cplx c, double u, double tol = kDefaultTol,
                                      std::size_t max_terms = kDefaultMaxTerms) {
  return gauss_2f1_near_one_scaled(a, b, c, u, 0.0, tol, max_terms);
}

inline SeriesValue gauss_2f1(cplx a, cplx b, cplx c, cplx z, double tol = kDefaultTol,
                             Hyp2f1Method method = Hyp2f1Method::automatic,
                             std::size_t max_terms = kDefaultMaxTerms) {
  detail::require_c_admissible(a, b, c);
  const SeriesControl ctl{tol, max_terms};
  const bool real_z = z.imag() == 0.0;
  switch (method) {
    case Hyp2f1Method::direct:
      if (std::abs(z) >= 1.0 && !detail::terminates(a, b)) {
        throw error(errc::domain, "gauss_2f1: direct series needs |z| < 1");
      }
      return detail::hyp2f1_series(a, b, c, z, ctl);
    case Hyp2f1Method::one_minus_z: {
      if (!real_z || !(z.real() > 0.0 && z.real() < 1.0)) {
        throw error(errc::domain, "gauss_2f1: 1 - z connection needs 0 < z < 1");
      }
      if (is_near_integer(c - a - b)) {
        throw error(errc::degenerate, "gauss_2f1: c - a - b is an integer; connection formula is degenerate");
      }
      return detail::hyp2f1_connection(a, b, c, 1.0 - z.real(), 0.0, ctl);
    }
    case Hyp2f1Method::pfaff: {
      if (real_z && z.real() >= 1.0) throw error(errc::domain, "gauss_2f1: Pfaff map needs z != 1");
      const cplx w = z / (z - 1.0);
      if (std::abs(w) >= 1.0) throw error(errc::domain, "gauss_2f1: z / (z - 1) outside the unit disk");
      detail::require_c_admissible(a, c - b, c);
      SeriesValue v = detail::hyp2f1_series(a, c - b, c, w, ctl);
      const cplx pre = std::exp(-a * std::log(1.0 - z));
      v.value *= pre;
      v.abs_error_estimate *= std::abs(pre);
      return v;
    }
    case Hyp2f1Method::automatic:
      break;
  }
  if (std::abs(z) <= 0.7 || detail::terminates(a, b)) return detail::hyp2f1_series(a, b, c, z, ctl);
  if (real_z && z.real() > 0.7 && z.real() < 1.0) return gauss_2f1_near_one(a, b, c, 1.0 - z.real(), tol, max_terms);
  if (std::abs(z) < 1.0) return detail::hyp2f1_series(a, b, c, z, ctl);
  throw error(errc::domain, "gauss_2f1: z outside the unit disk");
}

/// h(xi) = sum_{n>=1} (g)_n xi^n / ((mu)_n n).
inline SeriesValue h_mu(cplx g, cplx mu, double xi, double tol = kDefaultTol,
                        std::size_t max_terms = kDefaultMaxTerms) {
  if (is_nonpositive_integer(mu)) throw error(errc::pole, "h_mu: mu at a non-positive integer");
  if (!(xi >= 0.0 && xi < 1.0)) throw error(errc::domain, "h_mu requires 0 <= xi < 1");
  cplx ratio = 1.0;  // (g)_n xi^n / (mu)_n
  std::size_t at = 0;
  auto term = [&](std::size_t n) {
    while (at < n) {
      const double k = static_cast<double>(at);
      ratio *= (g + k) / (mu + k) * xi;
      ++at;
    }
    return ratio / static_cast<double>(n);
  };
  return sum_series(term, SeriesControl{tol, max_terms}, 1);
}

/// Remainders of the two first-order expansions in eps of
///   xi^(1-b-eps) 2F1(a, 1-b; a+eps; 1-xi)
///   (1-xi)^(1-b-eps) 2F1(a, 1-b; a+eps; xi)
/// each divided by eps^2.
struct EpsilonExpansionCheck {
  double complementary = 0.0;  // argument 1 - xi
  double direct = 0.0;         // argument xi
  double worst() const { return std::max(complementary, direct); }
};

inline EpsilonExpansionCheck epsilon_expansion_check(cplx a, cplx b, double xi, double eps) {
  if (!(xi >= 0.0 && xi < 1.0)) throw error(errc::domain, "epsilon expansion check requires 0 <= xi < 1");
  if (!(eps > 0.0 && eps <= 1e-3)) throw error(errc::domain, "epsilon expansion check requires 0 < eps <= 1e-3");
  if (is_near_integer(a) || is_near_integer(b)) {
    throw error(errc::degenerate, "epsilon expansion check needs a and b off the integers");
  }
  const cplx g = a + b - 1.0;
  constexpr double tol = 1e-16;
  EpsilonExpansionCheck out;
  {
    const cplx lhs = std::exp((1.0 - b - eps) * std::log1p(-xi)) *
                     gauss_2f1(a, 1.0 - b, a + eps, xi, tol).value;
    const cplx first = xi == 0.0 ? cplx(0.0) : h_mu(g, a, xi, tol).value;
    out.direct = std::abs(lhs - 1.0 - eps * first) / (eps * eps);
  }
  if (xi > 0.0) {
    const cplx lhs = std::exp((1.0 - b - eps) * std::log(xi)) *
                     gauss_2f1_near_one(a, 1.0 - b, a + eps, xi, tol).value;
    const cplx first = digamma(a) - digamma(1.0 - b) +
                       std::exp((1.0 - b) * std::log(xi)) * beta_fn(a, b - 1.0) *
                           gauss_2f1(a, 1.0 - b, 2.0 - b, xi, tol).value +
                       h_mu(g, b, xi, tol).value;
    out.complementary = std::abs(lhs - 1.0 - eps * first) / (eps * eps);
  }
  return out;
}

/// Larger of the two scaled remainders; O(1) when the expansions hold.
inline double epsilon_limit_check(cplx a, cplx b, double xi, double eps) {
  return epsilon_expansion_check(a, b, xi, eps).worst();
}

/// |2^-a sum (a)_n 2^-n / (n! (n+1-b)) + (a <-> b) - 2^-(a+b-1) B(1-a, 1-b)|
inline double half_argument_beta_residual(cplx a, cplx b, double tol = kDefaultTol) {
  for (cplx v : {1.0 - a, 1.0 - b, 2.0 - a, 2.0 - b}) {
    if (is_near_nonpositive_integer(v)) throw error(errc::degenerate, "half-argument sum: a or b is a positive integer");
  }
  auto half_sum = [&](cplx p, cplx q) {
    cplx coef = 1.0;  // (p)_n / (n! 2^n)
    std::size_t at = 0;
    auto term = [&](std::size_t n) {
      while (at < n) {
        coef *= (p + static_cast<double>(at)) / (2.0 * static_cast<double>(at + 1));
        ++at;
      }
      return coef / (static_cast<double>(n) + 1.0 - q);
    };
    return std::exp(-p * constants::log_two) * sum_series(term, SeriesControl{tol * 1e-3, kDefaultMaxTerms}).value;
  };
  const cplx lhs = half_sum(a, b) + half_sum(b, a);
  const cplx rhs = std::exp(-(a + b - 1.0) * constants::log_two) * beta_fn(1.0 - a, 1.0 - b);
  return std::abs(lhs - rhs);
}

}  // namespace zetasums
