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

// Double zeta sums for Re a, Re b < 1:
//
//   S1(a, b) = sum_{j>=0, k>=1} (a)_j (b)_k zeta(a+j) zeta(b+k) / (j+k+1)!
//   S2(a, b) = sum_{j>=0, k>=0} (a)_j (b)_k zeta(a+j) zeta(b+k) / (j! k! (j+k+1))
//
// with closed forms, their values at integer a + b, and direct summation.
// A factor (c)_i zeta(c+i) with c a non-positive integer and c + i = 1 is
// replaced by its limit (-1)^(i-1) (i-1)!.

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "zetasums/bernoulli.hpp"
#include "zetasums/hurwitz.hpp"
#include "zetasums/hypergeometric.hpp"
#include "zetasums/special.hpp"
#include "zetasums/types.hpp"

namespace zetasums {

struct DoubleSumTerm {
  std::size_t j = 0;
  std::size_t k = 0;
  cplx value{};
  bool is_limit_term = false;
};

inline constexpr std::size_t kDoubleSumTerms = 400;

namespace detail {

// (c)_i zeta(c+i), with the removable pole replaced by its limit
inline cplx poch_zeta(cplx c, std::size_t i, bool& limit_used) {
  double limit = 0.0;
  if (pole_term_limit(c, i, limit)) {
    limit_used = true;
    return limit;
  }
  const cplx p = pochhammer(c, i);
  if (p == 0.0) return 0.0;
  return p * zeta_at_offset(c, i);
}

inline void require_double_sum_domain(cplx a, cplx b, const char* who) {
  if (!(a.real() < 1.0 && b.real() < 1.0)) throw error(errc::domain, std::string(who) + " requires Re a < 1 and Re b < 1");
}

// e(j) = (c)_j (zeta(c+j) - 1) / j! for j < count, stopping early once three
// consecutive values are negligible. `next` receives the first value left out.
struct ScaledEta {
  std::vector<cplx> values;
  cplx next{};
  bool converged = false;
};

inline ScaledEta scaled_eta(cplx c, std::size_t count, double tol) {
  ScaledEta out;
  cplx coef = 1.0;  // (c)_j / j!
  int small = 0;
  auto at = [&](std::size_t j) -> cplx {
    double limit = 0.0;
    if (pole_term_limit(c, j, limit)) return limit / std::tgamma(static_cast<double>(j) + 1.0);
    if (coef == 0.0) return 0.0;
    return coef * zeta_minus_one_at_offset(c, j);
  };
  for (std::size_t j = 0; j < count; ++j) {
    const cplx e = at(j);
    out.values.push_back(e);
    coef *= (c + static_cast<double>(j)) / static_cast<double>(j + 1);
    if (std::abs(e) <= 0.5 * tol) {
      if (++small == 3) {
        out.converged = true;
        break;
      }
    } else {
      small = 0;
    }
  }
  out.next = at(out.values.size());
  return out;
}

inline double abs_sum(const std::vector<cplx>& v) {
  double s = 0.0;
  for (cplx z : v) s += std::abs(z);
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Closed forms.

/// S1(a, b) = B(1-a, 1-b) zeta(a+b-1)
inline cplx S1_closed(cplx a, cplx b) {
  detail::require_double_sum_domain(a, b, "S1_closed");
  return beta_fn(1.0 - a, 1.0 - b) * riemann_zeta(a + b - 1.0);
}

/// S1(-m, -n) = m! n! / (m+n+1)! zeta(-m-n-1), exactly.
inline rational S1_finite_exact(std::size_t m, std::size_t n) {
  return rational(factorial_exact(m) * factorial_exact(n)) / rational(factorial_exact(m + n + 1)) *
         zeta_at_nonpositive_integer_exact(m + n + 1);
}

inline double S1_finite(std::size_t m, std::size_t n) { return static_cast<double>(S1_finite_exact(m, n)); }

/// S2(a, b) = Gamma(g) zeta(g) [Gamma(1-a)/Gamma(b) + Gamma(1-b)/Gamma(a)], g = a+b-1,
/// which equals pi Gamma(g) zeta(g)/(Gamma(a) Gamma(b)) (sin pi a + sin pi b)/(sin pi a sin pi b).
inline cplx S2_closed(cplx a, cplx b) {
  if (!(a.real() < 1.0 && b.real() < 1.0 && (a + b).real() < 1.0)) {
    throw error(errc::domain, "S2_closed requires Re a, Re b, Re(a+b) < 1");
  }
  if (is_near_integer(a) || is_near_integer(b) || is_near_integer(a + b)) {
    throw error(errc::degenerate, "S2_closed: integer a, b or a + b needs a limit; use S2_integer_sum or S2_direct");
  }
  const cplx g = a + b - 1.0;
  return gamma(g) * riemann_zeta(g) * (gamma(1.0 - a) * rgamma(b) + gamma(1.0 - b) * rgamma(a));
}

/// S2(a, total - a) for total = -2m or -2m-1:
///   total = -2m:   -Gamma(1-a) Gamma(2m+1+a)/(2m+1)! cos(pi a) zeta(-2m-1)
///   total = -2m-1:  2 (a)_{2m+2}/(2m+2)! zeta'(-2m-2)
inline cplx S2_integer_sum(cplx a, int total) {
  if (total > 0) throw error(errc::domain, "S2_integer_sum requires a + b = 0 or a negative integer");
  if (!(a.real() > total - 1.0 && a.real() < 1.0)) {
    throw error(errc::domain, "S2_integer_sum requires a + b - 1 < Re a < 1");
  }
  if (total % 2 == 0) {
    const int m = -total / 2;
    const double f = std::tgamma(2.0 * m + 2.0);
    const double z = static_cast<double>(zeta_at_nonpositive_integer_exact(static_cast<std::size_t>(2 * m + 1)));
    return -gamma(1.0 - a) * gamma(2.0 * m + 1.0 + a) / f * cos_pi(a) * z;
  }
  const int m = (-total - 1) / 2;
  const auto len = static_cast<std::size_t>(2 * m + 2);
  return 2.0 * pochhammer(a, len) / std::tgamma(static_cast<double>(len) + 1.0) * zeta_deriv_neg_even(m + 1);
}

// ---------------------------------------------------------------------------
// Single terms, for inspection and hand checks.

inline DoubleSumTerm S1_term(cplx a, cplx b, std::size_t j, std::size_t k) {
  if (k == 0) throw error(errc::domain, "S1 terms start at k = 1");
  DoubleSumTerm t{j, k, 0.0, false};
  const cplx x = detail::poch_zeta(a, j, t.is_limit_term);
  const cplx y = detail::poch_zeta(b, k, t.is_limit_term);
  t.value = x * y / std::tgamma(static_cast<double>(j + k) + 2.0);
  return t;
}

inline DoubleSumTerm S2_term(cplx a, cplx b, std::size_t j, std::size_t k) {
  DoubleSumTerm t{j, k, 0.0, false};
  const cplx x = detail::poch_zeta(a, j, t.is_limit_term);
  const cplx y = detail::poch_zeta(b, k, t.is_limit_term);
  t.value = x * y /
            (std::tgamma(static_cast<double>(j) + 1.0) * std::tgamma(static_cast<double>(k) + 1.0) *
             static_cast<double>(j + k + 1));
  return t;
}

// ---------------------------------------------------------------------------
// Direct summation.
//
// Each factor (c)_i zeta(c+i) is split as (c)_i + E_c(i) with
// E_c(i) = (c)_i (zeta(c+i) - 1). The parts built from (c)_i alone sum in
// closed form over the beta integral, leaving sums over E that converge like
// 2^-i. j_max and k_max cap the number of E terms kept in each index.

/// S1 = B(1-a, 1-b) - 1/(1-a)
///    + sum_j E_a(j) [1/(j! (j+1-b)) - 1/(j+1)!]
///    + sum_{k>=1} E_b(k) / (k! (k+1-a))
///    + sum_{j>=0, k>=1} E_a(j) E_b(k) / (j+k+1)!
inline SeriesValue S1_direct(cplx a, cplx b, std::size_t j_max = kDoubleSumTerms,
                             std::size_t k_max = kDoubleSumTerms, double tol = kDefaultTol) {
  detail::require_double_sum_domain(a, b, "S1_direct");
  const auto ea = detail::scaled_eta(a, j_max, tol);
  const auto eb = detail::scaled_eta(b, k_max, tol);
  cplx sum = beta_fn(1.0 - a, 1.0 - b) - 1.0 / (1.0 - a);
  for (std::size_t j = 0; j < ea.values.size(); ++j) {
    const double dj = static_cast<double>(j);
    // E_a(j) = j! e_a(j)
    sum += ea.values[j] * (1.0 / (dj + 1.0 - b) - 1.0 / (dj + 1.0));
  }
  for (std::size_t k = 1; k < eb.values.size(); ++k) sum += eb.values[k] / (static_cast<double>(k) + 1.0 - a);
  // j! k! / (j+k+1)! = B(j+1, k+1), walked along each row
  for (std::size_t j = 0; j < ea.values.size(); ++j) {
    double beta = 1.0 / ((static_cast<double>(j) + 1.0) * (static_cast<double>(j) + 2.0));  // k = 1
    cplx row = 0.0;
    for (std::size_t k = 1; k < eb.values.size(); ++k) {
      row += eb.values[k] * beta;
      beta *= static_cast<double>(k + 1) / static_cast<double>(j + k + 2);
    }
    sum += ea.values[j] * row;
  }
  SeriesValue out;
  out.value = sum;
  out.terms_used = ea.values.size() * eb.values.size();
  const double mass = 1.0 + detail::abs_sum(ea.values) + detail::abs_sum(eb.values);
  out.abs_error_estimate = 2.0 * (std::abs(ea.next) + std::abs(eb.next)) * mass;
  out.converged = ea.converged && eb.converged;
  return out;
}

/// S2 = 1/(1-a-b)
///    + sum_j E_a(j) / (1-b)_{j+1} + sum_k E_b(k) / (1-a)_{k+1}
///    + sum_{j,k} E_a(j) E_b(k) / (j! k! (j+k+1))
inline SeriesValue S2_direct(cplx a, cplx b, std::size_t j_max = kDoubleSumTerms,
                             std::size_t k_max = kDoubleSumTerms, double tol = kDefaultTol) {
  if (!(a.real() < 1.0 && b.real() < 1.0 && (a + b).real() < 1.0)) {
    throw error(errc::domain, "S2_direct requires Re a, Re b, Re(a+b) < 1");
  }
  const auto ea = detail::scaled_eta(a, j_max, tol);
  const auto eb = detail::scaled_eta(b, k_max, tol);
  cplx sum = 1.0 / (1.0 - a - b);
  // E_c(i) / (1-d)_{i+1} = e_c(i) i! / (1-d)_{i+1}
  auto cross = [](const std::vector<cplx>& e, cplx d) {
    cplx s = 0.0;
    cplx w = 1.0 / (1.0 - d);
    for (std::size_t i = 0; i < e.size(); ++i) {
      s += e[i] * w;
      w *= static_cast<double>(i + 1) / (static_cast<double>(i) + 2.0 - d);
    }
    return s;
  };
  sum += cross(ea.values, b) + cross(eb.values, a);
  for (std::size_t j = 0; j < ea.values.size(); ++j) {
    cplx row = 0.0;
    for (std::size_t k = 0; k < eb.values.size(); ++k) row += eb.values[k] / static_cast<double>(j + k + 1);
    sum += ea.values[j] * row;
  }
  SeriesValue out;
  out.value = sum;
  out.terms_used = ea.values.size() * eb.values.size();
  const double mass = 1.0 + detail::abs_sum(ea.values) + detail::abs_sum(eb.values);
  out.abs_error_estimate = 2.0 * (std::abs(ea.next) + std::abs(eb.next)) * mass;
  out.converged = ea.converged && eb.converged;
  return out;
}

}  // namespace zetasums
