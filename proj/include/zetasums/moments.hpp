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

// Moments H_n(a) = int_0^1 x^n zeta(a, x) dx: an infinite zeta series valid
// for Re a < n + 1, a finite sum off the integers, exact rational values at
// non-positive integer a, and a closed form at integer a in [2, n].

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>

#include "zetasums/bernoulli.hpp"
#include "zetasums/hurwitz.hpp"
#include "zetasums/special.hpp"
#include "zetasums/types.hpp"

namespace zetasums {

struct MomentSpec {
  std::size_t n = 0;
  cplx a{};
  std::optional<int> m;  // set when a is the integer m

  static MomentSpec make(std::size_t n, cplx a) {
    MomentSpec s{n, a, std::nullopt};
    if (is_near_integer(a)) s.m = static_cast<int>(near_integer(a));
    return s;
  }

  /// n - m + 1; meaningful only when m is set.
  int N() const { return static_cast<int>(n) - m.value_or(0) + 1; }
};

namespace detail {

inline void require_moment_domain(std::size_t n, cplx a, const char* who) {
  if (!(a.real() < static_cast<double>(n) + 1.0)) throw error(errc::domain, std::string(who) + " requires Re a < n + 1");
  if (a == cplx(1.0, 0.0)) throw error(errc::pole, std::string(who) + " at a = 1");
}

inline double factorial(std::size_t n) { return std::tgamma(static_cast<double>(n) + 1.0); }

}  // namespace detail

/// H_n(a) = n! sum_k (a)_k zeta(a+k) / (n+k+1)!, zero for n = 0.
/// Summed as 1/(n+1-a) + n! sum_k (a)_k (zeta(a+k) - 1)/(n+k+1)!.
inline SeriesValue H_series(std::size_t n, cplx a, double tol = kDefaultTol) {
  detail::require_moment_domain(n, a, "H_series");
  if (n == 0) return exact_value(0.0);
  const double dn = static_cast<double>(n);
  auto ratio = [&](std::size_t k) { return 1.0 / (dn + static_cast<double>(k) + 2.0); };
  SeriesValue out = poch_eta_series(a, 1.0 / (dn + 1.0), ratio, SeriesControl{tol, kDefaultMaxTerms});
  out.value += 1.0 / (dn + 1.0 - a);
  return out;
}

inline SeriesValue H_series(const MomentSpec& s, double tol = kDefaultTol) { return H_series(s.n, s.a, tol); }

/// Smallest distance from a to 1, 2, ..., n + 1. The finite sum divides by
/// a - j and evaluates zeta at a - k, so it degrades as this shrinks.
inline double finite_sum_clearance(std::size_t n, cplx a) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j <= n + 1; ++j) d = std::min(d, std::abs(a - static_cast<double>(j)));
  return d;
}

inline constexpr double kFiniteSumClearance = 1e-6;

/// H_n(a) = -(n!/Gamma(a)) sum_{k=1}^n Gamma(a-k) zeta(a-k) / (n-k+1)!
/// with Gamma(a-k)/Gamma(a) = 1/((a-1)...(a-k)).
inline cplx H_finite(std::size_t n, cplx a) {
  if (n == 0) throw error(errc::domain, "H_finite requires n >= 1");
  detail::require_moment_domain(n, a, "H_finite");
  if (finite_sum_clearance(n, a) < kFiniteSumClearance) {
    throw error(errc::degenerate, "H_finite: a within 1e-6 of an integer in [1, n+1]");
  }
  cplx sum = 0.0;
  cplx falling = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    falling *= a - static_cast<double>(k);
    sum += riemann_zeta(a - static_cast<double>(k)) / (falling * detail::factorial(n - k + 1));
  }
  return -detail::factorial(n) * sum;
}

inline cplx H_finite(const MomentSpec& s) { return H_finite(s.n, s.a); }

/// H_n(-m) = m! n! sum_{k=1}^n (-1)^(k-1) zeta(-m-k) / ((m+k)! (n-k+1)!), exactly.
inline rational H_negative_integer_exact(std::size_t n, std::size_t m) {
  if (n == 0) throw error(errc::domain, "H_negative_integer requires n >= 1");
  rational sum = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    rational t = zeta_at_nonpositive_integer_exact(m + k) /
                 rational(factorial_exact(m + k) * factorial_exact(n - k + 1));
    sum += (k % 2 == 1) ? t : rational(-t);
  }
  return sum * rational(factorial_exact(m) * factorial_exact(n));
}

inline double H_negative_integer(std::size_t n, std::size_t m) {
  return static_cast<double>(H_negative_integer_exact(n, m));
}

/// H_n(m) for integers 2 <= m <= n, with N = n - m + 1:
///   (n!/(m-1)!) { (1/N!) sum_{k=1}^{N-1} (-1)^(k-1) C(N,k) [psi(k+1) zeta(-k) + zeta'(-k)]
///                 + (log 2 pi - gamma_E)/(2 N!)
///                 - sum_{k=1}^{m-2} (m-k-1)! zeta(m-k) / (n-k+1)! }
inline double H_integer(std::size_t n, int m) {
  if (!(m >= 2 && static_cast<std::size_t>(m) <= n)) throw error(errc::domain, "H_integer requires 2 <= m <= n");
  const std::size_t N = n - static_cast<std::size_t>(m) + 1;
  double binomial_part = 0.0;
  double binom = 1.0;  // C(N, k)
  for (std::size_t k = 1; k + 1 <= N; ++k) {
    binom = binom * static_cast<double>(N - k + 1) / static_cast<double>(k);
    const double zeta_neg = static_cast<double>(zeta_at_nonpositive_integer_exact(k));
    const double dzeta = k % 2 == 0 ? zeta_deriv_neg_even(static_cast<int>(k / 2))
                                    : zeta_deriv(cplx(-static_cast<double>(k), 0.0)).real();
    const double t = binom * (digamma_positive_integer(k + 1) * zeta_neg + dzeta);
    binomial_part += (k % 2 == 1) ? t : -t;
  }
  const double nf = detail::factorial(N);
  double bracket = binomial_part / nf + (constants::log_two_pi - constants::euler_gamma) / (2.0 * nf);
  for (int k = 1; k <= m - 2; ++k) {
    const auto mk = static_cast<std::size_t>(m - k);
    bracket -= detail::factorial(mk - 1) * riemann_zeta(static_cast<double>(mk)).real() /
               detail::factorial(n - static_cast<std::size_t>(k) + 1);
  }
  return detail::factorial(n) / detail::factorial(static_cast<std::size_t>(m) - 1) * bracket;
}

/// |sum_{k>=0} Gamma(a+k) zeta(a+k)/(n+k+1)! + sum_{k=1}^n Gamma(a-k) zeta(a-k)/(n-k+1)!|
///
/// The infinite sum is carried as Gamma(a) [1/(n! (n+1-a)) + sum (a)_k (zeta(a+k) - 1)/(n+k+1)!]
/// with Gamma(a+k) = Gamma(a) (a)_k taken by recurrence; the finite sum calls
/// gamma and zeta at each a - k.
inline double summation_identity_residual(std::size_t n, cplx a, double tol = kDefaultTol) {
  if (n == 0) throw error(errc::domain, "summation identity requires n >= 1");
  detail::require_moment_domain(n, a, "summation identity");
  if (is_near_integer(a) && near_integer(a) <= static_cast<double>(n) + 1.0) {
    throw error(errc::degenerate, "summation identity: a at an integer where a gamma or zeta factor is singular");
  }
  const double dn = static_cast<double>(n);
  const cplx ga = gamma(a);
  auto ratio = [&](std::size_t k) { return 1.0 / (dn + static_cast<double>(k) + 2.0); };
  const SeriesValue eta_part = poch_eta_series(a, ga / detail::factorial(n + 1), ratio, SeriesControl{tol, kDefaultMaxTerms});
  const cplx infinite = ga / (detail::factorial(n) * (dn + 1.0 - a)) + eta_part.value;
  cplx finite = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const cplx s = a - static_cast<double>(k);
    finite += gamma(s) * riemann_zeta(s) / detail::factorial(n - k + 1);
  }
  return std::abs(infinite + finite);
}

/// sum_{k>=1} (-alpha)_k / k! zeta(k - alpha), for Re alpha > 0.
///
/// Written as sum_{k>=0} (-alpha)_k/k! (zeta(k-alpha) - 1) - zeta(-alpha), using
/// sum_{k>=1} (-alpha)_k/k! = -1; the remaining series converges like 2^-k.
inline SeriesValue wilton_null_sum(cplx alpha, double tol = kDefaultTol) {
  if (!(alpha.real() > 0.0)) throw error(errc::domain, "wilton_null_sum requires Re alpha > 0");
  auto ratio = [](std::size_t k) { return 1.0 / (static_cast<double>(k) + 1.0); };
  SeriesValue out = poch_eta_series(-alpha, 1.0, ratio, SeriesControl{tol, kDefaultMaxTerms});
  out.value -= riemann_zeta(-alpha);
  return out;
}

/// (sum_{k=2}^N C(N, k-1) B_k / k, (N-1)/(2(N+1))) as exact rationals.
inline std::pair<rational, rational> bernoulli_binomial_identity(std::size_t N) {
  if (N < 2) throw error(errc::domain, "bernoulli_binomial_identity requires N >= 2");
  if (N > BernoulliTable::instance().max_index()) throw error(errc::domain, "N beyond the Bernoulli table");
  rational lhs = 0;
  for (std::size_t k = 2; k <= N; ++k) lhs += rational(binomial_exact(N, k - 1)) * bernoulli_exact(k) / rational(k);
  const rational rhs(static_cast<long long>(N) - 1, 2 * (static_cast<long long>(N) + 1));
  return {lhs, rhs};
}

}  // namespace zetasums
