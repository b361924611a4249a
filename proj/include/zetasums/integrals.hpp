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

// Closed-form evaluations of
//
//   I(a, b) = int_0^1 zeta1(a, x) zeta1(b, x) dx
//   J(a, b) = int_0^1 zeta1(a, x) zeta1(b, 1 - x) dx
//
// by sums over hypergeometric terms (slowly convergent, valid at integer
// parameters) and by sums over zeta values (geometrically convergent).

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "zetasums/hurwitz.hpp"
#include "zetasums/hypergeometric.hpp"
#include "zetasums/quadrature.hpp"
#include "zetasums/special.hpp"
#include "zetasums/types.hpp"

namespace zetasums {

enum class Degeneracy { generic, a_integer, b_integer, sum_integer, pole_at_one };

inline const char* to_string(Degeneracy d) {
  switch (d) {
    case Degeneracy::generic: return "generic";
    case Degeneracy::a_integer: return "a_integer";
    case Degeneracy::b_integer: return "b_integer";
    case Degeneracy::sum_integer: return "sum_integer";
    case Degeneracy::pole_at_one: return "pole_at_one";
  }
  return "unknown";
}

/// (a, b) with gamma = a + b - 1 and flags for the parameter values at which
/// the zeta-sum representations need a limit.
///   pole_at_one  a or b at 1
///   a_integer    a at an integer >= 2
///   b_integer    b at an integer >= 2
///   sum_integer  gamma at an integer <= 1
/// `degeneracy` is the first flag set in that order, else generic.
struct ParameterPair {
  cplx a{};
  cplx b{};
  cplx gamma{};
  bool pole_at_one = false;
  bool a_integer = false;
  bool b_integer = false;
  bool sum_integer = false;
  Degeneracy degeneracy = Degeneracy::generic;

  static ParameterPair make(cplx a, cplx b) {
    ParameterPair p;
    p.a = a;
    p.b = b;
    p.gamma = a + b - 1.0;
    auto integer_at_least_two = [](cplx z) { return is_near_integer(z) && near_integer(z) >= 2.0; };
    p.pole_at_one = std::abs(a - 1.0) <= kIntegerTolerance || std::abs(b - 1.0) <= kIntegerTolerance;
    p.a_integer = integer_at_least_two(a);
    p.b_integer = integer_at_least_two(b);
    p.sum_integer = is_near_integer(p.gamma) && near_integer(p.gamma) <= 1.0;
    if (p.pole_at_one) {
      p.degeneracy = Degeneracy::pole_at_one;
    } else if (p.a_integer) {
      p.degeneracy = Degeneracy::a_integer;
    } else if (p.b_integer) {
      p.degeneracy = Degeneracy::b_integer;
    } else if (p.sum_integer) {
      p.degeneracy = Degeneracy::sum_integer;
    }
    return p;
  }

  ParameterPair swapped() const { return make(b, a); }
};

enum class RepresentationId { I_2F1, I_ZETA, J_2F1, J_ZETA, J_ALT };

inline const char* to_string(RepresentationId r) {
  switch (r) {
    case RepresentationId::I_2F1: return "I_2F1";
    case RepresentationId::I_ZETA: return "I_ZETA";
    case RepresentationId::J_2F1: return "J_2F1";
    case RepresentationId::J_ZETA: return "J_ZETA";
    case RepresentationId::J_ALT: return "J_ALT";
  }
  return "unknown";
}

namespace detail {

inline void require_off_pole(const ParameterPair& p) {
  if (p.pole_at_one) throw error(errc::pole, "a or b at 1");
}

// sum_{k>=first} f(k) for a smooth, slowly decaying f: direct terms up to
// kSplit - 1, then Gregory's endpoint-corrected integral for the rest.
inline constexpr std::size_t kGregorySplit = 64;

template <class Term, class TailIntegral>
SeriesValue gregory_sum(Term&& f, std::size_t first, TailIntegral&& tail_integral, double tol) {
  SeriesValue out = exact_value(0.0);
  for (std::size_t k = first; k < kGregorySplit; ++k) {
    const SeriesValue t = f(k);
    out.value += t.value;
    out.abs_error_estimate += t.abs_error_estimate;
    ++out.terms_used;
  }
  // forward differences at the split point
  constexpr int kOrder = 6;
  std::array<cplx, kOrder + 1> diff{};
  for (int i = 0; i <= kOrder; ++i) {
    const SeriesValue t = f(kGregorySplit + static_cast<std::size_t>(i));
    diff[static_cast<std::size_t>(i)] = t.value;
    out.abs_error_estimate += t.abs_error_estimate;
  }
  const cplx f0 = diff[0];
  std::array<cplx, kOrder + 1> delta{};
  for (int order = 1; order <= kOrder; ++order) {
    for (int i = 0; i + order <= kOrder; ++i) diff[static_cast<std::size_t>(i)] = diff[static_cast<std::size_t>(i + 1)] - diff[static_cast<std::size_t>(i)];
    delta[static_cast<std::size_t>(order)] = diff[0];
  }
  static constexpr std::array<double, kOrder + 1> kGregory = {
      0.0, -1.0 / 12.0, 1.0 / 24.0, -19.0 / 720.0, 3.0 / 160.0, -863.0 / 60480.0, 275.0 / 24192.0};
  cplx correction = 0.5 * f0;
  for (int order = 1; order <= kOrder; ++order) correction += kGregory[static_cast<std::size_t>(order)] * delta[static_cast<std::size_t>(order)];
  const SeriesValue integral = tail_integral();
  out.value += integral.value + correction;
  out.abs_error_estimate += integral.abs_error_estimate + std::abs(kGregory[kOrder] * delta[kOrder]);
  out.terms_used += integral.terms_used + kOrder + 1;
  out.converged = out.abs_error_estimate <= tol * std::max(1.0, std::abs(out.value));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// I(a, b)

/// I as 1/gamma + (1/gamma) sum_{k>=1} (k+1)^-gamma [F(a) + F(b)] with
/// F(c) = 2F1(c, gamma; gamma + 1; k/(k+1)). Terms decay like k^-min(a,b);
/// the tail past k = 63 is the integral of the summand plus Gregory
/// corrections. Valid for Re a, Re b > 1, including integers.
inline SeriesValue I_via_2f1(const ParameterPair& p, double tol = kDefaultTol) {
  if (!(p.a.real() > 1.0 && p.b.real() > 1.0)) throw error(errc::domain, "I_via_2f1 requires Re a > 1 and Re b > 1");
  const cplx g = p.gamma;
  const cplx c = g + 1.0;
  // u^power [F(a; 1-u) + F(b; 1-u)]
  auto pair_at = [&](double u, cplx power) {
    SeriesValue fa = gauss_2f1_near_one_scaled(p.a, g, c, u, power, tol);
    fa += gauss_2f1_near_one_scaled(p.b, g, c, u, power, tol);
    return fa;
  };
  auto term = [&](std::size_t k) { return pair_at(1.0 / (static_cast<double>(k) + 1.0), g); };
  auto tail = [&]() {
    // int_K^inf f(x) dx = int_0^U u^(gamma-2) [F(a; 1-u) + F(b; 1-u)] du, U = 1/(K+1)
    const double U = 1.0 / (static_cast<double>(detail::kGregorySplit) + 1.0);
    QuadratureConfig cfg;
    cfg.target_abs_error = 1e-14;
    cfg.left_exponent = std::min(p.a.real(), p.b.real()) - 2.0;
    const QuadratureResult q = integrate_interval(
        [&](double, double u, double) { return pair_at(u, g - 2.0).value; }, 0.0, U, cfg);
    return SeriesValue{q.value, q.abs_error_estimate, q.evaluations, q.converged};
  };
  SeriesValue sum = detail::gregory_sum(term, 1, tail, tol);
  sum.value = (1.0 + sum.value) / g;
  sum.abs_error_estimate /= std::abs(g);
  return sum;
}

/// One term of the n-sum in I_via_zeta: (a)_n / (1-b)_{n+1} (zeta(a+n) - 1).
inline cplx i_zeta_sum_term(cplx a, cplx b, std::size_t n) {
  double limit = 0.0;
  const cplx denom = pochhammer(1.0 - b, n + 1);
  if (pole_term_limit(a, n, limit)) return limit / denom;
  return pochhammer(a, n) * zeta_minus_one_at_offset(a, n) / denom;
}

namespace detail {

// sum_n s^n (a)_n / (1-b)_{n+1} (zeta(a+n) - 1), s = +1 or -1
inline SeriesValue rising_ratio_sum(cplx a, cplx b, double s, double tol) {
  auto ratio = [&](std::size_t n) { return s / (static_cast<double>(n) + 2.0 - b); };
  return poch_eta_series(a, 1.0 / (1.0 - b), ratio, SeriesControl{tol, kDefaultMaxTerms});
}

// sum_n (a)_n / n! (zeta(a+n) - 1) / (n+1-b)
inline SeriesValue factorial_ratio_sum(cplx a, cplx b, double tol) {
  auto ratio = [&](std::size_t n) {
    const double k = static_cast<double>(n);
    return (k + 1.0 - b) / ((k + 1.0) * (k + 2.0 - b));
  };
  return poch_eta_series(a, 1.0 / (1.0 - b), ratio, SeriesControl{tol, kDefaultMaxTerms});
}

inline SeriesValue negate(SeriesValue v) {
  v.value = -v.value;
  return v;
}

}  // namespace detail

/// I = 1/gamma + [B(1-a, gamma) + B(1-b, gamma)] zeta(gamma)
///     - sum_n (a)_n/(1-b)_{n+1} (zeta(a+n) - 1) - (a <-> b)
inline SeriesValue I_via_zeta(const ParameterPair& p, double tol = kDefaultTol) {
  detail::require_off_pole(p);
  if (p.a_integer || p.b_integer) {
    throw error(errc::degenerate, "I_via_zeta: integer a or b needs a limit; use I_via_2f1 or the epsilon probe");
  }
  if (p.sum_integer) throw error(errc::degenerate, "I_via_zeta: a + b - 1 at an integer <= 1");
  const cplx g = p.gamma;
  SeriesValue out = exact_value(1.0 / g + (beta_fn(1.0 - p.a, g) + beta_fn(1.0 - p.b, g)) * riemann_zeta(g));
  out += detail::negate(detail::rising_ratio_sum(p.a, p.b, 1.0, tol));
  out += detail::negate(detail::rising_ratio_sum(p.b, p.a, 1.0, tol));
  return out;
}

/// I(1/2 + it, 1/2 - it) = gamma_E - log 2 pi
///     + Re{psi(1/2 + it) - 2 sum_n (zeta(n + 1/2 + it) - 1)/(n + 1/2 + it)}
inline SeriesValue I_critical_line(double t, double tol = kDefaultTol) {
  const cplx s(0.5, t);
  auto term = [&](std::size_t n) {
    const cplx z = s + static_cast<double>(n);
    return zeta_minus_one(z) / z;
  };
  SeriesValue sum = sum_series(term, SeriesControl{tol, kDefaultMaxTerms});
  const double value = constants::euler_gamma - constants::log_two_pi + (digamma(s) - 2.0 * sum.value).real();
  return SeriesValue{value, 2.0 * sum.abs_error_estimate, sum.terms_used, sum.converged};
}

// ---------------------------------------------------------------------------
// J(a, b)

/// B(1-a, 1-b) {zeta(gamma) - 1 - 2^-gamma}
inline cplx J_M0(const ParameterPair& p) {
  if (is_near_nonpositive_integer(1.0 - p.a) || is_near_nonpositive_integer(1.0 - p.b)) {
    throw error(errc::degenerate, "J_M0: B(1-a, 1-b) at a pole");
  }
  const cplx g = p.gamma;
  if (std::abs(g - 1.0) <= kIntegerTolerance) throw error(errc::pole, "J_M0: zeta(gamma) at gamma = 1");
  const cplx bracket = g.real() >= 2.0 ? hurwitz_zeta(g, 3.0) : riemann_zeta(g) - 1.0 - pow_neg(2.0, g);
  return beta_fn(1.0 - p.a, 1.0 - p.b) * bracket;
}

namespace detail {

inline void require_j_admissible(const ParameterPair& p, const char* who) {
  require_off_pole(p);
  if (p.a_integer || p.b_integer) {
    throw error(errc::degenerate, std::string(who) + ": integer a or b needs a limit; use the epsilon probe");
  }
  if (std::abs(p.gamma - 1.0) <= kIntegerTolerance) throw error(errc::pole, std::string(who) + ": a + b = 2");
}

}  // namespace detail

/// J = B(1-a, 1-b) {zeta(gamma) - 1}
///     - sum_n (a)_n/n! (zeta(a+n) - 1)/(n+1-b) - (a <-> b)
inline SeriesValue J_via_zeta(const ParameterPair& p, double tol = kDefaultTol) {
  detail::require_j_admissible(p, "J_via_zeta");
  const cplx g = p.gamma;
  const cplx bracket = g.real() >= 2.0 ? zeta_minus_one(g) : riemann_zeta(g) - 1.0;
  SeriesValue out = exact_value(beta_fn(1.0 - p.a, 1.0 - p.b) * bracket);
  out += detail::negate(detail::factorial_ratio_sum(p.a, p.b, tol));
  out += detail::negate(detail::factorial_ratio_sum(p.b, p.a, tol));
  return out;
}

/// One term of the n-sum in J_via_alt: (-1)^n (a)_n/(1-b)_{n+1} (zeta(a+n) - 1).
inline cplx j_alt_sum_term(cplx a, cplx b, std::size_t n) {
  return (n % 2 == 0 ? 1.0 : -1.0) * i_zeta_sum_term(a, b, n);
}

/// J = M0 - sum_n (-1)^n (a)_n/(1-b)_{n+1} (zeta(a+n) - 1) - (a <-> b)
inline SeriesValue J_via_alt(const ParameterPair& p, double tol = kDefaultTol) {
  detail::require_j_admissible(p, "J_via_alt");
  SeriesValue out = exact_value(J_M0(p));
  out += detail::negate(detail::rising_ratio_sum(p.a, p.b, -1.0, tol));
  out += detail::negate(detail::rising_ratio_sum(p.b, p.a, -1.0, tol));
  return out;
}

/// J = M0 + sum_{k>=2} {xi^a/(b-1) F(a, 1-b; 2-b; xi) + xi^b/(a-1) F(b, 1-a; 2-a; xi)}
/// with xi = 1/(k+1). The tail past k = 63 is integrated termwise in closed form.
inline SeriesValue J_via_2f1(const ParameterPair& p, double tol = kDefaultTol) {
  if (!(p.a.real() > 1.0 && p.b.real() > 1.0)) throw error(errc::domain, "J_via_2f1 requires Re a > 1 and Re b > 1");
  if (is_near_nonpositive_integer(2.0 - p.a) || is_near_nonpositive_integer(2.0 - p.b)) {
    throw error(errc::degenerate, "J_via_2f1: 2 - a or 2 - b at a non-positive integer");
  }
  detail::require_j_admissible(p, "J_via_2f1");
  const cplx a = p.a;
  const cplx b = p.b;
  auto half = [&](cplx x, cplx y, double xi) {
    SeriesValue f = gauss_2f1(x, 1.0 - y, 2.0 - y, xi, tol);
    const cplx pre = std::exp(x * std::log(xi)) / (y - 1.0);
    f.value *= pre;
    f.abs_error_estimate *= std::abs(pre);
    return f;
  };
  auto term = [&](std::size_t k) {
    const double xi = 1.0 / (static_cast<double>(k) + 1.0);
    SeriesValue v = half(a, b, xi);
    v += half(b, a, xi);
    return v;
  };
  auto tail = [&]() {
    // int_K^inf xi^x/(y-1) F(x, 1-y; 2-y; xi) dk
    //   = -sum_n (x)_n/n! U^(x-1+n) / ((n+1-y)(x-1+n)),  U = 1/(K+1)
    const double U = 1.0 / (static_cast<double>(detail::kGregorySplit) + 1.0);
    auto integral = [&](cplx x, cplx y) {
      cplx coef = 1.0;  // (x)_n U^n / n!
      std::size_t at = 0;
      auto t = [&](std::size_t n) {
        while (at < n) {
          coef *= (x + static_cast<double>(at)) * U / static_cast<double>(at + 1);
          ++at;
        }
        const double dn = static_cast<double>(n);
        return coef / ((dn + 1.0 - y) * (x - 1.0 + dn));
      };
      SeriesValue s = sum_series(t, SeriesControl{tol, kDefaultMaxTerms});
      const cplx pre = -std::exp((x - 1.0) * std::log(U));
      s.value *= pre;
      s.abs_error_estimate *= std::abs(pre);
      return s;
    };
    SeriesValue s = integral(a, b);
    s += integral(b, a);
    return s;
  };
  SeriesValue out = exact_value(J_M0(p));
  out += detail::gregory_sum(term, 2, tail, tol);
  return out;
}

/// J(1/2 + it, 1/2 - it) = -5 pi / (2 cosh pi t)
///     - 2 Re sum_n (-1)^n (zeta(n + 1/2 + it) - 1)/(n + 1/2 + it)
inline SeriesValue J_critical_line(double t, double tol = kDefaultTol) {
  const cplx s(0.5, t);
  auto term = [&](std::size_t n) {
    const cplx z = s + static_cast<double>(n);
    return (n % 2 == 0 ? 1.0 : -1.0) * zeta_minus_one(z) / z;
  };
  SeriesValue sum = sum_series(term, SeriesControl{tol, kDefaultMaxTerms});
  const double value = -2.5 * constants::pi / std::cosh(constants::pi * t) - 2.0 * sum.value.real();
  return SeriesValue{value, 2.0 * sum.abs_error_estimate, sum.terms_used, sum.converged};
}

// ---------------------------------------------------------------------------
// Values at integer parameters by symmetric offsets.

inline constexpr double kProbeStep = 1e-3;

namespace detail {

// Symmetric averages at (a, b) +- h (1, 0.7) for h = d, 2d, 4d, combined by
// Richardson extrapolation in h^2. The error estimate is the spread between
// the extrapolations from (d, 2d) and (2d, 4d).
template <class Rep>
SeriesValue epsilon_probe(const ParameterPair& p, Rep&& rep, double tol) {
  SeriesValue out;
  out.converged = true;
  auto average = [&](double h) {
    const cplx da = h;
    const cplx db = 0.7 * h;
    const SeriesValue up = rep(ParameterPair::make(p.a + da, p.b + db), tol);
    const SeriesValue down = rep(ParameterPair::make(p.a - da, p.b - db), tol);
    out.terms_used += up.terms_used + down.terms_used;
    out.converged = out.converged && up.converged && down.converged;
    out.abs_error_estimate = std::max(out.abs_error_estimate, 0.5 * (up.abs_error_estimate + down.abs_error_estimate));
    return 0.5 * (up.value + down.value);
  };
  const cplx s1 = average(kProbeStep);
  const cplx s2 = average(2.0 * kProbeStep);
  const cplx s4 = average(4.0 * kProbeStep);
  const cplx fine = (4.0 * s1 - s2) / 3.0;
  const cplx coarse = (4.0 * s2 - s4) / 3.0;
  out.value = fine;
  out.abs_error_estimate += std::abs(fine - coarse);
  return out;
}

}  // namespace detail

/// I at parameters where I_via_zeta needs a limit, from evaluations at
/// offsets of order 1e-3 around (a, b).
inline SeriesValue I_epsilon_probe(const ParameterPair& p, double tol = kDefaultTol) {
  return detail::epsilon_probe(p, [](const ParameterPair& q, double t) { return I_via_zeta(q, t); }, tol);
}

inline SeriesValue J_epsilon_probe(const ParameterPair& p, double tol = kDefaultTol) {
  return detail::epsilon_probe(p, [](const ParameterPair& q, double t) { return J_via_zeta(q, t); }, tol);
}

}  // namespace zetasums
