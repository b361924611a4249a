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

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zetasums {

using cplx = std::complex<double>;

/// Distance below which a parameter is treated as sitting on an integer.
inline constexpr double kIntegerTolerance = 1e-8;

/// Default truncation tolerance for every series evaluator.
inline constexpr double kDefaultTol = 1e-13;

/// Hard cap on the number of terms any series may consume.
inline constexpr std::size_t kDefaultMaxTerms = 100000;

enum class errc {
  pole,            // argument sits on a pole of the function
  domain,          // argument outside the region where the formula holds
  degenerate,      // formula needs a limiting procedure at this argument
  nonconvergence,  // iteration budget exhausted
  parse,           // malformed textual input
};

inline const char* to_string(errc code) {
  switch (code) {
    case errc::pole: return "pole";
    case errc::domain: return "domain";
    case errc::degenerate: return "degenerate";
    case errc::nonconvergence: return "nonconvergence";
    case errc::parse: return "parse";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Result of a truncated series.
struct SeriesValue {
  cplx value{};
  double abs_error_estimate = 0.0;
  std::size_t terms_used = 0;
  bool converged = false;
};

namespace constants {
inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double log_two_pi = 1.8378770664093454835606594728112353;
inline constexpr double log_glaisher = 0.24875447703378426160024439423552753;
inline constexpr double zeta3 = 1.2020569031595942853997381615114500;
inline constexpr double log_two = 0.69314718055994530941723212145817657;
}  // namespace constants

// ---------------------------------------------------------------------------
// Small numeric helpers shared by the modules.

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Nearest integer to Re z when z lies within `tol` of it, as a double.
/// Returns NaN otherwise.
inline double near_integer(cplx z, double tol = kIntegerTolerance) {
  const double r = std::round(z.real());
  if (std::abs(z - cplx(r, 0.0)) <= tol) return r;
  return std::numeric_limits<double>::quiet_NaN();
}

inline bool is_near_integer(cplx z, double tol = kIntegerTolerance) {
  return !std::isnan(near_integer(z, tol));
}

/// True when z is within `tol` of 0, -1, -2, ...
inline bool is_near_nonpositive_integer(cplx z, double tol = kIntegerTolerance) {
  const double r = near_integer(z, tol);
  return !std::isnan(r) && r <= 0.0;
}

/// True when z is exactly a non-positive integer.
inline bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

/// exp(z) - 1 without cancellation for small |z|.
inline cplx expm1(cplx z) {
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(0.5 * y);
  const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
  const double im = std::exp(x) * std::sin(y);
  return {re, im};
}

/// b^(-s) for a positive real base.
inline cplx pow_neg(double base, cplx s) { return std::exp(-s * std::log(base)); }

inline double relative_difference(cplx x, cplx y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  if (scale == 0.0) return 0.0;
  return std::abs(x - y) / scale;
}

// ---------------------------------------------------------------------------
// Series truncation.
//
// A series stops once three consecutive terms each fall below half the
// tolerance scaled by max(1, |partial sum|). The next, unused term is then
// evaluated and twice its magnitude becomes the error estimate. `converged`
// holds only when that estimate is within tol * max(1, |sum|).

struct SeriesControl {
  double tol = kDefaultTol;
  std::size_t max_terms = kDefaultMaxTerms;
};

template <class TermFn>
SeriesValue sum_series(TermFn&& term, SeriesControl ctl, std::size_t first = 0) {
  SeriesValue out;
  cplx sum = 0.0;
  int small = 0;
  std::size_t k = first;
  for (; out.terms_used < ctl.max_terms; ++k) {
    const cplx t = term(k);
    if (!is_finite(t)) throw error(errc::nonconvergence, "series term is not finite");
    sum += t;
    ++out.terms_used;
    const double scale = std::max(1.0, std::abs(sum));
    if (std::abs(t) <= 0.5 * ctl.tol * scale) {
      if (++small == 3) break;
    } else {
      small = 0;
    }
  }
  out.value = sum;
  if (small == 3) {
    const cplx omitted = term(k + 1);
    out.abs_error_estimate = 2.0 * std::abs(omitted);
    out.converged = out.abs_error_estimate <= ctl.tol * std::max(1.0, std::abs(sum));
  } else {
    out.abs_error_estimate = std::numeric_limits<double>::infinity();
    out.converged = false;
  }
  return out;
}

/// Combine independent partial results: values add, error estimates add.
inline SeriesValue& operator+=(SeriesValue& lhs, const SeriesValue& rhs) {
  lhs.value += rhs.value;
  lhs.abs_error_estimate += rhs.abs_error_estimate;
  lhs.terms_used += rhs.terms_used;
  lhs.converged = lhs.converged && rhs.converged;
  return lhs;
}

inline SeriesValue exact_value(cplx v) { return SeriesValue{v, 0.0, 0, true}; }

}  // namespace zetasums
