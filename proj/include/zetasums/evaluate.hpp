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

// Evaluation by quantity name, with the preferred representation chosen from
// the parameters, and side-by-side comparison of every applicable one.
//
// Routing for `evaluate`:
//   I       critical-line formula when t is given; the zeta-sum form for
//           generic (a, b); the hypergeometric form at integer a or b when
//           Re a, Re b > 1; the epsilon probe at other integer cases
//   J       critical-line formula when t is given; the zeta-sum form for
//           generic (a, b); the epsilon probe at integer a or b
//   H       closed form for integer a in [2, n]; exact rational for
//           non-positive integer a; finite sum when a is clear of 1..n+1;
//           the infinite series otherwise
//   S1      closed form; exact finite form when a and b are non-positive integers
//   S2      integer-sum formula when a + b is 0 or a negative integer; direct
//           summation when a or b is an integer; closed form otherwise
//   zeta, hurwitz, zeta1   the library function

#pragma once

#include <optional>
#include <string>

#include "zetasums/double_sums.hpp"
#include "zetasums/hurwitz.hpp"
#include "zetasums/integrals.hpp"
#include "zetasums/moments.hpp"
#include "zetasums/quadrature.hpp"
#include "zetasums/report.hpp"
#include "zetasums/special.hpp"

namespace zetasums {

struct EvaluationRequest {
  std::string quantity;
  std::optional<cplx> a;
  std::optional<cplx> b;
  std::optional<long> n;
  std::optional<long> m;
  std::optional<double> t;
  std::optional<double> x;
  double tol = kDefaultTol;
  std::size_t terms_max = kDoubleSumTerms;
  double compare_tol = 1e-8;
};

inline bool is_known_quantity(const std::string& q) {
  for (const char* k : {"I", "J", "H", "S1", "S2", "zeta", "hurwitz", "zeta1"}) {
    if (q == k) return true;
  }
  return false;
}

namespace detail {

inline cplx need(const std::optional<cplx>& v, const char* flag, const std::string& q) {
  if (!v) throw error(errc::domain, q + " needs --" + flag);
  return *v;
}

inline double need_real(const std::optional<double>& v, const char* flag, const std::string& q) {
  if (!v) throw error(errc::domain, q + " needs --" + flag);
  return *v;
}

inline cplx critical_point(double t) { return {0.5, t}; }

// n and a for the moment quantity; --m stands for an integer a
inline std::pair<std::size_t, cplx> moment_args(const EvaluationRequest& r) {
  if (!r.n) throw error(errc::domain, "H needs --n");
  if (*r.n < 0) throw error(errc::domain, "H requires n >= 0");
  if (r.m && r.a && *r.a != cplx(static_cast<double>(*r.m), 0.0)) {
    throw error(errc::domain, "H: --m and --a disagree");
  }
  const cplx a = r.m ? cplx(static_cast<double>(*r.m), 0.0) : need(r.a, "a", "H");
  return {static_cast<std::size_t>(*r.n), a};
}

inline std::optional<std::size_t> nonpositive_integer_index(cplx a) {
  if (!is_nonpositive_integer(a)) return std::nullopt;
  return static_cast<std::size_t>(-a.real());
}

inline void add(EvaluationReport& r, const std::string& name, const SeriesValue& v) { r.results.push_back({name, v}); }

inline void add_exact(EvaluationReport& r, const std::string& name, cplx v) { add(r, name, exact_value(v)); }

inline void record_params(EvaluationReport& out, const EvaluationRequest& r) {
  if (r.quantity == "H") {
    const auto [n, a] = moment_args(r);
    out.parameters = {{"n", static_cast<double>(n)}, {"a", a}};
    return;
  }
  if (r.t) {
    out.parameters = {{"t", *r.t}};
    return;
  }
  if (r.a) out.parameters.emplace_back("a", *r.a);
  if (r.b) out.parameters.emplace_back("b", *r.b);
  if (r.x) out.parameters.emplace_back("x", *r.x);
}

}  // namespace detail

/// Value from the preferred representation for the request.
inline EvaluationReport evaluate(const EvaluationRequest& r) {
  if (!is_known_quantity(r.quantity)) throw error(errc::parse, "unknown quantity '" + r.quantity + "'");
  EvaluationReport out;
  out.quantity = r.quantity;
  out.tolerance = r.compare_tol;
  detail::record_params(out, r);
  const std::string& q = r.quantity;
  if (q == "I" || q == "J") {
    if (r.t) {
      detail::add(out, "critical_line", q == "I" ? I_critical_line(*r.t, r.tol) : J_critical_line(*r.t, r.tol));
      return out;
    }
    const auto p = ParameterPair::make(detail::need(r.a, "a", q), detail::need(r.b, "b", q));
    if (p.pole_at_one) throw error(errc::pole, q + ": a or b at 1");
    const bool integer = p.a_integer || p.b_integer;
    if (q == "I") {
      if (integer && p.a.real() > 1.0 && p.b.real() > 1.0) {
        detail::add(out, to_string(RepresentationId::I_2F1), I_via_2f1(p, r.tol));
        out.status = ReportStatus::degenerate_routed;
        out.note = "integer a or b: hypergeometric sum";
      } else if (integer || p.sum_integer) {
        detail::add(out, "I_PROBE", I_epsilon_probe(p, r.tol));
        out.status = ReportStatus::degenerate_routed;
        out.note = "integer parameter: epsilon probe";
      } else {
        detail::add(out, to_string(RepresentationId::I_ZETA), I_via_zeta(p, r.tol));
      }
    } else {
      if (integer || p.sum_integer) {
        detail::add(out, "J_PROBE", J_epsilon_probe(p, r.tol));
        out.status = ReportStatus::degenerate_routed;
        out.note = "integer parameter: epsilon probe";
      } else {
        detail::add(out, to_string(RepresentationId::J_ZETA), J_via_zeta(p, r.tol));
      }
    }
    return out;
  }
  if (q == "H") {
    const auto [n, a] = detail::moment_args(r);
    const bool integer = is_near_integer(a);
    const double ai = integer ? near_integer(a) : 0.0;
    if (integer && ai >= 2.0 && ai <= static_cast<double>(n)) {
      detail::add_exact(out, "H_INTEGER", H_integer(n, static_cast<int>(ai)));
      out.status = ReportStatus::degenerate_routed;
    } else if (const auto m = detail::nonpositive_integer_index(a); m && n >= 1) {
      detail::add_exact(out, "H_NEGATIVE_INTEGER", H_negative_integer(n, *m));
      out.status = ReportStatus::degenerate_routed;
    } else if (n >= 1 && a.real() < static_cast<double>(n) + 1.0 && finite_sum_clearance(n, a) >= kFiniteSumClearance) {
      detail::add_exact(out, "H_FINITE", H_finite(n, a));
    } else {
      detail::add(out, "H_SERIES", H_series(n, a, r.tol));
    }
    return out;
  }
  if (q == "S1") {
    const cplx a = detail::need(r.a, "a", q);
    const cplx b = detail::need(r.b, "b", q);
    const auto ma = detail::nonpositive_integer_index(a);
    const auto mb = detail::nonpositive_integer_index(b);
    if (ma && mb) {
      detail::add_exact(out, "S1_FINITE", S1_finite(*ma, *mb));
      out.status = ReportStatus::degenerate_routed;
    } else {
      detail::add_exact(out, "S1_CLOSED", S1_closed(a, b));
    }
    return out;
  }
  if (q == "S2") {
    const cplx a = detail::need(r.a, "a", q);
    const cplx b = detail::need(r.b, "b", q);
    const cplx total = a + b;
    if (is_near_nonpositive_integer(total)) {
      detail::add_exact(out, "S2_INTEGER_SUM", S2_integer_sum(a, static_cast<int>(near_integer(total))));
      out.status = ReportStatus::degenerate_routed;
      out.note = "a + b at a non-positive integer";
    } else if (is_near_integer(a) || is_near_integer(b)) {
      detail::add(out, "S2_DIRECT", S2_direct(a, b, r.terms_max, r.terms_max, r.tol));
      out.status = ReportStatus::degenerate_routed;
      out.note = "integer a or b: direct summation";
    } else {
      detail::add_exact(out, "S2_CLOSED", S2_closed(a, b));
    }
    return out;
  }
  const cplx a = detail::need(r.a, "a", q);
  if (q == "zeta") {
    detail::add_exact(out, "riemann_zeta", riemann_zeta(a));
  } else if (q == "hurwitz") {
    detail::add_exact(out, "hurwitz_zeta", hurwitz_zeta(a, detail::need_real(r.x, "x", q)));
  } else {
    detail::add_exact(out, "zeta1", zeta1(a, detail::need_real(r.x, "x", q)));
  }
  return out;
}

namespace detail {

template <class F>
void try_add(EvaluationReport& r, const std::string& name, F&& f) {
  try {
    r.results.push_back({name, f()});
  } catch (const error& e) {
    if (e.code() != errc::degenerate && e.code() != errc::domain) throw;
  }
}

}  // namespace detail

/// Every applicable representation plus the quadrature oracle where one exists.
inline EvaluationReport compare(const EvaluationRequest& r) {
  if (!is_known_quantity(r.quantity)) throw error(errc::parse, "unknown quantity '" + r.quantity + "'");
  EvaluationReport out;
  out.quantity = r.quantity;
  out.tolerance = r.compare_tol;
  detail::record_params(out, r);
  const std::string& q = r.quantity;
  const double tol = r.tol;
  if (q == "I" || q == "J") {
    if (r.t) {
      const cplx s = detail::critical_point(*r.t);
      if (q == "I") {
        detail::add(out, "critical_line", I_critical_line(*r.t, tol));
        out.oracle = oracle_I(s, std::conj(s));
      } else {
        detail::add(out, "critical_line", J_critical_line(*r.t, tol));
        out.oracle = oracle_J(s, std::conj(s));
      }
    } else {
      const auto p = ParameterPair::make(detail::need(r.a, "a", q), detail::need(r.b, "b", q));
      if (p.pole_at_one) throw error(errc::pole, q + ": a or b at 1");
      const bool degenerate = p.a_integer || p.b_integer || p.sum_integer;
      if (q == "I") {
        detail::try_add(out, to_string(RepresentationId::I_2F1), [&] { return I_via_2f1(p, tol); });
        if (!degenerate) detail::try_add(out, to_string(RepresentationId::I_ZETA), [&] { return I_via_zeta(p, tol); });
        out.oracle = oracle_I(p.a, p.b);
      } else {
        if (degenerate) {
          detail::try_add(out, "J_PROBE", [&] { return J_epsilon_probe(p, tol); });
        } else {
          detail::try_add(out, to_string(RepresentationId::J_2F1), [&] { return J_via_2f1(p, tol); });
          detail::try_add(out, to_string(RepresentationId::J_ZETA), [&] { return J_via_zeta(p, tol); });
          detail::try_add(out, to_string(RepresentationId::J_ALT), [&] { return J_via_alt(p, tol); });
        }
        out.oracle = oracle_J(p.a, p.b);
      }
    }
  } else if (q == "H") {
    const auto [n, a] = detail::moment_args(r);
    if (is_near_integer(a) && near_integer(a) >= 2.0 && near_integer(a) <= static_cast<double>(n)) {
      detail::add_exact(out, "H_INTEGER", H_integer(n, static_cast<int>(near_integer(a))));
    }
    if (const auto m = detail::nonpositive_integer_index(a); m && n >= 1) {
      detail::add_exact(out, "H_NEGATIVE_INTEGER", H_negative_integer(n, *m));
    }
    if (n >= 1) detail::try_add(out, "H_FINITE", [&] { return exact_value(H_finite(n, a)); });
    detail::add(out, "H_SERIES", H_series(n, a, tol));
    out.oracle = oracle_moment(static_cast<int>(n), a);
  } else if (q == "S1") {
    const cplx a = detail::need(r.a, "a", q);
    const cplx b = detail::need(r.b, "b", q);
    detail::add_exact(out, "S1_CLOSED", S1_closed(a, b));
    const auto ma = detail::nonpositive_integer_index(a);
    const auto mb = detail::nonpositive_integer_index(b);
    if (ma && mb) detail::add_exact(out, "S1_FINITE", S1_finite(*ma, *mb));
    detail::add(out, "S1_DIRECT", S1_direct(a, b, r.terms_max, r.terms_max, tol));
    out.oracle = oracle_Jstar(a, b);
  } else if (q == "S2") {
    const cplx a = detail::need(r.a, "a", q);
    const cplx b = detail::need(r.b, "b", q);
    detail::try_add(out, "S2_CLOSED", [&] { return exact_value(S2_closed(a, b)); });
    if (is_near_nonpositive_integer(a + b)) {
      detail::add_exact(out, "S2_INTEGER_SUM", S2_integer_sum(a, static_cast<int>(near_integer(a + b))));
    }
    detail::add(out, "S2_DIRECT", S2_direct(a, b, r.terms_max, r.terms_max, tol));
    out.oracle = oracle_Istar(a, b);
  } else {
    const cplx a = detail::need(r.a, "a", q);
    if (q == "zeta") {
      detail::add_exact(out, "riemann_zeta", riemann_zeta(a));
      detail::add_exact(out, "hurwitz_zeta", hurwitz_zeta(a, 1.0));
    } else {
      const double x = detail::need_real(r.x, "x", q);
      if (!(x > 0.0)) throw error(errc::domain, q + " comparison requires x > 0");
      const cplx direct = hurwitz_zeta(a, x);
      // zeta(a, x) = sum_k (a)_k/k! zeta(a+k, 2x) x^k
      const SeriesValue shifted = wilton_zeta_shift(a, 2.0 * x, x, tol);
      if (q == "hurwitz") {
        detail::add_exact(out, "hurwitz_zeta", direct);
        detail::add(out, "wilton_shift", shifted);
      } else {
        const cplx lead = pow_neg(x, a);
        detail::add_exact(out, "zeta1", zeta1(a, x));
        SeriesValue s = shifted;
        s.value -= lead;
        detail::add(out, "wilton_shift_minus_lead", s);
      }
    }
  }
  out.max_pairwise_disagreement = max_pairwise(out);
  out.status = out.max_pairwise_disagreement <= out.tolerance ? ReportStatus::ok : ReportStatus::failed;
  return out;
}

}  // namespace zetasums
