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

// Textual complex numbers and evaluation reports in text, CSV and JSON.
//
// Complex values are written RE, RE+IMi or RE-IMi with 17 significant
// digits, which parse back to the same doubles.

#pragma once

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "zetasums/quadrature.hpp"
#include "zetasums/types.hpp"

namespace zetasums {

// ---------------------------------------------------------------------------
// Complex text form.

inline std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string format_complex(cplx z) {
  std::string out = format_real(z.real());
  if (z.imag() != 0.0) {
    out += z.imag() < 0.0 ? '-' : '+';
    out += format_real(std::abs(z.imag()));
    out += 'i';
  }
  return out;
}

namespace detail {

inline double parse_real_strict(const std::string& s, const std::string& whole) {
  if (s.empty()) throw error(errc::parse, "empty number in '" + whole + "'");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE) throw error(errc::parse, "malformed number '" + whole + "'");
  return v;
}

}  // namespace detail

/// Parses "2.5", "-1e-3", "0.5+1i", "0.5-2.25i", "3i", "-i".
inline cplx parse_complex(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw error(errc::parse, "empty complex value");
  if (s.back() != 'i') return detail::parse_real_strict(s, text);
  s.pop_back();
  // the imaginary part starts at the last sign that is not an exponent sign
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re = split == std::string::npos ? std::string() : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : detail::parse_real_strict(re, text), detail::parse_real_strict(im, text)};
}

// ---------------------------------------------------------------------------
// Reports.

enum class ReportStatus { ok, degenerate_routed, failed };

inline const char* to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::ok: return "ok";
    case ReportStatus::degenerate_routed: return "degenerate_routed";
    case ReportStatus::failed: return "failed";
  }
  return "unknown";
}

struct RepresentationResult {
  std::string representation;
  SeriesValue value;
};

struct EvaluationReport {
  std::string quantity;
  std::vector<std::pair<std::string, cplx>> parameters;
  std::vector<RepresentationResult> results;
  std::optional<QuadratureResult> oracle;
  double max_pairwise_disagreement = 0.0;
  double tolerance = 0.0;
  ReportStatus status = ReportStatus::ok;
  std::string note;
};

/// |x - y| / max(1, |x|, |y|): relative for large values, absolute near zero.
inline double disagreement(cplx x, cplx y) {
  return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

/// Largest disagreement between any two results, the oracle included.
inline double max_pairwise(const EvaluationReport& r) {
  std::vector<cplx> v;
  for (const auto& x : r.results) v.push_back(x.value.value);
  if (r.oracle) v.push_back(r.oracle->value);
  double worst = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) worst = std::max(worst, disagreement(v[i], v[j]));
  }
  return worst;
}

inline std::string params_text(const EvaluationReport& r) {
  std::string out;
  for (const auto& [name, value] : r.parameters) {
    if (!out.empty()) out += ' ';
    out += name + '=' + format_complex(value);
  }
  return out;
}

inline std::string to_text(const EvaluationReport& r) {
  std::ostringstream os;
  os << "quantity: " << r.quantity << '\n';
  os << "params: " << params_text(r) << '\n';
  for (const auto& x : r.results) {
    os << "representation: " << x.representation << '\n'
       << "  value_re: " << format_real(x.value.value.real()) << '\n'
       << "  value_im: " << format_real(x.value.value.imag()) << '\n'
       << "  err: " << format_real(x.value.abs_error_estimate) << '\n'
       << "  terms: " << x.value.terms_used << '\n'
       << "  converged: " << (x.value.converged ? "true" : "false") << '\n';
  }
  if (r.oracle) {
    os << "representation: oracle\n"
       << "  value_re: " << format_real(r.oracle->value.real()) << '\n'
       << "  value_im: " << format_real(r.oracle->value.imag()) << '\n'
       << "  err: " << format_real(r.oracle->abs_error_estimate) << '\n'
       << "  terms: " << r.oracle->evaluations << '\n'
       << "  converged: " << (r.oracle->converged ? "true" : "false") << '\n';
  }
  if (r.results.size() + (r.oracle ? 1 : 0) > 1) {
    os << "max_pairwise_disagreement: " << format_real(r.max_pairwise_disagreement) << '\n'
       << "tolerance: " << format_real(r.tolerance) << '\n';
  }
  if (!r.note.empty()) os << "note: " << r.note << '\n';
  os << "status: " << to_string(r.status) << '\n';
  return os.str();
}

inline constexpr const char* kCsvHeader = "quantity,params,representation,value_re,value_im,err,terms,status";

inline std::string to_csv(const EvaluationReport& r, bool header = true) {
  std::ostringstream os;
  if (header) os << kCsvHeader << '\n';
  const std::string params = params_text(r);
  auto row = [&](const std::string& rep, cplx v, double err, std::size_t terms) {
    os << r.quantity << ',' << params << ',' << rep << ',' << format_real(v.real()) << ',' << format_real(v.imag())
       << ',' << format_real(err) << ',' << terms << ',' << to_string(r.status) << '\n';
  };
  for (const auto& x : r.results) row(x.representation, x.value.value, x.value.abs_error_estimate, x.value.terms_used);
  if (r.oracle) row("oracle", r.oracle->value, r.oracle->abs_error_estimate, r.oracle->evaluations);
  return os.str();
}

inline nlohmann::ordered_json to_json_value(const EvaluationReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["quantity"] = r.quantity;
  ordered_json params = ordered_json::object();
  for (const auto& [name, value] : r.parameters) params[name] = format_complex(value);
  j["params"] = params;
  ordered_json results = ordered_json::array();
  auto entry = [](const std::string& rep, cplx v, double err, std::size_t terms, bool converged) {
    ordered_json e;
    e["representation"] = rep;
    e["value_re"] = v.real();
    e["value_im"] = v.imag();
    e["err"] = err;  // null when not finite
    e["terms"] = terms;
    e["converged"] = converged;
    return e;
  };
  for (const auto& x : r.results) {
    results.push_back(entry(x.representation, x.value.value, x.value.abs_error_estimate, x.value.terms_used,
                            x.value.converged));
  }
  j["results"] = results;
  if (r.oracle) {
    j["oracle"] = entry("oracle", r.oracle->value, r.oracle->abs_error_estimate, r.oracle->evaluations,
                        r.oracle->converged);
  }
  j["max_pairwise_disagreement"] = r.max_pairwise_disagreement;
  j["tolerance"] = r.tolerance;
  if (!r.note.empty()) j["note"] = r.note;
  j["status"] = to_string(r.status);
  return j;
}

inline std::string to_json(const EvaluationReport& r) { return to_json_value(r).dump(2) + "\n"; }

}  // namespace zetasums
