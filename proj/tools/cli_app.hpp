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

// Command-line front end: eval, compare and suite.
//
// Exit codes: 0 pass, 2 tolerance failure, 3 domain error, 4 parse error.

#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zetasums/zetasums.hpp"

namespace zetasums::cli {

enum exit_code : int { kPass = 0, kToleranceFailure = 2, kDomainError = 3, kParseError = 4 };

struct Flags {
  std::string quantity;
  std::string a, b, n, m, t, x;
  std::string tol;
  std::size_t terms_max = kDoubleSumTerms;
  std::string format = "text";
  std::string only;
  std::string out;
};

namespace detail {

inline long parse_integer(const std::string& s, const char* flag) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw error(errc::parse, std::string("--") + flag + " expects an integer, got '" + s + "'");
  return v;
}

inline double parse_real(const std::string& s, const char* flag) {
  const cplx z = parse_complex(s);
  if (z.imag() != 0.0) throw error(errc::parse, std::string("--") + flag + " expects a real number");
  return z.real();
}

inline EvaluationRequest make_request(const Flags& f) {
  EvaluationRequest r;
  r.quantity = f.quantity;
  if (!f.a.empty()) r.a = parse_complex(f.a);
  if (!f.b.empty()) r.b = parse_complex(f.b);
  if (!f.n.empty()) r.n = parse_integer(f.n, "n");
  if (!f.m.empty()) r.m = parse_integer(f.m, "m");
  if (!f.t.empty()) r.t = parse_real(f.t, "t");
  if (!f.x.empty()) r.x = parse_real(f.x, "x");
  r.terms_max = f.terms_max;
  return r;
}

inline std::string render(const EvaluationReport& r, const std::string& format) {
  if (format == "csv") return to_csv(r);
  if (format == "json") return to_json(r);
  return to_text(r);
}

inline std::string render_suite(const std::vector<CriterionResult>& results, const AcceptanceOptions& opt,
                                const std::string& format) {
  std::size_t passed = 0;
  std::vector<int> failing;
  for (const auto& r : results) {
    if (r.passed()) {
      ++passed;
    } else {
      failing.push_back(r.id);
    }
  }
  std::ostringstream os;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["tolerance_floor"] = opt.tol_floor;
    j["only"] = opt.only;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& r : results) list.push_back(to_json_value(r));
    j["criteria"] = list;
    j["passed"] = passed;
    j["failed"] = failing;
    os << j.dump(2) << '\n';
  } else if (format == "csv") {
    os << "id,name,passed,worst,threshold,checks,label\n";
    for (const auto& r : results) {
      const Check* c = r.tightest();
      os << r.id << ',' << r.name << ',' << (r.passed() ? "true" : "false") << ','
         << (c ? format_real(c->measured) : "") << ',' << (c ? format_real(c->threshold) : "") << ','
         << r.checks.size() << ",\"" << (c ? c->label : r.failure) << "\"\n";
    }
  } else {
    for (const auto& r : results) os << summary_line(r) << '\n';
    os << "suite: " << passed << '/' << results.size() << " criteria passed";
    if (opt.tol_floor > 0.0) os << " (thresholds raised to at least " << format_real(opt.tol_floor) << ")";
    if (!failing.empty()) {
      os << "; failing:";
      for (int id : failing) os << ' ' << id;
    }
    os << '\n';
  }
  return os.str();
}

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw error(errc::domain, "cannot write '" + path + "'");
  file << text;
}

}  // namespace detail

/// Runs the CLI on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integrals and double sums of Hurwitz zeta functions, with cross-checks"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", f.tol, "series tolerance (eval), comparison tolerance (compare), threshold floor (suite)");
    sub->add_option("--format", f.format, "report format")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--out", f.out, "write the report to this file instead of standard output");
  };
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("quantity", f.quantity, "I, J, H, S1, S2, zeta, hurwitz or zeta1")->required();
    sub->add_option("--a", f.a, "first parameter, RE or RE+IMi");
    sub->add_option("--b", f.b, "second parameter, RE or RE+IMi");
    sub->add_option("--n", f.n, "moment order");
    sub->add_option("--m", f.m, "integer value of a for moments");
    sub->add_option("--t", f.t, "critical-line ordinate: a = 1/2 + it, b = 1/2 - it");
    sub->add_option("--x", f.x, "shift for hurwitz and zeta1");
    sub->add_option("--terms-max", f.terms_max, "term cap per index for the direct double sums");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate the preferred representation");
  add_params(eval);
  add_common(eval);
  CLI::App* cmp = app.add_subcommand("compare", "evaluate every applicable representation and the quadrature oracle");
  add_params(cmp);
  add_common(cmp);
  CLI::App* suite = app.add_subcommand("suite", "run the acceptance grid");
  add_common(suite);
  suite->add_option("--only", f.only, "restrict to one module")->check(CLI::IsMember(acceptance_modules()));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (suite->parsed()) {
      AcceptanceOptions opt;
      if (!f.tol.empty()) opt.tol_floor = detail::parse_real(f.tol, "tol");
      opt.only = f.only;
      const auto results = run_acceptance(opt);
      detail::emit(detail::render_suite(results, opt, f.format), f.out, out);
      for (const auto& r : results) {
        if (!r.passed()) return kToleranceFailure;
      }
      return kPass;
    }
    EvaluationRequest req = detail::make_request(f);
    if (!is_known_quantity(req.quantity)) throw error(errc::parse, "unknown quantity '" + req.quantity + "'");
    if (eval->parsed()) {
      if (!f.tol.empty()) req.tol = detail::parse_real(f.tol, "tol");
      detail::emit(detail::render(evaluate(req), f.format), f.out, out);
      return kPass;
    }
    if (!f.tol.empty()) req.compare_tol = detail::parse_real(f.tol, "tol");
    const EvaluationReport report = compare(req);
    detail::emit(detail::render(report, f.format), f.out, out);
    return report.status == ReportStatus::failed ? kToleranceFailure : kPass;
  } catch (const error& e) {
    err << e.what() << '\n';
    return e.code() == errc::parse ? kParseError : kDomainError;
  }
}

}  // namespace zetasums::cli
