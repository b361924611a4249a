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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

#include "zetasums/types.hpp"

namespace zetasums {

using rational = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

/// Exact Bernoulli numbers B_0..B_max (convention B_1 = -1/2), built once by
/// the recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 and read-only afterwards.
class BernoulliTable {
 public:
  static constexpr std::size_t kMaxIndex = 100;

  static const BernoulliTable& instance() {
    static const BernoulliTable table(kMaxIndex);
    return table;
  }

  std::size_t max_index() const { return values_.size() - 1; }

  const rational& exact(std::size_t n) const {
    if (n > max_index()) throw error(errc::domain, "Bernoulli index beyond table");
    return values_[n];
  }

  double value(std::size_t n) const {
    if (n > max_index()) throw error(errc::domain, "Bernoulli index beyond table");
    return as_double_[n];
  }

  /// B_{2j} / (2j)! as a double, j >= 1.
  double even_over_factorial(std::size_t j) const {
    if (2 * j > max_index()) throw error(errc::domain, "Bernoulli index beyond table");
    return even_over_factorial_[j];
  }

 private:
  explicit BernoulliTable(std::size_t max_index) {
    values_.resize(max_index + 1);
    values_[0] = 1;
    // binomial row C(m+1, j) updated in place
    std::vector<bigint> row{1, 1};
    for (std::size_t m = 1; m <= max_index; ++m) {
      // row currently holds C(m, .); advance to C(m+1, .)
      std::vector<bigint> next(m + 2);
      next[0] = 1;
      next[m + 1] = 1;
      for (std::size_t j = 1; j <= m; ++j) next[j] = row[j - 1] + row[j];
      row = std::move(next);
      rational acc = 0;
      for (std::size_t j = 0; j < m; ++j) acc += rational(row[j]) * values_[j];
      values_[m] = -acc / rational(row[m]);
    }
    as_double_.reserve(values_.size());
    for (const auto& v : values_) as_double_.push_back(static_cast<double>(v));
    even_over_factorial_.assign(max_index / 2 + 1, 0.0);
    bigint fact = 1;
    for (std::size_t n = 1; n <= max_index; ++n) {
      fact *= n;
      if (n % 2 == 0) even_over_factorial_[n / 2] = static_cast<double>(values_[n] / rational(fact));
    }
  }

  std::vector<rational> values_;
  std::vector<double> as_double_;
  std::vector<double> even_over_factorial_;
};

inline const rational& bernoulli_exact(std::size_t n) { return BernoulliTable::instance().exact(n); }
inline double bernoulli(std::size_t n) { return BernoulliTable::instance().value(n); }

inline bigint binomial_exact(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  bigint r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline bigint factorial_exact(std::size_t n) {
  bigint r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

/// zeta(-s) = -B_{s+1}/(s+1) for integer s >= 0 (with zeta(0) = -1/2).
inline rational zeta_at_nonpositive_integer_exact(std::size_t s) {
  if (s == 0) return rational(-1, 2);
  return -bernoulli_exact(s + 1) / rational(s + 1);
}

/// Bernoulli polynomial B_n(x) in double precision.
inline double bernoulli_polynomial(std::size_t n, double x) {
  const auto& table = BernoulliTable::instance();
  // Horner in x over coefficients C(n,k) B_{n-k}
  double acc = 0.0;
  double binom = 1.0;  // C(n, k) for k = 0
  for (std::size_t k = 0; k <= n; ++k) {
    acc = acc * x + binom * table.value(k);
    binom = binom * static_cast<double>(n - k) / static_cast<double>(k + 1);
  }
  return acc;
}

}  // namespace zetasums
