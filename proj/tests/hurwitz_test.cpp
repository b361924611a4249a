#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"

namespace zetasums {
namespace {

using testing::rel;
using testing::references_for;
using std::numbers::pi;

TEST(HurwitzZeta, ClassicalValues) {
  EXPECT_NEAR(hurwitz_zeta(2.0, 1.0).real(), pi * pi / 6.0, 1e-14);
  EXPECT_NEAR((hurwitz_zeta(3.0, 0.5) - hurwitz_zeta(3.0, 1.5)).real(), 8.0, 1e-13);
  const double x = 0.25;
  EXPECT_NEAR(hurwitz_zeta(-1.0, x).real(), -(x * x - x + 1.0 / 6.0) / 2.0, 1e-14);
}

TEST(HurwitzZeta, NegativeIntegersAreBernoulliPolynomials) {
  for (int n = 0; n <= 8; ++n) {
    for (double x : {0.1, 0.5, 0.77, 1.6}) {
      const double expected = -bernoulli_polynomial(n + 1, x) / (n + 1.0);
      EXPECT_NEAR(hurwitz_zeta(-static_cast<double>(n), x).real(), expected, 1e-12 * std::max(1.0, std::abs(expected)))
          << n << ' ' << x;
    }
  }
}

TEST(HurwitzZeta, MatchesReferenceTable) {
  for (const auto& r : references_for("hurwitz")) {
    EXPECT_LT(rel(hurwitz_zeta(r.args[0], r.args[1].real()), r.value), 1e-12) << r.args[0] << ' ' << r.args[1];
  }
}

TEST(HurwitzZeta, DirectSumForLargeExponent) {
  const cplx a(6.5, 1.5);
  const double x = 0.4;
  cplx sum = 0.0;
  for (int k = 4000; k >= 0; --k) sum += std::exp(-a * std::log(k + x));
  EXPECT_LT(rel(hurwitz_zeta(a, x), sum), 1e-13);
}

TEST(HurwitzZeta, PoleRaises) { EXPECT_THROW(hurwitz_zeta(1.0, 0.5), error); }

TEST(Zeta1, ShiftedArgument) {
  EXPECT_LT(rel(zeta1(2.5, 0.0), riemann_zeta(2.5)), 1e-14);
  EXPECT_NEAR(zeta1(3.0, 1.0).real(), constants::zeta3 - 1.0, 1e-14);
  const cplx a(2.0, 1.0);
  EXPECT_LT(rel(zeta1(a, 0.37), hurwitz_zeta(a, 1.37)), 1e-14);
}

TEST(WiltonZetaShift, Examples) {
  const SeriesValue one = wilton_zeta_shift(2.0, 1.0, 0.0);
  EXPECT_NEAR(one.value.real(), pi * pi / 6.0, 1e-14);
  const SeriesValue v = wilton_zeta_shift(3.0, 2.0, 0.5);
  EXPECT_TRUE(v.converged);
  EXPECT_LT(rel(v.value, hurwitz_zeta(3.0, 1.5)), 1e-12);
}

TEST(WiltonZetaShift, NullSumAtTwo) {
  // sum_{k>=1} (2)_k / k! (zeta(2 + k) - 1) = 1, i.e. zeta(2, 1) from b = 2, x = 1 collapses
  cplx sum = 0.0;
  for (int k = 1; k < 200; ++k) sum += (k + 1.0) * (riemann_zeta(2.0 + k) - 1.0);
  EXPECT_NEAR(sum.real(), 1.0, 1e-12);
  const SeriesValue v = wilton_zeta_shift(2.0, 2.0, 1.0);
  EXPECT_TRUE(v.converged);
  EXPECT_NEAR(v.value.real(), hurwitz_zeta(2.0, 1.0).real(), 1e-10);
}

TEST(WiltonZetaShift, OutsideDiskIsFlagged) {
  const SeriesValue v = wilton_zeta_shift(2.5, 1.0, 1.5);
  EXPECT_FALSE(v.converged);
}

TEST(ZetaOneMinus, Examples) {
  for (cplx a : {cplx(2.5), cplx(0.3, 2.0), cplx(-1.5)}) {
    EXPECT_LT(rel(zeta_one_minus(a, 0.0).value, riemann_zeta(a)), 1e-14) << a;
  }
  EXPECT_LT(rel(zeta_one_minus(2.5, 0.5).value, hurwitz_zeta(2.5, 0.5)), 1e-12);
  // finite at a = -2: zeta(-2, 0.7) = -B_3(0.7) / 3
  const double x = 0.3;
  EXPECT_NEAR(zeta_one_minus(-2.0, x).value.real(), -bernoulli_polynomial(3, 1.0 - x) / 3.0, 1e-13);
}

TEST(PochEtaSeries, TruncatesAtNonPositiveIntegers) {
  const SeriesValue v = poch_eta_series(-2.0, 1.0, [](std::size_t) { return 1.0; });
  EXPECT_TRUE(v.converged);
  EXPECT_LT(v.terms_used, 20u);
}

}  // namespace
}  // namespace zetasums
