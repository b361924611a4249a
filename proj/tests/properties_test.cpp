// Randomized invariants. Every generator is seeded, so runs are reproducible.

#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

namespace zetasums {
namespace {

using testing::Random;
using testing::rel;

constexpr int kTrials = 40;

cplx off_integers(Random& rng, double lo, double hi, double im) {
  for (;;) {
    const cplx z = rng.complex(lo, hi, -im, im);
    if (std::abs(z - std::round(z.real())) > 0.05) return z;
  }
}

// --- special functions -----------------------------------------------------

TEST(SpecialProperties, ConjugateSymmetry) {
  Random rng(testing::kSeed + 1);
  for (int i = 0; i < kTrials; ++i) {
    const cplx z = off_integers(rng, -6.0, 8.0, 6.0);
    EXPECT_LT(rel(gamma(std::conj(z)), std::conj(gamma(z))), 1e-14) << z;
    EXPECT_LT(rel(digamma(std::conj(z)), std::conj(digamma(z))), 1e-14) << z;
    if (std::abs(z - 1.0) > 0.05) {
      EXPECT_LT(rel(riemann_zeta(std::conj(z)), std::conj(riemann_zeta(z))), 1e-14) << z;
    }
  }
}

TEST(SpecialProperties, GammaRecurrence) {
  Random rng(testing::kSeed + 2);
  for (int i = 0; i < kTrials; ++i) {
    const cplx z = std::polar(rng.uniform(0.2, 20.0), rng.uniform(-3.14159, 3.14159));
    if (std::abs(z - std::round(z.real())) < 0.05) continue;
    EXPECT_LT(rel(gamma(z + 1.0), z * gamma(z)), 1e-12) << z;
  }
}

TEST(SpecialProperties, GammaReflection) {
  Random rng(testing::kSeed + 3);
  for (int i = 0; i < kTrials; ++i) {
    const cplx z = off_integers(rng, -5.0, 5.0, 3.0);
    EXPECT_LT(std::abs(gamma(z) * gamma(1.0 - z) * sin_pi(z) / constants::pi - 1.0), 1e-11) << z;
  }
}

// --- Hurwitz zeta ------------------------------------------------------------

TEST(HurwitzProperties, ShiftRecurrence) {
  Random rng(testing::kSeed + 4);
  for (int i = 0; i < kTrials; ++i) {
    const cplx a = rng.complex(-3.0, 5.0, -2.0, 2.0);
    if (std::abs(a - 1.0) < 0.05) continue;
    const double x = rng.uniform(1e-3, 2.0);
    const cplx lhs = hurwitz_zeta(a, x);
    EXPECT_LT(std::abs(lhs - pow_neg(x, a) - hurwitz_zeta(a, x + 1.0)), 1e-12 * std::max(1.0, std::abs(lhs)))
        << a << ' ' << x;
  }
}

TEST(HurwitzProperties, Zeta1IsLipschitzAndDecreasing) {
  Random rng(testing::kSeed + 5);
  for (int i = 0; i < 10; ++i) {
    const double a = rng.uniform(2.0, 6.0);
    // |d/dx zeta1(a, x)| = a zeta1(a + 1, x) <= a zeta(a + 1)
    const double lipschitz = a * riemann_zeta(a + 1.0).real();
    double prev = zeta1(a, 0.0).real();
    for (int k = 1; k <= 64; ++k) {
      const double x = k / 64.0;
      const double v = zeta1(a, x).real();
      EXPECT_LT(v, prev) << a << ' ' << x;
      EXPECT_LE(prev - v, lipschitz / 64.0 * (1.0 + 1e-12)) << a << ' ' << x;
      prev = v;
    }
  }
}

TEST(HurwitzProperties, WiltonShiftConsistency) {
  Random rng(testing::kSeed + 6);
  for (int i = 0; i < 20; ++i) {
    const cplx a = rng.complex(-2.0, 5.0, -2.0, 2.0);
    if (std::abs(a - 1.0) < 0.05) continue;
    const double b = rng.uniform(0.5, 3.0);
    const double x = rng.uniform(-0.8, 0.8) * b;
    const SeriesValue v = wilton_zeta_shift(a, b, x);
    ASSERT_TRUE(v.converged) << a << ' ' << b << ' ' << x;
    EXPECT_LT(std::abs(v.value - hurwitz_zeta(a, b - x)), 1e-10 * std::max(1.0, std::abs(v.value)))
        << a << ' ' << b << ' ' << x;
  }
}

// --- hypergeometric ------------------------------------------------------------

TEST(HypergeometricProperties, ContiguousRelation) {
  Random rng(testing::kSeed + 7);
  for (int i = 0; i < kTrials; ++i) {
    const cplx a = rng.complex(-1.5, 2.5, -1.0, 1.0);
    const cplx b = rng.complex(-1.5, 2.5, -1.0, 1.0);
    const cplx c = off_integers(rng, 0.5, 4.0, 1.0);
    const cplx z = rng.complex(-0.6, 0.6, -0.3, 0.3);
    const cplx f = gauss_2f1(a, b, c, z).value;
    const cplx g = gauss_2f1(a + 1.0, b, c, z).value;
    const cplx h = gauss_2f1(a + 1.0, b + 1.0, c + 1.0, z).value;
    const double scale = std::max({1.0, std::abs(c * f), std::abs(c * g), std::abs(b * z * h)});
    EXPECT_LT(std::abs(c * f - c * g + b * z * h) / scale, 1e-10) << a << ' ' << b << ' ' << c << ' ' << z;
  }
}

TEST(HypergeometricProperties, PochhammerSplits) {
  Random rng(testing::kSeed + 8);
  for (int i = 0; i < kTrials; ++i) {
    const cplx a = rng.complex(-4.0, 4.0, -2.0, 2.0);
    const auto m = static_cast<std::size_t>(rng.integer(0, 12));
    const auto n = static_cast<std::size_t>(rng.integer(0, 12));
    const cplx whole = pochhammer(a, m + n);
    const cplx split = pochhammer(a, m) * pochhammer(a + static_cast<double>(m), n);
    EXPECT_LE(std::abs(whole - split), 1e-13 * std::max(1.0, std::abs(whole))) << a << ' ' << m << ' ' << n;
  }
}

TEST(HypergeometricProperties, BetaSymmetry) {
  Random rng(testing::kSeed + 9);
  for (int i = 0; i < kTrials; ++i) {
    const cplx x = off_integers(rng, -3.0, 5.0, 2.0);
    const cplx y = off_integers(rng, -3.0, 5.0, 2.0);
    if (std::abs(x + y - std::round((x + y).real())) < 0.05) continue;
    EXPECT_LT(rel(beta_fn(x, y), beta_fn(y, x)), 1e-14) << x << ' ' << y;
  }
}

TEST(HypergeometricProperties, PfaffTransformAgreesWithSeries) {
  Random rng(testing::kSeed + 10);
  for (int i = 0; i < kTrials; ++i) {
    const cplx a = rng.complex(-1.0, 3.0, -1.0, 1.0);
    const cplx b = rng.complex(-1.0, 3.0, -1.0, 1.0);
    const cplx c = off_integers(rng, 0.5, 4.0, 1.0);
    const double z = rng.uniform(0.01, 0.5);
    const cplx direct = gauss_2f1(a, b, c, z, kDefaultTol, Hyp2f1Method::direct).value;
    const cplx pfaff = gauss_2f1(a, b, c, z, kDefaultTol, Hyp2f1Method::pfaff).value;
    EXPECT_LE(std::abs(direct - pfaff), 1e-11 * std::max(1.0, std::abs(direct))) << a << ' ' << b << ' ' << c << ' ' << z;
  }
}

// --- I and J -----------------------------------------------------------------

std::pair<cplx, cplx> admissible_pair(Random& rng) {
  for (;;) {
    const cplx a = rng.complex(1.2, 5.0, -1.0, 1.0);
    const cplx b = rng.complex(1.2, 5.0, -1.0, 1.0);
    if (ParameterPair::make(a, b).degeneracy == Degeneracy::generic) return {a, b};
  }
}

TEST(IntegralProperties, ExchangeSymmetry) {
  Random rng(testing::kSeed + 11);
  for (int i = 0; i < 15; ++i) {
    const auto [a, b] = admissible_pair(rng);
    const ParameterPair p = ParameterPair::make(a, b), q = p.swapped();
    EXPECT_LT(rel(I_via_2f1(p).value, I_via_2f1(q).value), 1e-11) << a << ' ' << b;
    EXPECT_LT(rel(I_via_zeta(p).value, I_via_zeta(q).value), 1e-11) << a << ' ' << b;
    EXPECT_LT(rel(J_via_2f1(p).value, J_via_2f1(q).value), 1e-11) << a << ' ' << b;
    EXPECT_LT(rel(J_via_zeta(p).value, J_via_zeta(q).value), 1e-11) << a << ' ' << b;
    EXPECT_LT(rel(J_via_alt(p).value, J_via_alt(q).value), 1e-11) << a << ' ' << b;
  }
}

TEST(IntegralProperties, RepresentationsAgreeWithEachOtherAndQuadrature) {
  Random rng(testing::kSeed + 12);
  for (int i = 0; i < 15; ++i) {
    const auto [a, b] = admissible_pair(rng);
    const ParameterPair p = ParameterPair::make(a, b);
    const cplx i2 = I_via_2f1(p).value, iz = I_via_zeta(p).value;
    const cplx j2 = J_via_2f1(p).value, jz = J_via_zeta(p).value, ja = J_via_alt(p).value;
    EXPECT_LT(rel(i2, iz), 1e-9) << a << ' ' << b;
    EXPECT_LT(rel(j2, jz), 1e-9) << a << ' ' << b;
    EXPECT_LT(rel(jz, ja), 1e-9) << a << ' ' << b;
    const cplx qi = oracle_I(a, b).value, qj = oracle_J(a, b).value;
    EXPECT_LT(rel(i2, qi), 1e-8) << a << ' ' << b;
    EXPECT_LT(rel(j2, qj), 1e-8) << a << ' ' << b;
  }
}

TEST(IntegralProperties, PositiveForRealExponents) {
  Random rng(testing::kSeed + 13);
  for (int i = 0; i < 20; ++i) {
    const double a = rng.uniform(1.1, 6.0), b = rng.uniform(1.1, 6.0);
    const ParameterPair p = ParameterPair::make(a, b);
    if (p.degeneracy != Degeneracy::generic) continue;
    EXPECT_GT(I_via_zeta(p).value.real(), 0.0) << a << ' ' << b;
    EXPECT_GT(J_via_zeta(p).value.real(), 0.0) << a << ' ' << b;
  }
}

TEST(IntegralProperties, ConjugateSymmetry) {
  Random rng(testing::kSeed + 14);
  for (int i = 0; i < 15; ++i) {
    const auto [a, b] = admissible_pair(rng);
    const ParameterPair p = ParameterPair::make(a, b), q = ParameterPair::make(std::conj(a), std::conj(b));
    EXPECT_LT(rel(I_via_zeta(q).value, std::conj(I_via_zeta(p).value)), 1e-13) << a << ' ' << b;
    EXPECT_LT(rel(J_via_alt(q).value, std::conj(J_via_alt(p).value)), 1e-13) << a << ' ' << b;
  }
}

// --- moments -------------------------------------------------------------------

TEST(MomentProperties, SeriesFiniteAndQuadratureAgree) {
  Random rng(testing::kSeed + 15);
  int checked = 0;
  while (checked < 20) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 8));
    const cplx a = rng.complex(-3.0, static_cast<double>(n) + 0.9, -1.0, 1.0);
    if (finite_sum_clearance(n, a) < 0.05) continue;
    ++checked;
    const cplx series = H_series(n, a).value;
    EXPECT_LE(std::abs(series - H_finite(n, a)), 1e-10 * std::max(1.0, std::abs(series))) << n << ' ' << a;
    if (a.real() < static_cast<double>(n) + 0.5) {
      EXPECT_LE(std::abs(series - oracle_moment(static_cast<int>(n), a).value), 1e-8 * std::max(1.0, std::abs(series)))
          << n << ' ' << a;
    }
  }
}

// --- double sums -----------------------------------------------------------------

std::pair<cplx, cplx> s1_point(Random& rng) {
  for (;;) {
    const cplx a = rng.complex(-1.5, 0.45, -0.5, 0.5);
    const cplx b = rng.complex(-1.5, 0.45, -0.5, 0.5);
    if (std::abs(a - std::round(a.real())) > 0.05 && std::abs(b - std::round(b.real())) > 0.05) return {a, b};
  }
}

std::pair<cplx, cplx> s2_point(Random& rng) {
  for (;;) {
    const auto [a, b] = s1_point(rng);
    const cplx s = a + b;
    if (s.real() < 0.9 && std::abs(s - std::round(s.real())) > 0.05) return {a, b};
  }
}

TEST(DoubleSumProperties, Symmetry) {
  Random rng(testing::kSeed + 16);
  for (int i = 0; i < 10; ++i) {
    const auto [a, b] = s2_point(rng);
    EXPECT_LT(rel(S1_closed(a, b), S1_closed(b, a)), 1e-14) << a << ' ' << b;
    EXPECT_LT(rel(S2_closed(a, b), S2_closed(b, a)), 1e-14) << a << ' ' << b;
    EXPECT_LE(std::abs(S1_direct(a, b).value - S1_direct(b, a).value), 1e-10) << a << ' ' << b;
    EXPECT_LE(std::abs(S2_direct(a, b).value - S2_direct(b, a).value), 1e-10) << a << ' ' << b;
  }
}

TEST(DoubleSumProperties, DirectMatchesClosed) {
  Random rng(testing::kSeed + 17);
  for (int i = 0; i < 20; ++i) {
    const auto [a, b] = s2_point(rng);
    EXPECT_LE(std::abs(S1_direct(a, b).value - S1_closed(a, b)), 1e-7) << a << ' ' << b;
    EXPECT_LE(std::abs(S2_direct(a, b).value - S2_closed(a, b)), 1e-7) << a << ' ' << b;
  }
}

TEST(DoubleSumProperties, ClosedMatchesQuadrature) {
  Random rng(testing::kSeed + 18);
  for (int i = 0; i < 8; ++i) {
    const cplx a = rng.complex(0.02, 0.48, -0.5, 0.5), b = rng.complex(0.02, 0.48, -0.5, 0.5);
    EXPECT_LE(std::abs(S1_closed(a, b) - oracle_Jstar(a, b).value), 1e-7) << a << ' ' << b;
    if ((a + b).real() < 0.9) {
      EXPECT_LE(std::abs(S2_closed(a, b) - oracle_Istar(a, b).value), 1e-7) << a << ' ' << b;
    }
  }
}

TEST(DoubleSumProperties, SeamApproachIsLinear) {
  Random rng(testing::kSeed + 19);
  for (int i = 0; i < 6; ++i) {
    const double a = rng.uniform(-0.9, 0.9);
    if (std::abs(a - std::round(a)) < 0.05) continue;
    const int total = rng.integer(-2, 0);
    const cplx limit = S2_integer_sum(a, total);
    const double d1 = std::abs(S2_closed(a, total - a + 1e-4) - limit);
    const double d2 = std::abs(S2_closed(a, total - a + 1e-5) - limit);
    EXPECT_LT(d2, d1) << a << ' ' << total;
    EXPECT_NEAR(d1 / d2, 10.0, 1.0) << a << ' ' << total;
  }
}

// --- quadrature --------------------------------------------------------------------

TEST(QuadratureProperties, ExactOnPolynomials) {
  Random rng(testing::kSeed + 20);
  for (int i = 0; i < 20; ++i) {
    std::vector<double> coeff(11);
    double exact = 0.0;
    for (std::size_t k = 0; k < coeff.size(); ++k) {
      coeff[k] = rng.uniform(-1.0, 1.0);
      exact += coeff[k] / static_cast<double>(k + 1);
    }
    auto poly = [&](double x) {
      double v = 0.0;
      for (std::size_t k = coeff.size(); k-- > 0;) v = v * x + coeff[k];
      return cplx(v);
    };
    EXPECT_NEAR(integrate_unit_interval(poly).value.real(), exact, 1e-13);
  }
}

TEST(QuadratureProperties, ComplementarySymmetry) {
  Random rng(testing::kSeed + 21);
  for (int i = 0; i < 10; ++i) {
    const auto [a, b] = admissible_pair(rng);
    EXPECT_LT(rel(oracle_J(a, b).value, oracle_J(b, a).value), 1e-10) << a << ' ' << b;
  }
}

TEST(QuadratureProperties, TighterTargetsCostMoreEvaluations) {
  auto f = [](double x) { return cplx(std::exp(-x) * std::cos(3.0 * x)); };
  std::size_t prev = 0;
  for (double target : {1e-4, 1e-8, 1e-12}) {
    QuadratureConfig cfg;
    cfg.target_abs_error = target;
    const auto r = integrate_unit_interval(f, cfg);
    EXPECT_TRUE(r.converged);
    EXPECT_GE(r.evaluations, prev);
    prev = r.evaluations;
  }
}

// --- text form ----------------------------------------------------------------------

TEST(TextProperties, ComplexRoundTripIsLossless) {
  Random rng(testing::kSeed + 22);
  for (int i = 0; i < 200; ++i) {
    const double re = std::ldexp(rng.uniform(-1.0, 1.0), rng.integer(-60, 60));
    const double im = rng.integer(0, 3) == 0 ? 0.0 : std::ldexp(rng.uniform(-1.0, 1.0), rng.integer(-60, 60));
    const cplx z(re, im);
    EXPECT_EQ(parse_complex(format_complex(z)), z) << format_complex(z);
  }
}

}  // namespace
}  // namespace zetasums
