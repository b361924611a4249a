#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"

namespace zetasums {
namespace {

using testing::rel;
using testing::references_for;
using std::numbers::pi;

ParameterPair pair(const testing::Reference& r) { return ParameterPair::make(r.args[0], r.args[1]); }

TEST(ParameterPair, Flags) {
  EXPECT_EQ(ParameterPair::make(2.3, 3.7).degeneracy, Degeneracy::generic);
  EXPECT_EQ(ParameterPair::make(1.0, 3.7).degeneracy, Degeneracy::pole_at_one);
  EXPECT_EQ(ParameterPair::make(2.0, 3.7).degeneracy, Degeneracy::a_integer);
  EXPECT_EQ(ParameterPair::make(2.5, 3.0).degeneracy, Degeneracy::b_integer);
  EXPECT_EQ(ParameterPair::make(0.3, 0.7).degeneracy, Degeneracy::sum_integer);
  EXPECT_EQ(ParameterPair::make(2.3, 3.7).gamma, cplx(5.0));
}

TEST(IntegralI, MatchesReferenceTable) {
  for (const auto& r : references_for("I")) {
    const ParameterPair p = pair(r);
    if (p.a.real() > 1.0 && p.b.real() > 1.0) {
      EXPECT_LT(rel(I_via_2f1(p).value, r.value), 1e-9) << p.a << ' ' << p.b;
    }
    if (p.degeneracy == Degeneracy::generic) {
      EXPECT_LT(rel(I_via_zeta(p).value, r.value), 1e-9) << p.a << ' ' << p.b;
    } else {
      EXPECT_THROW(I_via_zeta(p), error) << p.a << ' ' << p.b;
      EXPECT_LT(rel(I_epsilon_probe(p).value, r.value), 1e-9) << p.a << ' ' << p.b;
    }
  }
}

TEST(IntegralI, HighPrecisionValueAtTwoTwo) {
  EXPECT_LT(rel(I_via_2f1(ParameterPair::make(2.0, 2.0)).value, 1.075443910350203146271713), 1e-12);
}

TEST(IntegralI, ConjugateSymmetry) {
  const cplx a(2.0, 1.0), b(3.0, -0.5);
  const cplx v = I_via_zeta(ParameterPair::make(a, b)).value;
  EXPECT_LT(rel(I_via_zeta(ParameterPair::make(std::conj(a), std::conj(b))).value, std::conj(v)), 1e-13);
}

TEST(IntegralI, CriticalLine) {
  // t = 0: gamma_E - log 2 pi + psi(1/2) - 2 sum (zeta(n + 1/2) - 1)/(n + 1/2)
  cplx sum = 0.0;
  for (int n = 0; n < 80; ++n) sum += (riemann_zeta(n + 0.5) - 1.0) / (n + 0.5);
  const double at_zero = constants::euler_gamma - constants::log_two_pi + digamma(0.5).real() - 2.0 * sum.real();
  EXPECT_NEAR(I_critical_line(0.0).value.real(), at_zero, 1e-12);
  const auto ref = references_for("I").back();  // (1/2 + i, 1/2 - i)
  const SeriesValue v = I_critical_line(1.0);
  EXPECT_LT(rel(v.value, ref.value), 1e-10);
  EXPECT_LT(std::abs(v.value.imag()), 1e-12);
}

TEST(IntegralJ, MatchesReferenceTable) {
  for (const auto& r : references_for("J")) {
    const ParameterPair p = pair(r);
    const bool off_integers = p.degeneracy == Degeneracy::generic;
    if (off_integers) {
      EXPECT_LT(rel(J_via_zeta(p).value, r.value), 1e-9) << p.a << ' ' << p.b;
      EXPECT_LT(rel(J_via_alt(p).value, r.value), 1e-9) << p.a << ' ' << p.b;
    } else {
      EXPECT_LT(rel(J_epsilon_probe(p).value, r.value), 1e-9) << p.a << ' ' << p.b;
    }
    if (off_integers && p.a.real() > 1.0 && p.b.real() > 1.0) {
      EXPECT_LT(rel(J_via_2f1(p).value, r.value), 1e-9) << p.a << ' ' << p.b;
    }
  }
}

TEST(IntegralJ, ExchangeSymmetry) {
  const ParameterPair p = ParameterPair::make(2.1, 4.2);
  EXPECT_LT(rel(J_via_zeta(p).value, J_via_zeta(p.swapped()).value), 1e-12);
}

TEST(IntegralJ, BetaTermAtIntegersIsAPole) {
  EXPECT_THROW(J_M0(ParameterPair::make(2.0, 2.0)), error);
  // B(-1.5, -2.5) {zeta(5) - 1 - 2^-5}; Gamma(-4) is a pole so 1/Gamma(-4) = 0
  EXPECT_EQ(std::abs(J_M0(ParameterPair::make(2.5, 3.5))), 0.0);
  const ParameterPair p = ParameterPair::make(2.5, 3.7);
  const cplx expected = gamma(-1.5) * gamma(-2.7) / gamma(-4.2) * (riemann_zeta(5.2) - 1.0 - std::pow(2.0, -5.2));
  EXPECT_LT(rel(J_M0(p), expected), 1e-12);
}

TEST(IntegralJ, CriticalLine) {
  const auto ref = references_for("J").back();
  const SeriesValue v = J_critical_line(1.0);
  EXPECT_LT(rel(v.value, ref.value), 1e-9);
  EXPECT_LT(std::abs(v.value.imag()), 1e-12);
  // the hyperbolic term fades: at t = 10 the value is close to the t = 12 value
  EXPECT_LT(std::abs(J_critical_line(10.0).value.imag()), 1e-10);
}

TEST(IntegralsRefuse, PoleAtOne) {
  const ParameterPair p = ParameterPair::make(1.0, 2.5);
  EXPECT_THROW(I_via_2f1(p), error);
  EXPECT_THROW(I_via_zeta(p), error);
  EXPECT_THROW(J_via_zeta(p), error);
  EXPECT_THROW(J_via_alt(p), error);
}

}  // namespace
}  // namespace zetasums
