#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "ikmix/errors.hpp"
#include "ikmix/ikdist.hpp"
#include "test_support.hpp"

namespace ikmix {
namespace {

using testing::Rng;

TEST(IKParams, RejectsNonPositiveAndNonFinite) {
  EXPECT_THROW(IKParams(0.0, 1.0), DomainError);
  EXPECT_THROW(IKParams(1.0, -2.0), DomainError);
  EXPECT_THROW(IKParams(std::nan(""), 1.0), DomainError);
  EXPECT_THROW(IKParams(1.0, INFINITY), DomainError);
  EXPECT_NO_THROW(IKParams(1e-9, 1e9));
}

TEST(IkCdf, ClosedFormPoints) {
  EXPECT_EQ(ik_cdf(0.0, IKParams(3.0, 0.2)), 0.0);
  EXPECT_NEAR(ik_cdf(1.0, IKParams(1, 1)), 0.5, 1e-15);
  // Lomax case beta = 1; mpmath at 40 digits.
  EXPECT_NEAR(ik_cdf(2.0, IKParams(0.5, 1)), 0.42264973081037423549, 1e-15);
}

TEST(IkCdf, RejectsOutsideSupport) {
  EXPECT_THROW(ik_cdf(-1e-300, IKParams(1, 1)), DomainError);
  EXPECT_THROW(ik_cdf(INFINITY, IKParams(1, 1)), DomainError);
  EXPECT_THROW(ik_sf(-1.0, IKParams(1, 1)), DomainError);
  EXPECT_THROW(ik_pdf(-1.0, IKParams(1, 1)), DomainError);
}

TEST(IkSf, ClosedFormPoints) {
  EXPECT_EQ(ik_sf(0.0, IKParams(2, 2)), 1.0);
  EXPECT_NEAR(ik_sf(1.0, IKParams(1, 1)), 0.5, 1e-15);
  EXPECT_NEAR(ik_sf(10.0, IKParams(0.5, 1)), 0.30151134457776362265, 1e-15);
}

TEST(IkSf, KeepsRelativePrecisionInTheUpperTail) {
  // cdf rounds to 1 here; sf = 1 - (1 - 1e-20)^2 ~ 2e-20.
  const IKParams p(1.0, 2.0);
  const double x = 1e20 - 1.0;
  EXPECT_EQ(ik_cdf(x, p), 1.0);
  EXPECT_NEAR(ik_sf(x, p) / 2e-20, 1.0, 1e-12);
}

TEST(IkCdf, KeepsRelativePrecisionNearTheOrigin) {
  // F(x) ~ (alpha x)^beta for small x.
  const IKParams p(2.0, 3.0);
  const double x = 1e-12;
  EXPECT_NEAR(ik_cdf(x, p) / std::pow(2e-12, 3.0), 1.0, 1e-9);
}

TEST(IkPdf, ClosedFormPoints) {
  EXPECT_NEAR(ik_pdf(1.0, IKParams(1, 1)).value, 0.25, 1e-15);
  EXPECT_EQ(ik_pdf(0.0, IKParams(2, 1)).value, 2.0);
  EXPECT_NEAR(ik_pdf(1.0, IKParams(2, 3)).value, 0.421875, 1e-15);
}

TEST(IkPdf, BoundaryValuesAtTheOrigin) {
  const auto d = ik_pdf(0.0, IKParams(2.0, 0.5));
  EXPECT_TRUE(d.boundary_infinite);
  EXPECT_EQ(d.value, std::numeric_limits<double>::infinity());
  EXPECT_FALSE(ik_pdf(0.0, IKParams(2.0, 1.0)).boundary_infinite);
  EXPECT_EQ(ik_pdf(0.0, IKParams(2.0, 3.0)).value, 0.0);
  // Near but not at the origin the density is large and finite.
  const auto near = ik_pdf(1e-200, IKParams(2.0, 0.5));
  EXPECT_FALSE(near.boundary_infinite);
  EXPECT_TRUE(std::isfinite(near.value));
}

TEST(IkReversedHazard, ClosedFormPoints) {
  EXPECT_NEAR(ik_reversed_hazard(1.0, IKParams(1, 1)), 0.5, 1e-15);
  EXPECT_NEAR(ik_reversed_hazard(3.0, IKParams(1, 1)), 1.0 / 12.0, 1e-15);
  EXPECT_NEAR(ik_reversed_hazard(2.0, IKParams(2, 5)),
              0.41666666666666666667, 1e-15);
  EXPECT_THROW(ik_reversed_hazard(0.0, IKParams(1, 1)), DomainError);
}

TEST(IkReversedHazard, DecreasesToZero) {
  const IKParams p(1.5, 0.7);
  double prev = INFINITY;
  for (double x = 1e-3; x < 1e6; x *= 1.7) {
    const double r = ik_reversed_hazard(x, p);
    EXPECT_GT(r, 0.0);
    EXPECT_LT(r, prev);
    prev = r;
  }
  EXPECT_LT(prev, 1e-8);
}

TEST(IkQuantile, ClosedFormPoints) {
  EXPECT_NEAR(ik_quantile(0.5, IKParams(1, 1)), 1.0, 1e-14);
  EXPECT_NEAR(ik_quantile(0.75, IKParams(1, 1)), 3.0, 1e-14);
  // Bisection on the cdf at 40 digits.
  EXPECT_NEAR(ik_quantile(0.9, IKParams(3, 0.5)), 0.73946408548949514214,
              1e-14);
  EXPECT_THROW(ik_quantile(0.0, IKParams(1, 1)), DomainError);
  EXPECT_THROW(ik_quantile(1.0, IKParams(1, 1)), DomainError);
}

TEST(IkQuantile, RoundTripsOnTheProbabilityGrid) {
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const IKParams p(rng.log_uniform(0.1, 10), rng.log_uniform(0.1, 10));
    for (int i = 1; i <= 999; ++i) {
      const double u = i / 1000.0;
      ASSERT_NEAR(ik_cdf(ik_quantile(u, p), p), u, 1e-10)
          << "alpha=" << p.alpha() << " beta=" << p.beta() << " u=" << u;
    }
  }
}

TEST(IkCdf, MonotoneInX) {
  Rng rng(12);
  for (int k = 0; k < 100; ++k) {
    const IKParams p(rng.log_uniform(0.1, 10), rng.log_uniform(0.1, 10));
    double prev = 0.0;
    for (double x = 1e-6; x < 1e6; x *= 1.3) {
      const double c = ik_cdf(x, p);
      ASSERT_GE(c, prev);
      prev = c;
    }
  }
}

TEST(IkPdf, IntegratesToOneBetweenExtremeQuantiles) {
  // Simpson in t = log x on [Q(1e-10), Q(1 - 1e-10)], integrand x f(x);
  // the excluded tails carry 2e-10 of mass.
  Rng rng(13);
  for (int k = 0; k < 20; ++k) {
    const IKParams p(rng.log_uniform(0.3, 5), rng.log_uniform(0.3, 5));
    const double t0 = std::log(ik_quantile(1e-10, p));
    const double t1 = std::log(ik_quantile(1.0 - 1e-10, p));
    const int cells = 20000;
    const double h = (t1 - t0) / cells;
    auto g = [&](double t) {
      const double x = std::exp(t);
      return x * ik_pdf(x, p).value;
    };
    double total = g(t0) + g(t1);
    for (int i = 1; i < cells; ++i) total += (i % 2 ? 4.0 : 2.0) * g(t0 + i * h);
    total *= h / 3.0;
    EXPECT_NEAR(total, 1.0 - 2e-10, 1e-9) << p.alpha() << " " << p.beta();
  }
}

TEST(IkPdf, IntegratesToOneViaQuantileSubstitution) {
  Rng rng(17);
  for (int k = 0; k < 100; ++k) {
    const IKParams p(rng.log_uniform(0.1, 10), rng.log_uniform(0.1, 10));
    EXPECT_NEAR(testing::mass_by_quantile_substitution(p), 1.0, 1e-8)
        << p.alpha() << " " << p.beta();
  }
}

TEST(IkPdf, MatchesCentralDifferenceOfCdf) {
  Rng rng(14);
  const double eps3 = std::cbrt(std::numeric_limits<double>::epsilon());
  for (int k = 0; k < 50; ++k) {
    const IKParams p(rng.log_uniform(0.2, 8), rng.log_uniform(0.2, 8));
    const double x = ik_quantile(rng.uniform(0.02, 0.98), p);
    const double h = x * eps3;
    const double fd = (ik_cdf(x + h, p) - ik_cdf(x - h, p)) / (2 * h);
    const double f = ik_pdf(x, p).value;
    EXPECT_LT(std::abs(fd - f) / f, 1e-6) << x;
  }
}

// eta(x; alpha, beta) = 1 - (1 - (1+x)^-alpha)^beta is the component sf.
// d2 eta / d alpha2 = beta L^2 s (1-s)^(beta-2) (1 - beta s), s = (1+x)^-alpha,
// so convexity in alpha is guaranteed only when beta <= 1.
TEST(Eta, DecreasingInAlpha) {
  Rng rng(15);
  for (int k = 0; k < 100; ++k) {
    const double x = rng.log_uniform(1e-2, 1e2);
    const double beta = rng.log_uniform(0.1, 10);
    double prev = 2.0;
    for (double a = 0.1; a < 10.0; a += 0.01) {
      const double e = ik_sf(x, IKParams(a, beta));
      ASSERT_LE(e, prev + 1e-15);
      prev = e;
    }
  }
}

TEST(Eta, ConvexInAlphaForBetaAtMostOne) {
  Rng rng(18);
  const double step = 0.01;
  for (int k = 0; k < 100; ++k) {
    const double x = rng.log_uniform(1e-2, 1e2);
    const double beta = rng.uniform(0.05, 1.0);
    for (double a = 0.1; a < 10.0; a += step) {
      const double e0 = ik_sf(x, IKParams(a, beta));
      const double e1 = ik_sf(x, IKParams(a + step, beta));
      const double e2 = ik_sf(x, IKParams(a + 2 * step, beta));
      ASSERT_GE(e2 - 2 * e1 + e0, -1e-12) << "x=" << x << " beta=" << beta;
    }
  }
}

TEST(Eta, CurvatureInAlphaFollowsOneMinusBetaS) {
  Rng rng(19);
  const double step = 1e-3;
  int concave = 0;
  for (int k = 0; k < 100; ++k) {
    const double x = rng.log_uniform(1e-2, 1e2);
    const double beta = rng.log_uniform(0.1, 10);
    for (double a = 0.1; a < 10.0; a *= 1.1) {
      const double bs = beta * std::pow(1 + x, -(a + step));
      if (std::abs(1 - bs) < 0.05) continue;  // near the inflection
      const double d2 = ik_sf(x, IKParams(a + 2 * step, beta)) -
                        2 * ik_sf(x, IKParams(a + step, beta)) +
                        ik_sf(x, IKParams(a, beta));
      if (std::abs(d2) < 1e-13) continue;  // below rounding of the stencil
      ASSERT_EQ(d2 > 0, bs < 1) << "x=" << x << " beta=" << beta << " a=" << a;
      concave += bs > 1;
    }
  }
  EXPECT_GT(concave, 0);
}

TEST(Eta, IncreasingInBeta) {
  Rng rng(16);
  for (int k = 0; k < 100; ++k) {
    const double x = rng.log_uniform(1e-2, 1e2);
    const double alpha = rng.log_uniform(0.1, 10);
    double prev = -1.0;
    for (double b = 0.1; b < 10.0; b += 0.01) {
      const double e = ik_sf(x, IKParams(alpha, b));
      ASSERT_GE(e, prev - 1e-15);
      prev = e;
    }
  }
}

}  // namespace
}  // namespace ikmix
