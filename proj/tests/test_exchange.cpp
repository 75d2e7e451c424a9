#include <gtest/gtest.h>

#include <cmath>

#include "bpm/error.hpp"
#include "bpm/exchange.hpp"

namespace bpm::exchange {
namespace {

TEST(Exchange, ReferenceValuesAlternate) {
  const int m = 20;
  const std::vector<int> ref{0, 3, 7, 12, 19};
  const auto q = reference_values(m, ref, kernels::Exec::Serial);
  ASSERT_EQ(q.size(), static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < ref.size(); ++i)
    EXPECT_NEAR(std::fabs(static_cast<double>(q[static_cast<std::size_t>(ref[i])])), 1.0, 1e-12);
  for (std::size_t i = 0; i + 1 < ref.size(); ++i)
    EXPECT_LT(q[static_cast<std::size_t>(ref[i])] * q[static_cast<std::size_t>(ref[i + 1])], 0);
}

TEST(Exchange, SerialMatchesParallel) {
  for (int m : {64, 1024}) {
    const auto r = exterior_extremum(m, m / 8);
    EXPECT_EQ(reference_values(m, r.reference, kernels::Exec::Serial),
              reference_values(m, r.reference, kernels::Exec::Parallel));
  }
}

TEST(Exchange, LongDoubleAgreesWithHighPrecision) {
  const int m = 200;
  const auto r = exterior_extremum(m, 17);
  const auto q = reference_values(m, r.reference, kernels::Exec::Parallel);
  for (int k = 0; k < m; k += 13) {
    const HighFloat h = reference_value_high(m, r.reference, HighFloat(k));
    EXPECT_NEAR(static_cast<double>(q[static_cast<std::size_t>(k)]), h.convert_to<double>(), 1e-10) << k;
  }
  const HighFloat lhigh = log(exterior_value_high(m, r.reference));
  EXPECT_NEAR(static_cast<double>(log_exterior_value(m, r.reference)), lhigh.convert_to<double>(), 1e-10);
}

TEST(Exchange, BoundsBracketAndConverge) {
  for (int m : {4, 16, 100, 512}) {
    for (int d : {0, 1, m / 4, m / 2, m - 1}) {
      const auto r = exterior_extremum(m, d);
      EXPECT_TRUE(r.converged) << m << " " << d;
      EXPECT_LE(r.log_lower, r.log_upper + 1e-15L);
      EXPECT_LT(r.log_upper - r.log_lower, 1e-9L) << m << " " << d;
      EXPECT_EQ(r.reference.size(), static_cast<std::size_t>(d + 1));
    }
  }
}

// Closed forms: constant gives 1; at d = m-1 the extremal polynomial
// interpolates (-1)^(m-1-k) on all of 0..m-1 and Q(m) = 2^m - 1.
TEST(Exchange, KnownValues) {
  EXPECT_NEAR(static_cast<double>(exterior_extremum(10, 0).log_upper), 0.0, 1e-15);
  for (int m : {1, 2, 5, 12}) {
    const auto r = exterior_extremum(m, m - 1);
    EXPECT_NEAR(static_cast<double>(r.log_upper), std::log(std::pow(2.0, m) - 1.0), 1e-12) << m;
  }
  // Degree 1 on 0..m-1: the line through (0,-1) and (m-1,1).
  const auto r = exterior_extremum(7, 1);
  EXPECT_NEAR(static_cast<double>(r.log_upper), std::log(-1.0 + 2.0 * 7 / 6), 1e-12);
}

TEST(Exchange, CertificationAgrees) {
  const int m = 300;
  const auto r = exterior_extremum(m, 20);
  const auto c = certify_reference(m, r.reference, kernels::Exec::Parallel);
  EXPECT_NEAR(c.grid_max.convert_to<double>(), 1.0, 1e-9);
  const double ratio = static_cast<double>(log(c.exterior / c.grid_max).convert_to<long double>());
  EXPECT_NEAR(ratio, static_cast<double>(r.log_lower), 1e-9);
}

TEST(Exchange, RejectsBadDegree) {
  EXPECT_THROW(exterior_extremum(5, 5), bpm::Error);
  EXPECT_THROW(exterior_extremum(5, -1), bpm::Error);
}

}  // namespace
}  // namespace bpm::exchange
