#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include <struvekit/closed_forms.hpp>
#include <struvekit/quadrature.hpp>
#include <struvekit/series.hpp>

#include "oracle.hpp"
#include "reference_values.hpp"

namespace sk = struvekit;

namespace {

const double sqrt_2_over_pi = std::sqrt(2.0 / std::numbers::pi);

std::vector<double> grid(double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
    return v;
}

} // namespace

TEST(BesselI, Examples) {
    EXPECT_DOUBLE_EQ(sk::bessel_i({0.0, 0.0}).value, 1.0);
    EXPECT_NEAR(sk::bessel_i({-0.5, 1.0}).value, sqrt_2_over_pi * std::cosh(1.0), 1e-15);
    const auto v = sk::bessel_i({2.0, 3.0});
    EXPECT_NEAR(v.value, ref::bessel_i_2_3, 1e-14 * ref::bessel_i_2_3);
    EXPECT_LE(std::fabs(v.value - ref::bessel_i_2_3), v.abs_err + 1e-16 * ref::bessel_i_2_3);
    EXPECT_EQ(v.method, sk::Method::Series);
    EXPECT_THROW(sk::bessel_i({-1.0, 1.0}), sk::DomainError);
}

TEST(StruveL, Examples) {
    EXPECT_DOUBLE_EQ(sk::struve_l({0.0, 0.0}).value, 0.0);
    EXPECT_NEAR(sk::struve_l({0.5, 1.0}).value, sqrt_2_over_pi * (std::cosh(1.0) - 1.0), 1e-15);
    EXPECT_NEAR(sk::struve_l({1.0, 2.0}).value, ref::struve_l_1_2, 1e-14 * ref::struve_l_1_2);
    EXPECT_THROW(sk::struve_l({-1.5, 1.0}), sk::DomainError);
}

TEST(SeriesConfig, Validation) {
    EXPECT_THROW(sk::struve_m_series({1.0, 1.0}, {0.0, 1000}), sk::ConfigError);
    EXPECT_THROW(sk::struve_m_series({1.0, 1.0}, {1e-3, 1000}), sk::ConfigError);
    EXPECT_THROW(sk::struve_m_series({1.0, 1.0}, {1e-17, 10}), sk::ConfigError);
}

TEST(SeriesConfig, TooFewTermsIsNonConvergence) {
    EXPECT_THROW(sk::bessel_i({0.0, 20.0}, {1e-17, 30}), sk::NonConvergence);
}

TEST(StruveMSeries, Examples) {
    EXPECT_DOUBLE_EQ(sk::struve_m_series({0.0, 0.0}).value, -1.0);
    EXPECT_NEAR(sk::struve_m_series({-0.5, 1.0}).value, -sqrt_2_over_pi * std::exp(-1.0), 1e-16);
    const auto v = sk::struve_m_series({1.0, 0.5});
    EXPECT_NEAR(v.value, ref::struve_m_1_0_5, 1e-15);
    EXPECT_LE(std::fabs(v.value - ref::struve_m_1_0_5), v.abs_err);
}

TEST(StruveMSeries, NearMinusHalfAgreesWithDirectSum) {
    for (double nu : {-0.999, -0.75, -0.499, -0.45})
        for (double x : {0.01, 1.0, 6.0, 15.0}) {
            const auto v = sk::struve_m_series({nu, x});
            const double o = oracle::struve_m_direct(nu, x);
            EXPECT_LE(std::fabs(v.value - o), v.abs_err + 1e-16 * std::fabs(o)) << nu << ", " << x;
            EXPECT_LT(oracle::rel_diff(v.value, o), 1e-12) << nu << ", " << x;
        }
    EXPECT_NEAR(sk::struve_m_series({-0.499, 1.0}).value, ref::m_m0_499_1, 1e-15);
}

TEST(StruveMSeries, RefusesBeyondCancellationLimit) {
    EXPECT_THROW(sk::struve_m_series({3.0, 50.0}), sk::CancellationError);
    EXPECT_THROW(sk::struve_m_series({3.0, sk::x_cancel_max * 1.01}), sk::CancellationError);
    EXPECT_NO_THROW(sk::struve_m_series({3.0, sk::x_cancel_max}));
}

TEST(StruveMSeries, DomainErrors) {
    EXPECT_THROW(sk::struve_m_series({-1.0, 1.0}), sk::DomainError);
    EXPECT_THROW(sk::struve_m_series({-0.4, 0.0}), sk::DomainError);
    EXPECT_THROW(sk::struve_m_series({0.0, -1.0}), sk::DomainError);
}

TEST(StruveMSeries, MergedEqualsSeparateSums) {
    for (double nu : grid(-0.4, 5.0, 19))
        for (double x : grid(0.0, 5.0, 21)) {
            if (x == 0.0 && nu < 0.0) continue; // I_nu(0) is infinite for nu < 0
            const auto m = sk::struve_m_series({nu, x});
            const auto l = sk::struve_l({nu, x});
            const auto i = sk::bessel_i({nu, x});
            const double sep = l.value - i.value;
            const double rounding = std::numeric_limits<double>::epsilon() * std::max(l.value, i.value);
            EXPECT_LE(std::fabs(m.value - sep), m.abs_err + l.abs_err + i.abs_err + rounding)
                << "nu = " << nu << ", x = " << x;
        }
}

TEST(StruveMSeries, NegativeForPositiveX) {
    for (double nu : grid(-0.5, 10.0, 22))
        for (double x : grid(0.05, 25.0, 40)) EXPECT_LT(sk::struve_m_series({nu, x}).value, 0.0) << nu << ", " << x;
}

TEST(StruveMSeries, AgreesWithQuadrature) {
    for (double nu : grid(-0.44, 8.0, 17))
        for (double x : grid(0.1, 5.0, 15)) {
            const auto s = sk::struve_m_series({nu, x});
            const auto q = sk::m_from_quadrature({nu, x});
            EXPECT_LE(std::fabs(s.value - q.value), std::max(1e-10, 3.0 * (s.abs_err + q.abs_err)))
                << "nu = " << nu << ", x = " << x;
        }
}

TEST(StruveMSeries, ClosedFormsAtHalfOrders) {
    for (double x : grid(0.01, 20.0, 60)) {
        const auto cf = sk::closed_forms(x);
        EXPECT_LT(oracle::rel_diff(sk::struve_m_series({-0.5, x}).value, cf.m_neg_half), 1e-12) << x;
        EXPECT_LT(oracle::rel_diff(sk::struve_m_series({0.5, x}).value, cf.m_pos_half), 1e-12) << x;
    }
}

TEST(Normalization, Examples) {
    // x -> 0+ limit of the normalized function at nu = 0 is sqrt(pi).
    const double x = 1e-12;
    EXPECT_NEAR(sk::calm_from_m({0.0, x}, sk::struve_m_series({0.0, x})).value, std::sqrt(std::numbers::pi), 1e-11);
    const auto v = sk::calm_from_m({0.5, 1.0}, sk::struve_m_series({0.5, 1.0}));
    EXPECT_NEAR(v.value, 2.0 / std::sqrt(std::numbers::pi) * (1.0 - std::exp(-1.0)), 1e-15);
}

TEST(Normalization, RoundTrip) {
    const sk::EvalPoint p{1.0, 3.0};
    const auto m = sk::struve_m_series(p);
    const auto back = sk::m_from_calm(p, sk::calm_from_m(p, m));
    EXPECT_LT(oracle::rel_diff(back.value, m.value), 1e-13);
    for (double nu : grid(-0.45, 30.0, 12))
        for (double x : {1e-3, 0.2, 4.0, 30.0}) {
            const sk::FuncValue f{-1.2345, 0.0, sk::Method::Series};
            EXPECT_LT(oracle::rel_diff(sk::m_from_calm({nu, x}, sk::calm_from_m({nu, x}, f)).value, f.value), 1e-13);
        }
}

TEST(Normalization, DomainErrors) {
    const sk::FuncValue f{-1.0, 0.0, sk::Method::Series};
    EXPECT_THROW(sk::calm_from_m({1.0, 0.0}, f), sk::DomainError);
    EXPECT_THROW(sk::calm_from_m({-0.5, 1.0}, f), sk::DomainError);
}
