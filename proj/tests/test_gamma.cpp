#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include <struvekit/gamma.hpp>

#include "oracle.hpp"
#include "reference_values.hpp"

namespace sk = struvekit;

namespace {

const double sqrt_pi = std::sqrt(std::numbers::pi);

std::vector<double> grid(double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
    return v;
}

} // namespace

TEST(Gamma, HalfIntegerValues) {
    EXPECT_NEAR(sk::gamma(0.5), sqrt_pi, 1e-15);
    EXPECT_NEAR(sk::gamma(4.5), ref::gamma_4_5, 1e-13 * ref::gamma_4_5);
    EXPECT_DOUBLE_EQ(sk::gamma(1.0), 1.0);
    EXPECT_DOUBLE_EQ(sk::gamma(2.0), 1.0);
}

TEST(Gamma, ReflectionForNegativeArguments) {
    EXPECT_NEAR(sk::gamma(-0.5), -2.0 * sqrt_pi, 1e-13);
    EXPECT_NEAR(sk::gamma(-1.5), 4.0 * sqrt_pi / 3.0, 1e-13);
}

TEST(Gamma, PolesThrow) {
    EXPECT_THROW(sk::gamma(0.0), sk::PoleError);
    EXPECT_THROW(sk::gamma(-3.0), sk::PoleError);
}

TEST(Gamma, LogGammaValuesAndDomain) {
    EXPECT_NEAR(sk::log_gamma(10.25), ref::log_gamma_10_25, 1e-13 * ref::log_gamma_10_25);
    EXPECT_NEAR(sk::log_gamma(200.0), std::lgamma(200.0), 1e-12 * std::lgamma(200.0));
    EXPECT_THROW(sk::log_gamma(0.0), sk::DomainError);
    EXPECT_THROW(sk::log_gamma(-1.5), sk::DomainError);
}

TEST(Gamma, RecurrenceProperty) {
    for (double z : grid(0.1, 40.0, 400))
        EXPECT_LT(oracle::rel_diff(sk::gamma(z + 1.0), z * sk::gamma(z)), 1e-12) << "z = " << z;
}

TEST(Gamma, AgreesWithLibm) {
    for (double z : grid(0.05, 150.0, 300))
        EXPECT_LT(oracle::rel_diff(sk::log_gamma(z), std::lgamma(z)), 1e-13 + 1e-15 / std::fabs(std::lgamma(z)))
            << "z = " << z;
}

TEST(Gamma, RatioStaysFiniteForLargeArguments) {
    const double r = sk::gamma_ratio(500.5, 501.0);
    EXPECT_TRUE(std::isfinite(r));
    EXPECT_NEAR(r, std::exp(std::lgamma(500.5) - std::lgamma(501.0)), 1e-11 * r);
}

TEST(Digamma, Values) {
    EXPECT_NEAR(sk::digamma(1.0), -sk::euler_gamma, 1e-14);
    EXPECT_NEAR(sk::digamma(2.0), 1.0 - sk::euler_gamma, 1e-14);
    EXPECT_NEAR(sk::digamma(3.7), ref::digamma_3_7, 1e-13);
    EXPECT_NEAR(sk::digamma(3.7), oracle::digamma(3.7), 1e-12);
    EXPECT_THROW(sk::digamma(0.0), sk::DomainError);
}

TEST(Digamma, RecurrenceAndMonotonicity) {
    double prev = -INFINITY;
    for (double z : grid(0.01, 50.0, 1000)) {
        EXPECT_NEAR(sk::digamma(z + 1.0), sk::digamma(z) + 1.0 / z, 1e-12 * std::max(1.0, 1.0 / z));
        const double d = sk::digamma(z);
        EXPECT_GT(d, prev) << "z = " << z;
        prev = d;
    }
}

TEST(Trigamma, Values) {
    EXPECT_NEAR(sk::trigamma(1.0), std::numbers::pi * std::numbers::pi / 6.0, 1e-14);
    EXPECT_NEAR(sk::trigamma(2.0), std::numbers::pi * std::numbers::pi / 6.0 - 1.0, 1e-14);
    EXPECT_NEAR(sk::trigamma(5.25), ref::trigamma_5_25, 1e-14);
    EXPECT_NEAR(sk::trigamma(5.25), oracle::trigamma(5.25), 1e-12);
    EXPECT_THROW(sk::trigamma(-2.0), sk::DomainError);
}

TEST(Trigamma, Recurrence) {
    for (double z : grid(0.05, 50.0, 500))
        EXPECT_NEAR(sk::trigamma(z + 1.0), sk::trigamma(z) - 1.0 / (z * z), 1e-12 * std::max(1.0, 1.0 / (z * z)));
}

TEST(Auxiliary, ValuesAtMinusHalf) {
    EXPECT_NEAR(sk::th4_f(-0.5), 1.0, 1e-14);
    EXPECT_NEAR(sk::th4_g(-0.5), 1.0, 1e-14);
    EXPECT_THROW(sk::th4_f(-1.0), sk::DomainError);
    EXPECT_THROW(sk::th4_h(-1.2), sk::DomainError);
}

TEST(Auxiliary, HAtTenIsSmallAndPositive) {
    const double h = sk::th4_h(10.0);
    EXPECT_GT(h, 0.0);
    EXPECT_LT(h, 0.01);
    EXPECT_NEAR(h, ref::th4_h_10, 1e-14);
    EXPECT_NEAR(h, oracle::digamma(11.5) - oracle::digamma(12.0) + 1.0 / 22.0, 1e-12);
}

TEST(Auxiliary, MonotonicityOnGrid) {
    const auto nus = grid(-0.99, 20.0, 300);
    for (std::size_t i = 1; i < nus.size(); ++i) {
        EXPECT_LT(sk::th4_f(nus[i]), sk::th4_f(nus[i - 1])) << "nu = " << nus[i];
        EXPECT_LT(sk::th4_h(nus[i]), sk::th4_h(nus[i - 1])) << "nu = " << nus[i];
        EXPECT_GT(sk::th4_h(nus[i]), 0.0) << "nu = " << nus[i];
        EXPECT_LT(sk::th4_h_prime(nus[i]), 0.0) << "nu = " << nus[i];
    }
}

TEST(Auxiliary, HPrimeMatchesFiniteDifference) {
    for (double nu : {-0.9, -0.5, 0.0, 1.0, 7.5}) {
        const double fd = oracle::central_difference([](double v) { return sk::th4_h(v); }, nu, 1e-6);
        EXPECT_NEAR(sk::th4_h_prime(nu), fd, 1e-7 * std::max(1.0, std::fabs(fd))) << "nu = " << nu;
    }
}

TEST(Auxiliary, GammaRatioBracketOnGrid) {
    for (double nu : grid(-0.49, 20.0, 200)) {
        const double r = sk::gamma_ratio(nu + 1.5, nu + 2.0);
        EXPECT_LT(r, 2.0 / sqrt_pi) << "nu = " << nu;
        EXPECT_GT(r, std::sqrt(2.0 / (std::numbers::pi * (nu + 1.0)))) << "nu = " << nu;
    }
}
