#pragma once
//
// Gamma-family primitives in double precision.
//
// log_gamma uses the Lanczos approximation with g = 607/128 and fifteen
// coefficients (Godfrey's set, as tabulated in Numerical Recipes, 3rd ed.):
//
//   ln Gamma(z) = (z + 1/2) ln(z + g + 1/2) - (z + g + 1/2)
//               + ln( sqrt(2 pi) * [c0 + sum_k c_k / (z + k)] / z )
//
// whose relative error is below 1e-15 for z > 0.  Negative arguments go
// through the reflection formula.  Digamma and trigamma shift the argument
// upward with the recurrence until z >= 10 and then use the asymptotic
// Bernoulli expansion truncated after B_20, which leaves a remainder below
// 3e-17 at z = 10.
//

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace struvekit {

inline constexpr double euler_gamma = std::numbers::egamma;

namespace detail {

inline constexpr double lanczos_g_half = 671.0 / 128.0; // g + 1/2
inline constexpr double lanczos_c0 = 0.999999999999997092;
inline constexpr std::array<double, 14> lanczos_coeffs = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5,
};

inline bool is_nonpositive_integer(double z) { return z <= 0.0 && z == std::floor(z); }

// ln Gamma(z), z > 0.
inline double lanczos_log_gamma(double z) {
    double tmp = z + lanczos_g_half;
    tmp = (z + 0.5) * std::log(tmp) - tmp;
    double ser = lanczos_c0;
    double y = z;
    for (double c : lanczos_coeffs) ser += c / ++y;
    return tmp + std::log(std::sqrt(2.0 * std::numbers::pi) * ser / z);
}

// sin(pi z) with exact zeros at the integers.
inline double sin_pi(double z) {
    double r = std::fmod(z, 2.0); // (-2, 2)
    if (r < 0.0) r += 2.0;        // [0, 2)
    if (r == 0.0 || r == 1.0) return 0.0;
    if (r > 1.0) return -std::sin(std::numbers::pi * (r - 1.0));
    if (r > 0.5) return std::sin(std::numbers::pi * (1.0 - r));
    return std::sin(std::numbers::pi * r);
}

// Bernoulli numbers B_2 ... B_20.
inline constexpr std::array<double, 10> bernoulli_even = {
    1.0 / 6.0,      -1.0 / 30.0,     1.0 / 42.0,        -1.0 / 30.0,     5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0,      -3617.0 / 510.0,   43867.0 / 798.0, -174611.0 / 330.0,
};

inline constexpr double asymptotic_shift = 10.0;

} // namespace detail

/// Gamma(z) for real z that is not a non-positive integer.
inline double gamma(double z) {
    if (std::isnan(z)) return z;
    if (detail::is_nonpositive_integer(z))
        throw PoleError("gamma: pole at non-positive integer z = " + std::to_string(z));
    if (z < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        return std::numbers::pi / (detail::sin_pi(z) * std::exp(detail::lanczos_log_gamma(1.0 - z)));
    }
    if (z == 1.0 || z == 2.0) return 1.0;
    return std::exp(detail::lanczos_log_gamma(z));
}

/// ln Gamma(z) for z > 0.
inline double log_gamma(double z) {
    if (!(z > 0.0)) throw DomainError("log_gamma: requires z > 0, got " + std::to_string(z));
    if (z == 1.0 || z == 2.0) return 0.0;
    if (z < 0.5) return detail::lanczos_log_gamma(z + 1.0) - std::log(z);
    return detail::lanczos_log_gamma(z);
}

/// Gamma(a) / Gamma(b) for a, b > 0, evaluated in log space.
inline double gamma_ratio(double a, double b) { return std::exp(log_gamma(a) - log_gamma(b)); }

/// psi(z) = Gamma'(z) / Gamma(z), z > 0.
inline double digamma(double z) {
    if (!(z > 0.0)) throw DomainError("digamma: requires z > 0, got " + std::to_string(z));
    double shift = 0.0;
    while (z < detail::asymptotic_shift) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    const double inv2 = 1.0 / (z * z);
    double pow = inv2;
    double tail = 0.0;
    for (std::size_t k = 0; k < detail::bernoulli_even.size(); ++k) {
        tail += detail::bernoulli_even[k] / (2.0 * static_cast<double>(k + 1)) * pow;
        pow *= inv2;
    }
    return shift + std::log(z) - 0.5 / z - tail;
}

/// psi'(z), z > 0.
inline double trigamma(double z) {
    if (!(z > 0.0)) throw DomainError("trigamma: requires z > 0, got " + std::to_string(z));
    double shift = 0.0;
    while (z < detail::asymptotic_shift) {
        shift += 1.0 / (z * z);
        z += 1.0;
    }
    const double inv = 1.0 / z;
    const double inv2 = inv * inv;
    double pow = inv2 * inv; // z^{-3}
    double tail = 0.0;
    for (double b : detail::bernoulli_even) {
        tail += b * pow;
        pow *= inv2;
    }
    return shift + inv + 0.5 * inv2 + tail;
}

// Auxiliary functions on (-1, inf) from the gamma-ratio bounds:
//   f(nu) = (sqrt(pi)/2) Gamma(nu+3/2)/Gamma(nu+2)
//   g(nu) = sqrt(pi/2) sqrt(nu+1) Gamma(nu+3/2)/Gamma(nu+2)
//   h(nu) = g'(nu)/g(nu) = psi(nu+3/2) - psi(nu+2) + 1/(2(nu+1))

inline void require_above_minus_one(double nu, const char* who) {
    if (!(nu > -1.0))
        throw DomainError(std::string(who) + ": requires nu > -1, got " + std::to_string(nu));
}

inline double th4_f(double nu) {
    require_above_minus_one(nu, "th4_f");
    return 0.5 * std::sqrt(std::numbers::pi) * gamma_ratio(nu + 1.5, nu + 2.0);
}

inline double th4_g(double nu) {
    require_above_minus_one(nu, "th4_g");
    return std::sqrt(0.5 * std::numbers::pi * (nu + 1.0)) * gamma_ratio(nu + 1.5, nu + 2.0);
}

inline double th4_h(double nu) {
    require_above_minus_one(nu, "th4_h");
    return digamma(nu + 1.5) - digamma(nu + 2.0) + 0.5 / (nu + 1.0);
}

/// h'(nu) = psi'(nu+3/2) - psi'(nu+2) - 1/(2(nu+1)^2).
inline double th4_h_prime(double nu) {
    require_above_minus_one(nu, "th4_h_prime");
    return trigamma(nu + 1.5) - trigamma(nu + 2.0) - 0.5 / ((nu + 1.0) * (nu + 1.0));
}

} // namespace struvekit
