#pragma once
//
// Fox-Wright series
//
//   pPsi_q[(a_l, alpha_l); (b_j, beta_j); z]
//     = sum_n prod_l Gamma(a_l + alpha_l n) / prod_j Gamma(b_j + beta_j n) * z^n / n!,
//
// convergent for every z when eps = 1 + sum beta_j - sum alpha_l > 0, and the
// instance calM_nu(x) = Gamma(nu+1/2)/sqrt(pi) * 1Psi1[(1/2,1/2); (nu+1,1/2); -x].
//

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "detail/wide_real.hpp"
#include "errors.hpp"
#include "gamma.hpp"
#include "types.hpp"

namespace struvekit {

/// Condition number sum|t| / |sum t| above which an alternating sum is refused.
inline constexpr double fox_wright_condition_limit = 1e8;

struct FoxWrightPair {
    double a;
    double alpha;
};

struct FoxWrightParams {
    std::vector<FoxWrightPair> upper;
    std::vector<FoxWrightPair> lower;

    /// 1 + sum beta_j - sum alpha_l.
    double epsilon() const {
        double e = 1.0;
        for (const auto& l : lower) e += l.alpha;
        for (const auto& u : upper) e -= u.alpha;
        return e;
    }
};

/// Parameters of the 1Psi1 representation of calM_nu.
inline FoxWrightParams struve_fox_wright_params(double nu) { return {{{0.5, 0.5}}, {{nu + 1.0, 0.5}}}; }

/// A real number as sign * exp(log_abs); sign 0 encodes an exact zero.
struct SignedLog {
    double log_abs = 0.0;
    int sign = 1;

    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

namespace detail {

// ln|Gamma(z)| and sign of Gamma(z) for z not a non-positive integer.
inline SignedLog log_abs_gamma(double z) {
    if (z > 0.0) return {log_gamma(z), 1};
    const double s = sin_pi(z);
    return {std::log(std::numbers::pi) - std::log(std::fabs(s)) - log_gamma(1.0 - z), s > 0.0 ? 1 : -1};
}

// prod Gamma(a_l + alpha_l m) / prod Gamma(b_j + beta_j m); a lower-parameter
// pole makes the coefficient vanish.
inline SignedLog fox_wright_coefficient(const FoxWrightParams& params, int m) {
    SignedLog r{0.0, 1};
    for (const auto& u : params.upper) {
        const double z = u.a + u.alpha * m;
        if (is_nonpositive_integer(z))
            throw PoleError("psi_m: upper parameter Gamma(" + std::to_string(z) + ") at a pole");
        const SignedLog g = log_abs_gamma(z);
        r.log_abs += g.log_abs;
        r.sign *= g.sign;
    }
    for (const auto& l : params.lower) {
        const double z = l.a + l.alpha * m;
        if (is_nonpositive_integer(z)) return {0.0, 0};
        const SignedLog g = log_abs_gamma(z);
        r.log_abs -= g.log_abs;
        r.sign *= g.sign;
    }
    return r;
}

} // namespace detail

/// psi_m = prod Gamma(a_l + alpha_l m) / prod Gamma(b_j + beta_j m), m >= 0.
inline SignedLog psi_m_log(const FoxWrightParams& params, int m) {
    if (m < 0) throw DomainError("psi_m: requires m >= 0");
    return detail::fox_wright_coefficient(params, m);
}

inline double psi_m(const FoxWrightParams& params, int m) { return psi_m_log(params, m).value(); }

/// pPsi_q(z) by direct summation, eps > 0.
inline FuncValue fox_wright_eval(const FoxWrightParams& params, double z, const SeriesConfig& cfg = {}) {
    cfg.validate();
    const double eps_conv = params.epsilon();
    if (!(eps_conv > 0.0))
        throw ConvergenceDomainError("fox_wright_eval: convergence index eps = " + std::to_string(eps_conv) +
                                     " must be positive");
    if (z == 0.0) return {psi_m(params, 0), 0.0, Method::FoxWright};

    const double log_abs_z = std::log(std::fabs(z));
    const int z_sign = z < 0.0 ? -1 : 1;
    detail::CompensatedSum<double> acc;
    double abs_sum = 0.0;
    double round_err = 0.0; // sum of |t_n| times the magnitude of its log
    double prev_abs = std::numeric_limits<double>::infinity();
    int small_run = 0;

    for (int n = 0; n < cfg.max_terms; ++n) {
        const SignedLog c = detail::fox_wright_coefficient(params, n);
        double t = 0.0;
        if (c.sign != 0) {
            const double lf = std::lgamma(n + 1.0);
            const double lt = c.log_abs + n * log_abs_z - lf;
            t = c.sign * ((n % 2 == 1 && z_sign < 0) ? -1.0 : 1.0) * std::exp(lt);
            // exp() turns the absolute rounding of each log-gamma into relative error.
            round_err += std::fabs(t) * (4.0 + std::fabs(c.log_abs) + std::fabs(n * log_abs_z) + lf);
        }
        acc.add(t);
        abs_sum += std::fabs(t);
        const double sum = acc.value();
        const double at = std::fabs(t);
        const bool small = at <= cfg.rel_tol * std::fabs(sum) && at <= prev_abs;
        small_run = small ? small_run + 1 : 0;
        prev_abs = at;
        if (small_run >= 2) {
            const double cond = sum == 0.0 ? std::numeric_limits<double>::infinity() : abs_sum / std::fabs(sum);
            if (cond > fox_wright_condition_limit)
                throw CancellationError("fox_wright_eval: condition number " + std::to_string(cond) +
                                        " exceeds 1e8 at z = " + std::to_string(z));
            const double err = 2.0 * at + std::numeric_limits<double>::epsilon() * (4.0 * abs_sum + round_err);
            return {sum, err, Method::FoxWright};
        }
    }
    throw NonConvergence("fox_wright_eval: no convergence within " + std::to_string(cfg.max_terms) +
                         " terms at z = " + std::to_string(z));
}

/// calM_nu(x) through the 1Psi1 representation, nu > -1/2, x >= 0.
inline FuncValue calm_via_fox_wright(const EvalPoint& p, const SeriesConfig& cfg = {}) {
    if (!(p.nu > -0.5)) throw DomainError("calm_via_fox_wright: requires nu > -1/2");
    if (!(p.x >= 0.0)) throw DomainError("calm_via_fox_wright: requires x >= 0");
    const double scale = std::exp(log_gamma(p.nu + 0.5)) * std::numbers::inv_sqrtpi;
    const FuncValue s = fox_wright_eval(struve_fox_wright_params(p.nu), -p.x, cfg);
    const double v = scale * s.value;
    return {v, scale * s.abs_err + 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(v), Method::FoxWright};
}

/// The two coefficient conditions psi_1 > psi_2 and psi_1^2 < psi_0 psi_2,
/// each with a relative margin (positive when the condition holds).
struct Fx4Result {
    bool psi1_above_psi2;
    bool psi1_sq_below_psi0_psi2;
    double margin_first;
    double margin_second;
};

inline Fx4Result fx4_conditions(const FoxWrightParams& params) {
    const SignedLog p0 = psi_m_log(params, 0);
    const SignedLog p1 = psi_m_log(params, 1);
    const SignedLog p2 = psi_m_log(params, 2);
    double m1;
    double m2;
    if (p0.sign > 0 && p1.sign > 0 && p2.sign > 0) {
        // Log space keeps both ratios finite when the psi_m underflow.
        m1 = -std::expm1(p2.log_abs - p1.log_abs);
        m2 = -std::expm1(2.0 * p1.log_abs - p0.log_abs - p2.log_abs);
    } else {
        const double v0 = p0.value();
        const double v1 = p1.value();
        const double v2 = p2.value();
        const double s1 = std::max({std::fabs(v1), std::fabs(v2), 1e-300});
        m1 = (v1 - v2) / s1;
        const double s2 = std::max({v1 * v1, std::fabs(v0 * v2), 1e-300});
        m2 = (v0 * v2 - v1 * v1) / s2;
    }
    return {m1 > 0.0, m2 > 0.0, m1, m2};
}

struct Bounds {
    double lower;
    double upper;
};

/// Two-sided bound on calM_nu(x) for nu > -1/2, x >= 0:
///   R exp(-Gamma(nu+1) x / (sqrt(pi) Gamma(nu+3/2))) <= calM_nu(x)
///     <= R - (1 - e^{-x}) / (sqrt(pi) (nu + 1/2)),   R = Gamma(nu+1/2)/Gamma(nu+1).
inline Bounds theorem4_bounds(const EvalPoint& p) {
    if (!(p.nu > -0.5)) throw DomainError("theorem4_bounds: requires nu > -1/2");
    if (!(p.x >= 0.0)) throw DomainError("theorem4_bounds: requires x >= 0");
    const double r = gamma_ratio(p.nu + 0.5, p.nu + 1.0);
    const double rate = gamma_ratio(p.nu + 1.0, p.nu + 1.5) * std::numbers::inv_sqrtpi;
    const double lower = r * std::exp(-rate * p.x);
    const double upper = r + std::expm1(-p.x) * std::numbers::inv_sqrtpi / (p.nu + 0.5);
    return {lower, upper};
}

} // namespace struvekit
