#pragma once
//
// Quadrature route for the normalized function
//
//   calM_nu(x) = (2/sqrt(pi)) int_0^1 (1-t^2)^{nu-1/2} e^{-xt} dt,   nu > -1/2,
//
// its derivatives in x and nu, the values of M_nu and M'_nu that follow from
// calM_nu = -2^nu Gamma(nu+1/2) x^{-nu} M_nu, and the double integral for the
// mixed Turanian I_{nu+1} L_{nu-1} + I_{nu-1} L_{nu+1} - 2 I_nu L_nu.
//

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "detail/tanh_sinh.hpp"
#include "errors.hpp"
#include "gamma.hpp"
#include "series.hpp"
#include "types.hpp"

namespace struvekit {

inline constexpr int max_x_derivative = 10;
inline constexpr int max_nu_derivative = 6;

namespace detail {

inline constexpr double two_over_sqrt_pi = 2.0 * std::numbers::inv_sqrtpi;

inline void require_integral_domain(const EvalPoint& p, const char* who) {
    if (!(p.nu > -0.5))
        throw DomainError(std::string(who) + ": requires nu > -1/2 (integral representation), got nu = " +
                          std::to_string(p.nu));
    if (!(p.x >= 0.0)) throw DomainError(std::string(who) + ": requires x >= 0");
}

inline double int_pow(double base, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

inline FuncValue to_func_value(const QuadResult& r, double factor) {
    return {factor * r.value, std::fabs(factor) * r.abs_err, Method::Quadrature};
}

} // namespace detail

/// x-derivatives 0..N-1 of calM_nu at one point, from a single refinement pass.
template <std::size_t N>
std::array<FuncValue, N> calm_x_derivatives(const EvalPoint& p, const QuadConfig& cfg = {}) {
    static_assert(N >= 1 && N <= max_x_derivative + 1);
    detail::require_integral_domain(p, "calm");
    const double x = p.x;
    const auto raw = detail::integrate_singular<N>(
        p.nu - 0.5,
        [x](const detail::Abscissa& a) {
            std::array<double, N> v{};
            double k = std::exp(-x * a.t);
            for (std::size_t n = 0; n < N; ++n) {
                v[n] = k;
                k *= a.t;
            }
            return v;
        },
        cfg, "calm");
    std::array<FuncValue, N> out{};
    for (std::size_t n = 0; n < N; ++n)
        out[n] = detail::to_func_value(raw[n], (n % 2 == 0 ? 1.0 : -1.0) * detail::two_over_sqrt_pi);
    return out;
}

/// nu-derivatives 0..N-1 of calM_nu at one point.  The log(1/(1-t^2)) kernel
/// sharpens the t = 1 singularity, so for nu < 1/2 the tolerance is relaxed
/// tenfold.
template <std::size_t N>
std::array<FuncValue, N> calm_nu_derivatives(const EvalPoint& p, const QuadConfig& cfg = {}) {
    static_assert(N >= 1 && N <= max_nu_derivative + 1);
    detail::require_integral_domain(p, "calm_dnu");
    QuadConfig c = cfg;
    if (p.nu < 0.5 && N > 2) {
        c.abs_tol = std::min(1e-6, 10.0 * c.abs_tol);
        c.rel_tol = std::min(1e-6, 10.0 * c.rel_tol);
    }
    const double x = p.x;
    const auto raw = detail::integrate_singular<N>(
        p.nu - 0.5,
        [x](const detail::Abscissa& a) {
            std::array<double, N> v{};
            const double lg = -a.log_one_minus_t2;
            double k = std::exp(-x * a.t);
            for (std::size_t m = 0; m < N; ++m) {
                v[m] = k;
                k *= lg;
            }
            return v;
        },
        c, "calm_dnu");
    std::array<FuncValue, N> out{};
    for (std::size_t m = 0; m < N; ++m)
        out[m] = detail::to_func_value(raw[m], (m % 2 == 0 ? 1.0 : -1.0) * detail::two_over_sqrt_pi);
    return out;
}

/// calM_nu(x) for nu > -1/2, x >= 0.
inline FuncValue calm(const EvalPoint& p, const QuadConfig& cfg = {}) {
    return calm_x_derivatives<1>(p, cfg)[0];
}

/// n-th x-derivative of calM_nu (sign included), 0 <= n <= 10.
inline FuncValue calm_dx(const EvalPoint& p, int n, const QuadConfig& cfg = {}) {
    detail::require_integral_domain(p, "calm_dx");
    if (n < 0 || n > max_x_derivative)
        throw DomainError("calm_dx: derivative order must lie in [0, 10]");
    const double x = p.x;
    const auto r = detail::integrate_singular1(
        p.nu - 0.5, [x, n](const detail::Abscissa& a) { return detail::int_pow(a.t, n) * std::exp(-x * a.t); },
        cfg, "calm_dx");
    return detail::to_func_value(r, (n % 2 == 0 ? 1.0 : -1.0) * detail::two_over_sqrt_pi);
}

/// m-th nu-derivative of calM_nu (sign included), 0 <= m <= 6.
inline FuncValue calm_dnu(const EvalPoint& p, int m, const QuadConfig& cfg = {}) {
    detail::require_integral_domain(p, "calm_dnu");
    if (m < 0 || m > max_nu_derivative)
        throw DomainError("calm_dnu: derivative order must lie in [0, 6]");
    QuadConfig c = cfg;
    if (p.nu < 0.5 && m >= 2) {
        c.abs_tol = std::min(1e-6, 10.0 * c.abs_tol);
        c.rel_tol = std::min(1e-6, 10.0 * c.rel_tol);
    }
    const double x = p.x;
    const auto r = detail::integrate_singular1(
        p.nu - 0.5,
        [x, m](const detail::Abscissa& a) {
            return detail::int_pow(-a.log_one_minus_t2, m) * std::exp(-x * a.t);
        },
        c, "calm_dnu");
    return detail::to_func_value(r, (m % 2 == 0 ? 1.0 : -1.0) * detail::two_over_sqrt_pi);
}

/// M_nu(x) = -x^nu calM_nu(x) / (2^nu Gamma(nu+1/2)), nu > -1/2, x > 0.
inline FuncValue m_from_quadrature(const EvalPoint& p, const QuadConfig& cfg = {}) {
    if (!(p.x > 0.0)) throw DomainError("m_from_quadrature: requires x > 0");
    return m_from_calm(p, calm(p, cfg));
}

/// M, M' and M'' from calM and its first two x-derivatives.
struct MJet {
    FuncValue m;
    FuncValue dm;
    FuncValue d2m;
};

inline MJet m_jet_from_quadrature(const EvalPoint& p, const QuadConfig& cfg = {}) {
    if (!(p.x > 0.0)) throw DomainError("m_deriv: requires x > 0");
    const auto d = calm_x_derivatives<3>(p, cfg);
    const double s = calm_scale(p);
    const double nu = p.nu;
    const double x = p.x;
    const double eps = std::numeric_limits<double>::epsilon();
    const double scale_err = detail::calm_scale_rel_err(p);
    MJet jet;
    jet.m = m_from_calm(p, d[0]);
    {
        const double v = -(nu * d[0].value / x + d[1].value) / s;
        const double e = (std::fabs(nu) * d[0].abs_err / x + d[1].abs_err) / s + (8 * eps + scale_err) * std::fabs(v);
        jet.dm = {v, e, Method::Quadrature};
    }
    {
        const double v = -(nu * (nu - 1.0) * d[0].value / (x * x) + 2.0 * nu * d[1].value / x + d[2].value) / s;
        const double e = (std::fabs(nu * (nu - 1.0)) * d[0].abs_err / (x * x) +
                          2.0 * std::fabs(nu) * d[1].abs_err / x + d[2].abs_err) /
                             s +
                         (16 * eps + scale_err) * std::fabs(v);
        jet.d2m = {v, e, Method::Quadrature};
    }
    return jet;
}

/// M'_nu(x) by the chain rule on the normalization, nu > -1/2, x > 0.
inline FuncValue m_deriv(const EvalPoint& p, const QuadConfig& cfg = {}) {
    return m_jet_from_quadrature(p, cfg).dm;
}

/// I_{nu+1} L_{nu-1} + I_{nu-1} L_{nu+1} - 2 I_nu L_nu for nu > 1/2, x > 0, as
///
///   4 (x/2)^{2nu} / (pi Gamma(nu+1/2)^2)
///     * int_0^1 int_0^1 (a_t a_s)^{nu-3/2} [k (a_t^2 + a_s^2) - 2 a_t a_s]
///                       cosh(xt) sinh(xs) dt ds,
///
/// with a_t = 1 - t^2 and k = Gamma(nu+1/2)^2 / (Gamma(nu+3/2) Gamma(nu-1/2))
/// = (nu-1/2)/(nu+1/2).  Evaluated as a tensor product of the 1-D rule over
/// every (t, s) pair; the kernel is not symmetric in (t, s).
inline FuncValue turanian_il_double_integral(const EvalPoint& p, const QuadConfig& cfg = {}) {
    cfg.validate();
    if (!(p.nu > 0.5))
        throw DomainError("turanian_il_double_integral: requires nu > 1/2 (integrability of (1-t^2)^{nu-3/2})");
    if (!(p.x > 0.0)) throw DomainError("turanian_il_double_integral: requires x > 0");

    const double nu = p.nu;
    const double x = p.x;
    const double k = (nu - 0.5) / (nu + 0.5);
    const double log_pref = 2.0 * std::numbers::ln2 + 2.0 * nu * std::log(0.5 * x) -
                            std::log(std::numbers::pi) - 2.0 * log_gamma(nu + 0.5);
    const double pref = std::exp(log_pref);
    constexpr double eps = std::numeric_limits<double>::epsilon();

    double prev = 0.0;
    for (int l = 0; l <= cfg.max_level; ++l) {
        const auto rule = detail::singular_rule(nu - 1.5, l);
        const std::size_t n = rule.size();
        std::vector<double> a(n), wc(n), ws(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = std::exp(rule[i].at.log_one_minus_t2);
            wc[i] = rule[i].weight * std::cosh(x * rule[i].at.t);
            ws[i] = rule[i].weight * std::sinh(x * rule[i].at.t);
        }
        double total = 0.0;
        double total_abs = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double row = 0.0;
            double row_abs = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double kern = (k * (a[i] * a[i] + a[j] * a[j]) - 2.0 * a[i] * a[j]) * ws[j];
                row += kern;
                row_abs += std::fabs(kern);
            }
            total += wc[i] * row;
            total_abs += wc[i] * row_abs;
        }
        const double h = std::ldexp(1.0, -l);
        const double s = h * h * total;
        const double floor = 16.0 * eps * h * h * total_abs;
        const double err = 2.0 * std::fabs(s - prev);
        prev = s;
        if (l >= 3 && err <= std::max({cfg.abs_tol, cfg.rel_tol * std::fabs(s), floor}))
            return {pref * s, pref * (err + floor), Method::Quadrature};
    }
    throw NonConvergence("turanian_il_double_integral: tolerance not met");
}

} // namespace struvekit
