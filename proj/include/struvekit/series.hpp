#pragma once
//
// Power-series route for I_nu, L_nu and M_nu = L_nu - I_nu:
//
//   I_nu(x) = sum_n (x/2)^{2n+nu}   / (Gamma(n+1)   Gamma(n+nu+1))
//   L_nu(x) = sum_n (x/2)^{2n+nu+1} / (Gamma(n+3/2) Gamma(n+nu+3/2))
//
// Terms follow from the first one through the closed-form ratio
// (x/2)^2 / ((n+a)(n+b)).  The sums are accumulated in binary128 so that the
// difference L - I keeps double precision well past the point where both
// terms reach e^x (see x_cancel_max).
//

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "detail/wide_real.hpp"
#include "errors.hpp"
#include "gamma.hpp"
#include "types.hpp"

namespace struvekit {

/// Largest argument accepted by struve_m_series.  With binary128 accumulation
/// the difference L - I is still good to ~1e-13 relative at x = 25 even for
/// the fastest-decaying order nu = -1/2.
inline constexpr double x_cancel_max = 25.0;

/// Relative error above which struve_m_series refuses to return a value.
inline constexpr double series_cancellation_limit = 1e-8;

namespace detail {

// One of the two Bessel-type series sum_n (x/2)^{2n+mu} / (Gamma(n+a) Gamma(n+b)).
// Parameters are formed from nu in wide precision: rounding nu + 3/2 to double
// would perturb both large partial sums by an ulp and survive the L - I
// cancellation.
struct BesselTypeSeries {
    wide mu;
    wide a;
    wide b;

    BesselTypeSeries(double nu, double mu_off, double a_fixed, double b_off)
        : mu(static_cast<wide>(nu) + mu_off), a(a_fixed), b(static_cast<wide>(nu) + b_off) {}

    // First term (x/2)^mu / (Gamma(a) Gamma(b)) in wide precision; x > 0.
    wide first_term(double x) const {
        const wide half_x = static_cast<wide>(x) / 2;
        return wexp(mu * wlog(half_x) - wlgamma(a) - wlgamma(b));
    }

    wide ratio(wide q, int n) const { return q / ((static_cast<wide>(n) + a) * (static_cast<wide>(n) + b)); }
};

inline std::string point_str(const EvalPoint& p) {
    return "(nu=" + std::to_string(p.nu) + ", x=" + std::to_string(p.x) + ")";
}

// Value at x = 0 of a positive-term series with leading power mu.
inline double series_at_zero(const BesselTypeSeries& s, const char* who, const EvalPoint& p) {
    if (s.mu > 0) return 0.0;
    if (s.mu == 0) return 1.0 / (gamma(static_cast<double>(s.a)) * gamma(static_cast<double>(s.b)));
    throw DomainError(std::string(who) + ": diverges at x = 0 for order " + std::to_string(p.nu));
}

inline FuncValue sum_positive_series(const BesselTypeSeries& s, const EvalPoint& p,
                                     const SeriesConfig& cfg, const char* who) {
    cfg.validate();
    if (p.x < 0.0) throw DomainError(std::string(who) + ": requires x >= 0");
    if (p.x == 0.0) return {series_at_zero(s, who, p), 0.0, Method::Series};

    const wide q = static_cast<wide>(p.x) * static_cast<wide>(p.x) / 4;
    wide term = s.first_term(p.x);
    CompensatedSum<wide> acc;
    acc.add(term);
    for (int n = 0; n < cfg.max_terms; ++n) {
        const wide next = term * s.ratio(q, n);
        if (next < term && next <= static_cast<wide>(cfg.rel_tol) * acc.value()) {
            const double value = static_cast<double>(acc.value());
            const double err = 2.0 * static_cast<double>(next) +
                               std::numeric_limits<double>::epsilon() * std::fabs(value);
            return {value, err, Method::Series};
        }
        term = next;
        acc.add(term);
    }
    throw NonConvergence(std::string(who) + ": series did not converge within " +
                         std::to_string(cfg.max_terms) + " terms at " + point_str(p));
}

} // namespace detail

/// Modified Bessel function of the first kind, nu > -1, x >= 0.
inline FuncValue bessel_i(const EvalPoint& p, const SeriesConfig& cfg = {}) {
    if (!(p.nu > -1.0)) throw DomainError("bessel_i: series requires nu > -1");
    return detail::sum_positive_series(detail::BesselTypeSeries(p.nu, 0.0, 1.0, 1.0), p, cfg, "bessel_i");
}

/// Modified Struve function of the first kind, nu > -3/2, x >= 0.
inline FuncValue struve_l(const EvalPoint& p, const SeriesConfig& cfg = {}) {
    if (!(p.nu > -1.5)) throw DomainError("struve_l: series requires nu > -3/2");
    return detail::sum_positive_series(detail::BesselTypeSeries(p.nu, 1.0, 1.5, 1.5), p, cfg, "struve_l");
}

/// M_nu(x) = L_nu(x) - I_nu(x) by merged termwise summation, nu > -1,
/// 0 <= x <= x_cancel_max.  The error estimate covers truncation, the
/// rounding carried by the two large partial sums and the final rounding to
/// double.
inline FuncValue struve_m_series(const EvalPoint& p, const SeriesConfig& cfg = {}) {
    using detail::wide;
    cfg.validate();
    if (!(p.nu > -1.0)) throw DomainError("struve_m_series: requires nu > -1");
    if (p.x < 0.0) throw DomainError("struve_m_series: requires x >= 0");
    if (p.x > x_cancel_max)
        throw CancellationError("struve_m_series: x = " + std::to_string(p.x) +
                                " exceeds x_cancel_max = " + std::to_string(x_cancel_max) +
                                "; use the quadrature route");

    const detail::BesselTypeSeries ls(p.nu, 1.0, 1.5, 1.5);
    const detail::BesselTypeSeries is(p.nu, 0.0, 1.0, 1.0);
    if (p.x == 0.0) {
        const double v = detail::series_at_zero(ls, "struve_m_series", p) -
                         detail::series_at_zero(is, "struve_m_series", p);
        return {v, 0.0, Method::Series};
    }

    const wide q = static_cast<wide>(p.x) * static_cast<wide>(p.x) / 4;
    wide tl = ls.first_term(p.x);
    wide ti = is.first_term(p.x);
    wide mag_l = tl;
    wide mag_i = ti;
    detail::CompensatedSum<wide> acc;
    acc.add(tl - ti);

    for (int n = 0; n < cfg.max_terms; ++n) {
        const wide nl = tl * ls.ratio(q, n);
        const wide ni = ti * is.ratio(q, n);
        const wide merged = nl - ni;
        const wide partial = acc.value();
        if (nl < tl && ni < ti &&
            detail::wabs(merged) <= static_cast<wide>(cfg.rel_tol) * detail::wabs(partial)) {
            const double value = static_cast<double>(partial);
            const wide kappa = static_cast<wide>(8 * (n + 8));
            const double cancel =
                static_cast<double>(kappa * detail::wide_epsilon * (mag_l + mag_i));
            const double trunc = 2.0 * static_cast<double>(detail::wabs(merged));
            const double err =
                trunc + cancel + std::numeric_limits<double>::epsilon() * std::fabs(value);
            if (value == 0.0 || (trunc + cancel) / std::fabs(value) > series_cancellation_limit)
                throw CancellationError("struve_m_series: estimated relative error " +
                                        std::to_string((trunc + cancel) / std::fabs(value)) +
                                        " exceeds 1e-8 at " + detail::point_str(p));
            return {value, err, Method::Series};
        }
        tl = nl;
        ti = ni;
        mag_l += tl;
        mag_i += ti;
        acc.add(merged);
    }
    throw NonConvergence("struve_m_series: no convergence within " +
                         std::to_string(cfg.max_terms) + " terms at " + detail::point_str(p));
}

/// 2^nu Gamma(nu+1/2) x^{-nu}, the factor linking M_nu and its normalized form.
inline double calm_scale(const EvalPoint& p) {
    if (!(p.x > 0.0)) throw DomainError("normalization requires x > 0");
    if (!(p.nu > -0.5)) throw DomainError("normalization requires nu > -1/2 (integral representation)");
    return std::exp(p.nu * std::numbers::ln2 + log_gamma(p.nu + 0.5) - p.nu * std::log(p.x));
}

namespace detail {

// Relative rounding error of calm_scale: exp() turns the absolute rounding of
// each term of its argument into relative error.
inline double calm_scale_rel_err(const EvalPoint& p) {
    const double terms = std::fabs(p.nu * std::numbers::ln2) + std::fabs(log_gamma(p.nu + 0.5)) +
                         std::fabs(p.nu * std::log(p.x));
    return std::numeric_limits<double>::epsilon() * (4.0 + 2.0 * terms);
}

} // namespace detail

/// Normalized function -2^nu Gamma(nu+1/2) x^{-nu} M_nu(x) from a value of M_nu.
inline FuncValue calm_from_m(const EvalPoint& p, const FuncValue& m) {
    const double s = calm_scale(p);
    const double v = -s * m.value;
    return {v, s * m.abs_err + detail::calm_scale_rel_err(p) * std::fabs(v), m.method};
}

/// Inverse of calm_from_m.
inline FuncValue m_from_calm(const EvalPoint& p, const FuncValue& calm) {
    const double s = calm_scale(p);
    const double v = -calm.value / s;
    return {v, calm.abs_err / s + detail::calm_scale_rel_err(p) * std::fabs(v), calm.method};
}

} // namespace struvekit
