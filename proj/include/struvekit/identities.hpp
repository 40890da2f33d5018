#pragma once
//
// Residuals of the identities satisfied by M_nu.  Each residual is the
// absolute value of (left side - right side); its scale is the largest
// absolute term of the identity, so residual/scale is meaningful whether the
// terms are of size e^{-30} or e^{+30}.
//
// With c_nu(x) = (x/2)^nu / (sqrt(pi) Gamma(nu+3/2)):
//
//   ode   x^2 M'' + x M' - (x^2+nu^2) M = x^{nu+1} / (sqrt(pi) 2^{nu-1} Gamma(nu+1/2))
//   rec0  M_{nu-1} - M_{nu+1} - (2nu/x) M_nu = c_nu
//   rec_sum  M_{nu-1} + M_{nu+1} - 2 M'_nu = -c_nu
//   rec1  x M'_nu + nu M_nu = x M_{nu-1}
//   rec2  M_{nu+1} = M'_nu - (nu/x) M_nu - c_nu
//   turan_derivative  M_nu^2 - M_{nu-1} M_{nu+1} = (1+nu^2/x^2) M_nu^2 - M'_nu^2 + c_nu M_{nu-1}
//   decomposition  Delta_M = Delta_I + Delta_L + Delta_{I,L}
//

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <string>
#include <vector>

#include "closed_forms.hpp"
#include "evaluate.hpp"
#include "gamma.hpp"
#include "quadrature.hpp"
#include "series.hpp"
#include "types.hpp"

namespace struvekit {

struct IdentityResidual {
    std::string id;
    EvalPoint point;
    double residual = 0.0;
    double scale = 0.0;

    double relative() const { return scale > 0.0 ? residual / scale : residual; }
};

namespace detail {

inline double max_abs(std::initializer_list<double> terms) {
    double m = 0.0;
    for (double t : terms) m = std::max(m, std::fabs(t));
    return m;
}

// (x/2)^nu / (sqrt(pi) Gamma(nu+3/2)), nu > -3/2.
inline double recurrence_constant(const EvalPoint& p) {
    return std::exp(p.nu * std::log(0.5 * p.x) - 0.5 * std::log(std::numbers::pi) - log_gamma(p.nu + 1.5));
}

// x^{nu+1} / (sqrt(pi) 2^{nu-1} Gamma(nu+1/2)); zero at nu = -1/2 where 1/Gamma vanishes.
inline double ode_forcing(const EvalPoint& p) {
    if (p.nu == -0.5) return 0.0;
    return std::exp((p.nu + 1.0) * std::log(p.x) - 0.5 * std::log(std::numbers::pi) -
                    (p.nu - 1.0) * std::numbers::ln2 - log_gamma(p.nu + 0.5));
}

inline void require_turan_domain(const EvalPoint& p, const char* who) {
    if (!(p.nu > 0.5))
        throw DomainError(std::string(who) + ": requires nu > 1/2 so that nu - 1 > -1/2");
    if (!(p.x > 0.0)) throw DomainError(std::string(who) + ": requires x > 0");
}

inline IdentityResidual make_residual(std::string id, const EvalPoint& p, double lhs_minus_rhs,
                                      std::initializer_list<double> terms) {
    return {std::move(id), p, std::fabs(lhs_minus_rhs), max_abs(terms)};
}

} // namespace detail

/// Residual of the inhomogeneous modified Struve equation, nu >= -1/2, x > 0.
/// M'' comes from differentiating under the integral, not from the equation.
inline IdentityResidual ode_residual(const EvalPoint& p, const QuadConfig& cfg = {}) {
    if (!(p.nu >= -0.5)) throw DomainError("ode_residual: requires nu >= -1/2");
    const MJet j = m_jet(p, cfg);
    const double x = p.x;
    const double a = x * x * j.d2m.value;
    const double b = x * j.dm.value;
    const double c = -(x * x + p.nu * p.nu) * j.m.value;
    const double f = detail::ode_forcing(p);
    return detail::make_residual("ode", p, a + b + c - f, {a, b, c, f});
}

/// The four three-term recurrences, nu > 1/2, x > 0.
inline std::vector<IdentityResidual> recurrence_residuals(const EvalPoint& p, const QuadConfig& cfg = {}) {
    detail::require_turan_domain(p, "recurrence_residuals");
    const double nu = p.nu;
    const double x = p.x;
    const MJet j = m_jet(p, cfg);
    const double m = j.m.value;
    const double dm = j.dm.value;
    const double mm = m_jet({nu - 1.0, x}, cfg).m.value;
    const double mp = m_jet({nu + 1.0, x}, cfg).m.value;
    const double c = detail::recurrence_constant(p);

    std::vector<IdentityResidual> out;
    out.push_back(detail::make_residual("rec0", p, mm - mp - 2.0 * nu / x * m - c, {mm, mp, 2.0 * nu / x * m, c}));
    out.push_back(detail::make_residual("rec_sum", p, mm + mp - 2.0 * dm + c, {mm, mp, 2.0 * dm, c}));
    out.push_back(detail::make_residual("rec1", p, x * dm + nu * m - x * mm, {x * dm, nu * m, x * mm}));
    out.push_back(detail::make_residual("rec2", p, mp - dm + nu / x * m + c, {mp, dm, nu / x * m, c}));
    return out;
}

/// M_nu^2 - M_{nu-1} M_{nu+1}, nu > 1/2, x > 0.
inline double turanian(const EvalPoint& p, const QuadConfig& cfg = {}) {
    detail::require_turan_domain(p, "turanian");
    const double m = m_auto(p, cfg).value;
    const double mm = m_auto({p.nu - 1.0, p.x}, cfg).value;
    const double mp = m_auto({p.nu + 1.0, p.x}, cfg).value;
    return m * m - mm * mp;
}

struct TuranianDecomposition {
    double delta_i;  // I_nu^2 - I_{nu-1} I_{nu+1}
    double delta_l;  // L_nu^2 - L_{nu-1} L_{nu+1}
    double delta_il; // I_{nu+1} L_{nu-1} + I_{nu-1} L_{nu+1} - 2 I_nu L_nu

    double sum() const { return delta_i + delta_l + delta_il; }
};

/// The three parts of the Turanian of M = L - I, from the power series, nu > 1/2, x > 0.
inline TuranianDecomposition turanian_decomposition(const EvalPoint& p, const SeriesConfig& cfg = {}) {
    detail::require_turan_domain(p, "turanian_decomposition");
    const double nu = p.nu;
    const double x = p.x;
    const double i0 = bessel_i({nu, x}, cfg).value;
    const double im = bessel_i({nu - 1.0, x}, cfg).value;
    const double ip = bessel_i({nu + 1.0, x}, cfg).value;
    const double l0 = struve_l({nu, x}, cfg).value;
    const double lm = struve_l({nu - 1.0, x}, cfg).value;
    const double lp = struve_l({nu + 1.0, x}, cfg).value;
    return {i0 * i0 - im * ip, l0 * l0 - lm * lp, ip * lm + im * lp - 2.0 * i0 * l0};
}

/// Turanian of M against the sum of its three parts.
inline IdentityResidual decomposition_residual(const EvalPoint& p, const QuadConfig& cfg = {}) {
    const TuranianDecomposition d = turanian_decomposition(p);
    const double t = turanian(p, cfg);
    return detail::make_residual("decomposition", p, t - d.sum(), {t, d.delta_i, d.delta_l, d.delta_il});
}

/// Mixed part of the decomposition: double integral against the series combination.
inline IdentityResidual il_double_integral_residual(const EvalPoint& p, const QuadConfig& cfg = {}) {
    const TuranianDecomposition d = turanian_decomposition(p);
    const double di = turanian_il_double_integral(p, cfg).value;
    return {"il_double_integral", p, std::fabs(di - d.delta_il), std::fabs(d.delta_il)};
}

/// Turanian expressed through M_nu, M'_nu and M_{nu-1}, nu > 1/2, x > 0.
inline IdentityResidual turanian_identity_l25(const EvalPoint& p, const QuadConfig& cfg = {}) {
    detail::require_turan_domain(p, "turanian_identity_l25");
    const double nu = p.nu;
    const double x = p.x;
    const MJet j = m_jet(p, cfg);
    const double m = j.m.value;
    const double dm = j.dm.value;
    const double mm = m_jet({nu - 1.0, x}, cfg).m.value;
    const double mp = m_jet({nu + 1.0, x}, cfg).m.value;
    const double c = detail::recurrence_constant(p);
    const double lhs_a = m * m;
    const double lhs_b = -mm * mp;
    const double rhs_a = (1.0 + nu * nu / (x * x)) * m * m;
    const double rhs_b = -dm * dm;
    const double rhs_c = c * mm;
    return detail::make_residual("turan_derivative", p, lhs_a + lhs_b - rhs_a - rhs_b - rhs_c,
                                 {lhs_a, lhs_b, rhs_a, rhs_b, rhs_c});
}

/// Every identity applicable at p (the ODE alone when nu <= 1/2).
inline std::vector<IdentityResidual> all_identities(const EvalPoint& p, const QuadConfig& cfg = {}) {
    std::vector<IdentityResidual> out;
    out.push_back(ode_residual(p, cfg));
    if (p.nu > 0.5) {
        for (auto& r : recurrence_residuals(p, cfg)) out.push_back(std::move(r));
        out.push_back(turanian_identity_l25(p, cfg));
        out.push_back(decomposition_residual(p, cfg));
        out.push_back(il_double_integral_residual(p, cfg));
    }
    return out;
}

} // namespace struvekit
