#pragma once
//
// Inequality catalog and grid executor.
//
// Every case maps a grid point to a margin (positive when the inequality
// holds) and a scale; reports use margin/scale.  Normalized margins within
// +-inconclusive_band of zero are neither passes nor violations.
//
// Cases are evaluated in the normalized function calM or in log space where
// the M-level statement would under- or overflow.  With q = calM'/calM the
// logarithmic derivative of M is x M'/M = nu + x q.
//

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "closed_forms.hpp"
#include "errors.hpp"
#include "evaluate.hpp"
#include "fox_wright.hpp"
#include "gamma.hpp"
#include "quadrature.hpp"
#include "series.hpp"
#include "types.hpp"

namespace struvekit {

inline constexpr double inconclusive_band = 1e-9;

/// Above this x the sign check switches from the power series to quadrature.
inline constexpr double sign_m_series_max_x = 8.0;

struct Margin {
    double value;
    double scale;

    double normalized() const { return value / std::max(scale, 1e-300); }
};

struct GridPoint {
    double nu = 0.0;
    double x = 0.0; // unused by cases of arity Nu
    std::optional<double> y;

    bool operator==(const GridPoint&) const = default;
};

enum class Arity { Nu, NuX, NuXY };

enum class Spacing { Linear, Log };

struct GridSpec {
    std::vector<double> nu_values;
    std::vector<double> x_values;
    std::vector<double> y_values; // NuXY cases fall back to x_values when empty
    Spacing spacing = Spacing::Log;
};

using MarginFn = std::function<Margin(const GridPoint&, const QuadConfig&)>;

struct InequalityCase {
    std::string id;
    std::string claim;
    Arity arity = Arity::NuX;
    std::function<bool(const GridPoint&)> domain;
    MarginFn margin;
    bool strict = true;
    std::function<GridSpec()> standard_grid;
};

struct PointMargin {
    GridPoint point;
    std::optional<double> margin; // normalized; empty when evaluation failed
    std::string error;

    bool operator==(const PointMargin&) const = default;
};

struct VerificationReport {
    std::string case_id;
    int points_tested = 0;
    int points_skipped = 0;
    std::optional<double> min_margin;
    GridPoint argmin;
    std::vector<PointMargin> violations;
    std::vector<PointMargin> inconclusive;
    double wall_time = 0.0; // seconds; not part of equality or serialization

    bool operator==(const VerificationReport& o) const {
        return case_id == o.case_id && points_tested == o.points_tested && points_skipped == o.points_skipped &&
               min_margin == o.min_margin && argmin == o.argmin && violations == o.violations &&
               inconclusive == o.inconclusive;
    }
};

// ---------------------------------------------------------------------------
// Grids

inline std::vector<double> linspace(double a, double b, int n) {
    if (n < 1) throw ConfigError("linspace: needs at least one point");
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n == 1 ? a : a + (b - a) * i / (n - 1);
    if (n > 1) v.back() = b;
    return v;
}

inline std::vector<double> logspace(double a, double b, int n) {
    if (!(a > 0.0 && b > 0.0)) throw ConfigError("logspace: endpoints must be positive");
    std::vector<double> v = linspace(std::log(a), std::log(b), n);
    for (double& e : v) e = std::exp(e);
    v.front() = a;
    v.back() = b;
    return v;
}

/// lo + logspace(offset, hi - lo, n): dense near the open boundary lo.
inline std::vector<double> log_above(double lo, double hi, int n, double offset = 0.01) {
    std::vector<double> v = logspace(offset, hi - lo, n);
    for (double& e : v) e += lo;
    v.back() = hi;
    return v;
}

inline std::vector<double> standard_x_values() { return logspace(1e-3, 30.0, 25); }

inline std::vector<double> with_values(std::vector<double> v, std::initializer_list<double> extra) {
    v.insert(v.end(), extra.begin(), extra.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

namespace detail {

inline GridSpec nu_x_grid(std::vector<double> nu) { return {std::move(nu), standard_x_values(), {}, Spacing::Log}; }

inline double calm_value(double nu, double x, const QuadConfig& cfg) { return calm({nu, x}, cfg).value; }

// Normalized margin of "big > small" from logarithms of both sides.
inline double log_margin(double log_big, double log_small) {
    return log_big >= log_small ? -std::expm1(log_small - log_big) : std::expm1(log_big - log_small);
}

// Margin of "lhs < rhs" (or <=) with scale max(|lhs|, |rhs|).
inline Margin less(double lhs, double rhs) { return {rhs - lhs, std::max(std::fabs(lhs), std::fabs(rhs))}; }

inline Margin normalized(double m) { return {m, 1.0}; }

inline Margin worst(std::initializer_list<Margin> ms) {
    double m = std::numeric_limits<double>::infinity();
    for (const Margin& k : ms) m = std::min(m, k.normalized());
    return normalized(m);
}

// x M'_nu / M_nu for nu >= -1/2.
inline double log_derivative_ratio(double nu, double x, const QuadConfig& cfg) {
    if (has_closed_form(nu)) {
        const ClosedJet j = closed_jet({nu, x});
        return x * j.dm / j.m;
    }
    const auto d = calm_x_derivatives<2>({nu, x}, cfg);
    return nu + x * d[1].value / d[0].value;
}

// log|M_mu(x)| for mu > -1/2 from calM.
inline double log_abs_m(double mu, double x, const QuadConfig& cfg) {
    return mu * std::log(x) + std::log(calm_value(mu, x, cfg)) - mu * std::numbers::ln2 - log_gamma(mu + 0.5);
}

inline bool x_positive(const GridPoint& p) { return p.x > 0.0; }

} // namespace detail

// ---------------------------------------------------------------------------
// Catalog

inline std::vector<InequalityCase> catalog() {
    using namespace detail;
    const double inf = std::numeric_limits<double>::infinity();
    (void)inf;
    std::vector<InequalityCase> cases;

    const auto nu_gt = [](double lo) { return [lo](const GridPoint& p) { return p.nu > lo && p.x > 0.0; }; };
    const auto nu_only_gt = [](double lo) { return [lo](const GridPoint& p) { return p.nu > lo; }; };
    const auto grid_gt_m_half = [] { return nu_x_grid(log_above(-0.5, 20.0, 25)); };
    const auto grid_gt_half = [] { return nu_x_grid(log_above(0.5, 20.0, 25)); };
    const auto grid_closed_m_half_zero = [] {
        return nu_x_grid(with_values(log_above(-0.5, 0.0, 24), {-0.5}));
    };
    const auto grid_nu_only = [](double lo, double hi) {
        return [lo, hi] { return GridSpec{log_above(lo, hi, 25), {0.0}, {}, Spacing::Log}; };
    };

    cases.push_back({"bound0", "calM_nu(x) < Gamma(nu+1/2)/Gamma(nu+1)", Arity::NuX, nu_gt(-0.5),
                     [](const GridPoint& p, const QuadConfig& c) {
                         return less(calm_value(p.nu, p.x, c), gamma_ratio(p.nu + 0.5, p.nu + 1.0));
                     },
                     true, grid_gt_m_half});

    cases.push_back({"ineqturan_lower", "M_nu^2 - M_{nu-1} M_{nu+1} > 0", Arity::NuX, nu_gt(0.5),
                     [](const GridPoint& p, const QuadConfig& c) {
                         // Delta_M = x^{2nu}/(4^nu Gamma(nu+1/2)^2) [calM_nu^2 - k calM_{nu-1} calM_{nu+1}]
                         const double k = (p.nu - 0.5) / (p.nu + 0.5);
                         const double m = calm_value(p.nu, p.x, c);
                         const double mm = calm_value(p.nu - 1.0, p.x, c);
                         const double mp = calm_value(p.nu + 1.0, p.x, c);
                         return less(k * mm * mp, m * m);
                     },
                     true, grid_gt_half});

    cases.push_back({"ineqturan_upper", "M_nu^2 - M_{nu-1} M_{nu+1} < M_nu^2 / (nu+1/2)", Arity::NuX, nu_gt(0.5),
                     [](const GridPoint& p, const QuadConfig& c) {
                         // Equivalent to calM_nu^2 < calM_{nu-1} calM_{nu+1}.
                         const double m = calm_value(p.nu, p.x, c);
                         const double mm = calm_value(p.nu - 1.0, p.x, c);
                         const double mp = calm_value(p.nu + 1.0, p.x, c);
                         return less(m * m, mm * mp);
                     },
                     true, grid_gt_half});

    cases.push_back({"quot1", "x M'_nu / M_nu < nu", Arity::NuX, nu_gt(-0.5),
                     [](const GridPoint& p, const QuadConfig& c) {
                         return less(log_derivative_ratio(p.nu, p.x, c), p.nu);
                     },
                     true, grid_gt_m_half});

    cases.push_back({"quot2_left", "-sqrt(x^2+nu^2) < x M'_nu / M_nu", Arity::NuX, nu_gt(0.5),
                     [](const GridPoint& p, const QuadConfig& c) {
                         return less(-std::hypot(p.x, p.nu), log_derivative_ratio(p.nu, p.x, c));
                     },
                     true, grid_gt_half});

    cases.push_back({"quot2_right", "x M'_nu / M_nu < sqrt(x^2+nu^2)", Arity::NuX, nu_gt(0.5),
                     [](const GridPoint& p, const QuadConfig& c) {
                         return less(log_derivative_ratio(p.nu, p.x, c), std::hypot(p.x, p.nu));
                     },
                     true, grid_gt_half});

    cases.push_back({"FX1", "calM_nu(x+y) >= Gamma(nu+1)/Gamma(nu+1/2) calM_nu(x) calM_nu(y)", Arity::NuXY,
                     [](const GridPoint& p) { return p.nu > -0.5 && p.x > 0.0 && p.y.value_or(0.0) > 0.0; },
                     [](const GridPoint& p, const QuadConfig& c) {
                         const double y = p.y.value();
                         const double lhs = calm_value(p.nu, p.x + y, c);
                         const double rhs = calm_value(p.nu, p.x, c) * calm_value(p.nu, y, c) /
                                            gamma_ratio(p.nu + 0.5, p.nu + 1.0);
                         return less(rhs, lhs);
                     },
                     false,
                     [] {
                         const auto xs = logspace(1e-3, 30.0, 10);
                         return GridSpec{log_above(-0.5, 20.0, 6), xs, xs, Spacing::Log};
                     }});

    cases.push_back({"bound1",
                     "calM_nu(x) >= Gamma(nu+1/2)/Gamma(nu+1) (1-e^{-x})/x for nu >= 1/2, reversed for |nu| < 1/2",
                     Arity::NuX, nu_gt(-0.5),
                     [](const GridPoint& p, const QuadConfig& c) {
                         const double m = calm_value(p.nu, p.x, c);
                         const double b = gamma_ratio(p.nu + 0.5, p.nu + 1.0) * (-std::expm1(-p.x)) / p.x;
                         return p.nu >= 0.5 ? less(b, m) : less(m, b);
                     },
                     false, [] { return nu_x_grid(with_values(log_above(-0.5, 20.0, 25), {0.5})); }});

    cases.push_back({"FX2",
                     "calM_{nu-1} calM_{nu+1} <= calM_{1/2} calM_{2nu-1/2} for nu >= 3/2, reversed on (1/2, 3/2)",
                     Arity::NuX, nu_gt(0.5),
                     [](const GridPoint& p, const QuadConfig& c) {
                         const double lhs = calm_value(p.nu - 1.0, p.x, c) * calm_value(p.nu + 1.0, p.x, c);
                         const double rhs = calm_value(0.5, p.x, c) * calm_value(2.0 * p.nu - 0.5, p.x, c);
                         return p.nu >= 1.5 ? less(lhs, rhs) : less(rhs, lhs);
                     },
                     false, [] { return nu_x_grid(with_values(log_above(0.5, 20.0, 25), {1.5})); }});

    cases.push_back({"FX3",
                     "calM_nu(x) < Gamma(nu+1/2)/Gamma(nu+1) e^{x^2/(4(nu+1))} - 4/(sqrt(pi)(2nu+1)) sinh(x/(2nu+3))",
                     Arity::NuX, nu_gt(-0.5),
                     [](const GridPoint& p, const QuadConfig& c) {
                         const double nu = p.nu;
                         const double rhs =
                             std::exp(log_gamma(nu + 0.5) - log_gamma(nu + 1.0) + p.x * p.x / (4.0 * (nu + 1.0))) -
                             4.0 * std::numbers::inv_sqrtpi / (2.0 * nu + 1.0) * std::sinh(p.x / (2.0 * nu + 3.0));
                         return less(calm_value(nu, p.x, c), rhs);
                     },
                     true, grid_gt_m_half});

    const auto quot3_bound = [](const GridPoint& p, double sign) {
        return (sign - std::sqrt(1.0 + 4.0 * (p.x * p.x + p.nu * p.nu))) / 2.0;
    };
    const auto in_m_half_zero = [](const GridPoint& p) { return p.nu >= -0.5 && p.nu <= 0.0 && p.x > 0.0; };

    cases.push_back({"quot3_left", "(-1 - sqrt(1+4(x^2+nu^2)))/2 < x M'_nu / M_nu", Arity::NuX, in_m_half_zero,
                     [quot3_bound](const GridPoint& p, const QuadConfig& c) {
                         return less(quot3_bound(p, -1.0), log_derivative_ratio(p.nu, p.x, c));
                     },
                     true, grid_closed_m_half_zero});

    cases.push_back({"quot3_right", "x M'_nu / M_nu < (-1 + sqrt(1+4(x^2+nu^2)))/2", Arity::NuX, in_m_half_zero,
                     [](const GridPoint& p, const QuadConfig& c) {
                         const double b = (-1.0 + std::sqrt(1.0 + 4.0 * (p.x * p.x + p.nu * p.nu))) / 2.0;
                         return less(log_derivative_ratio(p.nu, p.x, c), b);
                     },
                     true, grid_closed_m_half_zero});

    cases.push_back({"FX31", "d/dx [x M'_nu / M_nu] < x / (nu+1/2)", Arity::NuX, nu_gt(0.5),
                     [](const GridPoint& p, const QuadConfig& c) {
                         const double nu = p.nu;
                         const double x = p.x;
                         const double rhs = x / (nu + 0.5);
                         // Closed expression in calM and calM' only:
                         //   r' = x - 2 nu q - x q^2 - 2 / (sqrt(pi) calM),  q = calM'/calM.
                         const auto d = calm_x_derivatives<2>({nu, x}, c);
                         const double q = d[1].value / d[0].value;
                         const double analytic =
                             x - 2.0 * nu * q - x * q * q - 2.0 * std::numbers::inv_sqrtpi / d[0].value;
                         constexpr double h = 1e-5;
                         const double fd =
                             (log_derivative_ratio(nu, x + h, c) - log_derivative_ratio(nu, x - h, c)) / (2.0 * h);
                         return worst({less(analytic, rhs), less(fd, rhs)});
                     },
                     true, [] { return nu_x_grid(log_above(0.5, 20.0, 25)); }});

    cases.push_back({"theorem4_bilateral", "R exp(-rate x) <= calM_nu(x) <= R - (1 - e^{-x}) / (sqrt(pi)(nu+1/2))", Arity::NuX, nu_gt(-0.5),
                     [](const GridPoint& p, const QuadConfig& c) {
                         const Bounds b = theorem4_bounds({p.nu, p.x});
                         const double m = calm_value(p.nu, p.x, c);
                         return worst({less(b.lower, m), less(m, b.upper)});
                     },
                     false, [] { return nu_x_grid(log_above(-0.5, 20.0, 25)); }});

    cases.push_back({"gammaineq_left", "2/sqrt(pi) > Gamma(nu+3/2)/Gamma(nu+2)", Arity::Nu, nu_only_gt(-0.5),
                     [](const GridPoint& p, const QuadConfig&) {
                         return normalized(log_margin(std::log(2.0 * std::numbers::inv_sqrtpi),
                                                      log_gamma(p.nu + 1.5) - log_gamma(p.nu + 2.0)));
                     },
                     true, grid_nu_only(-0.5, 20.0)});

    cases.push_back({"gammaineq_right", "Gamma(nu+3/2)/Gamma(nu+2) > sqrt(2/(pi(nu+1)))", Arity::Nu,
                     nu_only_gt(-0.5),
                     [](const GridPoint& p, const QuadConfig&) {
                         return normalized(log_margin(log_gamma(p.nu + 1.5) - log_gamma(p.nu + 2.0),
                                                      0.5 * std::log(2.0 / (std::numbers::pi * (p.nu + 1.0)))));
                     },
                     true, grid_nu_only(-0.5, 20.0)});

    cases.push_back({"remark1",
                     "M_{nu-1} M_{nu+1} <= sqrt(2) Gamma(2nu)(e^{-x}-1) / (sqrt(pi x) Gamma(nu-1/2) Gamma(nu+3/2)) "
                     "M_{2nu-1/2} for nu >= 3/2, reversed on (1/2, 3/2)",
                     Arity::NuX, nu_gt(0.5),
                     [](const GridPoint& p, const QuadConfig& c) {
                         // Both sides are positive; compare logarithms.
                         const double nu = p.nu;
                         const double x = p.x;
                         const double log_lhs = log_abs_m(nu - 1.0, x, c) + log_abs_m(nu + 1.0, x, c);
                         const double log_rhs = 0.5 * std::numbers::ln2 + log_gamma(2.0 * nu) -
                                                0.5 * std::log(std::numbers::pi * x) - log_gamma(nu - 0.5) -
                                                log_gamma(nu + 1.5) + std::log(-std::expm1(-x)) +
                                                log_abs_m(2.0 * nu - 0.5, x, c);
                         return normalized(nu >= 1.5 ? log_margin(log_rhs, log_lhs) : log_margin(log_lhs, log_rhs));
                     },
                     false, [] { return nu_x_grid(with_values(log_above(0.5, 20.0, 25), {1.5})); }});

    cases.push_back({"remark2_turan_gamma", "2/pi < Gamma(nu+3/2)^2 / (Gamma(nu+1) Gamma(nu+2))", Arity::Nu,
                     nu_only_gt(-0.5),
                     [](const GridPoint& p, const QuadConfig&) {
                         return normalized(log_margin(2.0 * log_gamma(p.nu + 1.5) - log_gamma(p.nu + 1.0) -
                                                          log_gamma(p.nu + 2.0),
                                                      std::log(2.0 / std::numbers::pi)));
                     },
                     true, grid_nu_only(-0.5, 20.0)});

    cases.push_back({"remark2_ratio",
                     "(2/sqrt(pi))(nu+1)/(nu+1/2) > Gamma(nu+1/2)/Gamma(nu+1) > sqrt(2/pi) sqrt(nu+1)/(nu+1/2)",
                     Arity::Nu, nu_only_gt(-0.5),
                     [](const GridPoint& p, const QuadConfig&) {
                         const double nu = p.nu;
                         const double mid = log_gamma(nu + 0.5) - log_gamma(nu + 1.0);
                         const double hi = std::log(2.0 * std::numbers::inv_sqrtpi * (nu + 1.0) / (nu + 0.5));
                         const double lo =
                             0.5 * std::log(2.0 / std::numbers::pi) + 0.5 * std::log(nu + 1.0) - std::log(nu + 0.5);
                         return normalized(std::min(log_margin(hi, mid), log_margin(mid, lo)));
                     },
                     true, grid_nu_only(-0.5, 20.0)});

    cases.push_back({"sign_m", "M_nu(x) < 0", Arity::NuX,
                     [](const GridPoint& p) { return p.nu >= -0.5 && p.x > 0.0; },
                     [](const GridPoint& p, const QuadConfig& c) {
                         const EvalPoint e{p.nu, p.x};
                         const double m = p.x <= sign_m_series_max_x ? struve_m_series(e).value : m_auto(e, c).value;
                         return less(m, 0.0);
                     },
                     true, [] { return nu_x_grid(with_values(log_above(-0.5, 20.0, 24), {-0.5})); }});

    cases.push_back({"cm_probe_x", "(-1)^n d^n calM_nu / dx^n > 0, n = 1..6", Arity::NuX, nu_gt(-0.5),
                     [](const GridPoint& p, const QuadConfig& c) {
                         const auto d = calm_x_derivatives<7>({p.nu, p.x}, c);
                         double m = std::numeric_limits<double>::infinity();
                         for (std::size_t n = 1; n < d.size(); ++n) {
                             const double s = (n % 2 == 0 ? 1.0 : -1.0) * d[n].value;
                             m = std::min(m, Margin{s, std::fabs(s)}.normalized());
                         }
                         return normalized(m);
                     },
                     true, grid_gt_m_half});

    cases.push_back({"cm_probe_nu", "(-1)^m d^m calM_nu / dnu^m > 0, m = 1..4", Arity::NuX, nu_gt(-0.5),
                     [](const GridPoint& p, const QuadConfig& c) {
                         const auto d = calm_nu_derivatives<5>({p.nu, p.x}, c);
                         double m = std::numeric_limits<double>::infinity();
                         for (std::size_t k = 1; k < d.size(); ++k) {
                             const double s = (k % 2 == 0 ? 1.0 : -1.0) * d[k].value;
                             m = std::min(m, Margin{s, std::fabs(s)}.normalized());
                         }
                         return normalized(m);
                     },
                     true, grid_gt_m_half});

    cases.push_back({"logconvex_x", "calM_nu(x)^2 < calM_nu(x-d) calM_nu(x+d), d = x/2", Arity::NuX, nu_gt(-0.5),
                     [](const GridPoint& p, const QuadConfig& c) {
                         const double d = 0.5 * p.x;
                         const double m = calm_value(p.nu, p.x, c);
                         return less(m * m, calm_value(p.nu, p.x - d, c) * calm_value(p.nu, p.x + d, c));
                     },
                     true, grid_gt_m_half});

    cases.push_back({"logconvex_nu", "calM_nu(x)^2 < calM_{nu-d}(x) calM_{nu+d}(x), d = min(1/2, (nu+1/2)/2)",
                     Arity::NuX, nu_gt(-0.5),
                     [](const GridPoint& p, const QuadConfig& c) {
                         const double d = std::min(0.5, 0.5 * (p.nu + 0.5));
                         const double m = calm_value(p.nu, p.x, c);
                         return less(m * m, calm_value(p.nu - d, p.x, c) * calm_value(p.nu + d, p.x, c));
                     },
                     true, grid_gt_m_half});

    cases.push_back({"neg_m_cm", "(-1)^n d^n (-M_nu) / dx^n > 0, n = 0..6, nu in [-1/2, 0]", Arity::NuX,
                     in_m_half_zero,
                     [](const GridPoint& p, const QuadConfig& c) {
                         // -M_nu = C x^nu f(x) with C > 0 and f = calM_nu, or f = e^{-x} at nu = -1/2.
                         // Leibniz rule on x^nu f.
                         constexpr int order = 6;
                         std::array<double, order + 1> f{};
                         if (p.nu == -0.5) {
                             const double e = std::exp(-p.x);
                             for (int j = 0; j <= order; ++j) f[static_cast<std::size_t>(j)] = (j % 2 ? -e : e);
                         } else {
                             const auto d = calm_x_derivatives<order + 1>({p.nu, p.x}, c);
                             for (int j = 0; j <= order; ++j)
                                 f[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(j)].value;
                         }
                         std::array<double, order + 1> pw{}; // d^k/dx^k x^nu, divided by x^nu
                         pw[0] = 1.0;
                         for (int k = 1; k <= order; ++k)
                             pw[static_cast<std::size_t>(k)] =
                                 pw[static_cast<std::size_t>(k - 1)] * (p.nu - (k - 1)) / p.x;
                         double m = std::numeric_limits<double>::infinity();
                         for (int n = 0; n <= order; ++n) {
                             double sum = 0.0;
                             double mag = 0.0;
                             double binom = 1.0;
                             for (int k = 0; k <= n; ++k) {
                                 const double t = binom * pw[static_cast<std::size_t>(k)] *
                                                  f[static_cast<std::size_t>(n - k)];
                                 sum += t;
                                 mag += std::fabs(t);
                                 binom = binom * (n - k) / (k + 1);
                             }
                             m = std::min(m, Margin{(n % 2 ? -1.0 : 1.0) * sum, mag}.normalized());
                         }
                         return normalized(m);
                     },
                     true, grid_closed_m_half_zero});

    cases.push_back({"h_negative_derivative", "h'(nu) < 0 and h(nu) > 0", Arity::Nu, nu_only_gt(-1.0),
                     [](const GridPoint& p, const QuadConfig&) {
                         const double h = th4_h(p.nu);
                         const double hp = th4_h_prime(p.nu);
                         return worst({less(0.0, h), less(hp, 0.0)});
                     },
                     true, grid_nu_only(-1.0, 20.0)});

    return cases;
}

/// Cases outside the main catalog that are expected to expose failures.
///
/// FX3_raw: the M-level form of FX3,
///   M_nu(x) > x^nu sinh(x/(2nu+3)) / (sqrt(pi) 2^{nu-1} Gamma(nu+3/2))
///             - x^nu e^{x^2/(4(nu+1))} / (2^nu Gamma(nu+1)),
/// on nu in (-1, -1/2], evaluated with the power series.  The sinh lower
/// bound for L_nu it rests on exceeds L_nu near x = 0 once nu < -1/2 (leading
/// ratio 2/(2nu+3) > 1), so violations are expected there.
inline std::vector<InequalityCase> diagnostic_cases() {
    using namespace detail;
    std::vector<InequalityCase> cases;
    cases.push_back(
        {"FX3_raw",
         "M_nu(x) > x^nu sinh(x/(2nu+3))/(sqrt(pi) 2^{nu-1} Gamma(nu+3/2)) - x^nu e^{x^2/(4(nu+1))}/(2^nu Gamma(nu+1))",
         Arity::NuX, [](const GridPoint& p) { return p.nu > -1.0 && p.nu <= -0.5 && p.x > 0.0; },
         [](const GridPoint& p, const QuadConfig&) {
             const double nu = p.nu;
             const double x = p.x;
             // Everything divided by x^nu.
             const double m = std::exp(-nu * std::log(x)) * struve_m_series({nu, x}).value;
             const double a = std::exp(-0.5 * std::log(std::numbers::pi) - (nu - 1.0) * std::numbers::ln2 -
                                       log_gamma(nu + 1.5)) *
                              std::sinh(x / (2.0 * nu + 3.0));
             const double log_b = x * x / (4.0 * (nu + 1.0)) - nu * std::numbers::ln2 - log_gamma(nu + 1.0);
             if (log_b > 700.0) return normalized(1.0); // right side is -inf in double
             return less(a - std::exp(log_b), m);
         },
         true,
         [] { return GridSpec{with_values(log_above(-1.0, -0.5, 25), {-0.5}), logspace(1e-3, 20.0, 25), {},
                              Spacing::Log}; }});
    return cases;
}

/// Looks up a case by id in the catalog and the diagnostic list.
inline std::optional<InequalityCase> find_case(const std::string& id) {
    for (auto& c : catalog())
        if (c.id == id) return c;
    for (auto& c : diagnostic_cases())
        if (c.id == id) return c;
    return std::nullopt;
}

/// Copy of a case with the claim reversed; used to show the verifier can fail.
inline InequalityCase flipped(const InequalityCase& c) {
    InequalityCase f = c;
    f.id = c.id + "_flipped";
    f.claim = "NOT (" + c.claim + ")";
    f.margin = [m = c.margin](const GridPoint& p, const QuadConfig& cfg) {
        const Margin r = m(p, cfg);
        return Margin{-r.value, r.scale};
    };
    return f;
}

// ---------------------------------------------------------------------------
// Executor

inline std::vector<GridPoint> grid_points(const GridSpec& grid, Arity arity) {
    std::vector<GridPoint> pts;
    const std::vector<double>& ys = grid.y_values.empty() ? grid.x_values : grid.y_values;
    for (double nu : grid.nu_values) {
        if (arity == Arity::Nu) {
            pts.push_back({nu, 0.0, std::nullopt});
            continue;
        }
        for (double x : grid.x_values) {
            if (arity == Arity::NuX) {
                pts.push_back({nu, x, std::nullopt});
                continue;
            }
            for (double y : ys) pts.push_back({nu, x, y});
        }
    }
    return pts;
}

/// Evaluates one case over a grid.  Evaluation errors at a point are recorded
/// as violations with no margin.
inline VerificationReport run_case(const InequalityCase& c, const GridSpec& grid, const QuadConfig& cfg = {}) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.case_id = c.id;
    for (const GridPoint& p : grid_points(grid, c.arity)) {
        if (!c.domain(p)) {
            ++rep.points_skipped;
            continue;
        }
        ++rep.points_tested;
        double m;
        try {
            m = c.margin(p, cfg).normalized();
        } catch (const std::exception& e) {
            rep.violations.push_back({p, std::nullopt, e.what()});
            continue;
        }
        if (std::isnan(m)) {
            rep.violations.push_back({p, std::nullopt, "margin evaluated to NaN"});
            continue;
        }
        if (!rep.min_margin || m < *rep.min_margin) {
            rep.min_margin = m;
            rep.argmin = p;
        }
        if (m < -inconclusive_band)
            rep.violations.push_back({p, m, {}});
        else if (m <= inconclusive_band)
            rep.inconclusive.push_back({p, m, {}});
    }
    if (rep.points_tested == 0)
        throw EmptyDomainError("run_case: no grid point satisfies the domain of case " + c.id);
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

inline VerificationReport run_case_standard(const InequalityCase& c, const QuadConfig& cfg = {}) {
    return run_case(c, c.standard_grid(), cfg);
}

/// Outcome of one case within run_all: a report, or the error that prevented one.
struct CaseOutcome {
    std::string case_id;
    std::optional<VerificationReport> report;
    std::string error;
};

namespace detail {

inline CaseOutcome run_guarded(const InequalityCase& c, const GridSpec& grid, const QuadConfig& cfg) {
    try {
        return {c.id, run_case(c, grid, cfg), {}};
    } catch (const std::exception& e) {
        return {c.id, std::nullopt, e.what()};
    }
}

} // namespace detail

/// Every catalog case on its own standard grid.
inline std::vector<CaseOutcome> run_all(const QuadConfig& cfg = {}) {
    std::vector<CaseOutcome> out;
    for (const auto& c : catalog()) out.push_back(detail::run_guarded(c, c.standard_grid(), cfg));
    return out;
}

/// Every catalog case on one shared grid.
inline std::vector<CaseOutcome> run_all(const GridSpec& grid, const QuadConfig& cfg = {}) {
    std::vector<CaseOutcome> out;
    for (const auto& c : catalog()) out.push_back(detail::run_guarded(c, grid, cfg));
    return out;
}

/// Smallest normalized margin over all successful reports.
inline std::optional<double> global_min_margin(const std::vector<CaseOutcome>& outcomes) {
    std::optional<double> m;
    for (const auto& o : outcomes)
        if (o.report && o.report->min_margin && (!m || *o.report->min_margin < *m)) m = o.report->min_margin;
    return m;
}

} // namespace struvekit
