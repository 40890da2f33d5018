#pragma once
//
// Double-exponential (tanh-sinh) rule for integrals of the form
//
//   int_0^1 (1 - t^2)^b f(t) dt,   b > -1.
//
// The interval is split at t = 1/2.  The left half uses the plain rule.  On
// the right half the substitution 1 - t = u = v^p / 2 with p = 1/(b+1)
// (p = 1 when b >= 0) absorbs the factor u^b into the Jacobian, so the
// transformed integrand stays bounded even as b -> -1.  All endpoint
// quantities (1 - t, log(1 - t^2)) are carried in log form, which keeps them
// exact where 1 - t underflows.
//
// Base abscissas in v are the logistic map v = 1/(1 + exp(-pi sinh tau)) on
// the nested grids tau = k 2^{-level}; they are built once and shared.
//

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "../errors.hpp"
#include "../types.hpp"

namespace struvekit::detail {

inline constexpr int ts_max_level = 12;
inline constexpr double ts_tau_max = 4.5;

struct TsNode {
    double log_v;
    double log_1mv;
    double dv_dtau;
};

/// Point handed to integrands: t, 1 - t and log(1 - t^2), each accurate on its own.
struct Abscissa {
    double t;
    double one_minus_t;
    double log_one_minus_t2;
};

inline double softplus(double y) { return y > 0.0 ? y + std::log1p(std::exp(-y)) : std::log1p(std::exp(y)); }

inline TsNode make_ts_node(double tau) {
    const double z = std::numbers::pi * std::sinh(tau);
    const double log_v = -softplus(-z);
    const double log_1mv = -softplus(z);
    const double w = std::exp(log_v + log_1mv) * std::numbers::pi * std::cosh(tau);
    return {log_v, log_1mv, w};
}

// Nodes first appearing at each level: level 0 holds the integers in
// [-tau_max, tau_max]; level l > 0 holds the odd multiples of 2^{-l}.
inline const std::array<std::vector<TsNode>, ts_max_level + 1>& ts_levels() {
    static const auto table = [] {
        std::array<std::vector<TsNode>, ts_max_level + 1> levels;
        for (int k = -static_cast<int>(ts_tau_max); k <= static_cast<int>(ts_tau_max); ++k)
            levels[0].push_back(make_ts_node(static_cast<double>(k)));
        for (int l = 1; l <= ts_max_level; ++l) {
            const double h = std::ldexp(1.0, -l);
            const int jmax = static_cast<int>(ts_tau_max / h);
            for (int j = -jmax; j <= jmax; ++j) {
                if (j % 2 == 0) continue;
                levels[static_cast<std::size_t>(l)].push_back(make_ts_node(j * h));
            }
        }
        return levels;
    }();
    return table;
}

/// Abscissa with its weight (dv/dtau, Jacobian and (1-t^2)^b folded in; the
/// step 2^{-level} is applied by the caller).
struct WeightedAbscissa {
    Abscissa at;
    double weight;
};

/// Maps one base node to its two abscissas (left and right halves of [0,1]).
inline void map_node(const TsNode& n, double b, std::vector<WeightedAbscissa>& out) {
    {
        const double t = 0.5 * std::exp(n.log_v);
        const double l1mt2 = std::log1p(-t * t);
        const double w = 0.5 * n.dv_dtau * std::exp(b * l1mt2);
        if (w > 0.0) out.push_back({{t, 1.0 - t, l1mt2}, w});
    }
    {
        const double p = b < 0.0 ? 1.0 / (b + 1.0) : 1.0;
        const double log_u = -std::numbers::ln2 + p * n.log_v;
        const double u = std::exp(log_u);
        const double log_2mu = std::log(2.0 - u);
        const double w = n.dv_dtau * 0.5 * p *
                         std::exp(-b * std::numbers::ln2 + (p * (b + 1.0) - 1.0) * n.log_v +
                                  b * log_2mu);
        if (w > 0.0) out.push_back({{1.0 - u, u, log_u + log_2mu}, w});
    }
}

/// Every abscissa of the rule at `level` (all coarser levels included).
inline std::vector<WeightedAbscissa> singular_rule(double b, int level) {
    std::vector<WeightedAbscissa> out;
    const auto& levels = ts_levels();
    for (int l = 0; l <= level; ++l)
        for (const TsNode& n : levels[static_cast<std::size_t>(l)]) map_node(n, b, out);
    return out;
}

struct QuadResult {
    double value = 0.0;
    double abs_err = 0.0;
    int level = 0;
};

/// Integrates N kernels at once: int_0^1 (1-t^2)^b f_k(t) dt for the
/// components of f(Abscissa) -> std::array<double, N>.  Refinement continues
/// until 2 |S_l - S_{l-1}| meets the tolerance for every component.
template <std::size_t N, typename F>
std::array<QuadResult, N> integrate_singular(double b, F&& f, const QuadConfig& cfg,
                                             const char* who = "quadrature") {
    cfg.validate();
    if (!(b > -1.0)) throw DomainError(std::string(who) + ": weight exponent must exceed -1");

    constexpr double eps = std::numeric_limits<double>::epsilon();
    const auto& levels = ts_levels();
    std::array<double, N> total{};
    std::array<double, N> total_abs{};
    std::array<double, N> prev{};
    std::vector<WeightedAbscissa> pts;

    for (int l = 0; l <= cfg.max_level; ++l) {
        pts.clear();
        for (const TsNode& n : levels[static_cast<std::size_t>(l)]) map_node(n, b, pts);
        for (const auto& pa : pts) {
            const std::array<double, N> v = f(pa.at);
            for (std::size_t k = 0; k < N; ++k) {
                total[k] += pa.weight * v[k];
                total_abs[k] += pa.weight * std::fabs(v[k]);
            }
        }
        const double h = std::ldexp(1.0, -l);
        std::array<QuadResult, N> res{};
        bool done = l >= 3;
        for (std::size_t k = 0; k < N; ++k) {
            const double s = h * total[k];
            const double floor = 16.0 * eps * h * total_abs[k];
            const double err = 2.0 * std::fabs(s - prev[k]);
            const double tol = std::max({cfg.abs_tol, cfg.rel_tol * std::fabs(s), floor});
            if (!(err <= tol)) done = false;
            res[k] = {s, err + floor, l};
            prev[k] = s;
        }
        if (done) return res;
    }
    throw NonConvergence(std::string(who) + ": tolerance not met after " +
                         std::to_string(cfg.max_level) + " refinement levels");
}

/// Scalar convenience wrapper.
template <typename F>
QuadResult integrate_singular1(double b, F&& f, const QuadConfig& cfg, const char* who = "quadrature") {
    return integrate_singular<1>(
        b, [&](const Abscissa& a) { return std::array<double, 1>{f(a)}; }, cfg, who)[0];
}

} // namespace struvekit::detail
