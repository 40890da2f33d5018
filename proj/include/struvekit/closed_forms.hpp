#pragma once
//
// Elementary forms at the two half-integer orders, x > 0:
//
//   M_{-1/2}(x) = -sqrt(2/(pi x)) e^{-x}
//   M_{1/2}(x)  =  sqrt(2/(pi x)) (e^{-x} - 1)
//
// and their first two derivatives.  e^{-x} - 1 always goes through expm1.
//

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "errors.hpp"
#include "types.hpp"

namespace struvekit {

struct HalfOrderValues {
    double m_neg_half;
    double m_pos_half;
};

/// Value and first two derivatives of M at one point.
struct ClosedJet {
    double m;
    double dm;
    double d2m;
};

namespace detail {

inline void require_positive_x(double x, const char* who) {
    if (!(x > 0.0)) throw DomainError(std::string(who) + ": requires x > 0");
}

inline double sqrt_two_over_pi() { return std::sqrt(2.0 / std::numbers::pi); }

} // namespace detail

inline ClosedJet closed_jet_neg_half(double x) {
    detail::require_positive_x(x, "closed form M_{-1/2}");
    const double c = detail::sqrt_two_over_pi();
    const double e = std::exp(-x);
    const double r = 1.0 / std::sqrt(x); // x^{-1/2}
    const double r3 = r / x;
    const double r5 = r3 / x;
    return {-c * r * e, c * e * (r + 0.5 * r3), -c * e * (r + r3 + 0.75 * r5)};
}

inline ClosedJet closed_jet_pos_half(double x) {
    detail::require_positive_x(x, "closed form M_{1/2}");
    const double c = detail::sqrt_two_over_pi();
    const double e = std::exp(-x);
    const double em1 = std::expm1(-x);
    const double r = 1.0 / std::sqrt(x);
    const double r3 = r / x;
    const double r5 = r3 / x;
    return {c * r * em1, c * (-e * r - 0.5 * r3 * em1), c * (e * (r + r3) + 0.75 * r5 * em1)};
}

/// (M_{-1/2}(x), M_{1/2}(x)) for x > 0.
inline HalfOrderValues closed_forms(double x) {
    detail::require_positive_x(x, "closed_forms");
    return {closed_jet_neg_half(x).m, closed_jet_pos_half(x).m};
}

/// True when nu is one of the two orders with an elementary form.
inline bool has_closed_form(double nu) { return nu == 0.5 || nu == -0.5; }

inline ClosedJet closed_jet(const EvalPoint& p) {
    if (p.nu == -0.5) return closed_jet_neg_half(p.x);
    if (p.nu == 0.5) return closed_jet_pos_half(p.x);
    throw DomainError("closed form available only at nu = +-1/2");
}

inline FuncValue closed_form_value(const EvalPoint& p) {
    const double v = closed_jet(p).m;
    return {v, 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(v), Method::ClosedForm};
}

} // namespace struvekit
