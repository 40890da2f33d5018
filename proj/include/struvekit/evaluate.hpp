#pragma once
//
// Route selection for M_nu and its x-derivatives: the elementary form at
// nu = +-1/2, quadrature for nu > -1/2, the power series on (-1, -1/2).
//

#include <cmath>
#include <limits>
#include <string>

#include "closed_forms.hpp"
#include "errors.hpp"
#include "quadrature.hpp"
#include "series.hpp"
#include "types.hpp"

namespace struvekit {

/// M_nu(x) for nu > -1, x > 0 by the most accurate available route.
inline FuncValue m_auto(const EvalPoint& p, const QuadConfig& qcfg = {}, const SeriesConfig& scfg = {}) {
    if (!(p.x > 0.0)) throw DomainError("M: requires x > 0");
    if (has_closed_form(p.nu)) return closed_form_value(p);
    if (p.nu > -0.5) return m_from_quadrature(p, qcfg);
    if (p.nu > -1.0) return struve_m_series(p, scfg);
    throw DomainError("M: requires nu > -1");
}

/// M, M' and M'' for nu >= -1/2, x > 0.
inline MJet m_jet(const EvalPoint& p, const QuadConfig& cfg = {}) {
    if (!(p.x > 0.0)) throw DomainError("M: requires x > 0");
    if (has_closed_form(p.nu)) {
        const ClosedJet j = closed_jet(p);
        const double e = 4.0 * std::numeric_limits<double>::epsilon();
        return {{j.m, e * std::fabs(j.m), Method::ClosedForm},
                {j.dm, e * std::fabs(j.dm), Method::ClosedForm},
                {j.d2m, e * std::fabs(j.d2m), Method::ClosedForm}};
    }
    if (p.nu > -0.5) return m_jet_from_quadrature(p, cfg);
    throw DomainError("M derivatives: require nu >= -1/2, got nu = " + std::to_string(p.nu));
}

} // namespace struvekit
