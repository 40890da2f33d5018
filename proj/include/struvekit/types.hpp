#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace struvekit {

/// Order nu and argument x of a Struve / Bessel evaluation.
struct EvalPoint {
    double nu = 0.0;
    double x = 0.0;

    friend bool operator==(const EvalPoint&, const EvalPoint&) = default;
};

/// Constraints on nu (and x) under which the various representations and
/// inequalities hold.  Stored as bit flags on demand by domain_tags().
enum class DomainTag : std::uint32_t {
    XPositive = 1u << 0,
    NuAboveMinusOne = 1u << 1,       // power series of I_nu
    NuAboveMinusThreeHalves = 1u << 2, // power series of L_nu
    NuAtLeastMinusHalf = 1u << 3,    // sign of M_nu
    NuAboveMinusHalf = 1u << 4,      // integral representation
    NuInMinusHalfZero = 1u << 5,     // -M_nu completely monotonic
    NuAboveHalf = 1u << 6,           // Turan-type bounds
    NuAtLeastHalf = 1u << 7,
    NuAbsBelowHalf = 1u << 8,
    NuAtLeastThreeHalves = 1u << 9,
};

inline std::uint32_t domain_tags(const EvalPoint& p) {
    auto bit = [](DomainTag t) { return static_cast<std::uint32_t>(t); };
    std::uint32_t tags = 0;
    if (p.x > 0.0) tags |= bit(DomainTag::XPositive);
    if (p.nu > -1.0) tags |= bit(DomainTag::NuAboveMinusOne);
    if (p.nu > -1.5) tags |= bit(DomainTag::NuAboveMinusThreeHalves);
    if (p.nu >= -0.5) tags |= bit(DomainTag::NuAtLeastMinusHalf);
    if (p.nu > -0.5) tags |= bit(DomainTag::NuAboveMinusHalf);
    if (p.nu >= -0.5 && p.nu <= 0.0) tags |= bit(DomainTag::NuInMinusHalfZero);
    if (p.nu > 0.5) tags |= bit(DomainTag::NuAboveHalf);
    if (p.nu >= 0.5) tags |= bit(DomainTag::NuAtLeastHalf);
    if (p.nu > -0.5 && p.nu < 0.5) tags |= bit(DomainTag::NuAbsBelowHalf);
    if (p.nu >= 1.5) tags |= bit(DomainTag::NuAtLeastThreeHalves);
    return tags;
}

inline bool has_tag(const EvalPoint& p, DomainTag t) {
    return (domain_tags(p) & static_cast<std::uint32_t>(t)) != 0;
}

enum class Method { Series, Quadrature, FoxWright, ClosedForm };

inline std::string_view to_string(Method m) {
    switch (m) {
    case Method::Series: return "series";
    case Method::Quadrature: return "quadrature";
    case Method::FoxWright: return "foxwright";
    case Method::ClosedForm: return "closedform";
    }
    return "unknown";
}

/// A computed value, its estimated absolute error and the route that produced it.
struct FuncValue {
    double value = 0.0;
    double abs_err = 0.0;
    Method method = Method::Series;
};

/// Stopping rule for the power-series and Fox-Wright routes.
struct SeriesConfig {
    double rel_tol = 1e-17; // next term / partial sum
    int max_terms = 1000;

    void validate() const {
        if (!(rel_tol > 0.0 && rel_tol <= 1e-6))
            throw ConfigError("SeriesConfig.rel_tol must lie in (0, 1e-6]");
        if (max_terms < 30) throw ConfigError("SeriesConfig.max_terms must be >= 30");
    }
};

/// Double-exponential quadrature settings.  Refinement stops once successive
/// levels differ by at most max(abs_tol, rel_tol*|value|).
struct QuadConfig {
    double abs_tol = 1e-14;
    double rel_tol = 1e-14;
    int max_level = 10;
    bool oracle_mode = false;

    void validate() const {
        if (!(abs_tol > 0.0 && abs_tol <= 1e-6))
            throw ConfigError("QuadConfig.abs_tol must lie in (0, 1e-6]");
        if (!(rel_tol >= 0.0 && rel_tol <= 1e-6))
            throw ConfigError("QuadConfig.rel_tol must lie in [0, 1e-6]");
        if (max_level < 3 || max_level > 12)
            throw ConfigError("QuadConfig.max_level must lie in [3, 12]");
    }

    /// Tightened settings used by test oracles.
    static QuadConfig oracle() {
        QuadConfig c;
        c.abs_tol = 1e-16;
        c.rel_tol = 1e-15;
        c.max_level = 12;
        c.oracle_mode = true;
        return c;
    }
};

} // namespace struvekit
