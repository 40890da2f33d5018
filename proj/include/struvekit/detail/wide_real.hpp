#pragma once
//
// Extended-precision scalar used to accumulate the power series of L_nu and
// I_nu.  With libquadmath this is IEEE binary128 (113-bit significand);
// otherwise it degrades to long double.
//

#include <cmath>
#include <limits>

#if defined(STRUVEKIT_HAVE_QUADMATH)
#include <quadmath.h>
#endif

namespace struvekit::detail {

#if defined(STRUVEKIT_HAVE_QUADMATH)

using wide = __float128;

// 2^-112; FLT128_EPSILON needs -fext-numeric-literals.
inline constexpr wide wide_epsilon = static_cast<wide>(1.0) / static_cast<wide>(1ULL << 56) / static_cast<wide>(1ULL << 56);

inline wide wlog(wide a) { return logq(a); }
inline wide wexp(wide a) { return expq(a); }
inline wide wabs(wide a) { return fabsq(a); }
inline wide wlgamma(wide a) { return lgammaq(a); }

#else

using wide = long double;

inline constexpr wide wide_epsilon = std::numeric_limits<long double>::epsilon();

inline wide wlog(wide a) { return std::log(a); }
inline wide wexp(wide a) { return std::exp(a); }
inline wide wabs(wide a) { return std::fabs(a); }
inline wide wlgamma(wide a) { return std::lgamma(a); }

#endif

/// Neumaier's variant of Kahan summation.
template <typename Real>
struct CompensatedSum {
    Real sum = 0;
    Real comp = 0;

    void add(Real v) {
        const Real t = sum + v;
        const auto mag = [](Real a) { return a < 0 ? -a : a; };
        if (mag(sum) >= mag(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }

    Real value() const { return sum + comp; }
};

} // namespace struvekit::detail
