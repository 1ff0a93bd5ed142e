// The correction constants S(z) and c(z) and the closed-form coefficient
// estimate built from them.
#ifndef FIBEULER_CONSTANTS_HPP
#define FIBEULER_CONSTANTS_HPP

#include <string>

#include "core.hpp"
#include "logseries.hpp"

namespace fibeuler {

// S(z), c(z) certified together by precision escalation.
struct AsymptoticConstants {
    ShiftParam z;
    Real S;
    Real c;
    int digits_certified;  // >= ctx.target_digits on successful return
};

// S(z) = sum_{k>=2} (F_z + F_{z+1} phi^k) / ((phi^{2k} - phi^k - 1) k),
// truncated under a geometric tail bound.
SeriesValue constant_S(ShiftParam z, const PrecisionContext& ctx);

// The z = 0 value of S in its hyperbolic form
//   sum_{k>=2} 1 / (2k sinh(k log phi) - k),
// using arccsch(2) = log phi. Equals constant_S(0) to certified digits.
SeriesValue constant_S_hyperbolic(const PrecisionContext& ctx);

// c(z) = sum_{k>=2} G(k, phi-1): the n -> infinity limit of the k >= 2
// part of the curvature series, evaluated at the singularity abscissa
// (finite there for every k >= 2).
SeriesValue constant_c(ShiftParam z, const PrecisionContext& ctx);

// Computes S and c at ctx and again at ctx.escalated(), keeping the digits
// the runs agree on. Throws ConvergenceError if fewer than target_digits
// survive.
AsymptoticConstants certified_constants(ShiftParam z, const PrecisionContext& ctx);

// Natural log of the coefficient estimate
//   a_n ~ phi^(n + z/4)
//         * exp((phi/10 - 1/2) F_z - F_{z+1}/10 + 2 phi^(z/2) sqrt(n)/5^(1/4) + S)
//         / (2 sqrt(pi) 5^(1/8) n^(3/4)).
// Kept in log form: the value itself overflows any fixed-size float for
// large n.
Real log_asymptotic_a(long n, ShiftParam z, const PrecisionContext& ctx);

// The estimate rendered as mantissa times 10^exponent10; mantissa carries
// `digits` significant digits (truncated, not rounded). Refuses digit
// requests the working precision cannot support once the exponent's own
// magnitude is paid for.
struct DecimalScientific {
    std::string mantissa;
    long exponent10;
};
DecimalScientific asymptotic_a(long n, ShiftParam z, const PrecisionContext& ctx,
                               int digits);

// Diagnostic variant: the same estimate but with the closed form's
// 1/r^n machinery replaced by -n log(r_expansion(n, terms)). With
// terms = 3 it tracks log_asymptotic_a to O(1/sqrt(n)); with terms = 2 it
// is off by a constant (phi^z / (2 sqrt 5)), which is exactly why the
// downstream ratio then fails to approach 1.
Real log_asymptotic_via_expansion(long n, ShiftParam z, const PrecisionContext& ctx,
                                  int terms);

}  // namespace fibeuler

#endif
