// Series evaluation of log U(x), x U'(x)/U(x), and the curvature factor
// b(x) = x U'/U + x^2 (log U)'', where U(x) = prod_{k>=1} (1-x^k)^(-F_{k+z}).
//
// Every sum is truncated against a rigorous geometric majorant; the bound
// actually charged for the omitted tail is returned alongside the value.
// All series share the convergence disk |x| < phi - 1 = 1/phi; the k = 1
// summands have poles at x = phi - 1 itself.
#ifndef FIBEULER_LOGSERIES_HPP
#define FIBEULER_LOGSERIES_HPP

#include "core.hpp"

namespace fibeuler {

// A truncated series sum together with its truncation bookkeeping.
struct SeriesValue {
    Real value;
    long truncation_K;  // last index summed
    Real tail_bound;    // certified bound on the omitted tail, <= ctx.tail_tol()
};

// log U(x) = sum_{k>=1} x^k (F_z x^k + F_{z+1}) / (k (1 - x^k - x^{2k})).
// Domain: 0 < x < phi-1 (the k=1 denominator vanishes at phi-1).
SeriesValue log_u(const Real& x, ShiftParam z, const PrecisionContext& ctx);

// x U'(x)/U(x) = sum_{k>=1} x^k (F_{z+1}(x^{2k}+1) - F_z x^k (x^k - 2))
//                           / (x^{2k} + x^k - 1)^2.
// Strictly increasing on (0, phi-1); this is the root-solver's left side.
SeriesValue saddle_lhs(const Real& x, ShiftParam z, const PrecisionContext& ctx);

// The k-th summand of x^2 (log U)''(x), in closed form with t = x^k:
//   G(k,x) = t (F_z t ((k+1)t^3 - (5k+1)t^2 + 3(k-1)t - (4k-2))
//              - F_{z+1} ((k+1)t^4 - (k-1)t^3 + 6k t^2 + (k+1)t + (k-1)))
//            / (t^2 + t - 1)^3.
// Domain: 0 < x < phi-1 for k = 1 (pole at phi-1); 0 < x <= phi-1 for k >= 2.
Real g_term(long k, const Real& x, ShiftParam z, const PrecisionContext& ctx);

// b(x) = saddle_lhs(x) + sum_{k>=1} G(k,x); the factor under the square
// root of the coefficient estimate. Domain: 0 < x < phi-1.
SeriesValue b_of_x(const Real& x, ShiftParam z, const PrecisionContext& ctx);

// Individual summands of log_u and saddle_lhs, for term-level checks.
// Domain as for g_term: k = 1 requires x strictly below phi-1.
Real log_u_term(long k, const Real& x, ShiftParam z, const PrecisionContext& ctx);
Real saddle_lhs_term(long k, const Real& x, ShiftParam z, const PrecisionContext& ctx);

}  // namespace fibeuler

#endif
