// Root solving for the saddle condition x U'(x)/U(x) = n, plus the
// asymptotic expansion of that root.
#ifndef FIBEULER_SADDLE_HPP
#define FIBEULER_SADDLE_HPP

#include "core.hpp"

namespace fibeuler {

struct SaddlePoint {
    long n;
    ShiftParam z;
    Real r;             // the root, in (0, phi-1)
    Real residual;      // |saddle_lhs(r) - n| at acceptance
    long truncation_K;  // series truncation of the accepted evaluation
};

// Finds the unique root of saddle_lhs(x, z) = n in (0, phi-1).
// Strategy: bracket around the expansion seed (falling back to a full-domain
// bracket), then Newton steps with a finite-difference slope, each step
// safeguarded by bisection so the bracket never breaks. The residual
// tolerance is 10^(2 - target_digits) relative to n; failure to meet it
// raises ConvergenceError rather than returning an unconverged root.
SaddlePoint solve_saddle(long n, ShiftParam z, const PrecisionContext& ctx);

// The expansion of the root around n = infinity:
//   r_n = phi - 1 - phi^(z/2-1)/(5^(1/4) sqrt(n)) + phi^(z-1)/(2 sqrt(5) n)
// `terms` = 3 evaluates all three terms; `terms` = 2 drops the 1/n term
// (the variant whose downstream ratio demonstrably fails to approach 1).
Real r_expansion(long n, ShiftParam z, const PrecisionContext& ctx, int terms = 3);

}  // namespace fibeuler

#endif
