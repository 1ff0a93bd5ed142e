#include "saddle.hpp"

#include "logseries.hpp"

namespace fibeuler {

namespace {
constexpr int kMaxNewtonIters = 300;
}

SaddlePoint solve_saddle(long n, ShiftParam z, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("n must be >= 1");
    const mpfr_prec_t prec = ctx.prec_bits();
    const Real pm1 = golden_ratio_minus_one(ctx);
    const Real nn = Real::of(n, prec);

    long last_K = 0;
    auto f = [&](const Real& x) {
        SeriesValue s = saddle_lhs(x, z, ctx);
        last_K = s.truncation_K;
        return s.value - nn;
    };

    const Real res_tol = nn * Real::pow10(2 - ctx.target_digits, prec);

    // Bracket around the expansion seed; the left side errs 10% of the
    // remaining gap toward 0, the right side hugs the pole.
    const Real seed = r_expansion(n, z, ctx, 3);
    Real hi = pm1 - Real::pow10(-ctx.work_digits, prec);
    Real lo = seed - (pm1 - seed) / 10;
    if (!(lo > 0) || !(lo < hi)) lo = Real::pow10(-6, prec);
    Real f_lo = f(lo);
    Real f_hi = f(hi);
    if (f_lo.sign() > 0 || f_hi.sign() < 0) {
        // Full-domain fallback.
        lo = Real::pow10(-6, prec);
        hi = pm1 - Real::pow10(-6, prec);
        f_lo = f(lo);
        f_hi = f(hi);
        if (f_lo.sign() > 0) {
            lo = Real::pow10(1 - ctx.work_digits, prec);
            f_lo = f(lo);
        }
        if (f_hi.sign() < 0) {
            hi = pm1 - Real::pow10(-ctx.work_digits, prec);
            f_hi = f(hi);
        }
        if (f_lo.sign() > 0 || f_hi.sign() < 0)
            throw ConvergenceError("failed to bracket the saddle root for n=" +
                                   std::to_string(n));
    }

    Real x = seed;
    if (!(x > lo) || !(x < hi)) x = (lo + hi) / 2;
    Real fx = f(x);
    const Real h_scale = Real::pow10(-(ctx.work_digits / 3), prec);

    for (int iter = 0; iter < kMaxNewtonIters; ++iter) {
        if (abs(fx) <= res_tol)
            return SaddlePoint{n, z, std::move(x), abs(fx), last_K};

        if (fx.sign() < 0) lo = x; else hi = x;

        // Finite-difference slope; step backward when forward would
        // leave the bracket (the function is defined on all of (0, phi-1)).
        Real h = x * h_scale;
        if (x + h >= hi) h = -h;
        Real slope = (f(x + h) - fx) / h;

        Real next = (lo + hi) / 2;
        if (slope.sign() > 0) {
            Real candidate = x - fx / slope;
            if (candidate > lo && candidate < hi) next = std::move(candidate);
        }
        x = std::move(next);
        fx = f(x);
    }
    throw ConvergenceError("saddle root refinement did not converge for n=" +
                           std::to_string(n));
}

Real r_expansion(long n, ShiftParam z, const PrecisionContext& ctx, int terms) {
    if (n < 1) throw DomainError("n must be >= 1");
    if (terms != 2 && terms != 3)
        throw DomainError("expansion is defined for 2 or 3 terms");
    const mpfr_prec_t prec = ctx.prec_bits();
    const Real phi = golden_ratio(ctx);
    const Real sqrt5 = 2 * phi - 1;
    const Real sqrt_n = sqrt(Real::of(n, prec));
    const Real phi_half_z = sqrt(pow(phi, z.z));  // phi^(z/2)

    Real r = phi - 1 - phi_half_z / (phi * sqrt(sqrt5) * sqrt_n);
    if (terms == 3) r += pow(phi, z.z - 1) / (2 * sqrt5 * Real::of(n, prec));
    return r;
}

}  // namespace fibeuler
