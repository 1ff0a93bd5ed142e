#include "constants.hpp"

#include <algorithm>
#include <cmath>

#include "saddle.hpp"

namespace fibeuler {

namespace {
constexpr long kMaxTerms = 1000000;

// Tail of the majorant 2 F_{z+2} phi^{-j} summed over j >= k+1; valid for
// k >= 2 (each summand of both S forms is <= 2 F_{z+2} phi^{-j} from j = 3 on).
Real s_tail_bound(const Real& fz2, const Real& phi_pow_next, const Real& phi) {
    return 2 * fz2 / (phi_pow_next * (2 - phi));  // 1 - 1/phi = 2 - phi
}
}  // namespace

SeriesValue constant_S(ShiftParam z, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits();
    const Real phi = golden_ratio(ctx);
    const Real tol = ctx.tail_tol();
    const Real fz = Real::of_integer(fibonacci(z.z), prec);
    const Real fz1 = Real::of_integer(fibonacci(z.z + 1), prec);
    const Real fz2 = fz + fz1;

    Real sum = Real::of(0L, prec);
    Real p = phi * phi;  // phi^k, starting at k = 2
    for (long k = 2; k <= kMaxTerms; ++k) {
        sum += (fz + fz1 * p) / ((p * p - p - 1) * k);
        Real p_next = p * phi;
        Real tail = s_tail_bound(fz2, p_next, phi);
        if (tail <= tol) return SeriesValue{std::move(sum), k, std::move(tail)};
        p = std::move(p_next);
    }
    throw ConvergenceError("S series failed to reach its tail tolerance");
}

SeriesValue constant_S_hyperbolic(const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits();
    const Real phi = golden_ratio(ctx);
    const Real tol = ctx.tail_tol();
    const Real log_phi = log(phi);  // = arccsch(2)
    const Real one = Real::of(1L, prec);

    Real sum = Real::of(0L, prec);
    Real p = phi * phi;
    for (long k = 2; k <= kMaxTerms; ++k) {
        sum += one / (2 * k * sinh(log_phi * k) - k);
        Real p_next = p * phi;
        Real tail = s_tail_bound(one, p_next, phi);
        if (tail <= tol) return SeriesValue{std::move(sum), k, std::move(tail)};
        p = std::move(p_next);
    }
    throw ConvergenceError("hyperbolic S series failed to reach its tail tolerance");
}

SeriesValue constant_c(ShiftParam z, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits();
    const Real x = golden_ratio_minus_one(ctx);
    const Real tol = ctx.tail_tol();
    const Real fz2 = Real::of_integer(fibonacci(z.z + 2), prec);
    const Real tenth = Real::of(1L, prec) / 10;
    const Real one_minus_x_sq = (1 - x) * (1 - x);

    Real sum = Real::of(0L, prec);
    Real x_next = pow(x, 3L);  // x^(k+1), starting at k = 2
    for (long k = 2; k <= kMaxTerms; ++k) {
        sum += g_term(k, x, z, ctx);
        if (x_next <= tenth) {
            // Tail of the majorant 2 F_{z+2} j x^j over j >= k+1.
            Real tail = 2 * fz2 * x_next * ((k + 1) - k * x) / one_minus_x_sq;
            if (tail <= tol) return SeriesValue{std::move(sum), k, std::move(tail)};
        }
        x_next *= x;
    }
    throw ConvergenceError("c series failed to reach its tail tolerance");
}

AsymptoticConstants certified_constants(ShiftParam z, const PrecisionContext& ctx) {
    const PrecisionContext up = ctx.escalated();
    SeriesValue s_base = constant_S(z, ctx);
    SeriesValue s_up = constant_S(z, up);
    SeriesValue c_base = constant_c(z, ctx);
    SeriesValue c_up = constant_c(z, up);

    int digits = std::min(certified_digits(s_base.value, s_up.value, up.work_digits),
                          certified_digits(c_base.value, c_up.value, up.work_digits));
    if (digits < ctx.target_digits)
        throw ConvergenceError("escalation certified only " + std::to_string(digits) +
                               " digits, target is " + std::to_string(ctx.target_digits));
    return AsymptoticConstants{z, std::move(s_up.value), std::move(c_up.value), digits};
}

Real log_asymptotic_a(long n, ShiftParam z, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("n must be >= 1");
    const mpfr_prec_t prec = ctx.prec_bits();
    const Real phi = golden_ratio(ctx);
    const Real sqrt5 = 2 * phi - 1;
    const Real fz = Real::of_integer(fibonacci(z.z), prec);
    const Real fz1 = Real::of_integer(fibonacci(z.z + 1), prec);
    const Real nn = Real::of(n, prec);
    const Real S = constant_S(z, ctx).value;

    Real log_coeff = log(Real::of(2L, prec)) + log(Real::pi(prec)) / 2 +
                     log(Real::of(5L, prec)) / 8;

    return (nn + Real::of(static_cast<long>(z.z), prec) / 4) * log(phi)
         + (phi - 5) / 10 * fz - fz1 / 10
         + 2 * sqrt(pow(phi, z.z)) * sqrt(nn) / sqrt(sqrt5)
         + S
         - log_coeff
         - 3 * log(nn) / 4;
}

DecimalScientific asymptotic_a(long n, ShiftParam z, const PrecisionContext& ctx,
                               int digits) {
    if (digits < 1) throw DomainError("digit count must be positive");
    const mpfr_prec_t prec = ctx.prec_bits();
    const Real log10_v = log_asymptotic_a(n, z, ctx) / log(Real::of(10L, prec));

    // Digits spent on the exponent's own magnitude are lost to the mantissa.
    double magnitude = std::abs(log10_v.to_double());
    int exponent_digits = magnitude < 10 ? 1 : static_cast<int>(std::log10(magnitude)) + 1;
    if (digits > ctx.work_digits - exponent_digits - 5)
        throw DomainError("requested mantissa digits exceed working precision "
                          "after paying for the exponent; raise work_digits");

    Real e_real = floor(log10_v);
    long e10 = mpfr_get_si(e_real.raw(), MPFR_RNDN);
    Real mant = exp((log10_v - e_real) * log(Real::of(10L, prec)));
    if (mant < 1) { mant *= Real::of(10L, prec); e10 -= 1; }
    if (mant >= Real::of(10L, prec)) { mant /= Real::of(10L, prec); e10 += 1; }
    return DecimalScientific{mant.to_decimal_prefix(digits), e10};
}

Real log_asymptotic_via_expansion(long n, ShiftParam z, const PrecisionContext& ctx,
                                  int terms) {
    const mpfr_prec_t prec = ctx.prec_bits();
    const Real L = log_asymptotic_a(n, z, ctx);
    const Real phi = golden_ratio(ctx);
    const Real sqrt5 = 2 * phi - 1;
    const Real nn = Real::of(n, prec);

    // The closed form's contribution of -n log r_n, to be swapped out.
    Real closed_root_part = nn * log(phi) + sqrt(pow(phi, z.z)) * sqrt(nn) / sqrt(sqrt5);
    Real r = r_expansion(n, z, ctx, terms);
    return L - closed_root_part - nn * log(r);
}

}  // namespace fibeuler
