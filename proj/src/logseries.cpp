#include "logseries.hpp"

namespace fibeuler {

namespace {

// Hard iteration ceiling; the geometric tails below reach any practical
// tolerance in O(tail_exp) terms, so hitting this means the loop is wrong.
constexpr long kMaxTerms = 1000000;

struct FibWeights {
    FibWeights(ShiftParam z, mpfr_prec_t prec)
        : fz(Real::of_integer(fibonacci(z.z), prec)),
          fz1(Real::of_integer(fibonacci(z.z + 1), prec)),
          // Majorant scale: once t = x^k <= 1/10 each family's summand is
          // bounded by 2 (F_z + F_{z+1}) t (times k for the G family); the
          // factor 2 absorbs every denominator, which is then >= 0.89^3.
          majorant(2 * (fz + fz1)),
          tenth(Real::of(1L, prec) / 10) {}
    Real fz, fz1, majorant, tenth;
};

// Summand of log U at t = x^k: t (F_z t + F_{z+1}) / (k (1 - t - t^2)).
Real log_summand(const Real& t, long k, const FibWeights& w) {
    return t * (w.fz * t + w.fz1) / ((1 - t - t * t) * k);
}

// Summand of x U'/U at t = x^k: t (F_{z+1}(t^2+1) - F_z t (t-2)) / (t^2+t-1)^2.
Real lhs_summand(const Real& t, const FibWeights& w) {
    Real num = t * (w.fz1 * (t * t + 1) - w.fz * t * (t - 2));
    Real d = t * t + t - 1;
    return num / (d * d);
}

// Summand of x^2 (log U)'' at t = x^k (Horner in t).
Real g_summand(const Real& t, long k, const FibWeights& w) {
    Real p = (t * (k + 1) - (5 * k + 1)) * t * t + 3 * (k - 1) * t - (4 * k - 2);
    Real q = ((t * (k + 1) - (k - 1)) * t + 6 * k) * t * t + (k + 1) * t + (k - 1);
    Real d = t * t + t - 1;
    return t * (w.fz * t * p - w.fz1 * q) / (d * d * d);
}

void check_domain(const Real& x, const PrecisionContext& ctx, bool allow_upper) {
    if (x.sign() <= 0) throw DomainError("x must be positive");
    Real limit = golden_ratio_minus_one(ctx);
    if (allow_upper ? x > limit : x >= limit)
        throw DomainError("x must stay below phi-1 = 0.618...; the k=1 summand "
                          "has a pole there");
}

enum class Family { kLog, kLhs, kG };

// Shared summation loop. Stops at the first K whose certified geometric
// tail bound is <= tol and reports that bound.
SeriesValue sum_family(Family fam, const Real& x, const FibWeights& w,
                       const Real& tol, mpfr_prec_t prec) {
    Real sum = Real::of(0L, prec);
    Real t = x;
    for (long k = 1; k <= kMaxTerms; ++k) {
        switch (fam) {
            case Family::kLog: sum += log_summand(t, k, w); break;
            case Family::kLhs: sum += lhs_summand(t, w); break;
            case Family::kG: sum += g_summand(t, k, w); break;
        }
        Real t_next = t * x;
        if (t_next <= w.tenth) {
            // Tail over j >= k+1 of the majorant 2C x^j (2C j x^j for G):
            //   linear: 2C x^{k+1} / (1-x)
            //   G:      2C x^{k+1} ((k+1) - k x) / (1-x)^2
            Real tail = fam == Family::kG
                ? w.majorant * t_next * ((k + 1) - k * x) / ((1 - x) * (1 - x))
                : w.majorant * t_next / (1 - x);
            if (tail <= tol) return SeriesValue{std::move(sum), k, std::move(tail)};
        }
        t = std::move(t_next);
    }
    throw ConvergenceError("series tail failed to reach tolerance within " +
                           std::to_string(kMaxTerms) + " terms");
}

}  // namespace

SeriesValue log_u(const Real& x, ShiftParam z, const PrecisionContext& ctx) {
    check_domain(x, ctx, false);
    FibWeights w(z, ctx.prec_bits());
    return sum_family(Family::kLog, x, w, ctx.tail_tol(), ctx.prec_bits());
}

SeriesValue saddle_lhs(const Real& x, ShiftParam z, const PrecisionContext& ctx) {
    check_domain(x, ctx, false);
    FibWeights w(z, ctx.prec_bits());
    return sum_family(Family::kLhs, x, w, ctx.tail_tol(), ctx.prec_bits());
}

SeriesValue b_of_x(const Real& x, ShiftParam z, const PrecisionContext& ctx) {
    check_domain(x, ctx, false);
    FibWeights w(z, ctx.prec_bits());
    // Split the total tail budget between the two component series.
    Real half_tol = ctx.tail_tol() / 2;
    SeriesValue lhs = sum_family(Family::kLhs, x, w, half_tol, ctx.prec_bits());
    SeriesValue curv = sum_family(Family::kG, x, w, half_tol, ctx.prec_bits());
    return SeriesValue{lhs.value + curv.value,
                       std::max(lhs.truncation_K, curv.truncation_K),
                       lhs.tail_bound + curv.tail_bound};
}

Real g_term(long k, const Real& x, ShiftParam z, const PrecisionContext& ctx) {
    if (k < 1) throw DomainError("k must be >= 1");
    check_domain(x, ctx, k >= 2);
    FibWeights w(z, ctx.prec_bits());
    return g_summand(pow(x, k), k, w);
}

Real log_u_term(long k, const Real& x, ShiftParam z, const PrecisionContext& ctx) {
    if (k < 1) throw DomainError("k must be >= 1");
    check_domain(x, ctx, k >= 2);
    FibWeights w(z, ctx.prec_bits());
    return log_summand(pow(x, k), k, w);
}

Real saddle_lhs_term(long k, const Real& x, ShiftParam z, const PrecisionContext& ctx) {
    if (k < 1) throw DomainError("k must be >= 1");
    check_domain(x, ctx, k >= 2);
    FibWeights w(z, ctx.prec_bits());
    return lhs_summand(pow(x, k), w);
}

}  // namespace fibeuler
