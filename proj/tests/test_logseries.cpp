#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logseries.hpp"

using namespace fibeuler;

namespace {

const PrecisionContext kCtx = PrecisionContext::for_target(35);

Real real_of(const char* s) { return Real::parse(s, kCtx.prec_bits()); }

// |a - b| < 10^-33 in absolute terms (values here are O(1)..O(10^3)).
void check_close(const Real& a, const char* expect, int ulp_exp = -30) {
    Real b = real_of(expect);
    Real scale = max(abs(b), Real::of(1L, kCtx.prec_bits()));
    CHECK(abs(a - b) < scale * Real::pow10(ulp_exp, kCtx.prec_bits()));
}

}  // namespace

TEST_CASE("single-summand closed forms at x = 1/2") {
    Real half = real_of("0.5");
    // k = 1 summand of log U: t(F_z t + F_{z+1})/(1 - t - t^2) = 2 at z = 0
    check_close(log_u_term(1, half, ShiftParam(0), kCtx), "2");
    // k = 1 summand of x U'/U = 10 at z = 0
    check_close(saddle_lhs_term(1, half, ShiftParam(0), kCtx), "10");
    // k = 1 curvature summand; exactly 84 at x = 1/2, z = 0
    check_close(g_term(1, half, ShiftParam(0), kCtx), "84");
}

TEST_CASE("curvature summands across k, x, z") {
    check_close(g_term(2, real_of("0.5"), ShiftParam(0), kCtx),
                "1.920360631104432757325319308790383170548");
    check_close(g_term(3, real_of("0.4"), ShiftParam(1), kCtx),
                "0.2331927300002206151225834351460782547736");
    check_close(g_term(5, real_of("0.3"), ShiftParam(2), kCtx),
                "0.01976189920305257686959595787314146802919");
    check_close(g_term(2, real_of("0.3"), ShiftParam(-1), kCtx),
                "0.06422475059988841387671675119500489470766");
}

TEST_CASE("full series sums") {
    check_close(log_u(real_of("0.5"), ShiftParam(0), kCtx).value,
                "2.258156389977307215311392348616570547258");
    check_close(saddle_lhs(real_of("0.5"), ShiftParam(0), kCtx).value,
                "10.87119828718084324343617909411628419888");
    check_close(b_of_x(real_of("0.5"), ShiftParam(0), kCtx).value,
                "97.9412813924752453102127682942461722324");

    check_close(log_u(real_of("0.5"), ShiftParam(1), kCtx).value,
                "3.310971980833921328491801096771816359029");
    check_close(saddle_lhs(real_of("0.5"), ShiftParam(1), kCtx).value,
                "17.15367341668227216964913631103242583554");

    check_close(log_u(real_of("0.3"), ShiftParam(0), kCtx).value,
                "0.5536475222354362834445607447165035360838");
    check_close(b_of_x(real_of("0.3"), ShiftParam(0), kCtx).value,
                "2.829502150751391982954946445320375742166");

    check_close(b_of_x(real_of("0.55"), ShiftParam(2), kCtx).value,
                "1495.16558428518794852884301604456124018");
    check_close(b_of_x(real_of("0.25"), ShiftParam(-1), kCtx).value,
                "0.7222884060961526367607440163386835640774");
}

TEST_CASE("truncation bookkeeping is honest") {
    SeriesValue v = log_u(real_of("0.5"), ShiftParam(0), kCtx);
    CHECK(v.truncation_K > 1);
    CHECK(v.tail_bound <= kCtx.tail_tol());
    CHECK(v.tail_bound.sign() >= 0);

    // deeper tolerance leads to a deeper (never shallower) truncation
    PrecisionContext deeper(kCtx.work_digits + 20, kCtx.target_digits,
                            kCtx.tail_exp + 20);
    SeriesValue vd = log_u(real_of("0.5"), ShiftParam(0), deeper);
    CHECK(vd.truncation_K >= v.truncation_K);
    // and the two values agree within the shallower tail tolerance
    CHECK(abs(vd.value - v.value) < 2L * kCtx.tail_tol());
}

TEST_CASE("near the singularity the k-th root of the curvature summand "
          "approaches 1/phi") {
    // g(200, x)^(1/200) at x = 0.61 sits within 0.05 of phi - 1
    Real g = g_term(200, real_of("0.61"), ShiftParam(0), kCtx);
    Real root = pow(g, 1L / Real::of(200L, kCtx.prec_bits()));
    Real phi_minus_1 = golden_ratio_minus_one(kCtx);
    CHECK(abs(root - phi_minus_1).to_double() < 0.05);
}

TEST_CASE("domain boundaries") {
    Real zero = Real::of(0L, kCtx.prec_bits());
    Real negative = real_of("-0.25");
    Real at_pole = golden_ratio_minus_one(kCtx);
    Real beyond = real_of("0.63");

    CHECK_THROWS_AS(log_u(zero, ShiftParam(0), kCtx), DomainError);
    CHECK_THROWS_AS(log_u(negative, ShiftParam(0), kCtx), DomainError);
    CHECK_THROWS_AS(log_u(at_pole, ShiftParam(0), kCtx), DomainError);
    CHECK_THROWS_AS(log_u(beyond, ShiftParam(0), kCtx), DomainError);
    CHECK_THROWS_AS(saddle_lhs(at_pole, ShiftParam(0), kCtx), DomainError);
    CHECK_THROWS_AS(b_of_x(at_pole, ShiftParam(0), kCtx), DomainError);

    // k = 1 summands share the pole at phi - 1 ...
    CHECK_THROWS_AS(g_term(1, at_pole, ShiftParam(0), kCtx), DomainError);
    CHECK_THROWS_AS(g_term(1, beyond, ShiftParam(0), kCtx), DomainError);
    CHECK_THROWS_AS(log_u_term(1, beyond, ShiftParam(0), kCtx), DomainError);
    // ... but the k >= 2 summands are finite there and slightly beyond
    CHECK_NOTHROW(g_term(2, at_pole, ShiftParam(0), kCtx));
    CHECK(g_term(2, at_pole, ShiftParam(0), kCtx) > 0L);
    CHECK_NOTHROW(saddle_lhs_term(3, at_pole, ShiftParam(1), kCtx));

    CHECK_THROWS_AS(g_term(0, real_of("0.5"), ShiftParam(0), kCtx), DomainError);
    CHECK_THROWS_AS(g_term(-3, real_of("0.5"), ShiftParam(0), kCtx), DomainError);
}

TEST_CASE("decomposition: b = saddle_lhs + curvature series") {
    Real x = real_of("0.45");
    SeriesValue b = b_of_x(x, ShiftParam(1), kCtx);
    SeriesValue lhs = saddle_lhs(x, ShiftParam(1), kCtx);
    Real g_sum = Real::of(0L, kCtx.prec_bits());
    for (long k = 1; k <= b.truncation_K + 8; ++k)
        g_sum += g_term(k, x, ShiftParam(1), kCtx);
    CHECK(abs(b.value - (lhs.value + g_sum)) < 4L * kCtx.tail_tol());
}
