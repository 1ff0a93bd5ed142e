#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logseries.hpp"
#include "saddle.hpp"

using namespace fibeuler;

namespace {

const PrecisionContext kCtx = PrecisionContext::for_target(40);

void check_root(long n, int z, const char* expect) {
    CAPTURE(n);
    CAPTURE(z);
    SaddlePoint sp = solve_saddle(n, ShiftParam(z), kCtx);
    Real want = Real::parse(expect, kCtx.prec_bits());
    CHECK(abs(sp.r - want) < Real::pow10(-30, kCtx.prec_bits()));
    CHECK(sp.n == n);
    CHECK(sp.z.z == z);
    CHECK(sp.truncation_K >= 1);
}

}  // namespace

TEST_CASE("roots across n and z") {
    check_root(10, 0, "0.495281394679631331228306556824963831555635935");
    check_root(100, 0, "0.577681819879678962408030281530004190107292957");
    check_root(1000, 0, "0.605084907863643931026294049493497944263434601");
    check_root(100, 1, "0.567093330636846447808267436433065700750605366");
    check_root(100, 2, "0.553610073842848297231092881352351963584026726");
    check_root(50, -1, "0.57351096004123205893494135149611873157977512");
}

TEST_CASE("residual contract holds and is self-consistent") {
    SaddlePoint sp = solve_saddle(500, ShiftParam(0), kCtx);
    // advertised residual within tolerance relative to n
    Real tol = 500L * Real::pow10(2 - kCtx.target_digits, kCtx.prec_bits());
    CHECK(sp.residual <= tol);
    // and honest: recomputing the left side reproduces it
    Real again = abs(saddle_lhs(sp.r, ShiftParam(0), kCtx).value - 500L);
    CHECK(abs(again - sp.residual) < Real::pow10(-35, kCtx.prec_bits()));
}

TEST_CASE("root stays inside the convergence disk") {
    for (long n : {1L, 2L, 7L, 30000L}) {
        CAPTURE(n);
        SaddlePoint sp = solve_saddle(n, ShiftParam(0), kCtx);
        CHECK(sp.r > 0L);
        CHECK(sp.r < golden_ratio_minus_one(kCtx));
    }
}

TEST_CASE("small n with a large shift still brackets") {
    // with a big shift the root is tiny; the seed-based bracket cannot hold it
    SaddlePoint sp = solve_saddle(1, ShiftParam(12), kCtx);
    CHECK(sp.r > 0L);
    CHECK(sp.r.to_double() < 0.01);
    Real back = saddle_lhs(sp.r, ShiftParam(12), kCtx).value;
    CHECK(abs(back - 1L).to_double() < 1e-20);
}

TEST_CASE("expansion of the root") {
    Real e3 = r_expansion(100, ShiftParam(0), kCtx, 3);
    Real want = Real::parse("0.5780855309489050274609489514871592066538",
                            kCtx.prec_bits());
    CHECK(abs(e3 - want) < Real::pow10(-35, kCtx.prec_bits()));

    // the default is the 3-term form
    CHECK(abs(r_expansion(100, ShiftParam(0), kCtx) - e3).is_zero());

    // 2-term form differs from the 3-term one by exactly phi^{z-1}/(2 sqrt5 n)
    Real e2 = r_expansion(100, ShiftParam(0), kCtx, 2);
    Real phi = golden_ratio(kCtx);
    Real gap = pow(phi, -1L) / (2L * sqrt(Real::of(5L, kCtx.prec_bits())) * 100L);
    CHECK(abs((e3 - e2) - gap) < Real::pow10(-35, kCtx.prec_bits()));

    CHECK_THROWS_AS(r_expansion(100, ShiftParam(0), kCtx, 4), DomainError);
    CHECK_THROWS_AS(r_expansion(100, ShiftParam(0), kCtx, 1), DomainError);
    CHECK_THROWS_AS(r_expansion(0, ShiftParam(0), kCtx), DomainError);
    CHECK_THROWS_AS(solve_saddle(0, ShiftParam(0), kCtx), DomainError);
}

TEST_CASE("scaled gap between root and expansion at n = 100") {
    SaddlePoint sp = solve_saddle(100, ShiftParam(0), kCtx);
    Real e3 = r_expansion(100, ShiftParam(0), kCtx, 3);
    Real scaled = abs(sp.r - e3) * Real::of(1000L, kCtx.prec_bits());
    CHECK(scaled.to_double() == doctest::Approx(0.40371106922606505).epsilon(1e-10));

    Real e2 = r_expansion(100, ShiftParam(0), kCtx, 2);
    Real scaled2 = abs(sp.r - e2) * Real::of(1000L, kCtx.prec_bits());
    CHECK(scaled2.to_double() == doctest::Approx(0.97825494202404010).epsilon(1e-10));
}

TEST_CASE("root grows toward the singularity as n grows") {
    Real prev = solve_saddle(10, ShiftParam(1), kCtx).r;
    for (long n : {40L, 160L, 640L}) {
        Real next = solve_saddle(n, ShiftParam(1), kCtx).r;
        CHECK(next > prev);
        prev = next;
    }
}
