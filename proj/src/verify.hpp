// Exact-versus-estimate convergence harness: ratio tables with CSV and SVG
// output.
#ifndef FIBEULER_VERIFY_HPP
#define FIBEULER_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "core.hpp"

namespace fibeuler {

struct RatioRow {
    long n;
    Real log_exact;  // log a_n, from the exact integer
    Real log_asym;   // log of the closed-form estimate
    Real ratio;      // exp(log_exact - log_asym)
};

struct RatioReport {
    ShiftParam z;
    std::vector<RatioRow> rows;  // strictly increasing in n
    std::string meta;            // precision/truncation settings of the run
    int digits;                  // significant digits used for text output
};

// Computes the exact terms once, then one row per n = stride, 2 stride, ...
// up to n_max. Rows whose exact term is zero (z = -1 has a_1 = 0) are
// skipped: their ratio is not defined.
RatioReport ratio_table(ShiftParam z, long n_max, long stride,
                        const PrecisionContext& ctx, int threads = 1);

// Header `n,ratio,log_exact,log_asym`, one row per table entry, plain
// decimal, deterministic byte-for-byte for a fixed report.
void emit_csv(const RatioReport& rep, std::ostream& out);
void emit_csv(const RatioReport& rep, const std::string& path);

// Single-panel scatter of ratio against n on a fixed [0.5, 1.05] y-range
// (values outside are clamped onto the border), with a dashed reference
// line at ratio = 1. Pure standalone SVG text.
void emit_svg(const RatioReport& rep, std::ostream& out);
void emit_svg(const RatioReport& rep, const std::string& path);

}  // namespace fibeuler

#endif
