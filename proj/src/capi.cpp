// C binding over the core library: opaque handles, status codes, and a
// thread-local error slot.
#include "fibeuler.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "constants.hpp"
#include "core.hpp"
#include "exact.hpp"
#include "oeis.hpp"
#include "saddle.hpp"
#include "verify.hpp"

using namespace fibeuler;

struct fe_sequence {
    ExactSequence seq;
};

struct fe_report {
    RatioReport rep;
};

namespace {

thread_local std::string tl_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fe_status fail(fe_status code, const char* what) {
    tl_error = what;
    return code;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
fe_status guarded(Fn&& fn) {
    try {
        fn();
        return FE_OK;
    } catch (const DomainError& e) {
        return fail(FE_ERR_DOMAIN, e.what());
    } catch (const ConvergenceError& e) {
        return fail(FE_ERR_CONVERGENCE, e.what());
    } catch (const ParseError& e) {
        return fail(FE_ERR_PARSE, e.what());
    } catch (const NetworkError& e) {
        return fail(FE_ERR_NETWORK, e.what());
    } catch (const IoError& e) {
        return fail(FE_ERR_IO, e.what());
    } catch (const InternalError& e) {
        return fail(FE_ERR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(FE_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(FE_ERR_INTERNAL, "unknown failure");
    }
}

fe_status require(bool cond, const char* what) {
    return cond ? FE_OK : fail(FE_ERR_DOMAIN, what);
}

PrecisionContext context_for(int digits) {
    if (digits < 1) throw DomainError("digit count must be positive");
    return PrecisionContext::for_target(digits);
}

// Certifies a series constant by escalation and renders `digits` digits.
template <typename Compute>
fe_status certified_decimal(int digits, char** out_decimal, int* out_certified,
                            Compute&& compute) {
    if (out_decimal == nullptr) return fail(FE_ERR_DOMAIN, "out_decimal is NULL");
    return guarded([&] {
        PrecisionContext ctx = context_for(digits);
        PrecisionContext up = ctx.escalated();
        Real base = compute(ctx);
        Real high = compute(up);
        int certified = certified_digits(base, high, up.work_digits);
        if (certified < digits)
            throw ConvergenceError("only " + std::to_string(certified) +
                                   " digits certified, " + std::to_string(digits) +
                                   " requested");
        if (out_certified != nullptr) *out_certified = certified;
        *out_decimal = dup_string(high.to_decimal_prefix(digits));
    });
}

}  // namespace

extern "C" {

const char* fe_version(void) { return "1.0.0"; }

const char* fe_last_error(void) { return tl_error.c_str(); }

void fe_free_string(char* s) { std::free(s); }

/* ------------------------------------------------------------------ */

fe_status fe_fibonacci(long m, char** out_decimal) {
    if (fe_status s = require(out_decimal != nullptr, "out_decimal is NULL"); s) return s;
    return guarded([&] { *out_decimal = dup_string(fibonacci(m).get_str()); });
}

fe_status fe_golden_ratio(int digits, char** out_decimal) {
    if (fe_status s = require(out_decimal != nullptr, "out_decimal is NULL"); s) return s;
    return guarded([&] {
        PrecisionContext ctx = context_for(digits);
        *out_decimal = dup_string(golden_ratio(ctx).to_decimal_prefix(digits));
    });
}

/* ------------------------------------------------------------------ */

fe_status fe_euler_transform(int z, long n_max, int threads, fe_sequence** out) {
    if (fe_status s = require(out != nullptr, "out is NULL"); s) return s;
    return guarded([&] {
        *out = new fe_sequence{euler_transform(ShiftParam(z), n_max, threads)};
    });
}

long fe_sequence_size(const fe_sequence* seq) {
    return seq == nullptr ? 0 : static_cast<long>(seq->seq.terms.size());
}

fe_status fe_sequence_term(const fe_sequence* seq, long n, char** out_decimal) {
    if (fe_status s = require(seq != nullptr, "sequence is NULL"); s) return s;
    if (fe_status s = require(out_decimal != nullptr, "out_decimal is NULL"); s) return s;
    if (n < 0 || n >= static_cast<long>(seq->seq.terms.size()))
        return fail(FE_ERR_DOMAIN, "term index out of range");
    return guarded([&] { *out_decimal = dup_string(seq->seq.terms[n].get_str()); });
}

fe_status fe_sequence_write_bfile(const fe_sequence* seq, const char* path) {
    if (fe_status s = require(seq != nullptr, "sequence is NULL"); s) return s;
    if (fe_status s = require(path != nullptr, "path is NULL"); s) return s;
    return guarded([&] { write_bfile(std::string(path), seq->seq); });
}

void fe_sequence_free(fe_sequence* seq) { delete seq; }

/* ------------------------------------------------------------------ */

fe_status fe_constant_S(int z, int digits, char** out_decimal, int* out_certified) {
    return certified_decimal(digits, out_decimal, out_certified,
                             [&](const PrecisionContext& ctx) {
                                 return constant_S(ShiftParam(z), ctx).value;
                             });
}

fe_status fe_constant_S_hyperbolic(int digits, char** out_decimal, int* out_certified) {
    return certified_decimal(digits, out_decimal, out_certified,
                             [&](const PrecisionContext& ctx) {
                                 return constant_S_hyperbolic(ctx).value;
                             });
}

fe_status fe_constant_c(int z, int digits, char** out_decimal, int* out_certified) {
    return certified_decimal(digits, out_decimal, out_certified,
                             [&](const PrecisionContext& ctx) {
                                 return constant_c(ShiftParam(z), ctx).value;
                             });
}

fe_status fe_asymptotic_log(long n, int z, int digits, char** out_decimal) {
    if (fe_status s = require(out_decimal != nullptr, "out_decimal is NULL"); s) return s;
    return guarded([&] {
        PrecisionContext ctx = context_for(digits);
        Real value = log_asymptotic_a(n, ShiftParam(z), ctx);
        *out_decimal = dup_string(value.to_string(digits));
    });
}

fe_status fe_asymptotic_decimal(long n, int z, int digits, char** out_mantissa,
                                long* out_exp10) {
    if (fe_status s = require(out_mantissa != nullptr, "out_mantissa is NULL"); s) return s;
    if (fe_status s = require(out_exp10 != nullptr, "out_exp10 is NULL"); s) return s;
    return guarded([&] {
        PrecisionContext ctx = context_for(digits);
        DecimalScientific d = asymptotic_a(n, ShiftParam(z), ctx, digits);
        *out_mantissa = dup_string(d.mantissa);
        *out_exp10 = d.exponent10;
    });
}

/* ------------------------------------------------------------------ */

fe_status fe_saddle(long n, int z, int digits, char** out_r, char** out_r_expansion,
                    char** out_abs_diff, double* out_scaled_diff, char** out_residual,
                    long* out_truncation) {
    return guarded([&] {
        PrecisionContext ctx = context_for(digits);
        ShiftParam shift(z);
        SaddlePoint sp = solve_saddle(n, shift, ctx);
        Real expansion = r_expansion(n, shift, ctx, 3);
        Real diff = abs(sp.r - expansion);

        if (out_r != nullptr) *out_r = dup_string(sp.r.to_decimal_prefix(digits));
        if (out_r_expansion != nullptr)
            *out_r_expansion = dup_string(expansion.to_decimal_prefix(digits));
        if (out_abs_diff != nullptr) *out_abs_diff = dup_string(diff.to_string(6));
        if (out_scaled_diff != nullptr) {
            Real n_three_halves = sqrt(pow(Real::of(n, ctx.prec_bits()), 3L));
            *out_scaled_diff = (diff * n_three_halves).to_double();
        }
        if (out_residual != nullptr)
            *out_residual = dup_string(sp.residual.to_string(3));
        if (out_truncation != nullptr) *out_truncation = sp.truncation_K;
    });
}

fe_status fe_r_expansion(long n, int z, int digits, int terms, char** out_decimal) {
    if (fe_status s = require(out_decimal != nullptr, "out_decimal is NULL"); s) return s;
    return guarded([&] {
        PrecisionContext ctx = context_for(digits);
        Real value = r_expansion(n, ShiftParam(z), ctx, terms);
        *out_decimal = dup_string(value.to_decimal_prefix(digits));
    });
}

/* ------------------------------------------------------------------ */

fe_status fe_ratio_table(int z, long n_max, long stride, int digits, int threads,
                         fe_report** out) {
    if (fe_status s = require(out != nullptr, "out is NULL"); s) return s;
    return guarded([&] {
        PrecisionContext ctx = context_for(digits);
        *out = new fe_report{ratio_table(ShiftParam(z), n_max, stride, ctx, threads)};
    });
}

long fe_report_rows(const fe_report* rep) {
    return rep == nullptr ? 0 : static_cast<long>(rep->rep.rows.size());
}

fe_status fe_report_row(const fe_report* rep, long i, long* out_n, double* out_ratio,
                        double* out_log_exact, double* out_log_asym) {
    if (fe_status s = require(rep != nullptr, "report is NULL"); s) return s;
    if (i < 0 || i >= static_cast<long>(rep->rep.rows.size()))
        return fail(FE_ERR_DOMAIN, "row index out of range");
    const RatioRow& row = rep->rep.rows[i];
    if (out_n != nullptr) *out_n = row.n;
    if (out_ratio != nullptr) *out_ratio = row.ratio.to_double();
    if (out_log_exact != nullptr) *out_log_exact = row.log_exact.to_double();
    if (out_log_asym != nullptr) *out_log_asym = row.log_asym.to_double();
    return FE_OK;
}

fe_status fe_report_write_csv(const fe_report* rep, const char* path) {
    if (fe_status s = require(rep != nullptr, "report is NULL"); s) return s;
    if (fe_status s = require(path != nullptr, "path is NULL"); s) return s;
    return guarded([&] { emit_csv(rep->rep, std::string(path)); });
}

fe_status fe_report_write_svg(const fe_report* rep, const char* path) {
    if (fe_status s = require(rep != nullptr, "report is NULL"); s) return s;
    if (fe_status s = require(path != nullptr, "path is NULL"); s) return s;
    return guarded([&] { emit_svg(rep->rep, std::string(path)); });
}

void fe_report_free(fe_report* rep) { delete rep; }

/* ------------------------------------------------------------------ */

fe_status fe_fetch_bfile(const char* a_number, const char* cache_dir, int offline,
                         char** out_path) {
    if (fe_status s = require(a_number != nullptr, "a_number is NULL"); s) return s;
    return guarded([&] {
        std::string dir = cache_dir != nullptr ? cache_dir : default_cache_dir();
        OeisRef ref{a_number, 0};
        fetch_bfile(ref, dir, offline != 0);  // ensures the cache is warm
        if (out_path != nullptr) {
            std::string path = dir + "/b" + ref.a_number.substr(1) + ".txt";
            *out_path = dup_string(path);
        }
    });
}

fe_status fe_cross_check(int z, long count, const char* cache_dir, int offline,
                         int threads, char** out_summary) {
    CrossCheck result;
    fe_status status = guarded([&] {
        ShiftParam shift(z);
        std::string dir = cache_dir != nullptr ? cache_dir : default_cache_dir();
        OeisRef ref = oeis_ref_for(shift);
        std::string text = fetch_bfile(ref, dir, offline != 0);
        result = cross_check(shift, count, parse_bfile_text(text), threads);
    });
    if (status != FE_OK) return status;

    std::string summary;
    if (result.ok) {
        summary = result.a_number + ": " + std::to_string(result.compared) +
                  " terms agree (b-file anchored at index " +
                  std::to_string(result.anchor_index) + ")";
    } else if (result.mismatch_n >= 0) {
        summary = result.a_number + ": mismatch at n=" +
                  std::to_string(result.mismatch_n) + ": computed " +
                  result.expected.get_str() + ", catalogue has " +
                  result.found.get_str();
        status = fail(FE_ERR_MISMATCH, summary.c_str());
    } else {
        summary = result.a_number + ": only " + std::to_string(result.compared) +
                  " of " + std::to_string(result.requested) +
                  " requested terms available";
        status = fail(FE_ERR_MISMATCH, summary.c_str());
    }
    if (out_summary != nullptr) *out_summary = dup_string(summary);
    return status;
}

}  // extern "C"
