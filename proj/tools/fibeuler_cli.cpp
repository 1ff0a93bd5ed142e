// Command-line front end. Links only the C interface of the shared library.
#include <fibeuler.h>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;
constexpr int kExitNetwork = 4;

int exit_code_for(fe_status status) {
    switch (status) {
        case FE_OK: return kExitOk;
        case FE_ERR_DOMAIN: return kExitUsage;
        case FE_ERR_NETWORK: return kExitNetwork;
        default: return kExitComputation;
    }
}

int report_failure(fe_status status) {
    std::fprintf(stderr, "error: %s\n", fe_last_error());
    return exit_code_for(status);
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { fe_free_string(ptr); }
    const char* get() const { return ptr != nullptr ? ptr : ""; }
};

int run_terms(int z, long n, int threads, const std::string& out_path) {
    fe_sequence* seq = nullptr;
    if (fe_status s = fe_euler_transform(z, n, threads, &seq); s != FE_OK)
        return report_failure(s);
    std::unique_ptr<fe_sequence, decltype(&fe_sequence_free)> guard(seq,
                                                                    fe_sequence_free);
    if (!out_path.empty()) {
        if (fe_status s = fe_sequence_write_bfile(seq, out_path.c_str()); s != FE_OK)
            return report_failure(s);
        std::printf("wrote %ld terms to %s\n", fe_sequence_size(seq), out_path.c_str());
        return kExitOk;
    }
    for (long i = 0; i < fe_sequence_size(seq); ++i) {
        OwnedString term;
        if (fe_status s = fe_sequence_term(seq, i, &term.ptr); s != FE_OK)
            return report_failure(s);
        std::printf("%ld %s\n", i, term.get());
    }
    return kExitOk;
}

int run_constants(int z, int digits) {
    OwnedString s_value, c_value, phi;
    int s_cert = 0, c_cert = 0;
    if (fe_status s = fe_constant_S(z, digits, &s_value.ptr, &s_cert); s != FE_OK)
        return report_failure(s);
    if (fe_status s = fe_constant_c(z, digits, &c_value.ptr, &c_cert); s != FE_OK)
        return report_failure(s);
    if (fe_status s = fe_golden_ratio(digits, &phi.ptr); s != FE_OK)
        return report_failure(s);
    std::printf("S(%d) = %s\n", z, s_value.get());
    std::printf("c(%d) = %s\n", z, c_value.get());
    std::printf("phi  = %s\n", phi.get());
    std::printf("certified digits: S %d, c %d (of %d requested)\n", s_cert, c_cert,
                digits);
    return kExitOk;
}

int run_saddle(long n, int z, int digits) {
    OwnedString r, expansion, diff, residual;
    double scaled = 0.0;
    long truncation = 0;
    if (fe_status s = fe_saddle(n, z, digits, &r.ptr, &expansion.ptr, &diff.ptr,
                                &scaled, &residual.ptr, &truncation);
        s != FE_OK)
        return report_failure(s);
    std::printf("n                 = %ld\n", n);
    std::printf("root              = %s\n", r.get());
    std::printf("expansion (3-term)= %s\n", expansion.get());
    std::printf("|root - expansion|= %s\n", diff.get());
    std::printf("scaled by n^(3/2) = %.6f\n", scaled);
    std::printf("residual          = %s\n", residual.get());
    std::printf("series truncation = %ld\n", truncation);
    return kExitOk;
}

int run_verify(int z, long n_max, long stride, int digits, int threads,
               const std::string& csv, const std::string& svg, bool with_oeis,
               bool offline, const std::string& cache_dir) {
    fe_report* rep = nullptr;
    if (fe_status s = fe_ratio_table(z, n_max, stride, digits, threads, &rep);
        s != FE_OK)
        return report_failure(s);
    std::unique_ptr<fe_report, decltype(&fe_report_free)> guard(rep, fe_report_free);

    long rows = fe_report_rows(rep);
    if (rows == 0) {
        std::fprintf(stderr, "error: ratio table came back empty\n");
        return kExitComputation;
    }

    bool in_band = true;
    long first_n = 0, last_n = 0;
    double first_ratio = 0.0, last_ratio = 0.0;
    bool have_first = false;
    for (long i = 0; i < rows; ++i) {
        long n = 0;
        double ratio = 0.0;
        fe_report_row(rep, i, &n, &ratio, nullptr, nullptr);
        if (n >= 10 && !(ratio > 0.0 && ratio < 1.05)) in_band = false;
        if (n >= 10 && !have_first) {
            first_n = n;
            first_ratio = ratio;
            have_first = true;
        }
        last_n = n;
        last_ratio = ratio;
    }
    bool improved = !have_first ||
                    std::fabs(1.0 - last_ratio) <= std::fabs(1.0 - first_ratio);

    std::printf("rows: %ld (n = %ld ... %ld)\n", rows, stride, last_n);
    if (have_first)
        std::printf("ratio at n=%-6ld %.6f\n", first_n, first_ratio);
    std::printf("ratio at n=%-6ld %.6f\n", last_n, last_ratio);
    std::printf("gate ratio in (0,1.05) for n>=10: %s\n", in_band ? "pass" : "FAIL");
    std::printf("gate |1-ratio| shrinking:         %s\n", improved ? "pass" : "FAIL");

    if (!csv.empty()) {
        if (fe_status s = fe_report_write_csv(rep, csv.c_str()); s != FE_OK)
            return report_failure(s);
        std::printf("csv: %s\n", csv.c_str());
    }
    if (!svg.empty()) {
        if (fe_status s = fe_report_write_svg(rep, svg.c_str()); s != FE_OK)
            return report_failure(s);
        std::printf("svg: %s\n", svg.c_str());
    }

    bool catalogue_ok = true;
    if (with_oeis) {
        OwnedString summary;
        fe_status s = fe_cross_check(z, 100, cache_dir.empty() ? nullptr : cache_dir.c_str(),
                                     offline ? 1 : 0, threads, &summary.ptr);
        if (s == FE_OK) {
            std::printf("catalogue: %s\n", summary.get());
        } else if (s == FE_ERR_MISMATCH) {
            std::printf("catalogue: FAIL (%s)\n", summary.get());
            catalogue_ok = false;
        } else {
            return report_failure(s);
        }
    }

    if (in_band && improved && catalogue_ok) {
        std::printf("verify: PASS\n");
        return kExitOk;
    }
    std::printf("verify: FAIL\n");
    return kExitComputation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and asymptotic coefficients of the Fibonacci-weighted "
                 "infinite product"};
    app.set_version_flag("--version", fe_version());
    app.set_config("--config", "", "read options from a key=value file");
    app.require_subcommand(1);

    int threads = 1;
    app.add_option("--threads", threads, "parallelism cap for exact expansion")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();

    // Shared option values with the contract's defaults.
    int z = 0;
    int digits = 30;
    long n_max = 5000;
    long stride = 50;

    auto* terms = app.add_subcommand("terms", "print exact terms in b-file format");
    terms->add_option("-z,--shift", z, "weight shift (>= -1)")->capture_default_str();
    terms->add_option("-N,--count", n_max, "highest index to compute")
        ->capture_default_str();
    std::string terms_out;
    terms->add_option("-o,--out", terms_out, "write to file instead of stdout");

    auto* constants = app.add_subcommand("constants", "print S(z), c(z), phi");
    constants->add_option("-z,--shift", z, "weight shift (>= -1)")->capture_default_str();
    constants->add_option("-d,--digits", digits, "certified digits to print")
        ->capture_default_str();

    auto* saddle = app.add_subcommand("saddle",
                                      "solve the saddle equation and compare with "
                                      "its expansion");
    long saddle_n = 0;
    saddle->add_option("-n,--index", saddle_n, "coefficient index n (>= 1)")
        ->required();
    saddle->add_option("-z,--shift", z, "weight shift (>= -1)")->capture_default_str();
    saddle->add_option("-d,--digits", digits, "digits to print")->capture_default_str();

    auto* verify = app.add_subcommand("verify",
                                      "exact-vs-estimate ratio run with gates");
    verify->add_option("-z,--shift", z, "weight shift (>= -1)")->capture_default_str();
    verify->add_option("-N,--count", n_max, "highest index")->capture_default_str();
    verify->add_option("-s,--stride", stride, "sampling stride")->capture_default_str();
    verify->add_option("-d,--digits", digits, "working target digits")
        ->capture_default_str();
    std::string csv_path, svg_path, cache_dir;
    verify->add_option("--csv", csv_path, "write the table as CSV");
    verify->add_option("--svg", svg_path, "write the scatter plot as SVG");
    bool with_oeis = false, offline = false;
    verify->add_flag("--oeis", with_oeis, "cross-check 100 terms against the catalogue");
    verify->add_flag("--offline", offline, "never touch the network");
    verify->add_option("--cache-dir", cache_dir,
                       "b-file cache ($FIBEULER_CACHE_DIR or ~/.cache/fibeuler)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (terms->parsed()) return run_terms(z, n_max, threads, terms_out);
    if (constants->parsed()) return run_constants(z, digits);
    if (saddle->parsed()) return run_saddle(saddle_n, z, digits);
    if (verify->parsed())
        return run_verify(z, n_max, stride, digits, threads, csv_path, svg_path,
                          with_oeis, offline, cache_dir);
    return kExitUsage;
}
