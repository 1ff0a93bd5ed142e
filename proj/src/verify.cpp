#include "verify.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "constants.hpp"
#include "exact.hpp"

namespace fibeuler {

RatioReport ratio_table(ShiftParam z, long n_max, long stride,
                        const PrecisionContext& ctx, int threads) {
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    if (stride < 1) throw DomainError("stride must be >= 1");

    const mpfr_prec_t prec = ctx.prec_bits();
    ExactSequence seq = euler_transform(z, n_max, threads);

    RatioReport rep{z, {}, "", ctx.target_digits};
    std::ostringstream meta;
    meta << "z=" << z.z << " n_max=" << n_max << " stride=" << stride
         << " work_digits=" << ctx.work_digits
         << " target_digits=" << ctx.target_digits
         << " tail=1e-" << ctx.tail_exp;
    rep.meta = meta.str();

    for (long n = stride; n <= n_max; n += stride) {
        const mpz_class& a_n = seq.terms[n];
        if (a_n == 0) continue;
        Real log_exact = log(Real::of_integer(a_n, prec));
        Real log_asym = log_asymptotic_a(n, z, ctx);
        Real ratio = exp(log_exact - log_asym);
        rep.rows.push_back(RatioRow{n, std::move(log_exact), std::move(log_asym),
                                    std::move(ratio)});
    }
    return rep;
}

void emit_csv(const RatioReport& rep, std::ostream& out) {
    out << "n,ratio,log_exact,log_asym\n";
    for (const RatioRow& row : rep.rows) {
        out << row.n << ',' << row.ratio.to_string(rep.digits) << ','
            << row.log_exact.to_string(rep.digits) << ','
            << row.log_asym.to_string(rep.digits) << '\n';
    }
    if (!out) throw IoError("failed writing ratio table");
}

void emit_csv(const RatioReport& rep, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    emit_csv(rep, f);
    f.close();
    if (!f) throw IoError("failed writing: " + path);
}

namespace {

// Plot geometry: fixed canvas, fixed y-range.
constexpr double kWidth = 720, kHeight = 480;
constexpr double kLeft = 64, kRight = 700, kTop = 24, kBottom = 432;
constexpr double kYMin = 0.5, kYMax = 1.05;

double x_pos(long n, long n_max) {
    return kLeft + (kRight - kLeft) * static_cast<double>(n) / static_cast<double>(n_max);
}

double y_pos(double v) {
    v = std::clamp(v, kYMin, kYMax);
    return kBottom - (kBottom - kTop) * (v - kYMin) / (kYMax - kYMin);
}

}  // namespace

void emit_svg(const RatioReport& rep, std::ostream& out) {
    long n_max = rep.rows.empty() ? 1 : rep.rows.back().n;

    out << std::fixed << std::setprecision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
        << kHeight << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n";

    // Horizontal gridlines with y-axis labels.
    for (double v = 0.5; v <= 1.051; v += 0.1) {
        double y = y_pos(v);
        out << "<line x1=\"" << kLeft << "\" y1=\"" << y << "\" x2=\"" << kRight
            << "\" y2=\"" << y << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << kLeft - 8 << "\" y=\"" << y + 4
            << "\" font-size=\"12\" text-anchor=\"end\" fill=\"#333333\">" << v
            << "</text>\n";
    }

    // x-axis ticks at fifths of the range.
    for (int i = 0; i <= 5; ++i) {
        long n = n_max * i / 5;
        double x = x_pos(n, n_max);
        out << "<line x1=\"" << x << "\" y1=\"" << kBottom << "\" x2=\"" << x
            << "\" y2=\"" << kBottom + 5 << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << x << "\" y=\"" << kBottom + 20
            << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#333333\">" << n
            << "</text>\n";
    }

    // Axes.
    out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
        << "\" y2=\"" << kBottom << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kRight
        << "\" y2=\"" << kBottom << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    // Reference line at ratio = 1.
    out << "<line x1=\"" << kLeft << "\" y1=\"" << y_pos(1.0) << "\" x2=\"" << kRight
        << "\" y2=\"" << y_pos(1.0)
        << "\" stroke=\"#cc3333\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";

    // Axis titles.
    out << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kHeight - 8
        << "\" font-size=\"13\" text-anchor=\"middle\" fill=\"#333333\">n</text>\n";
    out << "<text x=\"16\" y=\"" << (kTop + kBottom) / 2
        << "\" font-size=\"13\" text-anchor=\"middle\" fill=\"#333333\" "
        << "transform=\"rotate(-90 16 " << (kTop + kBottom) / 2
        << ")\">exact / estimate</text>\n";

    // Data points.
    for (const RatioRow& row : rep.rows) {
        out << "<circle cx=\"" << x_pos(row.n, n_max) << "\" cy=\""
            << y_pos(row.ratio.to_double())
            << "\" r=\"3\" fill=\"#3465a4\" fill-opacity=\"0.85\"/>\n";
    }

    out << "</svg>\n";
    if (!out) throw IoError("failed writing plot");
}

void emit_svg(const RatioReport& rep, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    emit_svg(rep, f);
    f.close();
    if (!f) throw IoError("failed writing: " + path);
}

}  // namespace fibeuler
