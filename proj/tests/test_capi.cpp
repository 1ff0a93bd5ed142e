#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fibeuler.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

namespace {

// Takes ownership of a C string returned by the library.
std::string take(char* s) {
    std::string out = s != nullptr ? s : "";
    fe_free_string(s);
    return out;
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

const std::string kOeisCache = std::string(FIBEULER_TEST_DATA_DIR) + "/oeis";

struct TempFile {
    std::string path;
    explicit TempFile(const char* stem) {
        path = std::string("/tmp/fibeuler-capi-") + std::to_string(::rand()) + stem;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("version and error plumbing") {
    CHECK(std::strcmp(fe_version(), "1.0.0") == 0);
    fe_free_string(nullptr);  // must be a no-op

    char* out = nullptr;
    CHECK(fe_fibonacci(-5, &out) == FE_ERR_DOMAIN);
    CHECK(out == nullptr);
    CHECK(std::strlen(fe_last_error()) > 0);
}

TEST_CASE("fibonacci and golden ratio") {
    char* out = nullptr;
    REQUIRE(fe_fibonacci(90, &out) == FE_OK);
    CHECK(take(out) == "2880067194370816120");

    out = nullptr;
    REQUIRE(fe_golden_ratio(40, &out) == FE_OK);
    CHECK(starts_with(take(out), "1.618033988749894848"));

    CHECK(fe_golden_ratio(0, &out) == FE_ERR_DOMAIN);
    CHECK(fe_fibonacci(10, nullptr) == FE_ERR_DOMAIN);
}

TEST_CASE("sequence lifecycle") {
    fe_sequence* seq = nullptr;
    REQUIRE(fe_euler_transform(0, 60, 1, &seq) == FE_OK);
    std::unique_ptr<fe_sequence, decltype(&fe_sequence_free)> guard(seq,
                                                                    fe_sequence_free);
    CHECK(fe_sequence_size(seq) == 61);

    char* term = nullptr;
    REQUIRE(fe_sequence_term(seq, 2, &term) == FE_OK);
    CHECK(take(term) == "2");
    REQUIRE(fe_sequence_term(seq, 13, &term) == FE_OK);
    CHECK(take(term) == "2487");

    CHECK(fe_sequence_term(seq, 61, &term) == FE_ERR_DOMAIN);
    CHECK(fe_sequence_term(seq, -1, &term) == FE_ERR_DOMAIN);

    TempFile bfile(".txt");
    REQUIRE(fe_sequence_write_bfile(seq, bfile.path.c_str()) == FE_OK);
    std::ifstream in(bfile.path);
    std::string first, second;
    std::getline(in, first);
    std::getline(in, second);
    CHECK(first == "0 1");
    CHECK(second == "1 1");

    CHECK(fe_euler_transform(-2, 10, 1, &seq) == FE_ERR_DOMAIN);
    CHECK(std::string(fe_last_error()).find("-1") != std::string::npos);
}

TEST_CASE("constants through the C surface") {
    char* out = nullptr;
    int certified = 0;
    REQUIRE(fe_constant_S(0, 45, &out, &certified) == FE_OK);
    std::string s = take(out);
    CHECK(certified >= 45);
    CHECK(starts_with(s, "0.600476601392575912969719494850393576"));

    REQUIRE(fe_constant_S_hyperbolic(30, &out, &certified) == FE_OK);
    CHECK(starts_with(take(out), "0.60047660139257591296971"));
    CHECK(certified >= 30);

    REQUIRE(fe_constant_c(0, 35, &out, &certified) == FE_OK);
    CHECK(starts_with(take(out), "19.55999649742693171136312985"));
    CHECK(certified >= 35);

    REQUIRE(fe_constant_c(2, 30, &out, nullptr) == FE_OK);
    CHECK(starts_with(take(out), "50.1314006"));

    CHECK(fe_constant_S(-3, 30, &out, &certified) == FE_ERR_DOMAIN);
}

TEST_CASE("asymptotic estimate endpoints") {
    char* out = nullptr;
    REQUIRE(fe_asymptotic_log(100, 0, 30, &out) == FE_OK);
    double logv = std::stod(take(out));
    CHECK(logv == doctest::Approx(57.0758957048513846734).epsilon(1e-12));

    char* mant = nullptr;
    long exp10 = 0;
    REQUIRE(fe_asymptotic_decimal(100, 0, 18, &mant, &exp10) == FE_OK);
    CHECK(exp10 == 24);
    CHECK(starts_with(take(mant), "6.1340393025"));

    REQUIRE(fe_asymptotic_decimal(100, -1, 15, &mant, &exp10) == FE_OK);
    CHECK(exp10 == 23);
    CHECK(starts_with(take(mant), "1.62746461"));
}

TEST_CASE("saddle endpoint bundles root, expansion, and gap") {
    char* r = nullptr;
    char* expansion = nullptr;
    char* diff = nullptr;
    char* residual = nullptr;
    double scaled = 0.0;
    long truncation = 0;
    REQUIRE(fe_saddle(100, 0, 40, &r, &expansion, &diff, &scaled, &residual,
                      &truncation) == FE_OK);
    CHECK(starts_with(take(r), "0.57768181987967896240"));
    CHECK(starts_with(take(expansion), "0.57808553094890502746"));
    std::string d = take(diff);
    CHECK(std::stod(d) == doctest::Approx(4.0371106922606505e-4).epsilon(1e-9));
    CHECK(scaled == doctest::Approx(0.40371106922606505).epsilon(1e-9));
    CHECK(std::stod(take(residual)) < 1e-20);
    CHECK(truncation >= 1);

    // outputs are optional
    REQUIRE(fe_saddle(10, 0, 30, &r, nullptr, nullptr, nullptr, nullptr,
                      nullptr) == FE_OK);
    CHECK(starts_with(take(r), "0.4952"));

    CHECK(fe_saddle(0, 0, 30, &r, nullptr, nullptr, nullptr, nullptr, nullptr) ==
          FE_ERR_DOMAIN);
}

TEST_CASE("expansion endpoint and its 2-term variant") {
    char* out = nullptr;
    REQUIRE(fe_r_expansion(100, 0, 40, 3, &out) == FE_OK);
    CHECK(starts_with(take(out), "0.57808553094890502746"));
    REQUIRE(fe_r_expansion(100, 0, 40, 2, &out) == FE_OK);
    CHECK(starts_with(take(out), "0.5767035649"));
    CHECK(fe_r_expansion(100, 0, 40, 7, &out) == FE_ERR_DOMAIN);
}

TEST_CASE("ratio report over the C surface") {
    fe_report* rep = nullptr;
    REQUIRE(fe_ratio_table(0, 200, 50, 30, 1, &rep) == FE_OK);
    std::unique_ptr<fe_report, decltype(&fe_report_free)> guard(rep, fe_report_free);
    REQUIRE(fe_report_rows(rep) == 4);

    long n = 0;
    double ratio = 0.0, log_exact = 0.0, log_asym = 0.0;
    REQUIRE(fe_report_row(rep, 1, &n, &ratio, &log_exact, &log_asym) == FE_OK);
    CHECK(n == 100);
    CHECK(ratio == doctest::Approx(0.83765989135492287).epsilon(1e-12));
    CHECK(std::exp(log_exact - log_asym) == doctest::Approx(ratio).epsilon(1e-12));

    CHECK(fe_report_row(rep, 4, &n, &ratio, nullptr, nullptr) == FE_ERR_DOMAIN);

    TempFile csv(".csv");
    TempFile svg(".svg");
    REQUIRE(fe_report_write_csv(rep, csv.path.c_str()) == FE_OK);
    REQUIRE(fe_report_write_svg(rep, svg.path.c_str()) == FE_OK);
    std::ifstream csv_in(csv.path);
    std::string header;
    std::getline(csv_in, header);
    CHECK(header == "n,ratio,log_exact,log_asym");
    std::ifstream svg_in(svg.path);
    std::stringstream svg_text;
    svg_text << svg_in.rdbuf();
    CHECK(svg_text.str().find("</svg>") != std::string::npos);
}

TEST_CASE("catalogue cross-check against the local cache") {
    char* summary = nullptr;
    REQUIRE(fe_cross_check(0, 100, kOeisCache.c_str(), 1, 1, &summary) == FE_OK);
    std::string text = take(summary);
    CHECK(text.find("A166861") != std::string::npos);
    CHECK(text.find("100") != std::string::npos);

    // no catalogue entry for this shift
    CHECK(fe_cross_check(3, 50, kOeisCache.c_str(), 1, 1, &summary) ==
          FE_ERR_DOMAIN);

    // cold cache offline surfaces as a network failure
    CHECK(fe_cross_check(0, 50, "/tmp/fibeuler-definitely-empty-cache", 1, 1,
                         &summary) == FE_ERR_NETWORK);
}

TEST_CASE("bfile fetch endpoint with a warm cache") {
    char* path = nullptr;
    REQUIRE(fe_fetch_bfile("A166861", kOeisCache.c_str(), 1, &path) == FE_OK);
    std::string p = take(path);
    std::ifstream in(p);
    CHECK(in.good());
    std::string line;
    std::getline(in, line);
    CHECK(line == "0 1");
}