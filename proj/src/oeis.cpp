#include "oeis.hpp"

#include <httplib.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>

#include "exact.hpp"

namespace fibeuler {

namespace fs = std::filesystem;

OeisRef oeis_ref_for(ShiftParam z) {
    switch (z.z) {
        case -1: return {"A109509", -1};
        case 0: return {"A166861", 0};
        case 1: return {"A200544", 1};
        case 2: return {"A260787", 2};
        default:
            throw DomainError("no catalogued sequence for z=" + std::to_string(z.z));
    }
}

std::vector<std::pair<long, mpz_class>> parse_bfile(std::istream& in) {
    std::vector<std::pair<long, mpz_class>> out;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;

        std::istringstream fields(line);
        long index;
        std::string value_text, extra;
        if (!(fields >> index >> value_text))
            throw ParseError(line_no, "expected `index value`, got '" + line + "'");
        if (fields >> extra)
            throw ParseError(line_no, "trailing content '" + extra + "'");

        mpz_class value;
        if (mpz_set_str(value.get_mpz_t(), value_text.c_str(), 10) != 0)
            throw ParseError(line_no, "not an integer: '" + value_text + "'");

        if (!out.empty() && index != out.back().first + 1)
            throw ParseError(line_no, "index " + std::to_string(index) +
                                          " does not follow " +
                                          std::to_string(out.back().first));
        out.emplace_back(index, std::move(value));
    }
    return out;
}

std::vector<std::pair<long, mpz_class>> parse_bfile_text(const std::string& text) {
    std::istringstream in(text);
    return parse_bfile(in);
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("FIBEULER_CACHE_DIR"); env && *env)
        return env;
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::string(home) + "/.cache/fibeuler";
    return ".fibeuler-cache";
}

namespace {

void validate_a_number(const std::string& a) {
    bool ok = a.size() == 7 && a[0] == 'A';
    for (size_t i = 1; ok && i < a.size(); ++i)
        ok = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    if (!ok) throw DomainError("malformed sequence id: '" + a + "'");
}

std::string read_file(const fs::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot read " + path.string());
    std::ostringstream body;
    body << f.rdbuf();
    if (!f && !f.eof()) throw IoError("failed reading " + path.string());
    return body.str();
}

void write_file_atomic(const fs::path& path, const std::string& data) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot write " + tmp.string());
        f << data;
        f.close();
        if (!f) throw IoError("failed writing " + tmp.string());
    }
    fs::rename(tmp, path);
}

}  // namespace

std::string fetch_bfile(const OeisRef& ref, const std::string& cache_dir,
                        bool offline) {
    validate_a_number(ref.a_number);
    const std::string filename = "b" + ref.a_number.substr(1) + ".txt";
    const fs::path cached = fs::path(cache_dir) / filename;

    if (fs::exists(cached)) return read_file(cached);
    if (offline)
        throw NetworkError("offline and no cached copy of " + filename + " under " +
                           cache_dir);

    std::string base = "https://oeis.org";
    if (const char* env = std::getenv("FIBEULER_OEIS_BASE"); env && *env) base = env;
    const std::string url_path = "/" + ref.a_number + "/" + filename;

    std::string failure;
    for (int attempt = 0; attempt < 2; ++attempt) {
        httplib::Client client(base);
        client.set_connection_timeout(30, 0);
        client.set_read_timeout(30, 0);
        client.set_write_timeout(30, 0);
        client.set_follow_location(true);

        auto res = client.Get(url_path, httplib::Headers{
                                            {"User-Agent", "fibeuler/1.0"},
                                        });
        if (res && res->status == 200) {
            std::error_code ec;
            fs::create_directories(cache_dir, ec);
            write_file_atomic(cached, res->body);
            return res->body;
        }
        failure = res ? "HTTP status " + std::to_string(res->status)
                      : "transport error: " + httplib::to_string(res.error());
    }
    throw NetworkError("fetching " + base + url_path + " failed (" + failure + ")");
}

CrossCheck cross_check(ShiftParam z, long count,
                       const std::vector<std::pair<long, mpz_class>>& entries,
                       int threads) {
    if (count < 1) throw DomainError("term count must be >= 1");
    OeisRef ref = oeis_ref_for(z);

    CrossCheck result;
    result.a_number = ref.a_number;
    result.requested = count;

    size_t anchor = 0;
    while (anchor < entries.size() && entries[anchor].second != 1) ++anchor;
    if (anchor == entries.size())
        throw DomainError("no entry with value 1 to anchor a_0 against in " +
                          ref.a_number);
    result.anchor_index = entries[anchor].first;

    ExactSequence exact = euler_transform(z, count - 1, threads);
    long available = static_cast<long>(entries.size() - anchor);
    result.compared = std::min(count, available);

    for (long j = 0; j < result.compared; ++j) {
        if (exact.terms[j] != entries[anchor + j].second) {
            result.mismatch_n = j;
            result.expected = exact.terms[j];
            result.found = entries[anchor + j].second;
            result.ok = false;
            return result;
        }
    }
    result.ok = result.compared == count;
    return result;
}

}  // namespace fibeuler
