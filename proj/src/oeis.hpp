// OEIS b-file ingestion (local cache or HTTP) and term-by-term
// cross-validation against the exact expansion.
#ifndef FIBEULER_OEIS_HPP
#define FIBEULER_OEIS_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace fibeuler {

struct OeisRef {
    std::string a_number;  // "A" followed by six digits
    int z_equiv;           // the shift this catalogue entry corresponds to
};

// The four catalogued shifts: A109509 (z=-1), A166861 (z=0), A200544 (z=1),
// A260787 (z=2). Other shifts raise DomainError.
OeisRef oeis_ref_for(ShiftParam z);

// Parses b-file text: blank lines and '#' comments skipped; data lines are
// `index value` with arbitrary whitespace; indices must be consecutive from
// the first one. Malformed input raises ParseError carrying the line number.
std::vector<std::pair<long, mpz_class>> parse_bfile(std::istream& in);
std::vector<std::pair<long, mpz_class>> parse_bfile_text(const std::string& text);

// Returns the b-file contents for ref. A cached copy at
// <cache_dir>/bNNNNNN.txt wins; otherwise (unless offline) one HTTP GET with
// a single retry fetches <base>/<A-number>/bNNNNNN.txt, where <base> is
// FIBEULER_OEIS_BASE or https://oeis.org, and the cache is written via
// temp-file-plus-rename. Cold cache offline, or a failed fetch, raises
// NetworkError; data is never fabricated.
std::string fetch_bfile(const OeisRef& ref, const std::string& cache_dir,
                        bool offline);

// $FIBEULER_CACHE_DIR if set, else ~/.cache/fibeuler.
std::string default_cache_dir();

struct CrossCheck {
    std::string a_number;
    long requested = 0;     // terms asked for
    long compared = 0;      // terms actually compared
    long anchor_index = 0;  // b-file index aligned with a_0
    long mismatch_n = -1;   // first disagreeing n, or -1 when none
    mpz_class expected;     // our value at mismatch_n
    mpz_class found;        // the b-file's value there
    bool ok = false;        // no mismatch and the full request was compared
};

// Compares euler_transform(z, count-1) with the parsed entries. The offset
// is reconciled by anchoring the first entry whose value is 1 to a_0 (the
// catalogued sequences all begin with 1; b-files carry no offset field).
CrossCheck cross_check(ShiftParam z, long count,
                       const std::vector<std::pair<long, mpz_class>>& entries,
                       int threads = 1);

}  // namespace fibeuler

#endif
