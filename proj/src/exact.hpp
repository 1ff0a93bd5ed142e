// Exact integer coefficients of U(x) = prod_{k>=1} (1 - x^k)^(-F_{k+z}).
#ifndef FIBEULER_EXACT_HPP
#define FIBEULER_EXACT_HPP

#include <iosfwd>
#include <vector>

#include "core.hpp"

namespace fibeuler {

// Coefficients a_0..a_N, index = exponent of x. a_0 = 1 (empty product),
// a_1 = F_{1+z}, and every term is a nonnegative integer.
struct ExactSequence {
    ShiftParam z;
    std::vector<mpz_class> terms;
};

// Expand via the divisor-sum recurrence
//   c_m = sum_{d|m} d * F_{d+z},   n * a_n = sum_{k=1}^{n} c_k * a_{n-k},
// with a_0 = 1. The division by n is exact for every n; a nonzero remainder
// signals an implementation bug and raises InternalError.
//
// threads > 1 splits the convolution sum into chunks; the result is
// identical to the serial one because integer addition is exact.
ExactSequence euler_transform(ShiftParam z, long n_max, int threads = 1);

// Same coefficients by multiplying out the truncated product factor by
// factor, each factor expanded with exact binomial coefficients. Much
// slower; intended as an independent cross-check for N up to a few hundred.
ExactSequence product_expansion_oracle(ShiftParam z, long n_max);

// One `n a_n` pair per line, ASCII decimal, LF endings, n starting at 0
// (the OEIS b-file layout).
void write_bfile(std::ostream& out, const ExactSequence& seq);
void write_bfile(const std::string& path, const ExactSequence& seq);

}  // namespace fibeuler

#endif
