#include "exact.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <thread>

namespace fibeuler {

namespace {

// Below this index the per-n thread spawn cost outweighs the convolution.
constexpr long kParallelCutoff = 512;

void accumulate_range(const std::vector<mpz_class>& c, const std::vector<mpz_class>& a,
                      long n, long k_lo, long k_hi, mpz_class& out) {
    for (long k = k_lo; k <= k_hi; ++k)
        mpz_addmul(out.get_mpz_t(), c[k].get_mpz_t(), a[n - k].get_mpz_t());
}

}  // namespace

ExactSequence euler_transform(ShiftParam z, long n_max, int threads) {
    if (n_max < 0) throw DomainError("term count must be >= 0");
    if (threads < 1) threads = 1;

    // Divisor-sum sieve: c[m] = sum over d | m of d * F_{d+z}.
    std::vector<mpz_class> c(n_max + 1);
    for (long d = 1; d <= n_max; ++d) {
        mpz_class w = fibonacci(d + z.z) * d;
        for (long m = d; m <= n_max; m += d) c[m] += w;
    }

    std::vector<mpz_class> a(static_cast<size_t>(n_max) + 1);
    a[0] = 1;
    for (long n = 1; n <= n_max; ++n) {
        mpz_class s = 0;
        if (threads > 1 && n >= kParallelCutoff) {
            long parts = std::min<long>(threads, n);
            std::vector<mpz_class> partial(parts);
            std::vector<std::thread> pool;
            long chunk = (n + parts - 1) / parts;
            for (long t = 0; t < parts; ++t) {
                long lo = 1 + t * chunk;
                long hi = std::min(n, lo + chunk - 1);
                if (lo > hi) break;
                pool.emplace_back(accumulate_range, std::cref(c), std::cref(a),
                                  n, lo, hi, std::ref(partial[t]));
            }
            for (auto& th : pool) th.join();
            for (const auto& p : partial) s += p;
        } else {
            accumulate_range(c, a, n, 1, n, s);
        }
        if (!mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(n)))
            throw InternalError("recurrence sum not divisible at n=" + std::to_string(n));
        mpz_divexact_ui(a[n].get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(n));
    }
    return ExactSequence{z, std::move(a)};
}

ExactSequence product_expansion_oracle(ShiftParam z, long n_max) {
    if (n_max < 0) throw DomainError("term count must be >= 0");

    std::vector<mpz_class> acc(static_cast<size_t>(n_max) + 1);
    acc[0] = 1;
    for (long k = 1; k <= n_max; ++k) {
        mpz_class w = fibonacci(k + z.z);
        if (w == 0) continue;  // factor (1-x^k)^0 contributes nothing

        // (1-x^k)^(-w) = sum_j binom(w+j-1, j) x^(k j); build the binomials
        // incrementally, each division being exact.
        long j_max = n_max / k;
        std::vector<mpz_class> factor(static_cast<size_t>(j_max) + 1);
        factor[0] = 1;
        for (long j = 1; j <= j_max; ++j) {
            mpz_class t = factor[j - 1] * (w + j - 1);
            mpz_divexact_ui(factor[j].get_mpz_t(), t.get_mpz_t(),
                            static_cast<unsigned long>(j));
        }

        std::vector<mpz_class> next(static_cast<size_t>(n_max) + 1);
        for (long d = 0; d <= n_max; ++d) {
            if (acc[d] == 0) continue;
            for (long j = 0; j <= j_max && d + k * j <= n_max; ++j)
                mpz_addmul(next[d + k * j].get_mpz_t(), acc[d].get_mpz_t(),
                           factor[j].get_mpz_t());
        }
        acc.swap(next);
    }
    return ExactSequence{z, std::move(acc)};
}

void write_bfile(std::ostream& out, const ExactSequence& seq) {
    for (size_t n = 0; n < seq.terms.size(); ++n)
        out << n << ' ' << seq.terms[n] << '\n';
    if (!out) throw IoError("failed writing term list");
}

void write_bfile(const std::string& path, const ExactSequence& seq) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    write_bfile(f, seq);
    f.close();
    if (!f) throw IoError("failed writing: " + path);
}

}  // namespace fibeuler
