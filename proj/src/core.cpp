#include "core.hpp"

#include <cstdio>
#include <cstdlib>

namespace fibeuler {

std::string Real::to_string(int digits) const {
    if (digits < 1) throw DomainError("digit count must be positive");
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*R*g", digits, MPFR_RNDN, v_) < 0)
        throw InternalError("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string Real::to_decimal_prefix(int digits) const {
    if (digits < 1) throw DomainError("digit count must be positive");
    if (mpfr_nan_p(v_)) throw DomainError("cannot render NaN");
    if (mpfr_zero_p(v_)) return "0";

    // mpfr_get_str yields mantissa digits d1 d2 ... dn and exponent e with
    // value = +-0.d1d2...dn * 10^e; RNDZ makes it a pure truncation, so the
    // rendered digits are a true prefix of the infinite decimal expansion.
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDZ);
    if (s == nullptr) throw InternalError("mpfr_get_str failed");
    std::string mant(s);
    mpfr_free_str(s);

    std::string sign;
    if (mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }

    std::string out;
    if (e <= 0) {
        out = "0." + std::string(static_cast<size_t>(-e), '0') + mant;
    } else if (static_cast<size_t>(e) >= mant.size()) {
        out = mant + std::string(static_cast<size_t>(e) - mant.size(), '0');
    } else {
        out = mant.substr(0, static_cast<size_t>(e)) + "." + mant.substr(static_cast<size_t>(e));
    }
    return sign + out;
}

mpz_class fibonacci(long m) {
    if (m < -1)
        throw DomainError("fibonacci index must be >= -1, got " + std::to_string(m));
    if (m == -1) return 1;
    if (m == 0) return 0;

    // Fast doubling: from (F_k, F_{k+1}) compute
    //   F_{2k}   = F_k (2 F_{k+1} - F_k)
    //   F_{2k+1} = F_k^2 + F_{k+1}^2
    // walking the bits of m from the top.
    mpz_class a = 0, b = 1;  // (F_0, F_1)
    int top = 0;
    for (int i = 62; i >= 0; --i)
        if ((m >> i) & 1) { top = i; break; }
    mpz_class c, d;
    for (int i = top; i >= 0; --i) {
        c = a * (2 * b - a);
        d = a * a + b * b;
        if ((m >> i) & 1) {
            a = d;
            b = c + d;
        } else {
            a = c;
            b = d;
        }
    }
    return a;
}

Real golden_ratio(const PrecisionContext& ctx) {
    Real five = Real::of(5L, ctx.prec_bits());
    return (1 + sqrt(five)) / 2;
}

Real golden_ratio_minus_one(const PrecisionContext& ctx) {
    return golden_ratio(ctx) - 1;
}

int certified_digits(const Real& a, const Real& b, int cap) {
    Real diff = abs(a - b);
    if (diff.is_zero()) return cap;
    Real scale = max(abs(a), abs(b));
    if (scale.is_zero()) return 0;
    double digits = -log(diff / scale).to_double() / 2.302585092994046;
    if (digits <= 0) return 0;
    if (digits >= cap) return cap;
    return static_cast<int>(digits);
}

}  // namespace fibeuler
