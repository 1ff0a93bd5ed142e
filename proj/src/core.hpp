// Arbitrary-precision context plus Fibonacci / golden-ratio primitives.
// Everything here wraps GMP (integers) and MPFR (reals) behind the small
// set of semantics the rest of the library relies on.
#ifndef FIBEULER_CORE_HPP
#define FIBEULER_CORE_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace fibeuler {

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A solver or a certification loop failed to reach its tolerance.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

// Internal consistency violated (signals a bug, never bad input).
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    ParseError(long line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

class NetworkError : public Error {
public:
    explicit NetworkError(const std::string& msg) : Error(msg) {}
};

// ---------------------------------------------------------------------------
// Domain types

// Integer shift z >= -1 selecting the weight sequence F_{k+z}.
struct ShiftParam {
    explicit ShiftParam(int shift) : z(shift) {
        if (shift < -1)
            throw DomainError("shift z must be >= -1, got " + std::to_string(shift));
    }
    int z;
};

// Working precision for all real-valued computation.
//
// tail_exp encodes the truncation tolerance: any omitted series tail must be
// bounded by 10^-tail_exp in absolute value. Certification is by escalation:
// recompute with +20 working digits (and a matching deeper tail) and keep the
// digits the two runs agree on.
struct PrecisionContext {
    PrecisionContext(int work, int target, int tail)
        : work_digits(work), target_digits(target), tail_exp(tail) {
        if (target < 1)
            throw DomainError("target_digits must be positive");
        if (work < target + 10)
            throw DomainError("work_digits must be >= target_digits + 10");
        if (tail < target)
            throw DomainError("tail tolerance must be <= 10^-target_digits");
    }

    static PrecisionContext for_target(int target) {
        return PrecisionContext(target + 10, target, target);
    }

    PrecisionContext escalated(int extra = 20) const {
        return PrecisionContext(work_digits + extra, target_digits, tail_exp + extra);
    }

    // Binary precision backing work_digits decimal digits.
    mpfr_prec_t prec_bits() const {
        return static_cast<mpfr_prec_t>(work_digits * 3.3219280948873623 + 16);
    }

    // The truncation tolerance 10^-tail_exp as a working-precision real.
    class Real tail_tol() const;

    int work_digits;
    int target_digits;
    int tail_exp;
};

// ---------------------------------------------------------------------------
// Real: RAII wrapper over mpfr_t with value semantics.
//
// Binary operations produce a result at the wider of the two operand
// precisions; rounding is always to nearest. Mixed arithmetic is provided
// for long only, which is exact.

class Real {
public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_nan(v_); }

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(long v, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, v, MPFR_RNDN);
        return r;
    }
    static Real of(double v, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_d(r.v_, v, MPFR_RNDN);
        return r;
    }
    static Real of_integer(const mpz_class& v, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Real parse(const std::string& s, mpfr_prec_t prec) {
        Real r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw ParseError(1, "not a decimal number: '" + s + "'");
        return r;
    }
    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    // 10^e, exact for any integer e.
    static Real pow10(long e, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
        if (e < 0) mpfr_ui_div(r.v_, 1, r.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    Real& operator+=(const Real& o) { return apply2(mpfr_add, o); }
    Real& operator-=(const Real& o) { return apply2(mpfr_sub, o); }
    Real& operator*=(const Real& o) { return apply2(mpfr_mul, o); }
    Real& operator/=(const Real& o) { return apply2(mpfr_div, o); }

    friend Real operator+(Real a, const Real& b) { return widen(std::move(a), b) += b; }
    friend Real operator-(Real a, const Real& b) { return widen(std::move(a), b) -= b; }
    friend Real operator*(Real a, const Real& b) { return widen(std::move(a), b) *= b; }
    friend Real operator/(Real a, const Real& b) { return widen(std::move(a), b) /= b; }

    friend Real operator+(Real a, long b) { mpfr_add_si(a.v_, a.v_, b, MPFR_RNDN); return a; }
    friend Real operator-(Real a, long b) { mpfr_sub_si(a.v_, a.v_, b, MPFR_RNDN); return a; }
    friend Real operator*(Real a, long b) { mpfr_mul_si(a.v_, a.v_, b, MPFR_RNDN); return a; }
    friend Real operator/(Real a, long b) { mpfr_div_si(a.v_, a.v_, b, MPFR_RNDN); return a; }
    friend Real operator+(long a, Real b) { return std::move(b) + a; }
    friend Real operator*(long a, Real b) { return std::move(b) * a; }
    friend Real operator-(long a, Real b) { mpfr_si_sub(b.v_, a, b.v_, MPFR_RNDN); return b; }
    friend Real operator/(long a, Real b) { mpfr_si_div(b.v_, a, b.v_, MPFR_RNDN); return b; }

    friend Real operator-(Real a) { mpfr_neg(a.v_, a.v_, MPFR_RNDN); return a; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

    friend Real sqrt(Real a) { mpfr_sqrt(a.v_, a.v_, MPFR_RNDN); return a; }
    friend Real log(Real a) { mpfr_log(a.v_, a.v_, MPFR_RNDN); return a; }
    friend Real exp(Real a) { mpfr_exp(a.v_, a.v_, MPFR_RNDN); return a; }
    friend Real abs(Real a) { mpfr_abs(a.v_, a.v_, MPFR_RNDN); return a; }
    friend Real sinh(Real a) { mpfr_sinh(a.v_, a.v_, MPFR_RNDN); return a; }
    friend Real asinh(Real a) { mpfr_asinh(a.v_, a.v_, MPFR_RNDN); return a; }
    friend Real floor(Real a) { mpfr_floor(a.v_, a.v_); return a; }
    friend Real pow(Real base, long e) { mpfr_pow_si(base.v_, base.v_, e, MPFR_RNDN); return base; }
    friend Real pow(Real base, const Real& e) {
        Real r = widen(std::move(base), e);
        mpfr_pow(r.v_, r.v_, e.v_, MPFR_RNDN);
        return r;
    }
    friend Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
    friend Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

    // Significant-digit rendering, deterministic ("%.Ng"-style).
    std::string to_string(int digits) const;

    // Plain-decimal rendering truncated toward zero after `digits` significant
    // digits; no exponent notation. Intended for digit-prefix comparison.
    std::string to_decimal_prefix(int digits) const;

private:
    template <typename F>
    Real& apply2(F op, const Real& o) {
        if (mpfr_get_prec(v_) < mpfr_get_prec(o.v_)) {
            Real tmp(mpfr_get_prec(o.v_));
            op(tmp.v_, v_, o.v_, MPFR_RNDN);
            *this = std::move(tmp);
        } else {
            op(v_, v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    static Real widen(Real a, const Real& b) {
        if (a.prec() >= b.prec()) return a;
        Real r(b.prec());
        mpfr_set(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

inline Real PrecisionContext::tail_tol() const {
    return Real::pow10(-tail_exp, prec_bits());
}

// ---------------------------------------------------------------------------
// Operations

// F_m with F_{-1} = 1, F_0 = 0, F_1 = 1; fast doubling, exact for any m
// a machine word can index.
mpz_class fibonacci(long m);

// (1 + sqrt 5) / 2 at ctx working precision.
Real golden_ratio(const PrecisionContext& ctx);

// phi - 1 = 1/phi, the dominant singularity location.
Real golden_ratio_minus_one(const PrecisionContext& ctx);

// Number of leading decimal digits on which a and b agree, measured as
// floor(-log10(|a-b| / max(|a|,|b|))). This is the certification metric for
// the escalation policy: a value is certified to d digits when the base run
// and the +20-digit run agree to at least d.
int certified_digits(const Real& a, const Real& b, int cap);

}  // namespace fibeuler

#endif
