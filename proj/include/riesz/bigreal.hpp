// Arbitrary-precision real numbers on top of MPFR.
//
// Every value carries its own precision in bits. All operations round to
// nearest (MPFR_RNDN), so each is correctly rounded: relative error per
// operation is at most 2^(1-p) at precision p. Binary operators round into
// the larger of the two operand precisions; use with_prec() to widen before
// a cancellation-prone subtraction.

#ifndef RIESZ_BIGREAL_HPP
#define RIESZ_BIGREAL_HPP

#include <mpfr.h>
#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace riesz {

using Precision = mpfr_prec_t;

inline Precision clamp_prec(Precision p) {
    if (p < MPFR_PREC_MIN) return MPFR_PREC_MIN;
    if (p > 1 << 26) throw std::runtime_error("BigReal: precision too large");
    return p;
}

class BigReal {
  public:
    BigReal() { mpfr_init2(v_, 53); mpfr_set_zero(v_, 1); }

    explicit BigReal(Precision prec) {
        mpfr_init2(v_, clamp_prec(prec));
        mpfr_set_zero(v_, 1);
    }

    BigReal(double x, Precision prec) {
        mpfr_init2(v_, clamp_prec(prec));
        mpfr_set_d(v_, x, MPFR_RNDN);
    }

    BigReal(long x, Precision prec) {
        mpfr_init2(v_, clamp_prec(prec));
        mpfr_set_si(v_, x, MPFR_RNDN);
    }

    BigReal(const mpz_class& z, Precision prec) {
        mpfr_init2(v_, clamp_prec(prec));
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }

    BigReal(const mpq_class& q, Precision prec) {
        mpfr_init2(v_, clamp_prec(prec));
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }

    static BigReal from_string(const std::string& s, Precision prec) {
        BigReal r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("BigReal: cannot parse \"" + s + "\"");
        return r;
    }

    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }

    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigReal() { mpfr_clear(v_); }

    Precision precision() const { return mpfr_get_prec(v_); }

    // Rounded copy at a different precision.
    BigReal with_prec(Precision prec) const {
        BigReal r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    // Exponent e with |x| in [2^(e-1), 2^e); 0 for zero.
    long exponent2() const { return is_zero() ? 0 : static_cast<long>(mpfr_get_exp(v_)); }

    BigReal operator-() const {
        BigReal r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigReal& operator+=(const BigReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator-=(const BigReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator*=(const BigReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator/=(const BigReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator*=(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
    BigReal& operator/=(long k) { mpfr_div_si(v_, v_, k, MPFR_RNDN); return *this; }

    friend Precision common_prec(const BigReal& a, const BigReal& b) {
        return std::max(a.precision(), b.precision());
    }

    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r(common_prec(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r(common_prec(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r(common_prec(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        BigReal r(common_prec(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, long k) {
        BigReal r(a.precision());
        mpfr_mul_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(long k, const BigReal& a) { return a * k; }
    friend BigReal operator/(const BigReal& a, long k) {
        BigReal r(a.precision());
        mpfr_div_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(long k, const BigReal& a) {
        BigReal r(a.precision());
        mpfr_si_div(r.v_, k, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator+(const BigReal& a, long k) {
        BigReal r(a.precision());
        mpfr_add_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, long k) {
        BigReal r(a.precision());
        mpfr_sub_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator<(const BigReal& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator>(const BigReal& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
    friend bool operator<=(const BigReal& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
    friend bool operator>=(const BigReal& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

    // Decimal string with the given number of significant digits,
    // normalized scientific form "d.ddd...e±XX". Deterministic.
    std::string to_sci_string(std::size_t sig_digits) const;

    std::string to_string() const { return to_sci_string(0); }

  private:
    mpfr_t v_;
};

// ----------------------------------------------------------------------
// free math functions; result precision follows the argument unless noted
// ----------------------------------------------------------------------

inline BigReal abs(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline BigReal sqrt(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline BigReal exp(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline BigReal log(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline BigReal log2(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_log2(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline BigReal sin(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline BigReal cos(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal r(common_prec(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline BigReal pow(const BigReal& a, const BigReal& b) {
    BigReal r(common_prec(a, b));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

inline BigReal pow_si(const BigReal& a, long k) {
    BigReal r(a.precision());
    mpfr_pow_si(r.raw(), a.raw(), k, MPFR_RNDN);
    return r;
}

inline BigReal floor(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_floor(r.raw(), a.raw());
    return r;
}

inline BigReal ceil(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_ceil(r.raw(), a.raw());
    return r;
}

inline BigReal min(const BigReal& a, const BigReal& b) { return a <= b ? a : b; }
inline BigReal max(const BigReal& a, const BigReal& b) { return a >= b ? a : b; }

inline BigReal const_pi(Precision prec) {
    BigReal r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

// Real log-gamma for positive real arguments (delegates to MPFR).
inline BigReal lngamma(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_lngamma(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

// 2^e as a BigReal, exact.
inline BigReal pow2(long e, Precision prec) {
    BigReal r(1L, prec);
    mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}

// n! as an exact integer.
inline mpz_class factorial(unsigned long n) {
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), n);
    return z;
}

inline std::string BigReal::to_sci_string(std::size_t sig_digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t exp10 = 0;
    char* s = mpfr_get_str(nullptr, &exp10, 10, sig_digits, v_, MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);
    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    // mpfr_get_str: value = 0.digits * 10^exp10
    std::string mant = digits.substr(0, 1);
    if (digits.size() > 1) mant += "." + digits.substr(1);
    long e = static_cast<long>(exp10) - 1;
    std::string es = (e < 0 ? "-" : "+") + std::to_string(e < 0 ? -e : e);
    if (es.size() == 2) es.insert(1, "0");
    return sign + mant + "e" + es;
}

}  // namespace riesz

#endif  // RIESZ_BIGREAL_HPP
