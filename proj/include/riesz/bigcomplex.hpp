// Complex arithmetic over BigReal. Both parts always share one precision.

#ifndef RIESZ_BIGCOMPLEX_HPP
#define RIESZ_BIGCOMPLEX_HPP

#include "riesz/bigreal.hpp"

namespace riesz {

class BigComplex {
  public:
    BigComplex() = default;

    explicit BigComplex(Precision prec) : re_(prec), im_(prec) {}

    BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {
        Precision p = common_prec(re_, im_);
        if (re_.precision() != p) re_ = re_.with_prec(p);
        if (im_.precision() != p) im_ = im_.with_prec(p);
    }

    BigComplex(double re, double im, Precision prec) : re_(re, prec), im_(im, prec) {}

    explicit BigComplex(const BigReal& re) : re_(re), im_(re.precision()) {}

    const BigReal& re() const { return re_; }
    const BigReal& im() const { return im_; }
    Precision precision() const { return re_.precision(); }

    BigComplex with_prec(Precision prec) const {
        return BigComplex(re_.with_prec(prec), im_.with_prec(prec));
    }

    bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

    BigComplex conj() const { return BigComplex(re_, -im_); }
    BigComplex operator-() const { return BigComplex(-re_, -im_); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend BigComplex operator*(const BigReal& s, const BigComplex& a) {
        return BigComplex(s * a.re_, s * a.im_);
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigReal d = b.re_ * b.re_ + b.im_ * b.im_;
        return BigComplex((a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d);
    }
    friend BigComplex operator/(const BigComplex& a, const BigReal& s) {
        return BigComplex(a.re_ / s, a.im_ / s);
    }

    BigComplex& operator+=(const BigComplex& o) { *this = *this + o; return *this; }
    BigComplex& operator-=(const BigComplex& o) { *this = *this - o; return *this; }
    BigComplex& operator*=(const BigComplex& o) { *this = *this * o; return *this; }

    std::string to_string() const {
        return re_.to_sci_string(0) + (im_.sign() < 0 ? " - " : " + ") +
               riesz::abs(im_).to_sci_string(0) + "i";
    }

  private:
    BigReal re_;
    BigReal im_;
};

inline BigReal norm(const BigComplex& z) { return z.re() * z.re() + z.im() * z.im(); }

inline BigReal abs(const BigComplex& z) {
    BigReal r(z.precision());
    mpfr_hypot(r.raw(), z.re().raw(), z.im().raw(), MPFR_RNDN);
    return r;
}

inline BigReal arg(const BigComplex& z) { return atan2(z.im(), z.re()); }

inline BigComplex exp(const BigComplex& z) {
    Precision p = z.precision();
    BigReal m = exp(z.re());
    BigReal s(p), c(p);
    mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), MPFR_RNDN);
    return BigComplex(m * c, m * s);
}

// Principal branch.
inline BigComplex log(const BigComplex& z) { return BigComplex(log(abs(z)), arg(z)); }

// z^w = exp(w log z), principal branch of log.
inline BigComplex pow(const BigComplex& z, const BigComplex& w) { return exp(w * log(z)); }

// x^w for real x > 0: exp(w log x), single-valued.
inline BigComplex pow(const BigReal& x, const BigComplex& w) {
    return exp(w * BigComplex(log(x)));
}

inline BigComplex sin(const BigComplex& z) {
    Precision p = z.precision();
    BigReal s(p), c(p);
    mpfr_sin_cos(s.raw(), c.raw(), z.re().raw(), MPFR_RNDN);
    BigReal ch(p), sh(p);
    mpfr_cosh(ch.raw(), z.im().raw(), MPFR_RNDN);
    mpfr_sinh(sh.raw(), z.im().raw(), MPFR_RNDN);
    return BigComplex(s * ch, c * sh);
}

}  // namespace riesz

#endif  // RIESZ_BIGCOMPLEX_HPP
