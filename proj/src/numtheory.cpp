#include "riesz/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace riesz {

// ----------------------------------------------------------------------
// Moebius sieve
// ----------------------------------------------------------------------

MobiusTable mobius_sieve(std::uint64_t limit) {
    if (limit < 1) throw std::domain_error("mobius_sieve: limit must be >= 1");
    if (limit > (std::uint64_t{1} << 34))
        throw std::length_error("mobius_sieve: limit too large to allocate");

    MobiusTable table;
    table.limit = limit;
    table.values.assign(limit + 1, 0);
    table.values[1] = 1;

    std::vector<std::uint64_t> primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            table.values[i] = -1;
        }
        for (std::uint64_t p : primes) {
            if (i * p > limit) break;
            composite[i * p] = true;
            if (i % p == 0) {
                table.values[i * p] = 0;  // squared factor
                break;
            }
            table.values[i * p] = -table.values[i];
        }
    }
    return table;
}

// ----------------------------------------------------------------------
// Bernoulli / coth coefficients
//
// Tangent numbers T_1..T_n by the integer triangle recurrence, then
//   B_{2n} = (-1)^(n-1) 2n T_n / (4^n (4^n - 1)),   c_{2n} = B_{2n}/(2n)!.
// Integer-only until the final reduction, so the list is exact.
// ----------------------------------------------------------------------

static std::vector<mpz_class> tangent_numbers(std::size_t n) {
    std::vector<mpz_class> t(n + 1);
    if (n == 0) return t;
    t[1] = 1;
    for (std::size_t k = 2; k <= n; ++k) t[k] = t[k - 1] * static_cast<unsigned long>(k - 1);
    for (std::size_t k = 2; k <= n; ++k)
        for (std::size_t j = k; j <= n; ++j)
            t[j] = t[j - 1] * static_cast<unsigned long>(j - k) +
                   t[j] * static_cast<unsigned long>(j - k + 2);
    return t;
}

std::vector<Rational> bernoulli_coefficients(std::size_t count) {
    if (count < 1) throw std::domain_error("bernoulli_coefficients: count must be >= 1");
    std::vector<Rational> c;
    c.reserve(count);
    c.emplace_back(1L);  // c_0
    if (count == 1) return c;

    std::vector<mpz_class> t = tangent_numbers(count - 1);
    mpz_class fact2n = 2;              // (2n)! running, n = 1
    mpz_class pow4 = 4;                // 4^n running
    for (std::size_t n = 1; n < count; ++n) {
        mpz_class num = 2 * static_cast<long>(n) * t[n];
        if (n % 2 == 0) num = -num;
        mpz_class den = pow4 * (pow4 - 1) * fact2n;
        c.emplace_back(num, den);
        // advance (2n)! -> (2n+2)! and 4^n -> 4^(n+1)
        fact2n *= static_cast<unsigned long>(2 * n + 1);
        fact2n *= static_cast<unsigned long>(2 * n + 2);
        pow4 *= 4;
    }
    return c;
}

namespace {
std::mutex g_bernoulli_mutex;
std::shared_ptr<const std::vector<Rational>> g_bernoulli_cache;
}  // namespace

std::shared_ptr<const std::vector<Rational>> bernoulli_coefficients_cached(std::size_t count) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    if (!g_bernoulli_cache || g_bernoulli_cache->size() < count) {
        std::size_t grown = std::max<std::size_t>(count, 64);
        if (g_bernoulli_cache) grown = std::max(grown, g_bernoulli_cache->size() * 2);
        g_bernoulli_cache =
            std::make_shared<const std::vector<Rational>>(bernoulli_coefficients(grown));
    }
    return g_bernoulli_cache;
}

// ----------------------------------------------------------------------
// zeta at integers
// ----------------------------------------------------------------------

BigReal zeta_even(unsigned k, Precision precision_bits) {
    if (k < 1) throw std::domain_error("zeta_even: k must be >= 1");
    Precision q = precision_bits + 32;
    auto coeffs = bernoulli_coefficients_cached(k + 1);
    // zeta(2k) = (-1)^(k+1) (1/2) B_{2k} (2 pi)^{2k} / (2k)! = |c_{2k}| (2 pi)^{2k} / 2
    BigReal two_pi = const_pi(q) * 2L;
    Rational c2k = (*coeffs)[k];
    BigReal r = abs(c2k.to_bigreal(q)) * pow_si(two_pi, 2 * static_cast<long>(k)) / 2L;
    return r.with_prec(precision_bits);
}

// Euler-Maclaurin for zeta(s) at integer s >= 2:
//   sum_{n<=N} n^-s + N^(1-s)/(s-1) + N^-s/2
//   + sum_j c_{2j} (2j-2-nd Pochhammer of s) N^(-s-2j+1)
// The integrand x^-s is completely monotone, so the remainder is bounded by
// the first omitted correction term.
static BigReal zeta_integer_em(unsigned long s, Precision precision_bits) {
    Precision q = precision_bits + 48;
    unsigned long n_direct = std::max<unsigned long>(8, static_cast<unsigned long>(0.125 * q) + 2);

    BigReal acc(q);
    for (unsigned long n = 1; n <= n_direct; ++n) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), n, s);
        acc += 1L / BigReal(pw, q);
    }
    mpz_class npow;  // N^(s-1)
    mpz_ui_pow_ui(npow.get_mpz_t(), n_direct, s - 1);
    acc += 1L / (BigReal(npow, q) * static_cast<long>(s - 1));
    npow *= n_direct;  // N^s
    BigReal ninv(q);   // N^-1 at working precision
    mpfr_ui_div(ninv.raw(), 1, BigReal(static_cast<long>(n_direct), q).raw(), MPFR_RNDN);
    BigReal npow_s_inv = 1L / BigReal(npow, q);
    acc += npow_s_inv / 2L;

    auto coeffs = bernoulli_coefficients_cached(64);
    BigReal threshold = pow2(-(q + 8), 64);
    mpz_class poch = 1;               // s(s+1)...(s+2j-2)
    BigReal npw = npow_s_inv * ninv;  // N^(-s-2j+1), j = 1
    BigReal prev_abs(q);
    bool first = true;
    for (std::size_t j = 1;; ++j) {
        if (j + 1 >= coeffs->size()) coeffs = bernoulli_coefficients_cached(2 * (j + 2));
        if (j == 1) {
            poch = s;
        } else {
            poch *= (s + 2 * j - 3);
            poch *= (s + 2 * j - 2);
        }
        BigReal term = (*coeffs)[j].to_bigreal(q) * BigReal(poch, q) * npw;
        BigReal a = abs(term);
        if (!first && a > prev_abs)
            throw std::logic_error("zeta_integer_em: corrections diverged before target");
        if (a < threshold) break;  // remainder bounded by this omitted term
        acc += term;
        prev_abs = a;
        first = false;
        npw = npw * ninv * ninv;
        if (j > 4 * n_direct) throw std::logic_error("zeta_integer_em: no convergence");
    }
    return acc.with_prec(precision_bits);
}

BigReal zeta_odd(unsigned k, Precision precision_bits) {
    if (k < 1) throw std::domain_error("zeta_odd: k must be >= 1");
    return zeta_integer_em(2ul * k + 1ul, precision_bits);
}

BigReal zeta_integer(unsigned s, Precision precision_bits) {
    if (s < 2) throw std::domain_error("zeta_integer: s must be >= 2");
    if (s % 2 == 0) return zeta_even(s / 2, precision_bits);
    return zeta_integer_em(s, precision_bits);
}

// ----------------------------------------------------------------------
// complex zeta: binomially averaged eta series (Re s >= 1/2), reflection
// formula below the critical line.
// ----------------------------------------------------------------------

// d_0..d_n of the averaged alternating series; all integers.
static std::vector<mpz_class> eta_weights(unsigned long n) {
    std::vector<mpz_class> d(n + 1);
    mpq_class t = 1;
    mpq_class acc = 1;
    d[0] = 1;
    for (unsigned long j = 1; j <= n; ++j) {
        mpq_class f(4 * static_cast<long>(n + j - 1) * static_cast<long>(n - j + 1),
                    static_cast<long>(2 * j) * static_cast<long>(2 * j - 1));
        f.canonicalize();
        t *= f;
        acc += t;
        if (acc.get_den() != 1) throw std::logic_error("eta_weights: non-integer weight");
        d[j] = acc.get_num();
    }
    return d;
}

static BigComplex complex_zeta_eta(const BigComplex& s, Precision precision_bits) {
    double sigma = s.re().to_double();
    double t = std::abs(s.im().to_double());

    // |1 - 2^(1-s)| lower estimate; the prefactor divides by it.
    double w = std::pow(2.0, 1.0 - sigma);
    double denom2 = 1.0 - 2.0 * w * std::cos(t * std::log(2.0)) + w * w;
    double denom = std::sqrt(std::max(denom2, 1e-30));

    // guard for the near-cancellation in 2^(1-s) - 1 as well as accumulation
    Precision denom_bits = static_cast<Precision>(std::ceil(std::max(0.0, -std::log2(denom))));
    Precision q = precision_bits + 40 + denom_bits;
    double ln_target = (static_cast<double>(q) + 4) * std::log(2.0) + std::log(3.0) +
                       std::log1p(2.0 * t) + 1.5707963267948966 * t +
                       std::max(0.0, -std::log(denom));
    unsigned long n = static_cast<unsigned long>(ln_target / std::log(3.0 + std::sqrt(8.0))) + 3;
    q += static_cast<Precision>(std::ceil(std::log2(static_cast<double>(n) + 2)));

    std::vector<mpz_class> d = eta_weights(n);
    BigComplex sq = s.with_prec(q);
    BigReal sum_re(q), sum_im(q);
    for (unsigned long k = 0; k < n; ++k) {
        // (k+1)^(-s) = exp(-s ln(k+1))
        BigReal lk(static_cast<long>(k + 1), q);
        mpfr_log(lk.raw(), lk.raw(), MPFR_RNDN);
        BigComplex p = exp(BigComplex(-(sq.re() * lk), -(sq.im() * lk)));
        BigReal wgt(d[k] - d[n], q);
        if (k % 2 == 1) wgt = -wgt;
        sum_re += wgt * p.re();
        sum_im += wgt * p.im();
    }
    BigComplex num(sum_re, sum_im);
    // 2^(1-s) - 1
    BigReal ln2(q);
    mpfr_const_log2(ln2.raw(), MPFR_RNDN);
    BigComplex one(BigReal(1L, q), BigReal(q));
    BigComplex pref = exp(BigComplex((1L - sq.re()) * ln2, -(sq.im() * ln2))) - one;
    BigComplex z = num / (BigReal(d[n], q) * pref);
    return z.with_prec(precision_bits);
}

BigComplex complex_zeta(const BigComplex& s, Precision precision_bits) {
    if (s.im().is_zero() && s.re() == BigReal(1L, s.precision()))
        throw std::domain_error("complex_zeta: pole at s = 1");
    if (!s.is_finite()) throw std::domain_error("complex_zeta: non-finite argument");

    if (s.re() >= 0.5) return complex_zeta_eta(s, precision_bits);

    // zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
    double t = std::abs(s.im().to_double());
    Precision q = precision_bits + 48 + static_cast<Precision>(std::ceil(2.2662 * t));
    BigComplex sq = s.with_prec(q);
    BigComplex one(BigReal(1L, q), BigReal(q));
    BigComplex s1 = one - sq;

    BigReal pi = const_pi(q);
    BigReal ln2(q);
    mpfr_const_log2(ln2.raw(), MPFR_RNDN);
    BigComplex two_pow = exp(BigComplex(sq.re() * ln2, sq.im() * ln2));
    BigReal lnpi = log(pi);
    BigComplex pi_pow = exp(BigComplex((sq.re() - 1L) * lnpi, sq.im() * lnpi));
    BigComplex sine = sin(BigReal(pi / 2L) * sq);
    BigComplex gam = exp(log_gamma_complex(s1, q));
    BigComplex z1 = complex_zeta_eta(s1, q);
    BigComplex z = two_pow * pi_pow * sine * gam * z1;
    return z.with_prec(precision_bits);
}

// ----------------------------------------------------------------------
// complex log-gamma
// ----------------------------------------------------------------------

BigComplex log_gamma_complex(const BigComplex& z, Precision precision_bits) {
    if (z.im().is_zero()) {
        BigReal zr = z.re();
        if (zr <= 0.0 && zr == floor(zr))
            throw std::domain_error("log_gamma_complex: pole at nonpositive integer");
    }
    Precision q = precision_bits + 48;
    // Re(w) large enough both for Stirling convergence at q bits and to keep
    // |arg w| away from pi/2 (the remainder's sec(arg/2) factor).
    double im_d = std::abs(z.im().to_double());
    double shift_target = std::max({20.0, 0.2 * static_cast<double>(q), 0.75 * im_d});

    BigComplex w = z.with_prec(q);
    double re_d = w.re().to_double();
    long shift = 0;
    if (re_d < shift_target) shift = static_cast<long>(std::ceil(shift_target - re_d));

    // log Gamma(z) = log Gamma(z + shift) - sum_{j<shift} log(z + j)
    BigComplex shift_sum(q);
    for (long j = 0; j < shift; ++j) {
        BigComplex zj(w.re() + j, w.im());
        shift_sum += log(zj);
    }
    BigComplex ws(w.re() + shift, w.im());

    // Stirling: (w - 1/2) log w - w + log(2 pi)/2 + sum_j c_{2j} (2j-2)! w^(1-2j)
    BigReal half(0.5, q);
    BigComplex lw = log(ws);
    BigComplex acc = BigComplex(ws.re() - half, ws.im()) * lw - ws;
    BigReal l2pi = log(const_pi(q) * 2L) / 2L;
    acc += BigComplex(l2pi);

    auto coeffs = bernoulli_coefficients_cached(48);
    BigComplex winv = BigComplex(BigReal(1L, q)) / ws;
    BigComplex winv2 = winv * winv;
    BigComplex wpow = winv;  // w^(1-2j), j = 1
    mpz_class fact = 1;      // (2j-2)!
    BigReal threshold = pow2(-(q + 8), 64);
    BigReal prev(q);
    bool first = true;
    for (std::size_t j = 1;; ++j) {
        if (j + 1 >= coeffs->size()) coeffs = bernoulli_coefficients_cached(2 * (j + 2));
        if (j > 1) {
            fact *= static_cast<unsigned long>(2 * j - 3);
            fact *= static_cast<unsigned long>(2 * j - 2);
        }
        BigComplex term = ((*coeffs)[j].to_bigreal(q) * BigReal(fact, q)) * wpow;
        BigReal a = abs(term);
        if (!first && a > prev)
            throw std::logic_error("log_gamma_complex: Stirling series diverged; shift too small");
        if (a < threshold) break;
        acc += term;
        prev = a;
        first = false;
        wpow = wpow * winv2;
        if (j > static_cast<std::size_t>(4 * shift_target))
            throw std::logic_error("log_gamma_complex: Stirling series did not converge");
    }
    return (acc - shift_sum).with_prec(precision_bits);
}

BigComplex pi_function(const BigComplex& s, Precision precision_bits) {
    Precision q = precision_bits + 16;
    BigComplex one(BigReal(1L, q), BigReal(q));
    return exp(log_gamma_complex(s.with_prec(q) + one, q)).with_prec(precision_bits);
}

BigComplex completed_zeta(const BigComplex& s, Precision precision_bits) {
    Precision q = precision_bits + 48;
    BigComplex sq = s.with_prec(q);
    BigComplex half_s(sq.re() / 2L, sq.im() / 2L);
    BigComplex lg = log_gamma_complex(half_s, q);
    BigReal lnpi = log(const_pi(q));
    // Gamma(s/2) pi^(-s/2) zeta(s) = exp(log Gamma(s/2) - (s/2) ln pi) zeta(s)
    BigComplex expo = exp(lg - BigComplex(half_s.re() * lnpi, half_s.im() * lnpi));
    return (expo * complex_zeta(sq, q)).with_prec(precision_bits);
}

}  // namespace riesz
