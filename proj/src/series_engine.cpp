#include "riesz/series_engine.hpp"

#include <algorithm>
#include <cmath>

namespace riesz {

const char* method_name(Method m) {
    switch (m) {
        case Method::maclaurin: return "maclaurin";
        case Method::theorem1: return "theorem1";
        case Method::kummer: return "kummer";
    }
    return "?";
}

// ----------------------------------------------------------------------
// providers
// ----------------------------------------------------------------------

BigReal CoefficientProvider::dirichlet_value(double s, Precision precision_bits) const {
    if (s <= sigma()) throw std::domain_error("dirichlet_value: s must exceed sigma");
    double a = envelope_constant();
    double e = envelope_exponent();
    if (s <= e + 1.0) throw std::domain_error("dirichlet_value: envelope cannot bound tail");
    Precision q = precision_bits + 32;
    // A N^(e-s+1)/(s-e-1) < 2^-(q+8)
    double lg_n = (static_cast<double>(q) + 8 + std::log2(std::max(a, 1e-300)) -
                   std::log2(s - e - 1.0)) /
                  (s - e - 1.0);
    if (lg_n > 26.0)
        throw PlannerError("dirichlet_value: direct summation infeasible this close to sigma");
    std::uint64_t n_cut = static_cast<std::uint64_t>(std::pow(2.0, std::max(lg_n, 3.0))) + 2;
    BigReal sum(q);
    BigReal sb(s, q);
    for (std::uint64_t n = 1; n <= n_cut; ++n) {
        long an = coefficient(n);
        if (an == 0) continue;
        BigReal p = pow(BigReal(static_cast<long>(n), q), sb);
        BigReal t = BigReal(an, q) / p;
        sum += t;
    }
    return sum.with_prec(precision_bits);
}

MobiusProvider::MobiusProvider(std::uint64_t initial_limit)
    : table_(mobius_sieve(std::max<std::uint64_t>(initial_limit, 1))) {}

long MobiusProvider::coefficient(std::uint64_t n) const {
    if (n == 0 || n > table_.limit)
        throw std::logic_error("MobiusProvider: coefficient index beyond prepared limit");
    return table_.mu(n);
}

void MobiusProvider::prepare(std::uint64_t n_max) {
    if (n_max > table_.limit) table_ = mobius_sieve(n_max);
}

BigReal MobiusProvider::dirichlet_value(double s, Precision precision_bits) const {
    if (s <= 1.0) throw std::domain_error("MobiusProvider: f(s) = 1/zeta(s) needs s > 1");
    Precision q = precision_bits + 16;
    BigReal z(q);
    if (s == std::floor(s) && s < 1e9) {
        z = zeta_integer(static_cast<unsigned>(s), q);
    } else {
        z = complex_zeta(BigComplex(BigReal(s, q)), q).re();
    }
    return (1L / z).with_prec(precision_bits);
}

// ----------------------------------------------------------------------
// F_m
// ----------------------------------------------------------------------

BigReal remainder_F(const BigReal& x, long m, Precision precision_bits) {
    if (m < 0) throw std::domain_error("remainder_F: m must be >= 0");
    if (m == 0) return exp(x.with_prec(precision_bits + 16)).with_prec(precision_bits);
    if (x.is_zero()) return BigReal(precision_bits);

    double xd = std::abs(x.to_double());
    if (abs(x) <= 0.5 * static_cast<double>(m)) {
        // tail series sum_{k>=m} x^k/k!; term ratio <= 1/2, no cancellation
        Precision q = precision_bits + 32 + static_cast<Precision>(std::log2(m + 2.0));
        BigReal xq = x.with_prec(q);
        BigReal term = pow_si(xq, m) / BigReal(factorial(static_cast<unsigned long>(m)), q);
        BigReal sum = term;
        BigReal cutoff = abs(term) * pow2(-(q + 4), 64);
        for (long k = m + 1;; ++k) {
            term = term * xq / k;
            sum += term;
            if (abs(term) < cutoff) break;
            if (k > m + q + 64) break;  // ratio <= 1/2 forces exit long before
        }
        return sum.with_prec(precision_bits);
    }

    // exp(x) minus the partial sum; cancellation eats at most about
    // log2(e^|x| / (e^-|x| |x|^m / m!)) ~ 2.89|x| bits (x < 0 worst case)
    Precision guard;
    if (x.sign() > 0) {
        double lost = std::lgamma(m + 1.0) / std::log(2.0) - m * std::log2(xd);
        guard = static_cast<Precision>(std::max(0.0, std::ceil(lost))) + 34;
    } else {
        guard = static_cast<Precision>(std::ceil(2.8854 * xd)) + 34;
    }
    Precision q = precision_bits + guard + static_cast<Precision>(std::log2(m + 2.0));
    BigReal xq = x.with_prec(q);
    BigReal partial(1L, q);
    BigReal term(1L, q);
    for (long k = 1; k < m; ++k) {
        term = term * xq / k;
        partial += term;
    }
    return (exp(xq) - partial).with_prec(precision_bits);
}

// ----------------------------------------------------------------------
// deterministic reduction
// ----------------------------------------------------------------------

BigReal tree_sum(std::vector<BigReal>& terms) {
    if (terms.empty()) return BigReal();
    for (std::size_t stride = 1; stride < terms.size(); stride *= 2)
        for (std::size_t i = 0; i + stride < terms.size(); i += 2 * stride)
            terms[i] += terms[i + stride];
    return terms[0];
}

// ----------------------------------------------------------------------
// exponential-series core shared by theorem1 and kummer
// ----------------------------------------------------------------------

namespace {

constexpr std::size_t kBlock = 4096;

struct CoreSum {
    BigReal sum;
    long max_exp = -(1L << 30);
    std::uint64_t terms = 0;
};

// sum_{n<=n_max} a(n) n^-c F_m(-x n^-c) at precision q (F_0 = exp)
CoreSum exp_series_sum(const CoefficientProvider& provider, double c, const BigReal& x, long m,
                       std::uint64_t n_max, Precision q) {
    const bool c_integral = (c == std::floor(c) && c >= 1.0 && c <= 60.0);
    const long ci = static_cast<long>(c);
    BigReal cb(c, q);

    CoreSum out;
    out.sum = BigReal(q);
    std::vector<BigReal> blocks;
    BigReal block_acc(q);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        long an = provider.coefficient(n);
        if (an == 0) continue;
        BigReal ninv_c(q);
        if (c_integral) {
            mpz_class pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), n, static_cast<unsigned long>(ci));
            mpfr_set_z(ninv_c.raw(), pw.get_mpz_t(), MPFR_RNDN);
            mpfr_si_div(ninv_c.raw(), 1, ninv_c.raw(), MPFR_RNDN);
        } else {
            ninv_c = pow(BigReal(static_cast<long>(n), q), -cb);
        }
        BigReal f = remainder_F(-(x * ninv_c), m, q);
        BigReal term = ninv_c * f;
        if (an != 1) term *= an;
        if (!term.is_zero()) out.max_exp = std::max(out.max_exp, term.exponent2());
        ++out.terms;
        block_acc += term;
        if (out.terms % kBlock == 0) {
            blocks.push_back(block_acc);
            block_acc = BigReal(q);
        }
    }
    blocks.push_back(block_acc);
    out.sum = tree_sum(blocks);
    return out;
}

// envelope tail bound A |x|^(m+1)/m! n_max^(e-c(m+1)+1)/(c(m+1)-e-1),
// computed upward-inflated at modest precision
BigReal envelope_tail_bound(double c, const BigReal& x, long m, std::uint64_t n_max, double env_a,
                            double env_e) {
    double decay = c * (m + 1) - env_e - 1.0;
    if (decay <= 0.0)
        throw std::domain_error("series tail bound requires c(m+1) > envelope_exponent + 1");
    Precision q = 96;
    BigReal b = pow_si(abs(x.with_prec(q)), m + 1);
    b /= BigReal(factorial(static_cast<unsigned long>(m)), q);
    b *= pow(BigReal(static_cast<long>(n_max), q), BigReal(env_e - c * (m + 1) + 1.0, q));
    b /= BigReal(decay, q);
    b *= BigReal(env_a, q);
    // absorb the rounding of this very computation
    b *= BigReal(1.0 + 1e-9, q);
    return b;
}

Precision head_guard_bits(double xd, long m, std::uint64_t n_max) {
    double peak = 0.0;  // lg2 of the largest head/tail term magnitude
    if (xd > 1.0) {
        for (long k = 1; k <= std::max(1L, m); ++k)
            peak = std::max(peak, k * std::log2(xd) - std::lgamma(k) / std::log(2.0));
        peak = std::max(peak, (m + 1) * std::log2(xd) - std::lgamma(m + 1.0) / std::log(2.0));
    }
    return static_cast<Precision>(std::ceil(peak)) +
           static_cast<Precision>(std::ceil(std::log2(static_cast<double>(n_max) + 2))) + 64;
}

}  // namespace

double kummer_tail_lg2(double x, double c, long m, std::uint64_t n_max, double envelope_a,
                       double envelope_e) {
    double decay = c * (m + 1) - envelope_e - 1.0;
    if (decay <= 0.0) return 1e300;
    if (x <= 0.0) return -1e300;
    double const ln2 = std::log(2.0);
    return std::log2(envelope_a) + (m + 1) * std::log2(x) - std::lgamma(m + 1.0) / ln2 +
           (envelope_e - c * (m + 1) + 1.0) * std::log2(static_cast<double>(n_max)) -
           std::log2(decay);
}

EvaluationResult kummer_series(const CoefficientProvider& provider, double c, const BigReal& x,
                               long m, std::uint64_t n_max, Precision precision_bits) {
    if (c <= provider.sigma())
        throw std::domain_error("kummer_series: c must exceed the provider's sigma");
    if (m < 0) throw std::domain_error("kummer_series: m must be >= 0");
    if (n_max < 1) throw std::domain_error("kummer_series: n_max must be >= 1");

    SeriesParams params{c, m, n_max, precision_bits};
    if (x.is_zero()) {
        EvaluationResult r{BigReal(precision_bits), BigReal(precision_bits), params,
                           Method::kummer};
        return r;
    }

    double xd = std::abs(x.to_double());
    Precision q = precision_bits + head_guard_bits(xd, m, n_max);
    BigReal xq = x.with_prec(q);

    const_cast<CoefficientProvider&>(provider).prepare(n_max);

    long max_exp = -(1L << 30);
    BigReal head(q);
    if (m >= 1) {
        BigReal xpow(1L, q);
        mpz_class fact = 1;
        for (long k = 1; k <= m; ++k) {
            xpow *= xq;
            if (k > 1) fact *= static_cast<unsigned long>(k - 1);
            BigReal f_ck = provider.dirichlet_value(c * k, q);
            BigReal term = f_ck * xpow / BigReal(fact, q);
            if (k % 2 == 0) term = -term;
            if (!term.is_zero()) max_exp = std::max(max_exp, term.exponent2());
            head += term;
        }
    }

    CoreSum tail = exp_series_sum(provider, c, xq, m, n_max, q);
    BigReal value = head + xq * tail.sum;
    max_exp = std::max(max_exp, tail.max_exp + std::max(0L, x.exponent2()));

    BigReal bound = envelope_tail_bound(c, x, m, n_max, provider.envelope_constant(),
                                        provider.envelope_exponent());
    // accumulated rounding: every operation is correctly rounded at q bits
    long ops = static_cast<long>(tail.terms) + m + 8;
    BigReal slack = pow2(max_exp + static_cast<long>(std::ceil(std::log2(ops + 2.0))) + 8 - q, 64);
    bound += slack;

    EvaluationResult r{value.with_prec(precision_bits), bound, params, Method::kummer};
    return r;
}

EvaluationResult theorem1_series(const CoefficientProvider& provider, double c, const BigReal& x,
                                 std::uint64_t n_max, Precision precision_bits) {
    EvaluationResult r = kummer_series(provider, c, x, 0, n_max, precision_bits);
    r.method = Method::theorem1;
    return r;
}

// ----------------------------------------------------------------------
// Maclaurin route
// ----------------------------------------------------------------------

Rational maclaurin_coefficient(std::uint64_t n) {
    if (n < 1) throw std::domain_error("maclaurin_coefficient: n must be >= 1");
    auto coeffs = bernoulli_coefficients_cached(n + 1);
    Rational c2n = (*coeffs)[n];
    Rational fac{mpz_class(factorial(static_cast<unsigned long>(n - 1)))};
    return Rational(2L) / (c2n * fac);
}

// upper bound for zeta(2n)/zeta(2n+2), n >= given index
static double zeta_ratio_bound(std::uint64_t n) {
    if (n >= 3) return 1.0174;
    if (n == 2) return 1.0824;
    return 1.6450;
}

EvaluationResult maclaurin_riesz(const BigReal& x, std::uint64_t terms, Precision precision_bits) {
    if (terms < 1) throw std::domain_error("maclaurin_riesz: terms must be >= 1");
    SeriesParams params{2.0, 0, terms, precision_bits};
    if (x.is_zero())
        return {BigReal(precision_bits), BigReal(precision_bits), params, Method::maclaurin};

    double xd = std::abs(x.to_double());
    Precision q = precision_bits + 64 + static_cast<Precision>(std::ceil(1.4427 * xd)) +
                  static_cast<Precision>(std::ceil(std::log2(static_cast<double>(terms) + 2)));

    auto coeffs = bernoulli_coefficients_cached(terms + 2);
    BigReal pi = const_pi(q);
    BigReal y = x.with_prec(q) / (4L * pi * pi);

    BigReal sum(q);
    BigReal ypow(1L, q);
    mpz_class fact = 1;  // (n-1)!
    long max_exp = -(1L << 30);
    BigReal last_abs(q);
    for (std::uint64_t n = 1; n <= terms; ++n) {
        ypow *= y;
        if (n > 1) fact *= static_cast<unsigned long>(n - 1);
        // 2 y^n / (c_{2n} (n-1)!)
        BigReal c2n = (*coeffs)[n].to_bigreal(q);
        BigReal term = (2L * ypow) / (c2n * BigReal(fact, q));
        if (!term.is_zero()) max_exp = std::max(max_exp, term.exponent2());
        sum += term;
        if (n == terms) last_abs = abs(term);
    }

    // first omitted term and the geometric safety factor
    mpz_class fact_next = fact * static_cast<unsigned long>(terms == 1 ? 1 : terms - 1);
    fact_next = fact * static_cast<unsigned long>(std::max<std::uint64_t>(terms - 1, 1));
    BigReal c_next = (*coeffs)[terms + 1].to_bigreal(q);
    BigReal omitted = abs((2L * ypow * y) / (c_next * BigReal(fact_next, q)));

    double rhat = xd * zeta_ratio_bound(terms + 1) / static_cast<double>(terms + 1);
    if (!(omitted < last_abs) || rhat >= 1.0)
        throw PlannerError(
            "maclaurin_riesz: series not yet decreasing at the cutoff; increase `terms` beyond "
            "~1.02*x + a margin");

    BigReal bound = omitted.with_prec(96) / BigReal(1.0 - rhat, 96);
    bound *= BigReal(1.0 + 1e-9, 96);
    BigReal slack =
        pow2(max_exp + static_cast<long>(std::ceil(std::log2(terms + 2.0))) + 8 - q, 64);
    bound += slack;

    return {sum.with_prec(precision_bits), bound, params, Method::maclaurin};
}

// ----------------------------------------------------------------------
// planner
// ----------------------------------------------------------------------

SeriesParams plan_truncation(const BigReal& x, double c, const BigReal& tolerance,
                             double envelope_a, double envelope_e) {
    if (!(tolerance > BigReal(0L, 64)))
        throw std::domain_error("plan_truncation: tolerance must be positive");
    if (x.sign() < 0) throw std::domain_error("plan_truncation: x must be >= 0");
    if (c <= envelope_e + 1.0)
        throw std::domain_error("plan_truncation: need c > envelope_exponent + 1");

    Precision pbits = std::max<Precision>(64, -tolerance.exponent2() + 32);
    if (x.is_zero()) return SeriesParams{c, 1, 1, pbits};

    double xd = x.to_double();
    double lg_tol_half = static_cast<double>(tolerance.exponent2()) - 2.0;  // lg2(tol/2) lower est

    std::uint64_t n_base =
        std::max<std::uint64_t>(2, static_cast<std::uint64_t>(std::ceil(std::pow(xd, 1.0 / c))));
    for (std::uint64_t mult = 1; mult <= (1u << 22); mult *= 2) {
        std::uint64_t n_max = n_base * mult + 8;
        for (long m = 0; m <= 400; ++m) {
            if (kummer_tail_lg2(xd, c, m, n_max, envelope_a, envelope_e) < lg_tol_half)
                return SeriesParams{c, m, n_max, pbits};
        }
    }
    throw PlannerError("plan_truncation: tolerance unreachable; relax tolerance or reduce x");
}

}  // namespace riesz
