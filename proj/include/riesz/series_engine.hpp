// The three series evaluators for R_c (power series with rational
// coefficients, the exponential Dirichlet sum, and its accelerated form),
// the stable exponential remainder F_m, and the truncation planner.

#ifndef RIESZ_SERIES_ENGINE_HPP
#define RIESZ_SERIES_ENGINE_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "riesz/bigreal.hpp"
#include "riesz/numtheory.hpp"
#include "riesz/rational.hpp"

namespace riesz {

// Raised when requested parameters cannot reach the requested accuracy;
// the message says which knob to turn.
class PlannerError : public std::runtime_error {
  public:
    explicit PlannerError(const std::string& what) : std::runtime_error(what) {}
};

enum class Method { maclaurin, theorem1, kummer };

const char* method_name(Method m);

struct SeriesParams {
    double c = 2.0;             // Dirichlet exponent, must exceed provider sigma
    long m = 0;                 // acceleration order
    std::uint64_t n_max = 1;    // summation cutoff
    Precision precision_bits = 64;
};

struct EvaluationResult {
    BigReal value;
    BigReal error_bound;  // rigorous and nonnegative unless stated otherwise
    SeriesParams params;
    Method method = Method::theorem1;
};

// Source of Dirichlet coefficients a(n) with sum f(s) = sum a(n) n^-s.
//
// sigma() is the abscissa of absolute convergence. envelope_constant() /
// envelope_exponent() promise |a(n)| <= A n^e for all n >= 1; tail bounds
// integrate that envelope, and they need c > e + 1. prepare() must be called
// (single-threaded) before coefficient() is read up to that index; after
// preparation the provider is immutable and shareable.
class CoefficientProvider {
  public:
    virtual ~CoefficientProvider() = default;
    virtual std::string name() const = 0;
    virtual double sigma() const = 0;
    virtual double envelope_constant() const = 0;
    virtual double envelope_exponent() const = 0;
    virtual long coefficient(std::uint64_t n) const = 0;
    virtual void prepare(std::uint64_t n_max) {}
    // f(s) for real s > sigma. Default sums the series directly with an
    // envelope tail bound; override when a closed form exists.
    virtual BigReal dirichlet_value(double s, Precision precision_bits) const;
};

// a(n) = mu(n): f(s) = 1/zeta(s), sigma = 1, |a(n)| <= 1.
class MobiusProvider : public CoefficientProvider {
  public:
    explicit MobiusProvider(std::uint64_t initial_limit = 0);
    std::string name() const override { return "mobius"; }
    double sigma() const override { return 1.0; }
    double envelope_constant() const override { return 1.0; }
    double envelope_exponent() const override { return 0.0; }
    long coefficient(std::uint64_t n) const override;
    void prepare(std::uint64_t n_max) override;
    BigReal dirichlet_value(double s, Precision precision_bits) const override;

  private:
    MobiusTable table_;
};

// a(1) = 1, a(n) = 0 otherwise: f(s) = 1, R_c(x) = x exp(-x).
class UnitProvider : public CoefficientProvider {
  public:
    std::string name() const override { return "unit"; }
    double sigma() const override { return 0.0; }
    double envelope_constant() const override { return 1.0; }
    double envelope_exponent() const override { return 0.0; }
    long coefficient(std::uint64_t n) const override { return n == 1 ? 1 : 0; }
    BigReal dirichlet_value(double, Precision precision_bits) const override {
        return BigReal(1L, precision_bits);
    }
};

// F_m(x) = exp(x) - sum_{k<m} x^k/k!, the exponential's Maclaurin remainder.
// Stable: small |x| relative to m sums the tail series directly; otherwise
// the subtraction runs with enough guard bits to absorb the cancellation.
// Satisfies |F_m(x)| <= |x|^m/m!.
BigReal remainder_F(const BigReal& x, long m, Precision precision_bits);

// Riesz(x) by the rational-coefficient Maclaurin series in y = x/(4 pi^2).
// error_bound comes from the first omitted term once the terms decrease;
// throws PlannerError when `terms` ends before the decreasing regime.
EvaluationResult maclaurin_riesz(const BigReal& x, std::uint64_t terms, Precision precision_bits);

// Maclaurin coefficient of y^n in Riesz(4 pi^2 y): 2 / (c_{2n} (n-1)!), exact.
Rational maclaurin_coefficient(std::uint64_t n);

// R_c(x) = x sum_{n<=n_max} a(n) n^-c exp(-x/n^c), with the envelope
// integral tail bound.
EvaluationResult theorem1_series(const CoefficientProvider& provider, double c, const BigReal& x,
                                 std::uint64_t n_max, Precision precision_bits);

// Accelerated form: m explicit head terms (-1)^(k+1) f(ck) x^k/(k-1)! plus
// x sum a(n) n^-c F_m(-x/n^c); tail terms decay like n^(-c(m+1)). m = 0
// degenerates to theorem1_series exactly.
EvaluationResult kummer_series(const CoefficientProvider& provider, double c, const BigReal& x,
                               long m, std::uint64_t n_max, Precision precision_bits);

// Rigorous tail bound of the accelerated series beyond n_max, in lg2 space;
// A, e are the provider envelope.
double kummer_tail_lg2(double x, double c, long m, std::uint64_t n_max, double envelope_a,
                       double envelope_e);

// Smallest acceleration order (and matching cutoff, precision) whose
// rigorous bound lands under `tolerance`. Envelope defaults to the Moebius
// one (A = 1, e = 0).
SeriesParams plan_truncation(const BigReal& x, double c, const BigReal& tolerance,
                             double envelope_a = 1.0, double envelope_e = 0.0);

// Fixed-shape pairwise reduction: block-accumulate then fold blocks in a
// balanced tree, so the result is independent of any parallel partitioning.
BigReal tree_sum(std::vector<BigReal>& terms);

}  // namespace riesz

#endif  // RIESZ_SERIES_ENGINE_HPP
