// Exact and high-precision number-theoretic primitives: Moebius values,
// Bernoulli/coth coefficients, zeta at integers, complex zeta and log-gamma.
//
// Everything here is pure given its inputs. Tables and coefficient lists are
// immutable after construction and safe to share across threads.

#ifndef RIESZ_NUMTHEORY_HPP
#define RIESZ_NUMTHEORY_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "riesz/bigcomplex.hpp"
#include "riesz/bigreal.hpp"
#include "riesz/rational.hpp"

namespace riesz {

// mu(n) for 1 <= n <= limit, built by a linear sieve.
struct MobiusTable {
    std::uint64_t limit = 0;
    std::vector<std::int8_t> values;  // index n, entry mu(n); values[0] unused

    int mu(std::uint64_t n) const { return values[n]; }
};

MobiusTable mobius_sieve(std::uint64_t limit);

// c_{2n} = B_{2n}/(2n)! for n = 0..count-1: the even Taylor coefficients of
// (x/2) coth(x/2). Exact rationals from the tangent-number integer
// recurrence; c_0 = 1, c_2 = 1/12, c_4 = -1/720.
std::vector<Rational> bernoulli_coefficients(std::size_t count);

// Shared snapshot of an internal cache of the same list; grows on demand.
// The pointee is immutable.
std::shared_ptr<const std::vector<Rational>> bernoulli_coefficients_cached(std::size_t count);

// zeta(2k) = (-1)^(k+1) (1/2) B_{2k} (2 pi)^{2k} / (2k)!,  k >= 1.
BigReal zeta_even(unsigned k, Precision precision_bits);

// zeta(2k+1), k >= 1, by direct summation plus Euler-Maclaurin tail.
BigReal zeta_odd(unsigned k, Precision precision_bits);

// zeta(s) for integer s >= 2, routed to zeta_even/zeta_odd.
BigReal zeta_integer(unsigned s, Precision precision_bits);

// zeta(s) on the complex plane, s != 1. Re(s) >= 1/2 uses the
// binomially-averaged alternating (eta) series; Re(s) < 1/2 uses the
// reflection formula. Accuracy holds to the requested precision for
// moderate |Im s| (hundreds).
BigComplex complex_zeta(const BigComplex& s, Precision precision_bits);

// log Gamma(z) via Stirling's series after shifting Re(z) up by the
// recurrence; the branch is the standard continuation that is real on the
// positive real axis. z must not be a nonpositive integer.
BigComplex log_gamma_complex(const BigComplex& z, Precision precision_bits);

// Pi(s) = Gamma(s+1).
BigComplex pi_function(const BigComplex& s, Precision precision_bits);

// kappa(s) = Gamma(s/2) pi^(-s/2) zeta(s); satisfies kappa(s) = kappa(1-s).
BigComplex completed_zeta(const BigComplex& s, Precision precision_bits);

}  // namespace riesz

#endif  // RIESZ_NUMTHEORY_HPP
