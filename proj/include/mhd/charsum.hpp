#pragma once

#include <complex>
#include <cstdint>

#include "mhd/modmath.hpp"
#include "mhd/polynomial.hpp"

namespace mhd::charsum {

using Complex = std::complex<double>;

// Multiplicative character mod p, identified by its index t in [0, p-2]
// against the context's primitive root:
//   chi(x) = exp(2*pi*i * t * ind(x) / (p-1)) for x != 0 (mod p),
//   chi(0) = 0.
// t = 0 is the principal character, t = (p-1)/2 the quadratic one.
struct Character {
    modmath::PrimeContextPtr ctx;
    std::int64_t t = 0;

    static Character principal(modmath::PrimeContextPtr ctx) { return {std::move(ctx), 0}; }
    static Character quadratic(modmath::PrimeContextPtr ctx);
    static Character of_index(modmath::PrimeContextPtr ctx, std::int64_t t);

    bool is_principal() const noexcept { return t == 0; }
};

Complex char_eval(const Character& chi, std::int64_t x);

// Complete Gauss sum G(chi, lambda) = sum_{y=1}^{p-1} chi(y) e(lambda*y),
// with e(z) = exp(2*pi*i*z/p).
Complex gauss_sum(const Character& chi, std::int64_t lambda);

// |G(chi, lambda)| predicted by the standard magnitude law:
// p-1 (principal, lambda = 0), 1 (principal, lambda != 0),
// 0 (non-principal, lambda = 0), sqrt(p) otherwise.
double gauss_magnitude_expected(std::int64_t p, bool principal, bool lambda_zero);

// Interval sum  sum_{x=u+1}^{u+h} chi^k(x) e(lambda*f(x)).
// Terms with p | x vanish under the chi(0) = 0 convention.
Complex interval_mixed_sum(const Character& chi, std::int64_t k, const IntegerPolynomial& f,
                           std::int64_t lambda, std::int64_t u, std::int64_t h);

// Number of x in (u, u+h] divisible by p — the terms interval_mixed_sum drops.
std::int64_t dropped_term_count(std::int64_t u, std::int64_t h, std::int64_t p);

// sum over all p-1 characters chi of |S(chi;lambda)|^6 with
// S(chi;lambda) = sum_{x=u+1}^{u+h} chi^k(x) e(lambda*f(x)).
// Requires gcd(k, p-1) = 1 so that chi -> chi^k permutes the character group;
// at lambda = 0 the value equals (p-1) * I_{p,3}(u, h).
double sixth_moment(const modmath::PrimeContextPtr& ctx, std::int64_t k,
                    const IntegerPolynomial& f, std::int64_t lambda, std::int64_t u,
                    std::int64_t h);

struct DecayMeasurement {
    double max_ratio = 0.0;       // max |S(chi;lambda)| / h over the grid below
    std::int64_t argmax_chi = -1; // character index attaining the max (-1 if none)
    std::int64_t argmax_lambda = -1;
};

// Max of |S(chi;lambda)|/h over non-principal chi and all lambda in F_p.
// Ties resolve to the smallest (lambda, chi index) pair.
DecayMeasurement measure_decay(const modmath::PrimeContextPtr& ctx, std::int64_t k,
                               const IntegerPolynomial& f, std::int64_t u, std::int64_t h,
                               unsigned threads = 1);

} // namespace mhd::charsum
