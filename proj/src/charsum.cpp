#include "mhd/charsum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mhd/error.hpp"
#include "mhd/parallel.hpp"
#include "twiddle.hpp"

namespace mhd::charsum {

using modmath::mod_reduce;
using modmath::mul_mod;
using modmath::PrimeContext;

namespace {

// Per-term data for an interval sum: multiplicative index of x (or -1 when
// p | x) and f(x) mod p.
struct IntervalTerms {
    std::vector<std::int64_t> ind;  // (k * ind(x)) mod (p-1), -1 for dropped terms
    std::vector<std::int64_t> fval; // f(x) mod p
};

IntervalTerms prepare_terms(const PrimeContext& ctx, std::int64_t k, const IntegerPolynomial& f,
                            std::int64_t u, std::int64_t h) {
    const std::int64_t p = ctx.prime();
    const std::int64_t order = p - 1;
    const std::int64_t kk = mod_reduce(k, order);
    const auto reduced = f.reduced_mod(p);
    IntervalTerms terms;
    terms.ind.reserve(static_cast<std::size_t>(h));
    terms.fval.reserve(static_cast<std::size_t>(h));
    for (std::int64_t x = u + 1; x <= u + h; ++x) {
        std::int64_t r = mod_reduce(x, p);
        if (r == 0) {
            terms.ind.push_back(-1);
            terms.fval.push_back(0);
            continue;
        }
        terms.ind.push_back(mul_mod(kk, ctx.index_of(r), order));
        terms.fval.push_back(IntegerPolynomial::eval_mod(reduced, r, p));
    }
    return terms;
}

Complex sum_terms(const detail::Twiddles& tw, const IntervalTerms& terms, std::int64_t t,
                  std::int64_t lambda) {
    const std::int64_t p = tw.p;
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < terms.ind.size(); ++i) {
        if (terms.ind[i] < 0) continue;
        std::int64_t m = mul_mod(t, terms.ind[i], p - 1);
        std::int64_t z = mul_mod(mod_reduce(lambda, p), terms.fval[i], p);
        acc += tw.mul[static_cast<std::size_t>(m)] * tw.add[static_cast<std::size_t>(z)];
    }
    return acc;
}

} // namespace

Character Character::quadratic(modmath::PrimeContextPtr ctx) {
    if (ctx->prime() == 2)
        throw Error(ErrorCode::Argument, "Character::quadratic: p must be odd");
    std::int64_t t = (ctx->prime() - 1) / 2;
    return {std::move(ctx), t};
}

Character Character::of_index(modmath::PrimeContextPtr ctx, std::int64_t t) {
    if (t < 0 || t >= ctx->prime() - 1)
        throw Error(ErrorCode::Argument, "Character::of_index: index out of [0, p-2]");
    return {std::move(ctx), t};
}

Complex char_eval(const Character& chi, std::int64_t x) {
    const std::int64_t p = chi.ctx->prime();
    std::int64_t r = mod_reduce(x, p);
    if (r == 0) return {0.0, 0.0};
    std::int64_t m = mul_mod(chi.t, chi.ctx->index_of(r), p - 1);
    double ang = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(p - 1);
    return {std::cos(ang), std::sin(ang)};
}

Complex gauss_sum(const Character& chi, std::int64_t lambda) {
    const PrimeContext& ctx = *chi.ctx;
    const std::int64_t p = ctx.prime();
    detail::Twiddles tw(p);
    const std::int64_t lam = mod_reduce(lambda, p);
    Complex acc{0.0, 0.0};
    for (std::int64_t y = 1; y < p; ++y) {
        acc += tw.chi(ctx, chi.t, y) * tw.add[static_cast<std::size_t>(mul_mod(lam, y, p))];
    }
    return acc;
}

double gauss_magnitude_expected(std::int64_t p, bool principal, bool lambda_zero) {
    if (principal) return lambda_zero ? static_cast<double>(p - 1) : 1.0;
    return lambda_zero ? 0.0 : std::sqrt(static_cast<double>(p));
}

Complex interval_mixed_sum(const Character& chi, std::int64_t k, const IntegerPolynomial& f,
                           std::int64_t lambda, std::int64_t u, std::int64_t h) {
    if (h < 1) throw Error(ErrorCode::Argument, "interval_mixed_sum: h must be >= 1");
    if (k < 1) throw Error(ErrorCode::Argument, "interval_mixed_sum: k must be >= 1");
    const PrimeContext& ctx = *chi.ctx;
    detail::Twiddles tw(ctx.prime());
    IntervalTerms terms = prepare_terms(ctx, k, f, u, h);
    return sum_terms(tw, terms, chi.t, lambda);
}

std::int64_t dropped_term_count(std::int64_t u, std::int64_t h, std::int64_t p) {
    auto floor_div = [](std::int64_t a, std::int64_t b) {
        std::int64_t q = a / b;
        return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
    };
    return floor_div(u + h, p) - floor_div(u, p);
}

double sixth_moment(const modmath::PrimeContextPtr& ctx, std::int64_t k,
                    const IntegerPolynomial& f, std::int64_t lambda, std::int64_t u,
                    std::int64_t h) {
    if (h < 1) throw Error(ErrorCode::Argument, "sixth_moment: h must be >= 1");
    if (k < 1) throw Error(ErrorCode::Argument, "sixth_moment: k must be >= 1");
    const std::int64_t p = ctx->prime();
    if (std::gcd(k, p - 1) != 1)
        throw Error(ErrorCode::Precondition,
                    "sixth_moment: gcd(k, p-1) must be 1 for the character-power bijection");
    detail::Twiddles tw(p);
    IntervalTerms terms = prepare_terms(*ctx, k, f, u, h);

    std::vector<double> sixth(static_cast<std::size_t>(p - 1), 0.0);
    for (std::int64_t t = 0; t < p - 1; ++t) {
        double a = std::abs(sum_terms(tw, terms, t, lambda));
        double a2 = a * a;
        sixth[static_cast<std::size_t>(t)] = a2 * a2 * a2;
    }
    return pairwise_sum(sixth);
}

DecayMeasurement measure_decay(const modmath::PrimeContextPtr& ctx, std::int64_t k,
                               const IntegerPolynomial& f, std::int64_t u, std::int64_t h,
                               unsigned threads) {
    if (h < 1) throw Error(ErrorCode::Argument, "measure_decay: h must be >= 1");
    if (k < 1) throw Error(ErrorCode::Argument, "measure_decay: k must be >= 1");
    const std::int64_t p = ctx->prime();
    DecayMeasurement best;
    if (p == 2) return best; // no non-principal characters

    detail::Twiddles tw(p);
    IntervalTerms terms = prepare_terms(*ctx, k, f, u, h);

    // One slot per lambda; reduce in lambda order so ties break to the
    // smallest (lambda, chi) regardless of thread count.
    std::vector<DecayMeasurement> slots(static_cast<std::size_t>(p));
    parallel_for_index(static_cast<std::size_t>(p), threads, [&](std::size_t li) {
        std::int64_t lambda = static_cast<std::int64_t>(li);
        DecayMeasurement local;
        for (std::int64_t t = 1; t < p - 1; ++t) {
            double ratio = std::abs(sum_terms(tw, terms, t, lambda)) / static_cast<double>(h);
            if (ratio > local.max_ratio) {
                local.max_ratio = ratio;
                local.argmax_chi = t;
                local.argmax_lambda = lambda;
            }
        }
        slots[li] = local;
    });
    for (const DecayMeasurement& s : slots) {
        if (s.max_ratio > best.max_ratio) best = s;
    }
    return best;
}

} // namespace mhd::charsum
