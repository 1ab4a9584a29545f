#include "mhd/prodcong.hpp"

#include <map>
#include <vector>

#include "mhd/error.hpp"
#include "mhd/modmath.hpp"
#include "mhd/parallel.hpp"

namespace mhd::prodcong {

using modmath::mod_reduce;
using modmath::mul_mod;

namespace {

void validate(std::int64_t nu, std::int64_t h) {
    if (nu < 1) throw Error(ErrorCode::Argument, "product energy: nu must be >= 1");
    if (h < 1) throw Error(ErrorCode::Argument, "product energy: h must be >= 1");
}

// Multiset of shifted integer products over all nu-tuples from [1, h],
// as value -> multiplicity. Exact arithmetic.
std::map<BigInt, std::int64_t> integer_product_classes(std::int64_t nu, std::int64_t u,
                                                       std::int64_t h) {
    std::map<BigInt, std::int64_t> classes;
    classes[BigInt(1)] = 1;
    for (std::int64_t step = 0; step < nu; ++step) {
        std::map<BigInt, std::int64_t> next;
        for (const auto& [prod, cnt] : classes) {
            for (std::int64_t x = 1; x <= h; ++x) {
                next[prod * (x + u)] += cnt;
            }
        }
        classes = std::move(next);
    }
    return classes;
}

} // namespace

std::int64_t count_congruence_energy(std::int64_t p, std::int64_t nu, std::int64_t u,
                                     std::int64_t h) {
    validate(nu, h);
    if (!modmath::is_prime(p))
        throw Error(ErrorCode::Argument, "count_congruence_energy: p is not prime");

    // Multiplicity of each shifted value class; zero classes are excluded.
    std::vector<std::int64_t> base(static_cast<std::size_t>(p), 0);
    for (std::int64_t x = 1; x <= h; ++x) {
        std::int64_t v = mod_reduce(x + u, p);
        if (v != 0) ++base[static_cast<std::size_t>(v)];
    }

    std::vector<std::int64_t> classes(static_cast<std::size_t>(p), 0);
    classes[1] = 1;
    for (std::int64_t step = 0; step < nu; ++step) {
        std::vector<std::int64_t> next(static_cast<std::size_t>(p), 0);
        for (std::int64_t c = 1; c < p; ++c) {
            std::int64_t cnt = classes[static_cast<std::size_t>(c)];
            if (cnt == 0) continue;
            for (std::int64_t v = 1; v < p; ++v) {
                if (base[static_cast<std::size_t>(v)] == 0) continue;
                next[static_cast<std::size_t>(mul_mod(c, v, p))] +=
                    cnt * base[static_cast<std::size_t>(v)];
            }
        }
        classes = std::move(next);
    }

    std::int64_t total = 0;
    for (std::int64_t c = 1; c < p; ++c) {
        std::int64_t m = classes[static_cast<std::size_t>(c)];
        total += m * m;
    }
    return total;
}

std::int64_t count_integer_energy(std::int64_t nu, std::int64_t u, std::int64_t h) {
    validate(nu, h);
    std::int64_t total = 0;
    for (const auto& [prod, cnt] : integer_product_classes(nu, u, h)) total += cnt * cnt;
    return total;
}

DyadicAverageReport dyadic_average_report(std::int64_t T, std::int64_t nu, std::int64_t u,
                                          std::int64_t h, unsigned threads) {
    if (T < 2) throw Error(ErrorCode::Argument, "dyadic_average_report: T must be >= 2");
    validate(nu, h);

    DyadicAverageReport rep;
    const std::vector<std::int64_t> primes = modmath::primes_in_interval(T, 2 * T);
    rep.prime_count = static_cast<std::int64_t>(primes.size());

    std::vector<std::int64_t> per_prime(primes.size(), 0);
    parallel_for_index(primes.size(), threads, [&](std::size_t i) {
        per_prime[i] = count_congruence_energy(primes[i], nu, u, h);
    });
    for (std::int64_t v : per_prime) rep.lhs += v;

    const auto classes = integer_product_classes(nu, u, h);
    for (const auto& [prod, cnt] : classes) rep.integer_energy += cnt * cnt;

    // omega-sum over ordered pairs of product classes, shifted products on
    // both sides; the diagonal contributes omega(0) = 0.
    for (const auto& [pv, cv] : classes) {
        for (const auto& [pw, cw] : classes) {
            if (pv == pw) continue;
            BigInt diff = pv - pw;
            if (diff < 0) diff = -diff;
            rep.omega_sum += cv * cw * modmath::omega(diff);
        }
    }

    rep.holds = rep.lhs <= rep.prime_count * rep.integer_energy + rep.omega_sum;
    return rep;
}

} // namespace mhd::prodcong
