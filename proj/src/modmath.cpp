#include "mhd/modmath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mhd/error.hpp"

namespace mhd::modmath {

namespace {

constexpr std::int64_t kSieveLimit = 1'000'000'000;

std::vector<std::int64_t> small_primes_upto(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n < 2) return out;
    std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t i = 2; i <= n; ++i) {
        if (comp[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= n; j += i) comp[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

// Shared factor base for omega(); grown lazily.
const std::vector<std::int64_t>& omega_prime_base() {
    static const std::vector<std::int64_t> base = small_primes_upto(100'000);
    return base;
}

} // namespace

std::int64_t mod_reduce(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t r = 1;
    std::int64_t b = mod_reduce(base, m);
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    if (n > kPrimalityLimit)
        throw Error(ErrorCode::Range, "is_prime: argument exceeds deterministic witness range");
    std::int64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17}) {
        std::int64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<std::int64_t> primes_in_interval(std::int64_t lo, std::int64_t hi) {
    if (lo < 0 || lo > hi)
        throw Error(ErrorCode::Range, "primes_in_interval: need 0 <= lo <= hi");
    if (hi > kSieveLimit)
        throw Error(ErrorCode::Range, "primes_in_interval: hi exceeds the 10^9 sieve guard");
    std::vector<std::int64_t> out;
    if (hi < 2) return out;
    lo = std::max<std::int64_t>(lo, 2);

    std::int64_t root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(hi))) + 1;
    const std::vector<std::int64_t> base = small_primes_upto(root);

    std::size_t len = static_cast<std::size_t>(hi - lo + 1);
    std::vector<bool> comp(len, false);
    for (std::int64_t p : base) {
        std::int64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
        for (std::int64_t j = start; j <= hi; j += p) comp[static_cast<std::size_t>(j - lo)] = true;
    }
    for (std::size_t i = 0; i < len; ++i) {
        if (!comp[i]) out.push_back(lo + static_cast<std::int64_t>(i));
    }
    return out;
}

std::int64_t prime_count_upto(std::int64_t n) {
    if (n < 2) return 0;
    return static_cast<std::int64_t>(primes_in_interval(1, n).size());
}

std::optional<std::int64_t> find_prime_in_ap(std::int64_t lo, std::int64_t hi,
                                             std::int64_t modulus, std::int64_t residue) {
    if (modulus < 1)
        throw Error(ErrorCode::Argument, "find_prime_in_ap: modulus must be >= 1");
    if (residue < 0 || residue >= modulus)
        throw Error(ErrorCode::Argument, "find_prime_in_ap: residue must lie in [0, modulus)");
    if (modulus > 1 && std::gcd(residue, modulus) != 1)
        throw Error(ErrorCode::Argument, "find_prime_in_ap: residue not coprime to modulus");
    if (lo > hi) return std::nullopt;

    std::int64_t start = std::max<std::int64_t>(lo, 2);
    std::int64_t first = start + mod_reduce(residue - start, modulus);
    for (std::int64_t n = first; n <= hi; n += modulus) {
        if (is_prime(n)) return n;
    }
    return std::nullopt;
}

std::int64_t primitive_root(std::int64_t p) {
    if (!is_prime(p)) throw Error(ErrorCode::Argument, "primitive_root: p is not prime");
    if (p == 2) return 1;
    std::int64_t order = p - 1;

    std::vector<std::int64_t> factors;
    std::int64_t m = order;
    for (std::int64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) factors.push_back(m);

    for (std::int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::int64_t q : factors) {
            if (pow_mod(g, order / q, p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw Error(ErrorCode::Argument, "primitive_root: no generator found (not prime?)");
}

std::int64_t omega(const BigInt& m) {
    if (m < 0) return omega(BigInt(-m));
    if (m <= 1) return 0;
    BigInt rest = m;
    std::int64_t count = 0;
    for (std::int64_t p : omega_prime_base()) {
        if (BigInt(p) * p > rest) break;
        if (rest % p == 0) {
            ++count;
            while (rest % p == 0) rest /= p;
        }
    }
    if (rest > 1) {
        BigInt d = omega_prime_base().back() + 2;
        while (d * d <= rest) {
            if (rest % d == 0) {
                ++count;
                while (rest % d == 0) rest /= d;
            }
            d += 2;
        }
        if (rest > 1) ++count;
    }
    return count;
}

std::int64_t omega(std::int64_t m) { return omega(BigInt(m)); }

std::shared_ptr<const PrimeContext> PrimeContext::create(std::int64_t p, std::int64_t limit) {
    if (!is_prime(p)) throw Error(ErrorCode::Argument, "PrimeContext: p is not prime");
    if (p > limit)
        throw Error(ErrorCode::Resource, "PrimeContext: p exceeds the configured table limit");
    std::int64_t g = primitive_root(p);
    std::vector<std::int32_t> ind(static_cast<std::size_t>(p), 0);
    std::int64_t x = 1;
    for (std::int64_t j = 0; j < p - 1; ++j) {
        ind[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(j);
        x = mul_mod(x, g, p);
    }
    return std::shared_ptr<const PrimeContext>(new PrimeContext(p, g, std::move(ind)));
}

} // namespace mhd::modmath
