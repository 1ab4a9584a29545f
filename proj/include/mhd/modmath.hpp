#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "mhd/bigint.hpp"

namespace mhd::modmath {

// Default cap on the modulus of a PrimeContext. The discrete-log table has
// p-1 entries, so contexts are meant for desk-scale moduli.
inline constexpr std::int64_t kDefaultContextLimit = 10'000'000;

// Largest argument for which the deterministic Miller-Rabin witness set
// {2,3,5,7,11,13,17} is proven exact.
inline constexpr std::int64_t kPrimalityLimit = 340'000'000'000'000;

bool is_prime(std::int64_t n);

// Ascending primes in [lo, hi]. Segmented sieve; hi is capped at 10^9.
std::vector<std::int64_t> primes_in_interval(std::int64_t lo, std::int64_t hi);

// pi(n) via primes_in_interval(1, n).
std::int64_t prime_count_upto(std::int64_t n);

// Smallest prime p in [lo, hi] with p == residue (mod modulus), or nullopt.
// Requires gcd(residue, modulus) = 1 when modulus > 1.
std::optional<std::int64_t> find_prime_in_ap(std::int64_t lo, std::int64_t hi,
                                             std::int64_t modulus, std::int64_t residue);

// Smallest positive generator of (Z/pZ)^*. primitive_root(2) = 1.
std::int64_t primitive_root(std::int64_t p);

// Number of distinct prime divisors; omega(0) = omega(1) = 0.
std::int64_t omega(const BigInt& m);
std::int64_t omega(std::int64_t m);

// Modular helpers used across the library. mul_mod is exact for any
// operands below 2^63 via 128-bit intermediate products.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);
std::int64_t mod_reduce(std::int64_t x, std::int64_t m); // result in [0, m)

// Prime modulus with a fixed primitive root and the full index table:
// g^index_of(x) == x (mod p) for x in [1, p-1]. Immutable once built.
class PrimeContext {
public:
    static std::shared_ptr<const PrimeContext> create(std::int64_t p,
                                                      std::int64_t limit = kDefaultContextLimit);

    std::int64_t prime() const noexcept { return p_; }
    std::int64_t generator() const noexcept { return g_; }
    std::int64_t group_order() const noexcept { return p_ - 1; }

    // index_of(x) for x in [1, p-1]; callers reduce mod p first.
    std::int64_t index_of(std::int64_t x) const { return ind_[static_cast<std::size_t>(x)]; }

private:
    PrimeContext(std::int64_t p, std::int64_t g, std::vector<std::int32_t> ind)
        : p_(p), g_(g), ind_(std::move(ind)) {}

    std::int64_t p_;
    std::int64_t g_;
    std::vector<std::int32_t> ind_;
};

using PrimeContextPtr = std::shared_ptr<const PrimeContext>;

} // namespace mhd::modmath
