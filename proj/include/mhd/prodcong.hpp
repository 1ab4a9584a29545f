#pragma once

#include <cstdint>

#include "mhd/bigint.hpp"

namespace mhd::prodcong {

// I_{p,nu}(u,h): number of 2*nu-tuples with 1 <= x_j, y_j <= h and
//   (x_1+u)...(x_nu+u) == (y_1+u)...(y_nu+u) != 0  (mod p).
// Computed as sum of m_c^2 over nonzero product classes c, where m_c counts
// nu-tuples with shifted product congruent to c.
std::int64_t count_congruence_energy(std::int64_t p, std::int64_t nu, std::int64_t u,
                                     std::int64_t h);

// K_nu(u,h): the analogous count with exact integer product equality.
// Tuples whose shifted product is zero match each other (0 = 0 over Z).
std::int64_t count_integer_energy(std::int64_t nu, std::int64_t u, std::int64_t h);

struct DyadicAverageReport {
    std::int64_t lhs = 0;            // sum of I_{p,nu}(u,h) over primes p in [T, 2T]
    std::int64_t prime_count = 0;    // number of primes in [T, 2T]
    std::int64_t integer_energy = 0; // K_nu(u,h)
    std::int64_t omega_sum = 0;      // sum of omega(|prod(v_j+u) - prod(w_j+u)|)
    bool holds = false;              // lhs <= prime_count * K + omega_sum
};

// Checks the dyadic-average inequality bounding the congruence energy summed
// over a dyadic prime range by the integer energy plus a prime-divisor sum.
DyadicAverageReport dyadic_average_report(std::int64_t T, std::int64_t nu, std::int64_t u,
                                          std::int64_t h, unsigned threads = 1);

} // namespace mhd::prodcong
