#pragma once

// Internal root-of-unity tables shared by the character-sum and transform
// counting code. Not installed.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "mhd/modmath.hpp"

namespace mhd::detail {

struct Twiddles {
    std::int64_t p;
    std::vector<std::complex<double>> mul; // exp(2*pi*i*m/(p-1)), m in [0, p-2]
    std::vector<std::complex<double>> add; // exp(2*pi*i*z/p),     z in [0, p-1]

    explicit Twiddles(std::int64_t prime) : p(prime) {
        const double order = static_cast<double>(p - 1);
        mul.reserve(static_cast<std::size_t>(p - 1));
        for (std::int64_t m = 0; m < p - 1; ++m) {
            double ang = 2.0 * std::numbers::pi * static_cast<double>(m) / order;
            mul.emplace_back(std::cos(ang), std::sin(ang));
        }
        add.reserve(static_cast<std::size_t>(p));
        for (std::int64_t z = 0; z < p; ++z) {
            double ang = 2.0 * std::numbers::pi * static_cast<double>(z) / static_cast<double>(p);
            add.emplace_back(std::cos(ang), std::sin(ang));
        }
    }

    // chi_t(x) for x already reduced into [1, p-1].
    std::complex<double> chi(const modmath::PrimeContext& ctx, std::int64_t t,
                             std::int64_t x) const {
        std::int64_t m = modmath::mul_mod(t, ctx.index_of(x), p - 1);
        return mul[static_cast<std::size_t>(m)];
    }
};

} // namespace mhd::detail
