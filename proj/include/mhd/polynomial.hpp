#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "mhd/bigint.hpp"
#include "mhd/modmath.hpp"

namespace mhd {

// Univariate polynomial with exact integer coefficients, constant term first.
// degree() is -1 for the zero polynomial.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    IntegerPolynomial(std::initializer_list<std::int64_t> coeffs) {
        coeffs_.reserve(coeffs.size());
        for (std::int64_t c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    static IntegerPolynomial monomial(int degree, std::int64_t coeff = 1) {
        std::vector<BigInt> cs(static_cast<std::size_t>(degree) + 1, BigInt(0));
        cs.back() = coeff;
        return IntegerPolynomial(std::move(cs));
    }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    const BigInt& leading_coefficient() const {
        static const BigInt zero{0};
        return coeffs_.empty() ? zero : coeffs_.back();
    }

    BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Coefficients reduced into [0, p); evaluation mod p then uses int64 Horner.
    std::vector<std::int64_t> reduced_mod(std::int64_t p) const {
        std::vector<std::int64_t> out;
        out.reserve(coeffs_.size());
        for (const BigInt& c : coeffs_) {
            BigInt r = c % p;
            if (r < 0) r += p;
            out.push_back(static_cast<std::int64_t>(r));
        }
        return out;
    }

    static std::int64_t eval_mod(const std::vector<std::int64_t>& reduced, std::int64_t x,
                                 std::int64_t p) {
        std::int64_t acc = 0;
        std::int64_t r = modmath::mod_reduce(x, p);
        for (auto it = reduced.rbegin(); it != reduced.rend(); ++it)
            acc = (modmath::mul_mod(acc, r, p) + *it) % p;
        return acc;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

} // namespace mhd
