#pragma once

#include "graphtensor/bigint.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace graphtensor {

/// Integer polynomial, coefficients lowest degree first, no trailing zeros.
/// The zero polynomial has no coefficients and degree kZeroDegree.
class IntPolynomial {
public:
    static constexpr int kZeroDegree = -1;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial monomial(int degree, BigInt coeff = 1);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !is_zero() && coeffs_.back() == 1; }
    std::span<const BigInt> coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^k; zero beyond the degree.
    BigInt coeff(int k) const;

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Division by a monic divisor: returns (quotient, remainder).
    std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& monic_divisor) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

}  // namespace graphtensor
