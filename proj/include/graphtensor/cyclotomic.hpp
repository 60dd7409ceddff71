#pragma once

#include "graphtensor/bigint.hpp"
#include "graphtensor/polynomial.hpp"

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace graphtensor {

/// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact division.
IntPolynomial cyclotomic_polynomial(int n);

int euler_totient(int n);

/// Modulus data for Z[zeta_n] = Z[x] / (Phi_n).
class CyclotomicField {
public:
    explicit CyclotomicField(int n);

    int order() const noexcept { return n_; }
    /// deg Phi_n, i.e. the length of every element's coefficient vector.
    int dimension() const noexcept { return dim_; }
    const IntPolynomial& modulus() const noexcept { return phi_; }

    /// Reduces coefficients (length >= dimension) in place modulo Phi_n
    /// and truncates to dimension().
    void reduce(std::vector<BigInt>& coeffs) const;

private:
    int n_;
    int dim_;
    IntPolynomial phi_;
};

/// Element of Z[zeta_n], always stored reduced: exactly dimension() coefficients.
class Cyclotomic {
public:
    Cyclotomic() = default;
    /// Integer constant c.
    Cyclotomic(std::shared_ptr<const CyclotomicField> field, const BigInt& c);
    /// Class of an arbitrary integer polynomial.
    Cyclotomic(std::shared_ptr<const CyclotomicField> field, const IntPolynomial& p);

    /// zeta^k for any integer k.
    static Cyclotomic zeta_power(std::shared_ptr<const CyclotomicField> field, long k);

    const std::shared_ptr<const CyclotomicField>& field() const noexcept { return field_; }
    int order() const { return field_->order(); }
    std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    /// True when every coefficient except the constant term vanishes.
    bool is_constant() const noexcept;
    const BigInt& constant_term() const { return coeffs_.front(); }

    Cyclotomic& operator+=(const Cyclotomic& other);
    Cyclotomic& operator-=(const Cyclotomic& other);
    Cyclotomic& operator*=(const Cyclotomic& other);
    Cyclotomic operator-() const;

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    std::string to_string() const;

private:
    void check_same_field(const Cyclotomic& other) const;

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<BigInt> coeffs_;
};

/// Product of two cyclotomic elements; throws ArgumentError on mismatched moduli.
Cyclotomic cyclo_mul(const Cyclotomic& a, const Cyclotomic& b);

/// sum_{j=1..n} zeta_n^{jk} in Z[zeta_n], for 1 <= k <= n.
Cyclotomic power_sum_at_roots(int k, int n);

}  // namespace graphtensor
