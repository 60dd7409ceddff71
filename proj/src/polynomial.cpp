#include "graphtensor/polynomial.hpp"

#include "graphtensor/errors.hpp"

#include <algorithm>
#include <sstream>

namespace graphtensor {

BigInt parse_bigint(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size() ||
        !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
        throw ArgumentError("not a decimal integer: '" + text + "'");
    BigInt v(text[0] == '+' ? text.substr(1) : text, 10);
    return v;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coeff) {
    std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
    c.back() = std::move(coeff);
    return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod(const IntPolynomial& divisor) const {
    if (!divisor.is_monic()) throw ArgumentError("polynomial division requires a monic divisor");
    const int dd = divisor.degree();
    if (degree() < dd) return {IntPolynomial{}, *this};
    std::vector<BigInt> rem = coeffs_;
    std::vector<BigInt> quot(static_cast<std::size_t>(degree() - dd) + 1);
    for (int k = degree(); k >= dd; --k) {
        const BigInt lead = rem[static_cast<std::size_t>(k)];
        if (lead == 0) continue;
        quot[static_cast<std::size_t>(k - dd)] = lead;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k - dd + j)] -= lead * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) out << mag.get_str();
        if (k >= 1) out << 'x';
        if (k >= 2) out << '^' << k;
    }
    return out.str();
}

}  // namespace graphtensor
