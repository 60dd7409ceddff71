#include "graphtensor/cyclotomic.hpp"

#include "graphtensor/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace graphtensor {

namespace {

IntPolynomial compute_cyclotomic(int n, std::map<int, IntPolynomial>& memo) {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    // x^n - 1
    IntPolynomial numerator = IntPolynomial::monomial(n) - IntPolynomial{1};
    IntPolynomial divisor{1};
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) divisor = divisor * compute_cyclotomic(d, memo);
    }
    auto [quot, rem] = numerator.divmod(divisor);
    if (!rem.is_zero()) throw ConsistencyError("x^n - 1 not divisible by product of lower cyclotomic polynomials");
    memo.emplace(n, quot);
    return quot;
}

}  // namespace

IntPolynomial cyclotomic_polynomial(int n) {
    if (n < 1) throw ArgumentError("cyclotomic_polynomial: n must be >= 1");
    static std::mutex mu;
    static std::map<int, IntPolynomial> memo;
    std::lock_guard lock(mu);
    return compute_cyclotomic(n, memo);
}

int euler_totient(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

CyclotomicField::CyclotomicField(int n) : n_(n), dim_(0), phi_(cyclotomic_polynomial(n)) {
    dim_ = phi_.degree();
}

void CyclotomicField::reduce(std::vector<BigInt>& c) const {
    const auto phi = phi_.coefficients();
    for (int k = static_cast<int>(c.size()) - 1; k >= dim_; --k) {
        const auto ku = static_cast<std::size_t>(k);
        if (c[ku] == 0) continue;
        // x^k = x^{k-dim} * (x^dim) and x^dim = -(phi_0 + ... + phi_{dim-1} x^{dim-1})
        for (int j = 0; j < dim_; ++j) {
            const auto& pj = phi[static_cast<std::size_t>(j)];
            if (pj != 0) c[static_cast<std::size_t>(k - dim_ + j)] -= c[ku] * pj;
        }
        c[ku] = 0;
    }
    c.resize(static_cast<std::size_t>(dim_));
}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicField> field, const BigInt& c)
    : field_(std::move(field)), coeffs_(static_cast<std::size_t>(field_->dimension())) {
    coeffs_[0] = c;
}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicField> field, const IntPolynomial& p)
    : field_(std::move(field)) {
    const auto src = p.coefficients();
    coeffs_.assign(src.begin(), src.end());
    if (coeffs_.size() < static_cast<std::size_t>(field_->dimension()))
        coeffs_.resize(static_cast<std::size_t>(field_->dimension()));
    field_->reduce(coeffs_);
}

Cyclotomic Cyclotomic::zeta_power(std::shared_ptr<const CyclotomicField> field, long k) {
    const long n = field->order();
    const long e = ((k % n) + n) % n;
    return Cyclotomic(field, IntPolynomial::monomial(static_cast<int>(e)));
}

bool Cyclotomic::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

bool Cyclotomic::is_constant() const noexcept {
    return std::all_of(coeffs_.begin() + (coeffs_.empty() ? 0 : 1), coeffs_.end(),
                       [](const BigInt& c) { return c == 0; });
}

void Cyclotomic::check_same_field(const Cyclotomic& other) const {
    if (!field_ || !other.field_) throw ArgumentError("uninitialized cyclotomic value");
    if (field_ != other.field_ && field_->order() != other.field_->order())
        throw ArgumentError("cyclotomic moduli differ: " + std::to_string(field_->order()) + " vs " +
                            std::to_string(other.field_->order()));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
    check_same_field(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
    check_same_field(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same_field(b);
    const std::size_t dim = a.coeffs_.size();
    std::vector<BigInt> prod(2 * dim - 1);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    a.field_->reduce(prod);
    Cyclotomic out;
    out.field_ = a.field_;
    out.coeffs_ = std::move(prod);
    return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) { return *this = *this * other; }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same_field(b);
    return a.coeffs_ == b.coeffs_;
}

std::string Cyclotomic::to_string() const {
    return IntPolynomial(coeffs_).to_string();
}

Cyclotomic cyclo_mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }

Cyclotomic power_sum_at_roots(int k, int n) {
    if (n < 1) throw ArgumentError("power_sum_at_roots: n must be >= 1");
    if (k < 1 || k > n) throw ArgumentError("power_sum_at_roots: k must lie in 1..n");
    auto field = std::make_shared<const CyclotomicField>(n);
    const Cyclotomic step = Cyclotomic::zeta_power(field, k);
    Cyclotomic term = step;
    Cyclotomic sum(field, BigInt(0));
    for (int j = 1; j <= n; ++j) {
        sum += term;
        term *= step;
    }
    return sum;
}

}  // namespace graphtensor
