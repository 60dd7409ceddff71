#pragma once

#include "graphtensor/bigint.hpp"
#include "graphtensor/cyclotomic.hpp"

#include <concepts>
#include <memory>
#include <string>

namespace graphtensor {

// A ring context hands out zero/one/integer constants; arithmetic lives on
// the value type itself. The contraction engine is generic over this.
template <class R>
concept Ring = requires(const R& ring, const typename R::value_type& a, long k) {
    typename R::value_type;
    { ring.zero() } -> std::convertible_to<typename R::value_type>;
    { ring.one() } -> std::convertible_to<typename R::value_type>;
    { ring.from_int(k) } -> std::convertible_to<typename R::value_type>;
    { ring.is_zero(a) } -> std::convertible_to<bool>;
    { a + a } -> std::convertible_to<typename R::value_type>;
    { a * a } -> std::convertible_to<typename R::value_type>;
    { a == a } -> std::convertible_to<bool>;
};

struct IntegerRing {
    using value_type = BigInt;
    BigInt zero() const { return 0; }
    BigInt one() const { return 1; }
    BigInt from_int(long k) const { return k; }
    BigInt from_bigint(const BigInt& k) const { return k; }
    bool is_zero(const BigInt& a) const { return a == 0; }
};

struct RationalRing {
    using value_type = Rational;
    Rational zero() const { return 0; }
    Rational one() const { return 1; }
    Rational from_int(long k) const { return k; }
    Rational from_bigint(const BigInt& k) const { return Rational(k); }
    bool is_zero(const Rational& a) const { return a == 0; }
};

/// Z[zeta_n].
class CyclotomicRing {
public:
    using value_type = Cyclotomic;

    explicit CyclotomicRing(int n) : field_(std::make_shared<const CyclotomicField>(n)) {}

    int order() const noexcept { return field_->order(); }
    const std::shared_ptr<const CyclotomicField>& field() const noexcept { return field_; }

    Cyclotomic zero() const { return Cyclotomic(field_, BigInt(0)); }
    Cyclotomic one() const { return Cyclotomic(field_, BigInt(1)); }
    Cyclotomic from_int(long k) const { return Cyclotomic(field_, BigInt(k)); }
    Cyclotomic from_bigint(const BigInt& k) const { return Cyclotomic(field_, k); }
    Cyclotomic zeta_power(long k) const { return Cyclotomic::zeta_power(field_, k); }
    bool is_zero(const Cyclotomic& a) const { return a.is_zero(); }

private:
    std::shared_ptr<const CyclotomicField> field_;
};

static_assert(Ring<IntegerRing>);
static_assert(Ring<RationalRing>);
static_assert(Ring<CyclotomicRing>);

}  // namespace graphtensor
