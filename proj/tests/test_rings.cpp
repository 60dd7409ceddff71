#include "graphtensor/cyclotomic.hpp"
#include "graphtensor/errors.hpp"
#include "graphtensor/linear_solve.hpp"
#include "graphtensor/partition.hpp"
#include "graphtensor/rings.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace graphtensor;

TEST_CASE("cyclotomic_polynomial small cases") {
    CHECK(cyclotomic_polynomial(1) == IntPolynomial{-1, 1});
    CHECK(cyclotomic_polynomial(2) == IntPolynomial{1, 1});
    CHECK(cyclotomic_polynomial(4) == IntPolynomial{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == IntPolynomial{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == IntPolynomial{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(6).to_string() == "x^2 - x + 1");
    CHECK_THROWS_AS(cyclotomic_polynomial(0), ArgumentError);
}

TEST_CASE("cyclotomic_polynomial divides x^n - 1 and has totient degree") {
    for (int n = 1; n <= 64; ++n) {
        const IntPolynomial phi = cyclotomic_polynomial(n);
        const auto [q, rem] = (IntPolynomial::monomial(n) - IntPolynomial{1}).divmod(phi);
        CHECK(rem.is_zero());
        int coprime = 0;
        for (int k = 1; k <= n; ++k) coprime += std::gcd(k, n) == 1 ? 1 : 0;
        CHECK(phi.degree() == coprime);
        CHECK(euler_totient(n) == coprime);
        CHECK(phi.is_monic());
    }
}

TEST_CASE("cyclo_mul reduces modulo Phi_n") {
    const CyclotomicRing r4(4);
    CHECK(cyclo_mul(r4.zeta_power(1), r4.zeta_power(1)) == r4.from_int(-1));

    const CyclotomicRing r3(3);
    CHECK(cyclo_mul(r3.zeta_power(2), r3.zeta_power(1)) == r3.one());

    const CyclotomicRing r5(5);
    const Cyclotomic a = r5.one() + r5.zeta_power(1);
    CHECK(cyclo_mul(a, r5.one()) == a);

    // zeta^n = 1 and zeta^{-1} * zeta = 1 for several n
    for (int n = 1; n <= 20; ++n) {
        const CyclotomicRing ring(n);
        CHECK(ring.zeta_power(n) == ring.one());
        CHECK(ring.zeta_power(-1) * ring.zeta_power(1) == ring.one());
        Cyclotomic p = ring.one();
        for (int k = 0; k < n; ++k) p *= ring.zeta_power(1);
        CHECK(p == ring.one());
    }

    CHECK_THROWS_AS(cyclo_mul(r4.one(), r5.one()), ArgumentError);
}

TEST_CASE("power_sum_at_roots") {
    CHECK(power_sum_at_roots(1, 4).is_zero());
    CHECK(power_sum_at_roots(2, 4).is_zero());
    const Cyclotomic full = power_sum_at_roots(4, 4);
    CHECK(full.is_constant());
    CHECK(full.constant_term() == 4);
    CHECK_THROWS_AS(power_sum_at_roots(0, 4), ArgumentError);
    CHECK_THROWS_AS(power_sum_at_roots(5, 4), ArgumentError);

    for (int n = 1; n <= 24; ++n) {
        for (int k = 1; k < n; ++k) CHECK(power_sum_at_roots(k, n).is_zero());
        const Cyclotomic s = power_sum_at_roots(n, n);
        CHECK(s.is_constant());
        CHECK(s.constant_term() == n);
    }
}

namespace {

template <class R, class Gen>
void check_ring_axioms(const R& ring, Gen&& gen, int trials) {
    for (int i = 0; i < trials; ++i) {
        const auto a = gen();
        const auto b = gen();
        const auto c = gen();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + ring.zero() == a);
        CHECK(a * ring.one() == a);
        CHECK(ring.is_zero(a * ring.zero()));
    }
}

}  // namespace

TEST_CASE("ring axioms on random values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> small(-1000, 1000);

    const IntegerRing zz;
    check_ring_axioms(zz, [&]() -> BigInt { return BigInt(small(rng)) * BigInt(small(rng)) * BigInt(small(rng)); }, 50);

    const RationalRing qq;
    check_ring_axioms(
        qq,
        [&]() -> Rational {
            long den = small(rng);
            if (den == 0) den = 1;
            Rational q(small(rng), den);
            q.canonicalize();
            return q;
        },
        50);

    for (int n : {1, 2, 5, 7, 9, 12}) {
        const CyclotomicRing ring(n);
        check_ring_axioms(
            ring,
            [&] {
                std::vector<BigInt> coeffs;
                for (int k = 0; k < 2 * n; ++k) coeffs.emplace_back(small(rng));
                return Cyclotomic(ring.field(), IntPolynomial(std::move(coeffs)));
            },
            20);
    }
}

TEST_CASE("rationals stay normalized") {
    const Rational a = Rational(1, 2) + Rational(1, 6);
    CHECK(a.get_num() == 2);
    CHECK(a.get_den() == 3);
    const Rational b = Rational(3, 4) * Rational(-4, 6);
    CHECK(b.get_num() == -1);
    CHECK(b.get_den() == 2);
}

TEST_CASE("solve_linear_exact") {
    const std::vector<Rational> b{Rational(3), Rational(-1, 2), Rational(7)};
    RationalMatrix id(3, std::vector<Rational>(3));
    for (int i = 0; i < 3; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    CHECK(solve_linear_exact(id, b) == b);

    const auto half = solve_linear_exact({{Rational(2)}}, {Rational(1)});
    REQUIRE(half);
    CHECK((*half)[0] == Rational(1, 2));

    CHECK_FALSE(solve_linear_exact({{1, 1}, {1, 1}}, {1, 2}).has_value());
    CHECK_THROWS_AS(solve_linear_exact({{1, 1}}, {1}), ArgumentError);
    CHECK_THROWS_AS(solve_linear_exact({{1}}, {1, 2}), ArgumentError);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coeff(-50, 50);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
        RationalMatrix m(n, std::vector<Rational>(n));
        std::vector<Rational> rhs(n);
        for (auto& row : m)
            for (auto& v : row) v = coeff(rng);
        for (auto& v : rhs) v = coeff(rng);
        const auto x = solve_linear_exact(m, rhs);
        if (!x) continue;
        for (std::size_t i = 0; i < n; ++i) {
            Rational acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += m[i][j] * (*x)[j];
            CHECK(acc == rhs[i]);
        }
    }
}

TEST_CASE("eval_power_sum") {
    const std::vector<BigInt> ones{1, 1};
    CHECK(eval_power_sum(Partition{3}, ones) == 2);
    const std::vector<BigInt> x{1, 2};
    CHECK(eval_power_sum(Partition{2, 1}, x) == 15);
    CHECK(eval_power_sum(Partition{}, x) == 1);
    CHECK(eval_power_sum(Partition{}, std::vector<BigInt>{}) == 1);
}

TEST_CASE("partitions") {
    const Partition p{1, 3, 3};
    CHECK(p.weight() == 7);
    CHECK(p.length() == 3);
    CHECK(p.to_string() == "[3,3,1]");
    CHECK(Partition{}.to_string() == "[]");
    CHECK_THROWS_AS(Partition({2, 0}), ArgumentError);

    CHECK(Partition{} < Partition{3});
    CHECK(Partition{4} < Partition{3, 2});
    CHECK(Partition{2, 2, 2} < Partition{3, 3});

    // p(0..6) = 1,1,2,3,5,7,11 -> 30 partitions of weight <= 6
    CHECK(partitions_up_to(6).size() == 30);
    const auto big_parts = partitions_up_to(10, 3);
    CHECK(big_parts.size() == 20);
    CHECK(std::is_sorted(big_parts.begin(), big_parts.end()));
}
