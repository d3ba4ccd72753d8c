#include "knutson/algnum.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace knutson;

namespace {

Rational small_rational(std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    return make_rational(num(rng), den(rng));
}

MultiQuadratic random_mq(std::mt19937& rng)
{
    static const std::int64_t radicands[] = {1, 2, 3, 5, -1, -3, 6};
    MultiQuadratic m;
    for (auto d : radicands)
        if (rng() % 2)
            m += d == 1 ? MultiQuadratic(small_rational(rng)) : MultiQuadratic::sqrt(d, small_rational(rng));
    return m;
}

CyclotomicTau random_cyc(std::mt19937& rng, unsigned order, std::int64_t eq)
{
    CyclotomicTau c(order, eq);
    for (int i = 0; i < 4; ++i)
        c.add_power(static_cast<unsigned>(rng() % order), small_rational(rng), eq != 0 && rng() % 2);
    return c;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9 * (1 + std::abs(a)); }

} // namespace

TEST_CASE("squarefree decomposition")
{
    CHECK(squarefree_decompose(12) == std::pair<std::int64_t, std::int64_t>{3, 2});
    CHECK(squarefree_decompose(-50) == std::pair<std::int64_t, std::int64_t>{-2, 5});
    CHECK(squarefree_decompose(1) == std::pair<std::int64_t, std::int64_t>{1, 1});
}

TEST_CASE("multi-quadratic arithmetic")
{
    CHECK(MultiQuadratic::sqrt(5) * MultiQuadratic::sqrt(5) == MultiQuadratic(5));
    CHECK(MultiQuadratic::sqrt(8) == MultiQuadratic::sqrt(2, 2));
    CHECK(MultiQuadratic::sqrt(2) * MultiQuadratic::sqrt(3) == MultiQuadratic::sqrt(6));
    CHECK(MultiQuadratic::sqrt(-1) * MultiQuadratic::sqrt(-1) == MultiQuadratic(-1));
    CHECK(MultiQuadratic::sqrt(-3).conj() == -MultiQuadratic::sqrt(-3));
    CHECK(MultiQuadratic::sqrt(9).is_rational());

    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = random_mq(rng), b = random_mq(rng), c = random_mq(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
        CHECK(close(a.conj().to_complex(), std::conj(a.to_complex())));
    }
}

TEST_CASE("roots of unity")
{
    for (unsigned m : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u, 15u, 24u, 30u}) {
        const auto f = CyclotomicField::get(m);
        std::uint64_t phi = 0;
        for (unsigned k = 1; k <= m; ++k)
            phi += std::gcd(k, m) == 1;
        CHECK(f->degree() == phi);

        const auto z = CyclotomicTau::root_of_unity(m, 1 % m);
        CyclotomicTau power(m, 0, 1);
        CyclotomicTau sum(m, 0);
        for (unsigned k = 0; k < m; ++k) {
            sum += power;
            const double angle = 2 * std::numbers::pi * k / m;
            CHECK(close(power.to_complex(), {std::cos(angle), std::sin(angle)}));
            power *= z;
        }
        CHECK(power == CyclotomicTau(m, 0, 1));
        CHECK(sum == (m == 1 ? CyclotomicTau(m, 0, 1) : CyclotomicTau(m, 0)));
    }
    CHECK(cyclotomic_polynomial(6) == std::vector<BigInt>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<BigInt>{1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic field with tau")
{
    const auto t = CyclotomicTau::tau(12, -7);
    CHECK(t * t == CyclotomicTau(12, -7, -7));
    CHECK(close(t.to_complex(), {0, std::sqrt(7.0)}));
    CHECK(t.conj() == -t);
    CHECK(CyclotomicTau::tau(12, 5).conj() == CyclotomicTau::tau(12, 5));
    CHECK(CyclotomicTau::tau(24, 9) == CyclotomicTau(24, 9, 3));

    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_cyc(rng, 12, 5), b = random_cyc(rng, 12, 5), c = random_cyc(rng, 12, 5);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
        CHECK(close(a.conj().to_complex(), std::conj(a.to_complex())));
    }
}

TEST_CASE("operands of different fields are rejected")
{
    CHECK_THROWS_AS(CyclotomicTau(12, 5) + CyclotomicTau(8, 5), OrderMismatchError);
    CHECK_THROWS_AS(CyclotomicTau(12, 5) * CyclotomicTau(12, -3), OrderMismatchError);
    CHECK_THROWS_AS(AlgebraicNumber(CyclotomicTau::root_of_unity(5, 1)) * AlgebraicNumber(MultiQuadratic::sqrt(2)),
                    OrderMismatchError);
}

TEST_CASE("algebraic numbers collapse to rationals")
{
    const AlgebraicNumber z(CyclotomicTau::root_of_unity(3, 1));
    const AlgebraicNumber w = z * z * z;
    CHECK(w.is_rational());
    CHECK(w == AlgebraicNumber(1));
    CHECK((z + z.conj()) == AlgebraicNumber(-1));
    const AlgebraicNumber s(MultiQuadratic::sqrt(5));
    CHECK((s * s).is_rational());
    CHECK((s * s).as_rational() == 5);
    CHECK(AlgebraicNumber(Rational(1, 2)) * z == z * AlgebraicNumber(Rational(1, 2)));
    CHECK((AlgebraicNumber(3) - AlgebraicNumber(3)).is_zero());
}
