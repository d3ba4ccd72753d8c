#include "knutson/knutsonlat.hpp"
#include "knutson/symchar.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace knutson;

namespace {

IntegerMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = d(rng);
    return m;
}

// Gaussian elimination over Q for square nonsingular M.
std::optional<std::vector<Rational>> rational_solve(const IntegerMatrix& M, const std::vector<BigInt>& b)
{
    const std::size_t n = M.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = M(i, j);
        a[i][n] = b[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(a[piv], a[col]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0)
                continue;
            const Rational f = a[i][col] / a[col][col];
            for (std::size_t j = col; j <= n; ++j)
                a[i][j] -= f * a[col][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = a[i][n] / a[i][i];
    return x;
}

BigInt entry_gcd(const IntegerMatrix& m)
{
    BigInt g = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m(i, j).get_mpz_t());
    return g;
}

} // namespace

TEST_CASE("Smith normal form properties on random matrices")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        const auto M = random_matrix(rng, r, c, trial % 3 == 0 ? 2 : 30);
        const auto snf = smith_normal_form(M);
        CHECK(snf.U * M * snf.V == snf.D);
        CHECK(snf.D.is_diagonal());
        CHECK(abs(snf.U.determinant()) == 1);
        CHECK(abs(snf.V.determinant()) == 1);
        const auto d = snf.diagonal();
        for (std::size_t i = 0; i < d.size(); ++i) {
            CHECK(d[i] >= 0);
            if (i + 1 < d.size() && d[i] != 0)
                CHECK(d[i + 1] % d[i] == 0);
            if (i + 1 < d.size() && d[i] == 0)
                CHECK(d[i + 1] == 0);
        }
        CHECK(snf.rank == static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [](const BigInt& x) { return x != 0; })));
        if (!d.empty())
            CHECK(d[0] == entry_gcd(M));
        if (r == c) {
            BigInt prod = 1;
            for (const auto& x : d)
                prod *= x;
            CHECK(prod == abs(M.determinant()));
        }
    }
}

TEST_CASE("min_multiplier matches rational inversion")
{
    std::mt19937 rng(99);
    int nonsingular = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const auto M = random_matrix(rng, n, n, 9);
        std::vector<BigInt> v;
        for (std::size_t i = 0; i < n; ++i)
            v.emplace_back(static_cast<long>(rng() % 21) - 10);
        const auto x = rational_solve(M, v);
        if (!x)
            continue;
        ++nonsingular;
        BigInt expected = 1;
        for (const auto& xi : *x)
            expected = lcm(expected, BigInt(xi.get_den()));
        CHECK(min_multiplier(M, v) == expected);
        const auto sol = solve_integer(M, v);
        CHECK(sol.has_value() == (expected == 1));
        if (sol)
            CHECK(M.apply(*sol) == v);
    }
    CHECK(nonsingular > 200);
}

TEST_CASE("lattice membership outside the rational span")
{
    const IntegerMatrix M{{1, 0}, {0, 2}, {0, 0}};
    CHECK(!min_multiplier(M, {0, 0, 1}).has_value());
    CHECK(min_multiplier(M, {1, 1, 0}) == 2);
    CHECK(solve_integer(M, {3, 4, 0}) == std::vector<BigInt>{3, 2});
    CHECK(!solve_integer(M, {3, 3, 0}).has_value());
}

TEST_CASE("Knutson index against a brute-force lambda search")
{
    std::vector<CharacterTable> tables;
    tables.push_back(sn_table(3));
    tables.push_back(an_table(4));
    tables.push_back(sn_table(4));
    tables.push_back(sl2_table(make_sl2_param(2)));
    for (auto& t : tables) {
        CharacterRing ring(t);
        const auto& tab = ring.table();
        for (std::size_t chi = 0; chi < tab.num_irreducibles(); ++chi) {
            const BigInt k = knutson_index_char(ring, chi);
            CHECK(tab.irreducibles[chi].degree % k == 0);
            std::optional<long> brute;
            for (long n = 1; n <= tab.irreducibles[chi].degree.get_si() && !brute; ++n) {
                std::vector<AlgebraicNumber> target(tab.num_classes(), AlgebraicNumber(0));
                target[0] = AlgebraicNumber(BigInt(BigInt(n) * tab.order));
                if (oracle::box_search(oracle::float_tensor(tab, chi, target), 6))
                    brute = n;
            }
            REQUIRE(brute.has_value());
            CHECK_MESSAGE(k == *brute, tab.label << " " << tab.irreducibles[chi].label);
        }
    }
}

TEST_CASE("Knutson indices of small families")
{
    for (int n = 1; n <= 7; ++n)
        CHECK(knutson_index_group(CharacterRing(sn_table(n))) == 1);
    for (int q : {2, 3, 4, 8})
        CHECK(knutson_index_group(CharacterRing(sl2_table(make_sl2_param(q)))) == 1);
    for (int q : {5, 7, 9})
        CHECK(knutson_index_group(CharacterRing(sl2_table(make_sl2_param(q)))) == 2);
    CHECK(knutson_index_group(CharacterRing(psl2_table(make_sl2_param(11)))) == 2);
    CHECK(knutson_index_group(CharacterRing(psl2_table(make_sl2_param(9)))) == 1);
}

TEST_CASE("K(A_n) is at most twice K(S_n)")
{
    for (int n = 3; n <= 10; ++n)
        CHECK(knutson_index_group(CharacterRing(an_table(n))) <= 2 * knutson_index_group(CharacterRing(sn_table(n))));
}

TEST_CASE("rho invertibility is verified on classes")
{
    CharacterRing ring(sn_table(4));
    const auto reg = regular_character(ring.table_ptr());
    for (std::size_t chi = 0; chi < ring.table().num_irreducibles(); ++chi) {
        const auto lambda = is_rho_invertible(ring, chi, reg);
        REQUIRE(lambda.has_value());
        CHECK(ring.tensor(chi, *lambda) == reg);
    }
}

TEST_CASE("generalised index of SL_2(3) from first principles")
{
    CharacterRing ring(sl2_table(make_sl2_param(3)));
    const auto& t = ring.table();
    CHECK(lcm_of_degrees(t) == 6);
    CHECK(generalized_lower_bound(t) == Rational(1, 4));

    const auto found = min_rho_search(ring, t.order);
    REQUIRE(found.has_value());
    CHECK(found->k_prime == Rational(1, 4));
    CHECK(found->rho.degree() == 6);

    // theta_1 + xi1 + xi2 is 6 at 1, -6 at z and 0 elsewhere
    std::vector<BigInt> m(t.num_irreducibles(), 0);
    for (const char* l : {"theta_1", "xi1", "xi2"})
        m[*t.find_irreducible(l)] = 1;
    const VirtualCharacter rho{ring.table_ptr(), m};
    const auto values = rho.values();
    CHECK(values[0] == AlgebraicNumber(6));
    CHECK(values[*t.find_class("z")] == AlgebraicNumber(-6));
    for (std::size_t c = 2; c < t.num_classes(); ++c)
        CHECK(values[c].is_zero());
    for (std::size_t chi = 0; chi < t.num_irreducibles(); ++chi) {
        const auto lambda = oracle::box_search(oracle::float_tensor(t, chi, values), 3);
        CHECK_MESSAGE(lambda.has_value(), t.irreducibles[chi].label);
        if (lambda) {
            std::vector<BigInt> lm(lambda->begin(), lambda->end());
            CHECK(ring.tensor(chi, VirtualCharacter{ring.table_ptr(), lm}) == rho);
        }
    }
}

TEST_CASE("zero-column criterion")
{
    CHECK(zero_column_criterion(CharacterRing(an_table(5))) == 1);
    CHECK(!zero_column_criterion(CharacterRing(sn_table(7))).has_value());
    CHECK(zero_column_criterion(CharacterRing(sn_table(8))) == 1);
}
