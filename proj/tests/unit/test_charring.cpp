#include "knutson/charring.hpp"
#include "knutson/integer_matrix.hpp"
#include "knutson/sl2tables.hpp"
#include "knutson/symchar.hpp"

#include <doctest.h>

#include <random>

using namespace knutson;

namespace {

void check_ring_axioms(const CharacterRing& ring, unsigned seed)
{
    const auto& t = ring.table();
    const auto n = t.num_irreducibles();
    for (std::size_t a = 0; a < n; ++a) {
        CHECK(ring.tensor_decompose(0, a) == irreducible_character(ring.table_ptr(), a).multiplicities);
        for (std::size_t b = 0; b < n; ++b) {
            const auto prod = ring.tensor_decompose(a, b);
            CHECK(prod == ring.tensor_decompose(b, a));
            BigInt deg = 0;
            for (std::size_t k = 0; k < n; ++k) {
                CHECK(prod[k] >= 0);
                deg += prod[k] * t.irreducibles[k].degree;
            }
            CHECK(deg == t.irreducibles[a].degree * t.irreducibles[b].degree);
            for (std::size_t c = 0; c < t.num_classes(); ++c)
                CHECK(evaluate(VirtualCharacter{ring.table_ptr(), prod}, c) == t.value(a, c) * t.value(b, c));
            CHECK(inner_product(irreducible_character(ring.table_ptr(), a), irreducible_character(ring.table_ptr(), b)) ==
                  (a == b ? 1 : 0));
        }
    }
    std::mt19937 rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = rng() % n, b = rng() % n, c = rng() % n;
        const auto x = ring.tensor(ring.tensor(a, irreducible_character(ring.table_ptr(), b)),
                                   irreducible_character(ring.table_ptr(), c));
        const auto y = ring.tensor(a, ring.tensor(b, irreducible_character(ring.table_ptr(), c)));
        CHECK(x == y);
    }
    const auto reg = regular_character(ring.table_ptr());
    CHECK(reg.degree() == t.order);
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<BigInt> expected;
        for (const auto& d : t.degrees())
            expected.push_back(d * t.irreducibles[a].degree);
        CHECK(ring.tensor(a, reg).multiplicities == expected);
    }
}

} // namespace

TEST_CASE("ring axioms on assorted groups")
{
    check_ring_axioms(CharacterRing(sn_table(5)), 1);
    check_ring_axioms(CharacterRing(an_table(6)), 2);
    check_ring_axioms(CharacterRing(sl2_table(make_sl2_param(5))), 3);
    check_ring_axioms(CharacterRing(sl2_table(make_sl2_param(4))), 4);
    check_ring_axioms(CharacterRing(psl2_table(make_sl2_param(7))), 5);
}

TEST_CASE("tensoring with the sign conjugates the partition")
{
    for (int n = 2; n <= 8; ++n) {
        CharacterRing ring(sn_table(n));
        const auto& t = ring.table();
        const auto sign = *t.find_irreducible(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)).to_string());
        const auto& fusion = ring.fusion_matrix(sign);
        for (std::size_t i = 0; i < t.num_irreducibles(); ++i) {
            const auto j = *t.find_irreducible(conjugate(parse_partition(t.irreducibles[i].label)).to_string());
            for (std::size_t b = 0; b < t.num_irreducibles(); ++b)
                CHECK(fusion.entries[b][i] == (b == j ? 1 : 0));
        }
    }
}

TEST_CASE("known S_4 product")
{
    CharacterRing ring(sn_table(4));
    const auto& t = ring.table();
    const auto s = *t.find_irreducible("(3,1)");
    std::vector<BigInt> expected(t.num_irreducibles(), 0);
    for (const char* l : {"(4)", "(3,1)", "(2,2)", "(2,1,1)"})
        expected[*t.find_irreducible(l)] = 1;
    CHECK(ring.tensor_decompose(s, s) == expected);
}

TEST_CASE("decompose rejects non-characters")
{
    const auto t = sn_table(3);
    CHECK(decompose(t, {AlgebraicNumber(6), AlgebraicNumber(0), AlgebraicNumber(0)}) == std::vector<BigInt>{1, 2, 1});
    CHECK_THROWS_AS(decompose(t, {AlgebraicNumber(1), AlgebraicNumber(0), AlgebraicNumber(0)}), InternalError);
}
