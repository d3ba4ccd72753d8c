#include "knutson/knutsonlat.hpp"
#include "knutson/sl2tables.hpp"

#include <doctest.h>

#include <numeric>

using namespace knutson;

TEST_CASE("parameters")
{
    CHECK(make_sl2_param(9).p == 3);
    CHECK(make_sl2_param(9).f == 2);
    CHECK(make_sl2_param(7).epsilon() == -1);
    CHECK(make_sl2_param(13).epsilon() == 1);
    CHECK(make_sl2_param(7).cyclotomic_order() == 24);
    for (int bad : {0, 1, 6, 10, 12, 15})
        CHECK_THROWS_AS(make_sl2_param(bad), PreconditionError);
}

TEST_CASE("SL_2 and PSL_2 tables")
{
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        const auto p = make_sl2_param(q);
        const auto t = sl2_table(p);
        CAPTURE(q);
        CHECK(check_orthogonality(t).ok);
        CHECK(t.order == BigInt(q) * (q * q - 1));
        CHECK(t.num_classes() == static_cast<std::size_t>(p.even() ? q + 1 : q + 4));
        const auto pt = psl2_table(p);
        CHECK(check_orthogonality(pt).ok);
        CHECK(pt.order == t.order / std::gcd(2, q - 1));
        CHECK(pt.num_classes() == static_cast<std::size_t>(p.even() ? q + 1 : (q + 5) / 2));
        if (q >= 4)
            CHECK(lcm_of_degrees(t) == lcm_degrees_sl2_expected(p));
    }
    CHECK(lcm_of_degrees(sl2_table(make_sl2_param(7))) == 168);
    CHECK(lcm_of_degrees(sl2_table(make_sl2_param(13))) == 1092);
    CHECK_THROWS_AS(sl2_table(make_sl2_param(17)), ResourceCapError);
}

TEST_CASE("irreducible degrees")
{
    const auto irr = sl2_irreducibles(make_sl2_param(7));
    BigInt sum = 0;
    for (const auto& x : irr)
        sum += x.degree * x.degree;
    CHECK(sum == 7 * 48);
    CHECK(irr.size() == 11);
    for (int q : {5, 7, 9, 11, 13})
        for (const auto& x : sl2_irreducibles(make_sl2_param(q))) {
            if (x.kind == Sl2Kind::xi1 || x.kind == Sl2Kind::xi2)
                CHECK(x.degree == (q + 1) / 2);
            if (x.kind == Sl2Kind::eta1 || x.kind == Sl2Kind::eta2)
                CHECK(x.degree == (q - 1) / 2);
        }
}

TEST_CASE("theorem character")
{
    for (int q : {5, 7, 9}) {
        const auto p = make_sl2_param(q);
        CharacterRing ring(sl2_table(p));
        const auto rho = rho_theorem_character(ring, p);
        const auto v = rho.values();
        CHECK(v[0] == AlgebraicNumber(ring.table().order));
        CHECK(v[1] == AlgebraicNumber(ring.table().order));
        for (std::size_t c = 2; c < v.size(); ++c)
            CHECK(v[c].is_zero());
    }
}

TEST_CASE("coefficients in q")
{
    const QCoefficient c{1, -1, 3};
    CHECK(c.at(7) == 2);
    CHECK(!c.at(5).has_value());
    CHECK(c.to_string() == "(q-1)/3");
}

TEST_CASE("printed inverse table: one column per residue class")
{
    for (int q : {5, 9, 13}) {
        const auto p = make_sl2_param(q);
        CharacterRing ring(sl2_table(p));
        const auto rep = verify_rho_inverses(ring, p);
        CHECK(rep.selected_column == 0);
        CHECK(rep.all_verified_or_corrected());
    }
    for (int q : {7, 11}) {
        const auto p = make_sl2_param(q);
        CharacterRing ring(sl2_table(p));
        const auto rep = verify_rho_inverses(ring, p, true);
        CHECK(rep.selected_column == 1);
        CHECK(rep.all_verified_or_corrected());
        for (const auto& row : rep.rows) {
            if (!row.correction)
                continue;
            CHECK(row.correction->replacement == std::to_string((q - 1) / 2) + "*theta_1");
            CHECK(ring.tensor(*ring.table().find_irreducible("chi_1"), row.correction->inverse) ==
                  rho_theorem_character(ring, p));
        }
    }
    const auto p = make_sl2_param(7);
    CharacterRing ring(sl2_table(p));
    const auto plain = verify_rho_inverses(ring, p);
    CHECK(!plain.all_verified_or_corrected());
}

TEST_CASE("obstruction to degree |G|/2")
{
    for (int q : {5, 7}) {
        const auto p = make_sl2_param(q);
        CharacterRing ring(sl2_table(p));
        const auto rep = verify_rho_pm_obstruction(ring, p);
        CHECK(rep.confirmed());
        CHECK(rep.family == (q % 4 == 1 ? "theta_j" : "chi_i"));
    }
}
