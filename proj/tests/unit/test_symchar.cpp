#include "knutson/character_table.hpp"
#include "knutson/sl2tables.hpp"
#include "knutson/symchar.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

using namespace knutson;

namespace {

std::vector<int> permutation_of(const CycleType& mu)
{
    std::vector<int> perm;
    int start = 0;
    for (int len : mu.partition().parts()) {
        for (int i = 0; i < len; ++i)
            perm.push_back(start + (i + 1) % len);
        start += len;
    }
    return perm;
}

int fixed_points(const std::vector<int>& g)
{
    int f = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        f += g[i] == static_cast<int>(i);
    return f;
}

int fixed_pairs(const std::vector<int>& g)
{
    int f = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            const int a = g[i], b = g[j];
            f += (a == static_cast<int>(i) && b == static_cast<int>(j)) ||
                 (a == static_cast<int>(j) && b == static_cast<int>(i));
        }
    return f;
}

int cycle_count(const std::vector<int>& g)
{
    std::vector<bool> seen(g.size(), false);
    int c = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (seen[i])
            continue;
        ++c;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(g[j]))
            seen[j] = true;
    }
    return c;
}

std::vector<int> square(const std::vector<int>& g)
{
    std::vector<int> out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        out[i] = g[static_cast<std::size_t>(g[i])];
    return out;
}

// Rows as multisets of (class size, value) pairs, values rounded.
std::multiset<std::vector<std::tuple<std::string, long, long>>> row_signatures(const CharacterTable& t)
{
    std::multiset<std::vector<std::tuple<std::string, long, long>>> out;
    for (const auto& chi : t.irreducibles) {
        std::vector<std::tuple<std::string, long, long>> row;
        for (std::size_t c = 0; c < t.num_classes(); ++c) {
            const auto z = chi.values[c].to_complex();
            row.emplace_back(t.classes[c].size.get_str(), std::lround(z.real() * 1e6), std::lround(z.imag() * 1e6));
        }
        std::sort(row.begin(), row.end());
        out.insert(row);
    }
    return out;
}

std::vector<BigInt> sorted_degrees(const CharacterTable& t)
{
    auto d = t.degrees();
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<BigInt> sorted_sizes(const CharacterTable& t)
{
    std::vector<BigInt> s;
    for (const auto& c : t.classes)
        s.push_back(c.size);
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

TEST_CASE("class sizes of S_n")
{
    for (int n = 1; n <= 12; ++n) {
        BigInt total = 0;
        for (const auto& mu : cycle_types(n)) {
            CHECK(mu.class_size() * mu.centralizer_order() == factorial(static_cast<unsigned>(n)));
            total += mu.class_size();
        }
        CHECK(total == factorial(static_cast<unsigned>(n)));
        CHECK(cycle_types(n).front().partition() == Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    }
}

TEST_CASE("small characters against permutation traces")
{
    for (int n = 4; n <= 9; ++n) {
        const auto t = sn_table(n);
        const auto std_idx = *t.find_irreducible(Partition({n - 1, 1}).to_string());
        const auto two_idx = *t.find_irreducible(Partition({n - 2, 2}).to_string());
        const auto wedge_idx = *t.find_irreducible(Partition({n - 2, 1, 1}).to_string());
        const auto sign_idx = *t.find_irreducible(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)).to_string());
        const auto mus = cycle_types(n);
        for (std::size_t c = 0; c < mus.size(); ++c) {
            const auto g = permutation_of(mus[c]);
            CHECK(cycle_count(g) == mus[c].partition().length());
            const int chi_std = fixed_points(g) - 1;
            const int chi_std_sq = fixed_points(square(g)) - 1;
            CHECK(t.value(std_idx, c) == AlgebraicNumber(chi_std));
            CHECK(t.value(two_idx, c) == AlgebraicNumber(fixed_pairs(g) - fixed_points(g)));
            CHECK(t.value(wedge_idx, c) == AlgebraicNumber((chi_std * chi_std - chi_std_sq) / 2));
            CHECK(t.value(sign_idx, c) == AlgebraicNumber((n - cycle_count(g)) % 2 ? -1 : 1));
            CHECK(t.value(0, c) == AlgebraicNumber(1));
        }
    }
}

TEST_CASE("conjugate partitions differ by the sign")
{
    for (int n = 2; n <= 10; ++n) {
        const auto t = sn_table(n);
        const auto mus = cycle_types(n);
        for (std::size_t i = 0; i < t.num_irreducibles(); ++i) {
            const auto j = *t.find_irreducible(conjugate(parse_partition(t.irreducibles[i].label)).to_string());
            for (std::size_t c = 0; c < mus.size(); ++c) {
                const int sign = (n - mus[c].partition().length()) % 2 ? -1 : 1;
                CHECK(t.value(j, c) == AlgebraicNumber(sign) * t.value(i, c));
            }
        }
    }
}

TEST_CASE("S_n tables are orthogonal with hook degrees")
{
    for (int n = 1; n <= 9; ++n) {
        const auto t = sn_table(n);
        CHECK(check_orthogonality(t).ok);
        for (const auto& chi : t.irreducibles)
            CHECK(chi.degree == degree_hook(parse_partition(chi.label)));
    }
    CHECK(mn_value(Partition({3, 2}), CycleType(Partition({3, 1, 1}))) == -1);
    CHECK_THROWS_AS(sn_table(23), ResourceCapError);
}

TEST_CASE("A_n tables")
{
    for (int n = 3; n <= 9; ++n) {
        const auto t = an_table(n);
        CHECK(check_orthogonality(t).ok);
        BigInt sum = 0;
        for (const auto& d : t.degrees())
            sum += d * d;
        CHECK(sum == t.order);
        CHECK(t.order == factorial(static_cast<unsigned>(n)) / 2);
    }
    const auto a5 = an_table(5);
    const auto c5 = *a5.find_class("(5)+");
    const auto chi = *a5.find_irreducible("(3,1,1)+");
    const auto v = a5.value(chi, c5);
    CHECK(std::abs(std::abs(v.to_complex().real() - 0.5) - std::sqrt(5.0) / 2) < 1e-12);
    CHECK(v * v - v == AlgebraicNumber(1));
}

TEST_CASE("exceptional isomorphisms")
{
    CHECK(row_signatures(sl2_table(make_sl2_param(2))) == row_signatures(sn_table(3)));
    CHECK(row_signatures(psl2_table(make_sl2_param(4))) == row_signatures(an_table(5)));
    CHECK(row_signatures(psl2_table(make_sl2_param(5))) == row_signatures(an_table(5)));
    const auto p9 = psl2_table(make_sl2_param(9));
    const auto a6 = an_table(6);
    CHECK(sorted_degrees(p9) == sorted_degrees(a6));
    CHECK(sorted_sizes(p9) == sorted_sizes(a6));
    CHECK(row_signatures(p9) == row_signatures(a6));
    CHECK(row_signatures(psl2_table(make_sl2_param(7))).size() == 6);
}

TEST_CASE("nonvanishing classes and the 3,2 shape")
{
    CHECK(has_three_two_even_shape(CycleType(Partition({3, 2, 2, 1}))));
    CHECK(!has_three_two_even_shape(CycleType(Partition({3, 2, 1}))));
    const auto nv = nonvanishing_classes_sn(7);
    CHECK(!nv.empty());
    const auto t = sn_table(7);
    for (const auto& mu : nv) {
        const auto c = *t.find_class(mu.partition().to_string());
        for (std::size_t i = 0; i < t.num_irreducibles(); ++i)
            CHECK(!t.value(i, c).is_zero());
    }
    CHECK(nonvanishing_classes_sn(6).size() == 1);
}
