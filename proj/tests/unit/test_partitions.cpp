#include "knutson/partitions.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace knutson;

TEST_CASE("partition counts from three sources agree")
{
    const auto euler = oracle::partition_numbers(200);
    for (int n = 0; n <= 200; ++n)
        CHECK(partition_count(n) == euler[static_cast<std::size_t>(n)]);
    for (int n = 0; n <= 25; ++n)
        CHECK(BigInt(static_cast<unsigned long>(enumerate_partitions(n).size())) == euler[static_cast<std::size_t>(n)]);
    CHECK(partition_count(100).get_str() == "190569292");
}

TEST_CASE("enumeration is reverse lexicographic and distinct")
{
    for (int n = 1; n <= 16; ++n) {
        const auto ps = enumerate_partitions(n);
        std::set<Partition> seen(ps.begin(), ps.end());
        CHECK(seen.size() == ps.size());
        for (std::size_t i = 1; i < ps.size(); ++i)
            CHECK(ps[i] < ps[i - 1]);
        for (const auto& p : ps)
            CHECK(p.size() == n);
    }
}

TEST_CASE("parsing and validation")
{
    CHECK(parse_partition("(3,1,1)") == Partition({3, 1, 1}));
    CHECK(parse_partition("[2,2]") == Partition({2, 2}));
    CHECK(parse_partition("()").empty());
    CHECK_THROWS_AS(Partition({1, 2}), PreconditionError);
    CHECK_THROWS_AS(Partition({2, 0}), PreconditionError);
}

TEST_CASE("conjugation is an involution preserving size")
{
    for (int n = 0; n <= 14; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            const auto c = conjugate(p);
            CHECK(c.size() == n);
            CHECK(conjugate(c) == p);
            CHECK(is_self_conjugate(p) == (c == p));
        }
}

TEST_CASE("hook lengths and hook formula")
{
    for (int n = 1; n <= 10; ++n) {
        BigInt sum_sq = 0;
        for (const auto& p : enumerate_partitions(n)) {
            const std::vector<int> shape(p.parts().begin(), p.parts().end());
            auto expected = oracle::hooks(shape);
            std::sort(expected.begin(), expected.end());
            CHECK(hook_lengths(p).multiset() == expected);
            const BigInt f = degree_hook(p);
            CHECK(f == oracle::syt_count(shape));
            sum_sq += f * f;
        }
        CHECK(sum_sq == factorial(static_cast<unsigned>(n)));
    }
    CHECK(principal_hooks(Partition({4, 3, 1})) == std::vector<int>{6, 2});
}

TEST_CASE("t-cores against hook multisets")
{
    for (int t : {2, 3, 4, 5}) {
        for (int n = 0; n <= 18; ++n) {
            std::uint64_t brute = 0;
            for (const auto& p : enumerate_partitions(n)) {
                const std::vector<int> shape(p.parts().begin(), p.parts().end());
                bool core = true;
                for (int h : oracle::hooks(shape))
                    core = core && h % t != 0;
                CHECK(is_t_core(p, t) == core);
                brute += core;
            }
            CHECK(count_t_cores(n, t) == brute);
                CHECK(count_t_cores(n, t, CoreMethod::brute_force) == brute);
            CHECK(t_cores(n, t).size() == brute);
            CHECK(exists_t_core(n, t) == (brute > 0));
            const auto w = find_t_core(n, t);
            CHECK(w.has_value() == (brute > 0));
            if (w) {
                CHECK(w->size() == n);
                CHECK(is_t_core(*w, t));
            }
        }
    }
}

TEST_CASE("2-cores are staircases")
{
    for (int n = 0; n <= 40; ++n) {
        const bool tri = [&] {
            for (int r = 0; r * (r + 1) / 2 <= n; ++r)
                if (r * (r + 1) / 2 == n)
                    return true;
            return false;
        }();
        CHECK(exists_t_core(n, 2) == tri);
        CHECK(exists_t_core(n, 2, CoreMethod::brute_force) == tri);
    }
    CHECK(staircase(4) == Partition({4, 3, 2, 1}));
}

TEST_CASE("fast core criteria agree with enumeration")
{
    for (int t : {2, 3, 5, 7, 11, 13})
        for (int n = 0; n <= 36; ++n)
            CHECK_MESSAGE(exists_t_core(n, t) == exists_t_core(n, t, CoreMethod::brute_force), "n=" << n << " t=" << t);
    for (int n = 0; n <= 30; ++n)
        CHECK(unique_hook2_exists(n) == unique_hook2_exists(n, CoreMethod::brute_force));
    for (int t : {2, 3, 5, 7})
        for (int n = 0; n <= 45; ++n)
            CHECK(count_t_cores(n, t) == count_t_cores(n, t, CoreMethod::brute_force));
    CHECK(unique_hook2_exists(2));
    CHECK(unique_hook2_exists(8));
    CHECK(!unique_hook2_exists(4, CoreMethod::brute_force));
}
