#include "knutson/groups.hpp"
#include "knutson/serialize.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace knutson;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir()
    {
        path = std::filesystem::temp_directory_path() / ("knutson-test-" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

void check_same(const CharacterTable& a, const CharacterTable& b)
{
    CHECK(a.label == b.label);
    CHECK(a.order == b.order);
    REQUIRE(a.num_classes() == b.num_classes());
    REQUIRE(a.num_irreducibles() == b.num_irreducibles());
    for (std::size_t c = 0; c < a.num_classes(); ++c) {
        CHECK(a.classes[c].label == b.classes[c].label);
        CHECK(a.classes[c].size == b.classes[c].size);
    }
    for (std::size_t i = 0; i < a.num_irreducibles(); ++i)
        for (std::size_t c = 0; c < a.num_classes(); ++c)
            CHECK(a.value(i, c) == b.value(i, c));
}

} // namespace

TEST_CASE("big integers")
{
    CHECK(to_json(BigInt(42)) == Json(42));
    const BigInt big("123456789012345678901234567890");
    CHECK(to_json(big).is_string());
    CHECK(bigint_from_json(to_json(big)) == big);
    CHECK_THROWS_AS(bigint_from_json(Json(1.5)), PreconditionError);
}

TEST_CASE("algebraic numbers round-trip")
{
    const std::vector<AlgebraicNumber> xs{
        AlgebraicNumber(Rational(-3, 7)),
        AlgebraicNumber(MultiQuadratic::sqrt(5, Rational(1, 2)) + MultiQuadratic(Rational(1, 2))),
        AlgebraicNumber(CyclotomicTau::root_of_unity(12, 5, -7) + CyclotomicTau::tau(12, -7)),
    };
    for (const auto& x : xs)
        CHECK(algebraic_from_json(to_json(x)) == x);
    CHECK_THROWS_AS(algebraic_from_json(Json{{"bogus", 1}}), PreconditionError);
}

TEST_CASE("tables round-trip through JSON and the cache")
{
    TempDir dir;
    TableCache cache(dir.path);
    for (const auto& spec : {GroupSpec{GroupFamily::alternating, 5}, GroupSpec{GroupFamily::sl2, 5},
                             GroupSpec{GroupFamily::sl2, 8}, GroupSpec{GroupFamily::psl2, 7}}) {
        const auto t = build_table(spec);
        const auto back = table_from_json(Json::parse(to_json(t).dump()));
        check_same(t, back);
        CHECK(!cache.load(spec.key()).has_value());
        cache.store(spec.key(), t);
        const auto loaded = cache.load(spec.key());
        REQUIRE(loaded.has_value());
        check_same(t, *loaded);
        CHECK(check_orthogonality(*loaded).ok);
    }
}

TEST_CASE("damaged cache entries are ignored")
{
    TempDir dir;
    TableCache cache(dir.path);
    const auto t = build_table({GroupFamily::symmetric, 4});
    cache.store("sn-4", t);

    auto edit = [&](auto&& f) {
        std::ifstream in(cache.path_for("sn-4"));
        Json j = Json::parse(in);
        in.close();
        f(j);
        std::ofstream(cache.path_for("sn-4")) << j.dump();
    };

    edit([](Json& j) { j["crc32"] = j["crc32"].get<std::uint32_t>() ^ 1u; });
    CHECK(!cache.load("sn-4").has_value());

    cache.store("sn-4", t);
    edit([](Json& j) { j["format_version"] = kCacheFormatVersion + 1; });
    CHECK(!cache.load("sn-4").has_value());

    cache.store("sn-4", t);
    CHECK(!cache.load("sn-5").has_value());
    std::ofstream(cache.path_for("sn-4")) << "{ not json";
    CHECK(!cache.load("sn-4").has_value());
}
