#include "knutson/cli.hpp"
#include "knutson/serialize.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace knutson;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    static const bool env = [] {
        const auto dir = std::filesystem::temp_directory_path() / "knutson-cli-test-cache";
        return setenv("KNUTSON_CACHE_DIR", dir.c_str(), 1) == 0;
    }();
    (void)env;
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("table output")
{
    const auto r = run({"table", "sn", "3"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("(2,1)") != std::string::npos);

    const auto j = run({"table", "an", "5", "--format", "json"});
    REQUIRE(j.code == exit_ok);
    const auto t = table_from_json(Json::parse(j.out));
    CHECK(t.order == 60);
    CHECK(t.num_classes() == 5);

    const auto csv = run({"table", "psl2", "7", "--format", "csv", "--no-cache"});
    CHECK(csv.code == exit_ok);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') >= 7);
}

TEST_CASE("sequences")
{
    const auto r = run({"seq", "a363675", "--limit", "40", "--format", "json"});
    REQUIRE(r.code == exit_ok);
    CHECK(Json::parse(r.out)["terms"] == Json::array({1, 6, 10, 21, 36}));
    const auto b = run({"seq", "a363676", "--limit", "12", "--bfile"});
    CHECK(b.code == exit_ok);
    CHECK(b.out.find("1 1\n2 2\n3 5\n") == 0);
    CHECK(run({"seq", "a363701", "--limit", "31"}).code == exit_resource_cap);
    CHECK(run({"seq", "a000001"}).code == exit_usage);
}

TEST_CASE("knutson subcommand")
{
    const auto r = run({"knutson", "sl2", "5", "--format", "json"});
    REQUIRE(r.code == exit_ok);
    const auto j = Json::parse(r.out);
    CHECK(j["K"] == 2);
    CHECK(j["L"] == 60);
    CHECK(run({"knutson", "sl2", "7"}).code == exit_table_discrepancy);
    CHECK(run({"knutson", "sl2", "7", "--search-corrections"}).code == exit_ok);
    CHECK(run({"knutson", "sn", "5", "--char", "(3,1,1)"}).code == exit_ok);
    CHECK(run({"knutson", "sn", "5", "--char", "(9)"}).code == exit_usage);
    CHECK(run({"knutson", "sl2", "6"}).code == exit_usage);
    CHECK(run({"knutson", "sl2", "19"}).code == exit_resource_cap);
}

TEST_CASE("verify and cores")
{
    const auto v = run({"verify", "sequences"});
    REQUIRE(v.code == exit_ok);
    CHECK(Json::parse(v.out)["pass"] == true);
    CHECK(run({"verify", "nonsense"}).code == exit_usage);

    const auto c = run({"cores", "10", "3", "--format", "json"});
    REQUIRE(c.code == exit_ok);
    const auto j = Json::parse(c.out);
    CHECK(j["count"] == 2);
    CHECK(run({"cores", "10", "3", "--brute-force"}).code == exit_ok);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == exit_usage);
    CHECK(run({"frobnicate"}).code == exit_usage);
    CHECK(run({"table", "sn"}).code == exit_usage);
    CHECK(run({"table", "sn", "3", "--format", "xml"}).code == exit_usage);
}
