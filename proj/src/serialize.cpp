#include "knutson/serialize.hpp"

#include <zlib.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

namespace knutson {

Json to_json(const BigInt& x)
{
    if (x.fits_slong_p())
        return Json(static_cast<std::int64_t>(x.get_si()));
    return Json(x.get_str());
}

BigInt bigint_from_json(const Json& j)
{
    if (j.is_number_integer())
        return BigInt(std::to_string(j.get<std::int64_t>()));
    if (j.is_string())
        return BigInt(j.get<std::string>());
    throw PreconditionError("expected an integer, got " + j.dump());
}

namespace {

Json rational_pair(const Rational& r) { return Json::array({to_json(r.get_num()), to_json(r.get_den())}); }

Rational rational_from_pair(const Json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw PreconditionError("expected [numerator, denominator], got " + j.dump());
    return make_rational(bigint_from_json(j[0]), bigint_from_json(j[1]));
}

Json dense(const std::vector<Rational>& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(rational_pair(x));
    return out;
}

} // namespace

Json to_json(const AlgebraicNumber& x)
{
    const auto& s = x.storage();
    if (const auto* r = std::get_if<Rational>(&s))
        return Json{{"rat", rational_pair(*r)}};
    if (const auto* m = std::get_if<MultiQuadratic>(&s)) {
        Json terms = Json::array();
        for (const auto& [d, c] : m->terms())
            terms.push_back(Json::array({d, to_json(c.get_num()), to_json(c.get_den())}));
        return Json{{"mq", terms}};
    }
    const auto& c = std::get<CyclotomicTau>(s);
    Json body;
    body["order"] = c.order();
    body["eq"] = c.eq();
    body["base"] = dense(c.base());
    body["tau"] = dense(c.tau_part());
    return Json{{"cyc", body}};
}

AlgebraicNumber algebraic_from_json(const Json& j)
{
    if (!j.is_object() || j.size() != 1)
        throw PreconditionError("expected a tagged algebraic number, got " + j.dump());
    if (j.contains("rat"))
        return AlgebraicNumber(rational_from_pair(j["rat"]));
    if (j.contains("mq")) {
        MultiQuadratic m;
        for (const auto& t : j["mq"]) {
            if (!t.is_array() || t.size() != 3)
                throw PreconditionError("malformed multi-quadratic term " + t.dump());
            const auto d = t[0].get<std::int64_t>();
            const Rational c = make_rational(bigint_from_json(t[1]), bigint_from_json(t[2]));
            m += d == 1 ? MultiQuadratic(c) : MultiQuadratic::sqrt(d, c);
        }
        return AlgebraicNumber(std::move(m));
    }
    if (j.contains("cyc")) {
        const Json& b = j["cyc"];
        CyclotomicTau c(b.at("order").get<unsigned>(), b.at("eq").get<std::int64_t>());
        const Json& base = b.at("base");
        const Json& tau = b.at("tau");
        for (unsigned k = 0; k < base.size(); ++k)
            c.add_power(k, rational_from_pair(base[k]));
        for (unsigned k = 0; k < tau.size(); ++k) {
            const Rational v = rational_from_pair(tau[k]);
            if (v != 0)
                c.add_power(k, v, true);
        }
        return AlgebraicNumber(std::move(c));
    }
    throw PreconditionError("unknown algebraic number tag in " + j.dump());
}

Json to_json(const CharacterTable& t)
{
    Json j;
    j["group"] = t.label;
    j["order"] = to_json(t.order);
    Json classes = Json::array();
    for (const auto& c : t.classes)
        classes.push_back(Json{{"label", c.label}, {"size", to_json(c.size)}});
    j["classes"] = classes;
    Json irr = Json::array();
    for (const auto& chi : t.irreducibles) {
        Json values = Json::array();
        for (const auto& v : chi.values)
            values.push_back(to_json(v));
        irr.push_back(Json{{"label", chi.label}, {"degree", to_json(chi.degree)}, {"values", values}});
    }
    j["irreducibles"] = irr;
    return j;
}

CharacterTable table_from_json(const Json& j)
{
    CharacterTable t;
    t.label = j.at("group").get<std::string>();
    t.order = bigint_from_json(j.at("order"));
    for (const auto& c : j.at("classes"))
        t.classes.push_back({c.at("label").get<std::string>(), bigint_from_json(c.at("size"))});
    for (const auto& chi : j.at("irreducibles")) {
        Irreducible r{chi.at("label").get<std::string>(), bigint_from_json(chi.at("degree")), {}};
        for (const auto& v : chi.at("values"))
            r.values.push_back(algebraic_from_json(v));
        if (r.values.size() != t.classes.size())
            throw PreconditionError("row length does not match the class count for " + r.label);
        t.irreducibles.push_back(std::move(r));
    }
    return t;
}

namespace {

std::uint32_t checksum(const std::string& s)
{
    return static_cast<std::uint32_t>(
        crc32(0L, reinterpret_cast<const Bytef*>(s.data()), static_cast<uInt>(s.size())));
}

} // namespace

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<std::filesystem::path> TableCache::default_dir()
{
    if (const char* env = std::getenv("KNUTSON_CACHE_DIR"); env && *env)
        return std::filesystem::path(env);
    if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "knutson";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".local" / "share" / "knutson";
    return std::nullopt;
}

std::filesystem::path TableCache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<CharacterTable> TableCache::load(const std::string& key) const
{
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in)
        return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        const Json entry = Json::parse(buf.str());
        if (entry.at("format_version").get<int>() != kCacheFormatVersion || entry.at("key").get<std::string>() != key)
            return std::nullopt;
        const std::string payload = entry.at("payload").get<std::string>();
        if (entry.at("crc32").get<std::uint32_t>() != checksum(payload))
            return std::nullopt;
        return table_from_json(Json::parse(payload));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void TableCache::store(const std::string& key, const CharacterTable& t) const
{
    std::filesystem::create_directories(dir_);
    const std::string payload = to_json(t).dump();
    Json entry;
    entry["format_version"] = kCacheFormatVersion;
    entry["key"] = key;
    entry["crc32"] = checksum(payload);
    entry["payload"] = payload;

    std::random_device rd;
    const auto tmp = dir_ / (key + ".json.tmp." + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << entry.dump();
        if (!out.flush())
            throw std::runtime_error("cannot write cache entry " + tmp.string());
    }
    std::filesystem::rename(tmp, path_for(key));
}

} // namespace knutson
