#pragma once

#include "knutson/character_table.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace knutson {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json to_json(const BigInt& x);
BigInt bigint_from_json(const Json& j);

/// {"rat": [n, d]}, {"mq": [[radicand, n, d], ...]} or
/// {"cyc": {"order": m, "eq": e, "base": [[n, d], ...], "tau": [[n, d], ...]}}.
Json to_json(const AlgebraicNumber& x);
AlgebraicNumber algebraic_from_json(const Json& j);

Json to_json(const CharacterTable& t);
CharacterTable table_from_json(const Json& j);

inline constexpr int kCacheFormatVersion = 1;

/// Character tables stored as one JSON file per key, with a format version
/// and a CRC-32 of the payload. Entries failing either check are ignored.
class TableCache {
public:
    explicit TableCache(std::filesystem::path dir);

    /// KNUTSON_CACHE_DIR, else $XDG_DATA_HOME/knutson, else ~/.local/share/knutson.
    static std::optional<std::filesystem::path> default_dir();

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(const std::string& key) const;
    std::optional<CharacterTable> load(const std::string& key) const;
    /// Writes to a temporary file and renames it into place.
    void store(const std::string& key, const CharacterTable& t) const;

private:
    std::filesystem::path dir_;
};

} // namespace knutson
