#pragma once

#include "knutson/knutsonlat.hpp"
#include "knutson/sl2tables.hpp"
#include "knutson/symchar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace knutson {

enum class GroupFamily { symmetric, alternating, sl2, psl2 };

struct GroupSpec {
    GroupFamily family;
    int n = 0; ///< degree for S_n / A_n, field size for SL_2 / PSL_2

    std::string label() const;
    /// Stable identifier, e.g. "sn-8", used as the cache key.
    std::string key() const;
};

/// family is one of sn, an, sl2, psl2.
GroupSpec parse_group(const std::string& family, int n);

struct GroupCaps {
    TableCaps symmetric;
    Sl2Caps sl2;
};

CharacterTable build_table(const GroupSpec& spec, const GroupCaps& caps = {});

struct CharacterIndex {
    std::string label;
    BigInt degree;
    BigInt index;
};

struct KnutsonSummary {
    std::string group;
    BigInt order;
    BigInt L;
    Rational lower_bound;
    bool zero_columns = false;
    std::vector<CharacterIndex> characters;
    BigInt K;
    /// Set when the generalised index is determined; reason says how.
    std::optional<Rational> k_prime;
    std::string k_prime_reason;
    std::optional<RhoSearchResult> search;
    std::optional<ObstructionReport> obstruction;
};

/// Groups of order at most this are settled by min_rho_search when no
/// criterion applies.
inline constexpr int kSearchOrderLimit = 48;

KnutsonSummary summarize_knutson(const GroupSpec& spec, const CharacterRing& ring);

} // namespace knutson
