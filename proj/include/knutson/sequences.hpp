#pragma once

#include "knutson/character_table.hpp"
#include "knutson/symchar.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace knutson {

struct SequenceRecord {
    std::string id; ///< a363675, a363676 or a363701
    std::vector<std::uint64_t> terms;
    std::uint64_t limit = 0;
};

/// n <= limit with L(S_n) = n!: n triangular and 3n+1 Loeschian.
SequenceRecord seq_L_Sn(std::uint64_t limit);

/// n <= limit with L(A_n) = n!/2: 3n+1 Loeschian and n or n-2 triangular.
SequenceRecord seq_L_An(std::uint64_t limit);

/// Per-n detail of the zero-column scan.
struct ZeroColumnScan {
    int n = 0;
    bool all_columns_vanish = false;
    std::size_t classes = 0;
    std::size_t pruned = 0;  ///< classes certified by a t-core character
    std::size_t scanned = 0; ///< classes checked against every character until a zero
    /// Non-identity classes on which no irreducible vanishes.
    std::vector<std::string> nonvanishing;
    /// Every such class has non-fixed part (3^a, 2^b) with b even.
    bool shapes_as_claimed = true;
};

struct ZeroColumnRun {
    SequenceRecord record;
    std::vector<ZeroColumnScan> scans;
};

/// Scans S_1..S_limit. A class containing a t-cycle is certified vanishing by
/// the character of a t-core of n (checked by stripping the t-cycle first);
/// the remaining classes are scanned in decreasing degree order with early exit.
/// n = 1 has no non-trivial class and counts as vacuously true.
ZeroColumnScan zero_column_scan_sn(int n, int cap = 30);
ZeroColumnRun zero_columns_sn_run(int limit, int cap = 30);
SequenceRecord seq_zero_columns_sn(int limit, int cap = 30);

/// lcm of the degrees.
BigInt L_of_table(const CharacterTable& t);

} // namespace knutson
