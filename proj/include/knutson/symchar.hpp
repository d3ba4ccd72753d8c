#pragma once

#include "knutson/character_table.hpp"
#include "knutson/partitions.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace knutson {

/// Conjugacy class of S_n, labelled by its cycle lengths.
class CycleType {
public:
    explicit CycleType(Partition cycles) : cycles_(std::move(cycles)) {}

    const Partition& partition() const { return cycles_; }
    int n() const { return cycles_.size(); }
    int multiplicity(int length) const;
    /// Order of the centraliser: prod_k k^{m_k} m_k!.
    BigInt centralizer_order() const;
    BigInt class_size() const;
    /// +1 for even permutations.
    int sign() const;
    /// Cycles of length > 1 only.
    Partition non_fixed_part() const;
    /// All parts odd and distinct: the class splits in A_n.
    bool splits_in_alternating() const;

    friend bool operator==(const CycleType&, const CycleType&) = default;

private:
    Partition cycles_;
};

/// Classes of S_n, identity first (partitions in lexicographically increasing order).
std::vector<CycleType> cycle_types(int n);

/// Character values chi_lambda(mu) by rim-hook stripping, largest cycle first.
/// Memoised on (remaining shape, remaining cycles); one instance per thread.
class MurnaghanNakayama {
public:
    BigInt value(const Partition& lambda, const CycleType& mu);
    /// Strips cycles in the given order (any order gives the same value).
    BigInt value_ordered(const Partition& lambda, const std::vector<int>& cycles);
    std::size_t memo_size() const { return memo_.size(); }
    void clear() { memo_.clear(); }

private:
    BigInt recurse(const std::vector<int>& shape, const std::vector<int>& cycles, std::size_t next);
    std::unordered_map<std::string, BigInt> memo_;
};

BigInt mn_value(const Partition& lambda, const CycleType& mu);

struct TableCaps {
    int max_symmetric = 22;
};

/// S_n over the integers. Irreducibles in reverse lexicographic order of
/// partitions (trivial first), classes as in cycle_types.
CharacterTable sn_table(int n, const TableCaps& caps = {});

/// A_n, 3 <= n. Non-self-conjugate pairs lambda, lambda' give one irreducible
/// labelled by the earlier of the two; a self-conjugate lambda gives lambda+ and
/// lambda-. Split classes are labelled mu+ and mu-; lambda+ takes
/// (eps + sqrt(eps * prod h)) / 2 on mu+ where mu is lambda's principal hook type.
CharacterTable an_table(int n, const TableCaps& caps = {});

/// Classes of S_n on which no irreducible vanishes, identity included.
/// Scans characters in decreasing degree order with early exit.
std::vector<CycleType> nonvanishing_classes_sn(int n, int cap = 30);

/// Non-fixed part is (3^a, 2^b) with b even.
bool has_three_two_even_shape(const CycleType& mu);

} // namespace knutson
