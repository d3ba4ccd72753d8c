#pragma once

#include "knutson/common.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace knutson {

/// Weakly decreasing sequence of positive integers. The empty sequence is the
/// unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Throws PreconditionError unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    int size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

    /// Row length, 0 past the last row.
    int row(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Parses "3,1,1", "(3,1,1)" or "[3,1,1]"; "()" and "" give the empty partition.
Partition parse_partition(const std::string& text);

/// Streams the partitions of n in reverse lexicographic order:
/// (n), (n-1,1), (n-2,2), (n-2,1,1), ...
class PartitionGenerator {
public:
    explicit PartitionGenerator(int n);

    /// Current partition; valid until the next call to advance().
    const std::vector<int>& current() const { return parts_; }
    bool done() const { return done_; }
    void advance();

private:
    std::vector<int> parts_;
    bool done_ = false;
};

std::vector<Partition> enumerate_partitions(int n);

/// Number of partitions p(n) from the pentagonal-number recurrence.
BigInt partition_count(int n);

Partition conjugate(const Partition& p);
bool is_self_conjugate(const Partition& p);

/// Hook lengths of every box, stored row by row.
class HookGrid {
public:
    explicit HookGrid(const Partition& p);

    int at(int row, int col) const;
    int rows() const { return static_cast<int>(offsets_.size()); }
    int row_length(int row) const;
    std::span<const int> values() const { return hooks_; }

    /// Sorted multiset of all hooks.
    std::vector<int> multiset() const;

private:
    std::vector<int> hooks_;
    std::vector<std::size_t> offsets_;
};

inline HookGrid hook_lengths(const Partition& p) { return HookGrid(p); }

/// Hook lengths on the main diagonal, strictly decreasing.
std::vector<int> principal_hooks(const Partition& p);

/// n! / prod of hooks. Throws InternalError if the division is inexact.
BigInt degree_hook(const Partition& p);

bool is_t_core(const Partition& p, int t);

/// Staircase (r, r-1, ..., 1).
Partition staircase(int r);

enum class CoreMethod {
    automatic,  ///< use a closed-form criterion when one applies
    brute_force ///< always enumerate partitions
};

/// Automatic: coefficient of the generating function; brute_force: enumeration.
std::uint64_t count_t_cores(int n, int t, CoreMethod method = CoreMethod::automatic);
bool exists_t_core(int n, int t, CoreMethod method = CoreMethod::automatic);
std::optional<Partition> find_t_core(int n, int t);
std::vector<Partition> t_cores(int n, int t);

/// A partition of n with exactly one even hook length (2-weight one).
bool unique_hook2_exists(int n, CoreMethod method = CoreMethod::automatic);

} // namespace knutson
