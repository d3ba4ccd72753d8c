#include "knutson/sequences.hpp"

#include "knutson/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace knutson {

SequenceRecord seq_L_Sn(std::uint64_t limit)
{
    if (limit < 1)
        throw PreconditionError("sequence limit must be >= 1");
    SequenceRecord r{"a363675", {}, limit};
    for (std::uint64_t n = 1; n <= limit; ++n)
        if (is_triangular(n) && is_loeschian(3 * n + 1))
            r.terms.push_back(n);
    return r;
}

SequenceRecord seq_L_An(std::uint64_t limit)
{
    if (limit < 1)
        throw PreconditionError("sequence limit must be >= 1");
    SequenceRecord r{"a363676", {}, limit};
    for (std::uint64_t n = 1; n <= limit; ++n)
        if (is_loeschian(3 * n + 1) && (is_triangular(n) || (n >= 2 && is_triangular(n - 2))))
            r.terms.push_back(n);
    const auto sn = seq_L_Sn(limit);
    if (!std::includes(r.terms.begin(), r.terms.end(), sn.terms.begin(), sn.terms.end()))
        throw InternalError("the A_n sequence does not contain the S_n sequence");
    return r;
}

ZeroColumnScan zero_column_scan_sn(int n, int cap)
{
    if (n < 1)
        throw PreconditionError("zero-column scan requires n >= 1");
    if (n > cap)
        throw ResourceCapError("S_" + std::to_string(n) + " exceeds the zero-column cap " + std::to_string(cap));

    const std::vector<Partition> shapes = enumerate_partitions(n);
    std::vector<BigInt> degrees;
    for (const auto& s : shapes)
        degrees.push_back(degree_hook(s));
    std::vector<std::size_t> order(shapes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degrees[a] > degrees[b]; });

    std::map<int, std::optional<Partition>> cores;
    auto core_for = [&](int t) -> const std::optional<Partition>& {
        auto it = cores.find(t);
        if (it == cores.end())
            it = cores.emplace(t, find_t_core(n, t)).first;
        return it->second;
    };

    MurnaghanNakayama mn;
    ZeroColumnScan scan;
    scan.n = n;
    const auto classes = cycle_types(n);
    scan.classes = classes.size();
    for (std::size_t c = 1; c < classes.size(); ++c) {
        const CycleType& mu = classes[c];
        const auto& parts = mu.partition().parts();

        bool certified = false;
        for (int t : std::vector<int>(parts.begin(), parts.end())) {
            if (t < 2 || certified)
                continue;
            const auto& core = core_for(t);
            if (!core)
                continue;
            std::vector<int> cycles(parts.begin(), parts.end());
            cycles.erase(std::find(cycles.begin(), cycles.end(), t));
            cycles.insert(cycles.begin(), t);
            if (mn.value_ordered(*core, cycles) != 0)
                throw InternalError("t-core character " + core->to_string() + " does not vanish on " +
                                    mu.partition().to_string());
            certified = true;
        }
        if (certified) {
            ++scan.pruned;
            continue;
        }

        ++scan.scanned;
        bool vanishes = false;
        for (std::size_t idx : order)
            if (mn.value(shapes[idx], mu) == 0) {
                vanishes = true;
                break;
            }
        if (!vanishes) {
            scan.nonvanishing.push_back(mu.partition().to_string());
            scan.shapes_as_claimed = scan.shapes_as_claimed && has_three_two_even_shape(mu);
        }
    }
    scan.all_columns_vanish = scan.nonvanishing.empty();
    return scan;
}

ZeroColumnRun zero_columns_sn_run(int limit, int cap)
{
    if (limit < 1)
        throw PreconditionError("sequence limit must be >= 1");
    if (limit > cap)
        throw ResourceCapError("limit " + std::to_string(limit) + " exceeds the zero-column cap " + std::to_string(cap));
    ZeroColumnRun run;
    run.record = {"a363701", {}, static_cast<std::uint64_t>(limit)};
    for (int n = 1; n <= limit; ++n) {
        run.scans.push_back(zero_column_scan_sn(n, cap));
        if (run.scans.back().all_columns_vanish)
            run.record.terms.push_back(static_cast<std::uint64_t>(n));
    }
    return run;
}

SequenceRecord seq_zero_columns_sn(int limit, int cap) { return zero_columns_sn_run(limit, cap).record; }

BigInt L_of_table(const CharacterTable& t) { return lcm_of_degrees(t); }

} // namespace knutson
