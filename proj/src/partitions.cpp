#include "knutson/partitions.hpp"

#include "knutson/numtheory.hpp"

#include <algorithm>
#include <sstream>

namespace knutson {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw PreconditionError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw PreconditionError("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

Partition parse_partition(const std::string& text)
{
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
        if (token.empty())
            return;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw PreconditionError("invalid partition: " + text);
        }
        if (used != token.size())
            throw PreconditionError("invalid partition: " + text);
        parts.push_back(v);
        token.clear();
    };
    for (char c : text) {
        if (c == '(' || c == ')' || c == '[' || c == ']' || c == ' ')
            continue;
        if (c == ',' || c == '.') {
            flush();
            continue;
        }
        token.push_back(c);
    }
    flush();
    return Partition(std::move(parts));
}

PartitionGenerator::PartitionGenerator(int n)
{
    if (n < 0)
        throw PreconditionError("partitions of a negative integer");
    if (n > 0)
        parts_.push_back(n);
}

void PartitionGenerator::advance()
{
    if (done_)
        return;
    // Rightmost part exceeding 1; everything after it is a run of ones.
    int i = static_cast<int>(parts_.size()) - 1;
    while (i >= 0 && parts_[static_cast<std::size_t>(i)] == 1)
        --i;
    if (i < 0) {
        done_ = true;
        return;
    }
    int remainder = static_cast<int>(parts_.size()) - 1 - i + 1;
    const int cap = --parts_[static_cast<std::size_t>(i)];
    parts_.resize(static_cast<std::size_t>(i) + 1);
    while (remainder > 0) {
        const int take = std::min(cap, remainder);
        parts_.push_back(take);
        remainder -= take;
    }
}

std::vector<Partition> enumerate_partitions(int n)
{
    std::vector<Partition> out;
    for (PartitionGenerator g(n); !g.done(); g.advance())
        out.emplace_back(g.current());
    return out;
}

BigInt partition_count(int n)
{
    if (n < 0)
        return 0;
    std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigInt s = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            if (g1 > m)
                break;
            const int g2 = k * (3 * k + 1) / 2;
            BigInt term = p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m)
                term += p[static_cast<std::size_t>(m - g2)];
            if (k % 2 == 1)
                s += term;
            else
                s -= term;
        }
        p[static_cast<std::size_t>(m)] = s;
    }
    return p[static_cast<std::size_t>(n)];
}

Partition conjugate(const Partition& p)
{
    std::vector<int> out;
    if (p.empty())
        return Partition();
    for (int j = 0; j < p[0]; ++j) {
        int len = 0;
        while (len < p.length() && p[len] > j)
            ++len;
        out.push_back(len);
    }
    return Partition(std::move(out));
}

bool is_self_conjugate(const Partition& p) { return p == conjugate(p); }

HookGrid::HookGrid(const Partition& p)
{
    const Partition c = conjugate(p);
    for (int i = 0; i < p.length(); ++i) {
        offsets_.push_back(hooks_.size());
        for (int j = 0; j < p[i]; ++j)
            hooks_.push_back((p[i] - j) + (c[j] - i) - 1);
    }
}

int HookGrid::row_length(int row) const
{
    const auto r = static_cast<std::size_t>(row);
    const std::size_t end = r + 1 < offsets_.size() ? offsets_[r + 1] : hooks_.size();
    return static_cast<int>(end - offsets_[r]);
}

int HookGrid::at(int row, int col) const
{
    if (row < 0 || row >= rows() || col < 0 || col >= row_length(row))
        throw PreconditionError("hook index outside the diagram");
    return hooks_[offsets_[static_cast<std::size_t>(row)] + static_cast<std::size_t>(col)];
}

std::vector<int> HookGrid::multiset() const
{
    std::vector<int> m(hooks_.begin(), hooks_.end());
    std::sort(m.begin(), m.end());
    return m;
}

std::vector<int> principal_hooks(const Partition& p)
{
    const HookGrid grid(p);
    std::vector<int> out;
    for (int i = 0; i < p.length() && p[i] > i; ++i)
        out.push_back(grid.at(i, i));
    return out;
}

BigInt degree_hook(const Partition& p)
{
    BigInt prod = 1;
    const HookGrid grid(p);
    for (int h : grid.values())
        prod *= h;
    const BigInt nf = factorial(static_cast<unsigned>(p.size()));
    if (!mpz_divisible_p(nf.get_mpz_t(), prod.get_mpz_t()))
        throw InternalError("hook product does not divide n! for " + p.to_string());
    return nf / prod;
}

bool is_t_core(const Partition& p, int t)
{
    if (t < 2)
        throw PreconditionError("t-core requires t >= 2");
    const HookGrid grid(p);
    for (int h : grid.values())
        if (h % t == 0)
            return false;
    return true;
}

Partition staircase(int r)
{
    std::vector<int> parts;
    for (int k = r; k >= 1; --k)
        parts.push_back(k);
    return Partition(std::move(parts));
}

namespace {

bool is_t_core_parts(const std::vector<int>& parts, int t)
{
    const int rows = static_cast<int>(parts.size());
    for (int i = 0; i < rows; ++i) {
        // leg_end: number of rows longer than column j
        int leg_end = rows;
        for (int j = 0; j < parts[static_cast<std::size_t>(i)]; ++j) {
            while (leg_end > i + 1 && parts[static_cast<std::size_t>(leg_end - 1)] <= j)
                --leg_end;
            const int arm = parts[static_cast<std::size_t>(i)] - j - 1;
            const int leg = leg_end - i - 1;
            if ((arm + leg + 1) % t == 0)
                return false;
        }
    }
    return true;
}

} // namespace

std::uint64_t count_t_cores(int n, int t, CoreMethod method)
{
    if (n < 0 || t < 2)
        throw PreconditionError("count_t_cores requires n >= 0, t >= 2");
    if (method == CoreMethod::brute_force) {
        std::uint64_t count = 0;
        for (PartitionGenerator g(n); !g.done(); g.advance())
            if (is_t_core_parts(g.current(), t))
                ++count;
        return count;
    }
    // prod_k (1 - q^{tk})^t / (1 - q^k)
    const auto len = static_cast<std::size_t>(n) + 1;
    std::vector<BigInt> a(len, 0);
    a[0] = 1;
    for (std::size_t k = 1; k < len; ++k)
        for (std::size_t m = k; m < len; ++m)
            a[m] += a[m - k];
    for (std::size_t step = static_cast<std::size_t>(t); step < len; step += static_cast<std::size_t>(t))
        for (int r = 0; r < t; ++r)
            for (std::size_t m = len - 1; m >= step; --m)
                a[m] -= a[m - step];
    const BigInt& c = a[len - 1];
    if (!c.fits_ulong_p())
        throw ResourceCapError("t-core count for n = " + std::to_string(n) + " exceeds 64 bits");
    return c.get_ui();
}

std::optional<Partition> find_t_core(int n, int t)
{
    if (t < 2)
        throw PreconditionError("t-core requires t >= 2");
    for (PartitionGenerator g(n); !g.done(); g.advance())
        if (is_t_core_parts(g.current(), t))
            return Partition(g.current());
    return std::nullopt;
}

std::vector<Partition> t_cores(int n, int t)
{
    std::vector<Partition> out;
    for (PartitionGenerator g(n); !g.done(); g.advance())
        if (is_t_core_parts(g.current(), t))
            out.emplace_back(g.current());
    return out;
}

bool exists_t_core(int n, int t, CoreMethod method)
{
    if (n < 0 || t < 2)
        throw PreconditionError("exists_t_core requires n >= 0, t >= 2");
    if (n == 0)
        return true;
    if (method == CoreMethod::automatic) {
        const auto un = static_cast<std::uint64_t>(n);
        if (t == 2)
            return is_triangular(un);
        if (t == 3)
            return is_loeschian(3 * un + 1);
        if (t >= 5 && is_prime(static_cast<std::uint64_t>(t)))
            return true;
    }
    return find_t_core(n, t).has_value();
}

bool unique_hook2_exists(int n, CoreMethod method)
{
    if (n < 0)
        throw PreconditionError("unique_hook2_exists requires n >= 0");
    if (method == CoreMethod::automatic)
        return n >= 2 && is_triangular(static_cast<std::uint64_t>(n - 2));
    for (PartitionGenerator g(n); !g.done(); g.advance()) {
        const HookGrid grid{Partition(g.current())};
        const auto values = grid.values();
        if (std::count_if(values.begin(), values.end(), [](int h) { return h % 2 == 0; }) == 1)
            return true;
    }
    return false;
}

} // namespace knutson
