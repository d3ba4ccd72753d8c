#include "knutson/numtheory.hpp"

#include "knutson/common.hpp"

#include <cmath>

namespace knutson {

BigInt factorial(unsigned n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Factorization factorize(std::uint64_t n)
{
    if (n == 0)
        throw PreconditionError("factorize: n must be positive");
    Factorization out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1)
        out.push_back({n, 1});
    return out;
}

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while (r + 1 <= n / (r + 1))
        ++r;
    return r;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    auto f = factorize(n);
    return f.size() == 1 && f.front().exponent == 1;
}

std::optional<std::uint64_t> triangular_root(std::uint64_t n)
{
    const std::uint64_t d = 8 * n + 1;
    const std::uint64_t s = isqrt(d);
    if (s * s != d)
        return std::nullopt;
    return (s - 1) / 2;
}

bool is_loeschian(std::uint64_t n)
{
    if (n == 0)
        return true;
    for (const auto& [p, e] : factorize(n))
        if (p % 3 == 2 && e % 2 == 1)
            return false;
    return true;
}

std::optional<std::pair<std::int64_t, std::int64_t>> loeschian_witness(std::uint64_t n)
{
    const auto bound = static_cast<std::int64_t>(isqrt(n) + 1);
    const auto target = static_cast<std::int64_t>(n);
    for (std::int64_t x = 0; x <= bound; ++x) {
        for (std::int64_t y = 0; y <= x; ++y) {
            const std::int64_t v = x * x + x * y + y * y;
            if (v == target)
                return std::pair{x, y};
            if (v > target)
                break;
        }
    }
    return std::nullopt;
}

int legendre3(std::uint64_t d)
{
    switch (d % 3) {
    case 1:
        return 1;
    case 2:
        return -1;
    default:
        return 0;
    }
}

std::int64_t sigma3(std::uint64_t m)
{
    if (m == 0)
        throw PreconditionError("sigma3: m must be positive");
    if (m % 3 == 0)
        return 0;
    std::int64_t s = 0;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0)
            continue;
        s += legendre3(d);
        if (d * d != m)
            s += legendre3(m / d);
    }
    return s;
}

std::optional<std::pair<std::int64_t, std::int64_t>> quadform_witness(std::uint64_t n)
{
    // For each X with |X| <= 2 + ceil(sqrt(2n)), solve Y^2 + (X+1)Y + (X^2 + X - n) = 0.
    const auto bound = static_cast<std::int64_t>(2 + isqrt(2 * n) + 1);
    const auto target = static_cast<std::int64_t>(n);
    for (std::int64_t x = -bound; x <= bound; ++x) {
        const std::int64_t disc = (x + 1) * (x + 1) - 4 * (x * x + x - target);
        if (disc < 0)
            continue;
        const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(disc)));
        if (s * s != disc)
            continue;
        for (std::int64_t root : {s, -s}) {
            const std::int64_t num = -(x + 1) + root;
            if (num % 2 == 0) {
                const std::int64_t y = num / 2;
                if (x * x + x + x * y + y + y * y == target)
                    return std::pair{x, y};
            }
        }
    }
    return std::nullopt;
}

bool quadform_xxyy(std::uint64_t n, QuadformMethod method)
{
    if (method == QuadformMethod::brute_force)
        return quadform_witness(n).has_value();
    return is_loeschian(3 * n + 1);
}

} // namespace knutson
