#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace knutson {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorisation, primes strictly increasing.
using Factorization = std::vector<PrimePower>;

/// Trial division. n = 1 gives the empty factorisation; n = 0 is rejected.
Factorization factorize(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// m with n = m(m+1)/2, if any.
std::optional<std::uint64_t> triangular_root(std::uint64_t n);
inline bool is_triangular(std::uint64_t n) { return triangular_root(n).has_value(); }

/// n = X^2 + XY + Y^2 for some integers X, Y. Decided from the factorisation:
/// every prime congruent to 2 mod 3 must occur to an even power.
bool is_loeschian(std::uint64_t n);

/// Brute-force representative 0 <= Y <= X with X^2 + XY + Y^2 = n.
std::optional<std::pair<std::int64_t, std::int64_t>> loeschian_witness(std::uint64_t n);

/// Legendre symbol (d/3).
int legendre3(std::uint64_t d);

/// 0 when 3 | m, otherwise the sum of (d/3) over the divisors d of m.
std::int64_t sigma3(std::uint64_t m);

enum class QuadformMethod {
    loeschian,  ///< reduce to is_loeschian(3n + 1)
    brute_force ///< scan X, solve the quadratic in Y
};

/// n = X^2 + X + XY + Y + Y^2 for some integers X, Y.
bool quadform_xxyy(std::uint64_t n, QuadformMethod method = QuadformMethod::loeschian);

/// Explicit (X, Y) for quadform_xxyy by scanning X.
std::optional<std::pair<std::int64_t, std::int64_t>> quadform_witness(std::uint64_t n);

} // namespace knutson
