#pragma once

#include "knutson/charring.hpp"
#include "knutson/integer_matrix.hpp"
#include "knutson/sl2tables.hpp"

#include <optional>
#include <vector>

namespace knutson {

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... ; checked on construction.
struct SNFResult {
    IntegerMatrix U;
    IntegerMatrix D;
    IntegerMatrix V;
    std::size_t rank = 0;

    std::vector<BigInt> diagonal() const;
};

SNFResult smith_normal_form(const IntegerMatrix& M);

/// Integer x with M x = b, or nullopt when b is outside the column lattice.
std::optional<std::vector<BigInt>> solve_integer(const IntegerMatrix& M, const std::vector<BigInt>& b);
std::optional<std::vector<BigInt>> solve_integer(const IntegerMatrix& M, const SNFResult& snf,
                                                 const std::vector<BigInt>& b);

/// Least n >= 1 with n v in the column lattice of M.
std::optional<BigInt> min_multiplier(const IntegerMatrix& M, const std::vector<BigInt>& v);
std::optional<BigInt> min_multiplier(const IntegerMatrix& M, const SNFResult& snf, const std::vector<BigInt>& v);

/// lambda with chi (x) lambda = rho, re-verified on every class.
std::optional<VirtualCharacter> is_rho_invertible(const CharacterRing& ring, std::size_t chi,
                                                  const VirtualCharacter& rho);

/// Least n with chi (x) lambda = n * regular for some virtual lambda; divides chi(1).
BigInt knutson_index_char(const CharacterRing& ring, std::size_t chi);
/// lcm of the per-character indices.
BigInt knutson_index_group(const CharacterRing& ring);
std::vector<BigInt> knutson_indices(const CharacterRing& ring);

/// L(G) / |G|.
Rational generalized_lower_bound(const CharacterTable& t);

/// When every non-trivial column has a zero, the generalised index equals
/// the Knutson index; returns that common value.
std::optional<BigInt> zero_column_criterion(const CharacterRing& ring);

struct RhoSearchResult {
    VirtualCharacter rho;
    Rational k_prime;
    std::vector<VirtualCharacter> inverses; ///< one per irreducible
    std::uint64_t candidates = 0;           ///< multiplicity vectors passing the zero constraint
};

/// Characters rho of degree L, 2L, ... up to degree_bound (<= |G|), in
/// lexicographic order within each degree, skipping those not vanishing where
/// some irreducible vanishes; the first one every irreducible inverts.
std::optional<RhoSearchResult> min_rho_search(const CharacterRing& ring, const BigInt& degree_bound);

struct ObstructionReport {
    int q = 0;
    bool premise = false;          ///< every column other than +-id has a zero
    bool candidates_exact = false; ///< the only characters below |G| supported on +-id are rho+ and rho-
    std::string family;            ///< designated characters: theta_j or chi_i
    std::vector<std::string> fail_plus;  ///< designated characters not rho+-invertible
    std::vector<std::string> fail_minus; ///< designated characters not rho--invertible
    bool theorem_rho_inverts_all = false;

    bool confirmed() const
    {
        return premise && candidates_exact && !fail_plus.empty() && !fail_minus.empty() && theorem_rho_inverts_all;
    }
};

/// Certifies K'(SL_2(q)) = 1 for odd q >= 5: the theorem character inverts
/// every irreducible, and neither candidate of degree |G|/2 does.
ObstructionReport verify_rho_pm_obstruction(const CharacterRing& ring, const Sl2Param& param);

} // namespace knutson
