#pragma once

#include "knutson/charring.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace knutson {

/// q = p^f with the residue data the generic tables depend on.
struct Sl2Param {
    int p = 0;
    int f = 0;
    int q = 0;

    bool even() const { return p == 2; }
    /// (-1)^((q-1)/2); odd q only.
    int epsilon() const;
    /// lcm(q-1, q+1): the cyclotomic order all table values live in.
    unsigned cyclotomic_order() const;
    std::int64_t tau_square() const { return even() ? 0 : static_cast<std::int64_t>(epsilon()) * q; }
};

/// Throws PreconditionError unless q is a prime power >= 2.
Sl2Param make_sl2_param(int q);

struct Sl2Caps {
    int max_odd = 13;
    int max_even = 32;
};

enum class Sl2Kind { one, psi, chi, theta, xi1, xi2, eta1, eta2 };

struct Sl2Irr {
    Sl2Kind kind;
    int index = 0; ///< i for chi_i, j for theta_j, 0 otherwise
    BigInt degree;
    std::string label;
};

/// Irreducibles of SL_2(q) in table order: 1, psi, chi_i, theta_j, xi1, xi2, eta1, eta2.
std::vector<Sl2Irr> sl2_irreducibles(const Sl2Param& param);

/// Generic character table of SL_2(q); validated by exact orthogonality.
/// Odd q classes: 1, z, c, d, zc, zd, a^l (1 <= l <= (q-3)/2), b^m (1 <= m <= (q-1)/2).
/// Even q classes: 1, c, a^l (1 <= l <= (q-2)/2), b^m (1 <= m <= q/2).
CharacterTable sl2_table(const Sl2Param& param, const Sl2Caps& caps = {});

/// PSL_2(q): the irreducibles of SL_2(q) trivial on -1 on the classes fused
/// by g ~ -g. Identical to sl2_table for even q.
CharacterTable psl2_table(const Sl2Param& param, const Sl2Caps& caps = {});

/// (q+1)q(q-1)/2 for odd q, (q+1)q(q-1) for even q; q >= 4.
BigInt lcm_degrees_sl2_expected(const Sl2Param& param);

/// Sum of 2 chi(1) chi over the irreducibles with chi(-1) = chi(1); odd q >= 5.
/// Throws InternalError unless it evaluates to |G| at +-1 and 0 elsewhere.
VirtualCharacter rho_theorem_character(const CharacterRing& ring, const Sl2Param& param);

/// (a q + b) / d
struct QCoefficient {
    int a = 0;
    int b = 0;
    int d = 1;

    std::optional<BigInt> at(int q) const;
    std::string to_string() const;
};

enum class InverseTarget { one, psi, xi_pair, eta_pair, theta, chi, theta_odd_sum, theta_even_sum, chi_odd_sum, chi_even_sum };

struct InverseTerm {
    InverseTarget target;
    int index = 0; ///< for theta / chi
    QCoefficient coeff;
    bool suspect = false; ///< the coefficient flagged as a probable misprint
};

/// Row of the published rho-inverse table: the family it inverts and the
/// virtual character in each of the two printed columns.
struct InverseRow {
    std::string name;
    Sl2Kind family;
    int parity = -1; ///< 1 odd, 0 even, -1 any index
    std::array<std::vector<InverseTerm>, 2> columns;
};

const std::vector<InverseRow>& published_rho_inverse_rows();

/// Instantiates a row's column for q; nullopt when a coefficient is not an integer.
std::optional<VirtualCharacter> instantiate_inverse(const CharacterRing& ring, const Sl2Param& param,
                                                    const std::vector<InverseTerm>& terms);

/// Irreducible indices a row applies to.
std::vector<std::size_t> row_characters(const Sl2Param& param, const InverseRow& row);

struct ColumnCheck {
    bool vacuous = false;     ///< the family is empty for this q
    bool instantiable = true; ///< every coefficient is an integer
    bool verified = false;
    std::string failing_character;
    std::vector<BigInt> discrepancy; ///< chi (x) lambda - rho for the failing character
};

struct Correction {
    std::string replaced_term;
    std::string replacement; ///< e.g. "3*theta_1"
    VirtualCharacter inverse;
};

struct RowReport {
    std::string name;
    std::array<ColumnCheck, 2> columns;
    std::optional<Correction> correction;
};

struct RhoInverseReport {
    int q = 0;
    /// 0 or 1: the printed column whose rows verify, apart from rows carrying a
    /// suspect coefficient. Unset if no column or both columns qualify.
    std::optional<int> selected_column;
    std::vector<RowReport> rows;

    bool all_verified_or_corrected() const;
};

/// Tensors each row against its characters under both printed columns and
/// compares with the theorem character. With search_corrections, a row that
/// fails under the selected column has its suspect term replaced by the
/// integer multiple of a single irreducible (or xi/eta pair) that makes it verify, if one exists.
RhoInverseReport verify_rho_inverses(const CharacterRing& ring, const Sl2Param& param, bool search_corrections = false);

} // namespace knutson
