#pragma once

#include "knutson/character_table.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace knutson {

class IntegerMatrix;

/// Integer combination of the irreducibles of one table.
struct VirtualCharacter {
    std::shared_ptr<const CharacterTable> table;
    std::vector<BigInt> multiplicities;

    BigInt degree() const;
    /// Values on every class.
    std::vector<AlgebraicNumber> values() const;
    std::string to_string() const;

    friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b)
    {
        return a.table == b.table && a.multiplicities == b.multiplicities;
    }
};

using ClassFunction = std::vector<AlgebraicNumber>;

VirtualCharacter irreducible_character(std::shared_ptr<const CharacterTable> table, std::size_t index);
VirtualCharacter regular_character(std::shared_ptr<const CharacterTable> table);
AlgebraicNumber evaluate(const VirtualCharacter& x, std::size_t class_index);

/// (1/|G|) sum_c |c| f(c) conj(g(c)).
AlgebraicNumber class_inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& g);

/// Exact integer inner product of two virtual characters, evaluated through
/// class sums. Throws InternalError when the result is not an integer.
BigInt inner_product(const VirtualCharacter& x, const VirtualCharacter& y);

/// Decomposes a class function into irreducibles; throws InternalError if a
/// coefficient is not an integer or the reconstruction does not match.
std::vector<BigInt> decompose(const CharacterTable& t, const ClassFunction& f);

/// Column c is the decomposition of chi_a * chi_c; entry [b][c] is the
/// multiplicity of chi_b.
struct FusionMatrix {
    std::size_t character;
    std::vector<std::vector<BigInt>> entries;

    IntegerMatrix to_matrix() const;
};

/// Tensor products over a fixed table, with decompositions cached per
/// unordered pair and fusion matrices cached per character.
class CharacterRing {
public:
    explicit CharacterRing(std::shared_ptr<const CharacterTable> table);
    explicit CharacterRing(CharacterTable table);

    const CharacterTable& table() const { return *table_; }
    const std::shared_ptr<const CharacterTable>& table_ptr() const { return table_; }

    /// Multiplicities N_b with chi_a chi_c = sum_b N_b chi_b.
    std::vector<BigInt> tensor_decompose(std::size_t a, std::size_t c) const;
    const FusionMatrix& fusion_matrix(std::size_t a) const;

    /// chi_a tensor x, as multiplicities.
    VirtualCharacter tensor(std::size_t a, const VirtualCharacter& x) const;
    VirtualCharacter tensor(const VirtualCharacter& x, const VirtualCharacter& y) const;

private:
    std::shared_ptr<const CharacterTable> table_;
    std::vector<std::vector<AlgebraicNumber>> weighted_conj_; // |c| conj(chi_b(c))
    mutable std::mutex mu_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::vector<BigInt>> products_;
    mutable std::map<std::size_t, std::unique_ptr<FusionMatrix>> fusion_;
};

} // namespace knutson
