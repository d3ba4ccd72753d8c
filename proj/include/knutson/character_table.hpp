#pragma once

#include "knutson/algnum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace knutson {

struct ConjugacyClass {
    std::string label;
    BigInt size;
};

struct Irreducible {
    std::string label;
    BigInt degree;
    /// Aligned with CharacterTable::classes.
    std::vector<AlgebraicNumber> values;
};

/// Character table of a finite group. Class 0 is the identity; irreducible 0
/// is the trivial character.
struct CharacterTable {
    std::string label;
    BigInt order;
    std::vector<ConjugacyClass> classes;
    std::vector<Irreducible> irreducibles;

    std::size_t num_classes() const { return classes.size(); }
    std::size_t num_irreducibles() const { return irreducibles.size(); }
    const AlgebraicNumber& value(std::size_t chi, std::size_t cls) const { return irreducibles[chi].values[cls]; }
    std::vector<BigInt> degrees() const;

    std::optional<std::size_t> find_irreducible(const std::string& label) const;
    std::optional<std::size_t> find_class(const std::string& label) const;
};

struct OrthogonalityReport {
    bool ok = true;
    std::string failure; ///< first offending pair, empty when ok
};

/// Checks class sizes, degrees, identity column, and exact row and column
/// orthogonality.
OrthogonalityReport check_orthogonality(const CharacterTable& t);

/// Throws TranscriptionError when check_orthogonality fails.
void require_orthogonality(const CharacterTable& t);

/// Every non-identity class has some irreducible vanishing on it. Vacuously
/// true for the trivial group.
bool zero_in_every_nontrivial_column(const CharacterTable& t);

/// Lowest common multiple of the irreducible degrees.
BigInt lcm_of_degrees(const CharacterTable& t);

} // namespace knutson
