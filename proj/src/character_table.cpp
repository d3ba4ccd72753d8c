#include "knutson/character_table.hpp"

namespace knutson {

std::vector<BigInt> CharacterTable::degrees() const
{
    std::vector<BigInt> out;
    out.reserve(irreducibles.size());
    for (const auto& chi : irreducibles)
        out.push_back(chi.degree);
    return out;
}

std::optional<std::size_t> CharacterTable::find_irreducible(const std::string& name) const
{
    for (std::size_t i = 0; i < irreducibles.size(); ++i)
        if (irreducibles[i].label == name)
            return i;
    return std::nullopt;
}

std::optional<std::size_t> CharacterTable::find_class(const std::string& name) const
{
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].label == name)
            return i;
    return std::nullopt;
}

OrthogonalityReport check_orthogonality(const CharacterTable& t)
{
    auto fail = [](std::string msg) { return OrthogonalityReport{false, std::move(msg)}; };
    const std::size_t k = t.num_classes();
    if (k == 0 || t.num_irreducibles() != k)
        return fail("table must be square and non-empty");
    if (t.classes[0].size != 1)
        return fail("class 0 must be the identity");

    BigInt class_total = 0;
    for (const auto& c : t.classes)
        class_total += c.size;
    if (class_total != t.order)
        return fail("class sizes sum to " + to_string(class_total) + ", expected " + to_string(t.order));

    BigInt degree_squares = 0;
    for (const auto& chi : t.irreducibles) {
        if (chi.values.size() != k)
            return fail("row " + chi.label + " has the wrong length");
        if (!(chi.values[0] == AlgebraicNumber(chi.degree)))
            return fail("identity value of " + chi.label + " differs from its degree");
        degree_squares += chi.degree * chi.degree;
    }
    if (degree_squares != t.order)
        return fail("sum of squared degrees is " + to_string(degree_squares));

    std::vector<std::vector<AlgebraicNumber>> conj_rows(k);
    for (std::size_t i = 0; i < k; ++i)
        for (const auto& v : t.irreducibles[i].values)
            conj_rows[i].push_back(v.conj());

    const AlgebraicNumber order(t.order);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            AlgebraicNumber s = 0;
            for (std::size_t c = 0; c < k; ++c)
                s += AlgebraicNumber(t.classes[c].size) * t.value(i, c) * conj_rows[j][c];
            const AlgebraicNumber expected = i == j ? order : AlgebraicNumber(0);
            if (!(s == expected))
                return fail("row orthogonality fails for (" + t.irreducibles[i].label + ", " +
                            t.irreducibles[j].label + "): " + s.to_string());
        }
    }
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a; b < k; ++b) {
            AlgebraicNumber s = 0;
            for (std::size_t i = 0; i < k; ++i)
                s += t.value(i, a) * conj_rows[i][b];
            AlgebraicNumber expected = 0;
            if (a == b)
                expected = AlgebraicNumber(make_rational(t.order, t.classes[a].size));
            if (!(s == expected))
                return fail("column orthogonality fails for (" + t.classes[a].label + ", " + t.classes[b].label +
                            "): " + s.to_string());
        }
    }
    return {};
}

void require_orthogonality(const CharacterTable& t)
{
    const auto report = check_orthogonality(t);
    if (!report.ok)
        throw TranscriptionError(t.label + ": " + report.failure);
}

bool zero_in_every_nontrivial_column(const CharacterTable& t)
{
    for (std::size_t c = 1; c < t.num_classes(); ++c) {
        bool has_zero = false;
        for (std::size_t i = 0; i < t.num_irreducibles() && !has_zero; ++i)
            has_zero = t.value(i, c).is_zero();
        if (!has_zero)
            return false;
    }
    return true;
}

BigInt lcm_of_degrees(const CharacterTable& t)
{
    BigInt l = 1;
    for (const auto& chi : t.irreducibles)
        l = lcm(l, chi.degree);
    return l;
}

} // namespace knutson
