#include "knutson/charring.hpp"

#include "knutson/integer_matrix.hpp"

#include <sstream>

namespace knutson {

namespace {

void require_same_table(const VirtualCharacter& x, const VirtualCharacter& y)
{
    if (x.table != y.table)
        throw PreconditionError("virtual characters belong to different tables");
}

BigInt integral_or_throw(const AlgebraicNumber& v, const char* what)
{
    if (!v.is_rational() || v.as_rational().get_den() != 1)
        throw InternalError(std::string(what) + " is not an integer: " + v.to_string());
    return v.as_rational().get_num();
}

} // namespace

BigInt VirtualCharacter::degree() const
{
    BigInt d = 0;
    for (std::size_t i = 0; i < multiplicities.size(); ++i)
        d += multiplicities[i] * table->irreducibles[i].degree;
    return d;
}

std::vector<AlgebraicNumber> VirtualCharacter::values() const
{
    std::vector<AlgebraicNumber> out(table->num_classes());
    for (std::size_t c = 0; c < out.size(); ++c)
        out[c] = evaluate(*this, c);
    return out;
}

std::string VirtualCharacter::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < multiplicities.size(); ++i) {
        const BigInt& m = multiplicities[i];
        if (m == 0)
            continue;
        const bool neg = m < 0;
        if (!first)
            os << (neg ? " - " : " + ");
        else if (neg)
            os << "-";
        first = false;
        const BigInt a = neg ? BigInt(-m) : m;
        if (a != 1)
            os << a.get_str() << "*";
        os << table->irreducibles[i].label;
    }
    return first ? "0" : os.str();
}

VirtualCharacter irreducible_character(std::shared_ptr<const CharacterTable> table, std::size_t index)
{
    if (index >= table->num_irreducibles())
        throw PreconditionError("irreducible index out of range");
    VirtualCharacter v{std::move(table), {}};
    v.multiplicities.assign(v.table->num_irreducibles(), 0);
    v.multiplicities[index] = 1;
    return v;
}

VirtualCharacter regular_character(std::shared_ptr<const CharacterTable> table)
{
    VirtualCharacter v{std::move(table), {}};
    v.multiplicities = v.table->degrees();
    if (evaluate(v, 0) != AlgebraicNumber(v.table->order))
        throw InternalError("regular character does not evaluate to |G| at the identity");
    for (std::size_t c = 1; c < v.table->num_classes(); ++c)
        if (!evaluate(v, c).is_zero())
            throw InternalError("regular character does not vanish on class " + v.table->classes[c].label);
    return v;
}

AlgebraicNumber evaluate(const VirtualCharacter& x, std::size_t class_index)
{
    if (class_index >= x.table->num_classes())
        throw PreconditionError("class index out of range");
    AlgebraicNumber s = 0;
    for (std::size_t i = 0; i < x.multiplicities.size(); ++i)
        if (x.multiplicities[i] != 0)
            s += AlgebraicNumber(x.multiplicities[i]) * x.table->value(i, class_index);
    return s;
}

AlgebraicNumber class_inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& g)
{
    if (f.size() != t.num_classes() || g.size() != t.num_classes())
        throw PreconditionError("class function length mismatch");
    AlgebraicNumber s = 0;
    for (std::size_t c = 0; c < t.num_classes(); ++c)
        if (!f[c].is_zero() && !g[c].is_zero())
            s += AlgebraicNumber(t.classes[c].size) * f[c] * g[c].conj();
    return s * AlgebraicNumber(Rational(1, 1) / t.order);
}

BigInt inner_product(const VirtualCharacter& x, const VirtualCharacter& y)
{
    require_same_table(x, y);
    return integral_or_throw(class_inner_product(*x.table, x.values(), y.values()), "inner product");
}

std::vector<BigInt> decompose(const CharacterTable& t, const ClassFunction& f)
{
    std::vector<BigInt> out;
    out.reserve(t.num_irreducibles());
    for (const auto& chi : t.irreducibles)
        out.push_back(integral_or_throw(class_inner_product(t, f, chi.values), "multiplicity"));
    return out;
}

IntegerMatrix FusionMatrix::to_matrix() const { return IntegerMatrix::from_rows(entries); }

CharacterRing::CharacterRing(std::shared_ptr<const CharacterTable> table) : table_(std::move(table))
{
    const auto& t = *table_;
    weighted_conj_.resize(t.num_irreducibles());
    for (std::size_t b = 0; b < t.num_irreducibles(); ++b) {
        weighted_conj_[b].reserve(t.num_classes());
        for (std::size_t c = 0; c < t.num_classes(); ++c)
            weighted_conj_[b].push_back(AlgebraicNumber(t.classes[c].size) * t.value(b, c).conj());
    }
}

CharacterRing::CharacterRing(CharacterTable table)
    : CharacterRing(std::make_shared<const CharacterTable>(std::move(table)))
{
}

std::vector<BigInt> CharacterRing::tensor_decompose(std::size_t a, std::size_t c) const
{
    const auto& t = *table_;
    if (a >= t.num_irreducibles() || c >= t.num_irreducibles())
        throw PreconditionError("irreducible index out of range");
    const auto key = std::minmax(a, c);
    {
        std::lock_guard lock(mu_);
        if (auto it = products_.find(key); it != products_.end())
            return it->second;
    }
    std::vector<AlgebraicNumber> product(t.num_classes());
    for (std::size_t k = 0; k < t.num_classes(); ++k)
        product[k] = t.value(a, k) * t.value(c, k);

    const Rational inv_order = Rational(1, 1) / t.order;
    std::vector<BigInt> mult(t.num_irreducibles());
    BigInt degree = 0;
    for (std::size_t b = 0; b < t.num_irreducibles(); ++b) {
        AlgebraicNumber s = 0;
        for (std::size_t k = 0; k < t.num_classes(); ++k)
            if (!product[k].is_zero() && !weighted_conj_[b][k].is_zero())
                s += product[k] * weighted_conj_[b][k];
        s *= AlgebraicNumber(inv_order);
        mult[b] = integral_or_throw(s, "tensor multiplicity");
        if (mult[b] < 0)
            throw InternalError("negative tensor multiplicity for " + t.irreducibles[a].label + " x " +
                                t.irreducibles[c].label);
        degree += mult[b] * t.irreducibles[b].degree;
    }
    if (degree != t.irreducibles[a].degree * t.irreducibles[c].degree)
        throw InternalError("tensor decomposition violates the degree identity");

    std::lock_guard lock(mu_);
    products_.emplace(key, mult);
    return mult;
}

const FusionMatrix& CharacterRing::fusion_matrix(std::size_t a) const
{
    {
        std::lock_guard lock(mu_);
        if (auto it = fusion_.find(a); it != fusion_.end())
            return *it->second;
    }
    const std::size_t k = table_->num_irreducibles();
    auto fm = std::make_unique<FusionMatrix>();
    fm->character = a;
    fm->entries.assign(k, std::vector<BigInt>(k, 0));
    for (std::size_t c = 0; c < k; ++c) {
        const auto col = tensor_decompose(a, c);
        for (std::size_t b = 0; b < k; ++b)
            fm->entries[b][c] = col[b];
    }
    std::lock_guard lock(mu_);
    auto [it, inserted] = fusion_.emplace(a, std::move(fm));
    return *it->second;
}

VirtualCharacter CharacterRing::tensor(std::size_t a, const VirtualCharacter& x) const
{
    if (x.table != table_)
        throw PreconditionError("virtual character belongs to a different table");
    const auto& fm = fusion_matrix(a);
    VirtualCharacter out{table_, std::vector<BigInt>(x.multiplicities.size(), 0)};
    for (std::size_t b = 0; b < out.multiplicities.size(); ++b)
        for (std::size_t c = 0; c < x.multiplicities.size(); ++c)
            if (x.multiplicities[c] != 0)
                out.multiplicities[b] += fm.entries[b][c] * x.multiplicities[c];
    return out;
}

VirtualCharacter CharacterRing::tensor(const VirtualCharacter& x, const VirtualCharacter& y) const
{
    if (x.table != table_)
        throw PreconditionError("virtual character belongs to a different table");
    VirtualCharacter out{table_, std::vector<BigInt>(x.multiplicities.size(), 0)};
    for (std::size_t a = 0; a < x.multiplicities.size(); ++a) {
        if (x.multiplicities[a] == 0)
            continue;
        const auto part = tensor(a, y);
        for (std::size_t b = 0; b < out.multiplicities.size(); ++b)
            out.multiplicities[b] += x.multiplicities[a] * part.multiplicities[b];
    }
    return out;
}

} // namespace knutson
