#include "knutson/symchar.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace knutson {

int CycleType::multiplicity(int length) const
{
    const auto parts = cycles_.parts();
    return static_cast<int>(std::count(parts.begin(), parts.end(), length));
}

BigInt CycleType::centralizer_order() const
{
    std::map<int, unsigned> mult;
    for (int c : cycles_.parts())
        ++mult[c];
    BigInt z = 1;
    for (const auto& [len, m] : mult) {
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(len), m);
        z *= pw * factorial(m);
    }
    return z;
}

BigInt CycleType::class_size() const { return factorial(static_cast<unsigned>(n())) / centralizer_order(); }

int CycleType::sign() const { return (n() - cycles_.length()) % 2 == 0 ? 1 : -1; }

Partition CycleType::non_fixed_part() const
{
    std::vector<int> parts;
    for (int c : cycles_.parts())
        if (c > 1)
            parts.push_back(c);
    return Partition(std::move(parts));
}

bool CycleType::splits_in_alternating() const
{
    const auto parts = cycles_.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] % 2 == 0)
            return false;
        if (i > 0 && parts[i] == parts[i - 1])
            return false;
    }
    return true;
}

std::vector<CycleType> cycle_types(int n)
{
    if (n < 1)
        throw PreconditionError("cycle_types requires n >= 1");
    auto parts = enumerate_partitions(n);
    std::reverse(parts.begin(), parts.end());
    std::vector<CycleType> out;
    out.reserve(parts.size());
    for (auto& p : parts)
        out.emplace_back(std::move(p));
    return out;
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama

namespace {

std::string memo_key(const std::vector<int>& shape, const std::vector<int>& cycles, std::size_t next)
{
    std::string key;
    key.reserve(shape.size() + 1 + cycles.size() - next);
    for (int p : shape)
        key.push_back(static_cast<char>(p));
    key.push_back('\0');
    for (std::size_t i = next; i < cycles.size(); ++i)
        key.push_back(static_cast<char>(cycles[i]));
    return key;
}

} // namespace

BigInt MurnaghanNakayama::recurse(const std::vector<int>& shape, const std::vector<int>& cycles, std::size_t next)
{
    if (next == cycles.size())
        return shape.empty() ? 1 : 0;
    const std::string key = memo_key(shape, cycles, next);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    // First-column hook lengths (beta numbers), strictly decreasing. Removing a
    // rim hook of length k moves one bead from b to b - k; the leg length is the
    // number of beads strictly between.
    const int k = cycles[next];
    const int r = static_cast<int>(shape.size());
    std::vector<int> beta(shape.size());
    for (int i = 0; i < r; ++i)
        beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (r - 1 - i);

    BigInt total = 0;
    std::vector<int> moved(beta.size());
    std::vector<int> child;
    for (int i = 0; i < r; ++i) {
        const int b = beta[static_cast<std::size_t>(i)];
        const int nb = b - k;
        if (nb < 0)
            continue;
        int between = 0;
        bool occupied = false;
        for (int j = i + 1; j < r; ++j) {
            const int bj = beta[static_cast<std::size_t>(j)];
            if (bj == nb) {
                occupied = true;
                break;
            }
            if (bj > nb)
                ++between;
            else
                break;
        }
        if (occupied)
            continue;
        moved = beta;
        moved[static_cast<std::size_t>(i)] = nb;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        child.clear();
        for (int j = 0; j < r; ++j) {
            const int part = moved[static_cast<std::size_t>(j)] - (r - 1 - j);
            if (part == 0)
                break;
            child.push_back(part);
        }
        const BigInt v = recurse(child, cycles, next + 1);
        if (between % 2 == 0)
            total += v;
        else
            total -= v;
    }
    memo_.emplace(key, total);
    return total;
}

BigInt MurnaghanNakayama::value_ordered(const Partition& lambda, const std::vector<int>& cycles)
{
    const int sum = std::accumulate(cycles.begin(), cycles.end(), 0);
    if (sum != lambda.size())
        throw PreconditionError("shape and cycle type have different sizes");
    if (lambda.size() > 255)
        throw ResourceCapError("Murnaghan-Nakayama supports n <= 255");
    const std::vector<int> shape(lambda.parts().begin(), lambda.parts().end());
    return recurse(shape, cycles, 0);
}

BigInt MurnaghanNakayama::value(const Partition& lambda, const CycleType& mu)
{
    const auto parts = mu.partition().parts();
    return value_ordered(lambda, std::vector<int>(parts.begin(), parts.end()));
}

BigInt mn_value(const Partition& lambda, const CycleType& mu)
{
    MurnaghanNakayama mn;
    return mn.value(lambda, mu);
}

// ---------------------------------------------------------------------------
// Tables

CharacterTable sn_table(int n, const TableCaps& caps)
{
    if (n < 1)
        throw PreconditionError("sn_table requires n >= 1");
    if (n > caps.max_symmetric)
        throw ResourceCapError("S_" + std::to_string(n) + " exceeds the table cap " +
                               std::to_string(caps.max_symmetric));
    CharacterTable t;
    t.label = "S" + std::to_string(n);
    t.order = factorial(static_cast<unsigned>(n));
    const auto classes = cycle_types(n);
    for (const auto& mu : classes)
        t.classes.push_back({mu.partition().to_string(), mu.class_size()});

    MurnaghanNakayama mn;
    BigInt degree_squares = 0;
    for (PartitionGenerator g(n); !g.done(); g.advance()) {
        const Partition lambda(g.current());
        Irreducible chi;
        chi.label = lambda.to_string();
        chi.values.reserve(classes.size());
        for (const auto& mu : classes)
            chi.values.emplace_back(mn.value(lambda, mu));
        chi.degree = chi.values[0].as_rational().get_num();
        degree_squares += chi.degree * chi.degree;
        t.irreducibles.push_back(std::move(chi));
    }
    if (degree_squares != t.order)
        throw InternalError("S_n degrees do not square-sum to n!");
    return t;
}

CharacterTable an_table(int n, const TableCaps& caps)
{
    if (n < 3)
        throw PreconditionError("an_table requires n >= 3");
    if (n > caps.max_symmetric)
        throw ResourceCapError("A_" + std::to_string(n) + " exceeds the table cap " +
                               std::to_string(caps.max_symmetric));
    CharacterTable t;
    t.label = "A" + std::to_string(n);
    t.order = factorial(static_cast<unsigned>(n)) / 2;

    struct ClassRef {
        CycleType mu;
        int half; // 0 unsplit, +1 / -1 for the two halves
    };
    std::vector<ClassRef> refs;
    for (const auto& mu : cycle_types(n)) {
        if (mu.sign() != 1)
            continue;
        const std::string label = mu.partition().to_string();
        if (mu.splits_in_alternating()) {
            const BigInt half = mu.class_size() / 2;
            t.classes.push_back({label + "+", half});
            t.classes.push_back({label + "-", half});
            refs.push_back({mu, +1});
            refs.push_back({mu, -1});
        } else {
            t.classes.push_back({label, mu.class_size()});
            refs.push_back({mu, 0});
        }
    }

    MurnaghanNakayama mn;
    const Rational half(1, 2);
    for (PartitionGenerator g(n); !g.done(); g.advance()) {
        const Partition lambda(g.current());
        const Partition lambda_c = conjugate(lambda);
        if (lambda_c > lambda)
            continue; // the pair is represented by lambda_c, seen earlier
        std::vector<BigInt> restricted;
        restricted.reserve(refs.size());
        for (const auto& ref : refs)
            restricted.push_back(mn.value(lambda, ref.mu));

        if (lambda_c != lambda) {
            Irreducible chi;
            chi.label = lambda.to_string();
            for (const auto& v : restricted)
                chi.values.emplace_back(v);
            chi.degree = restricted[0];
            t.irreducibles.push_back(std::move(chi));
            continue;
        }

        const auto hooks = principal_hooks(lambda);
        const Partition hook_type(hooks);
        const int r = static_cast<int>(hooks.size());
        const int eps = ((n - r) / 2) % 2 == 0 ? 1 : -1;
        std::int64_t prod = 1;
        for (int h : hooks)
            prod *= h;
        const MultiQuadratic root = MultiQuadratic::sqrt(eps * prod, half);
        const MultiQuadratic plus = MultiQuadratic(Rational(eps, 1) * half) + root;
        const MultiQuadratic minus = MultiQuadratic(Rational(eps, 1) * half) - root;

        Irreducible chi_plus;
        Irreducible chi_minus;
        chi_plus.label = lambda.to_string() + "+";
        chi_minus.label = lambda.to_string() + "-";
        for (std::size_t c = 0; c < refs.size(); ++c) {
            const auto& ref = refs[c];
            if (ref.half != 0 && ref.mu.partition() == hook_type) {
                if (restricted[c] != eps)
                    throw InternalError("self-conjugate character disagrees with its sign on the hook class");
                chi_plus.values.emplace_back(ref.half > 0 ? plus : minus);
                chi_minus.values.emplace_back(ref.half > 0 ? minus : plus);
            } else {
                const AlgebraicNumber v(Rational(restricted[c]) * half);
                chi_plus.values.push_back(v);
                chi_minus.values.push_back(v);
            }
        }
        chi_plus.degree = restricted[0] / 2;
        chi_minus.degree = restricted[0] / 2;
        t.irreducibles.push_back(std::move(chi_plus));
        t.irreducibles.push_back(std::move(chi_minus));
    }
    if (t.irreducibles.size() != t.classes.size())
        throw InternalError("A_n table is not square");
    return t;
}

bool has_three_two_even_shape(const CycleType& mu)
{
    int twos = 0;
    for (int c : mu.partition().parts()) {
        if (c > 3)
            return false;
        if (c == 2)
            ++twos;
    }
    return twos % 2 == 0;
}

std::vector<CycleType> nonvanishing_classes_sn(int n, int cap)
{
    if (n < 1)
        throw PreconditionError("nonvanishing_classes_sn requires n >= 1");
    if (n > cap)
        throw ResourceCapError("S_" + std::to_string(n) + " exceeds the class-scan cap " + std::to_string(cap));

    std::vector<Partition> shapes = enumerate_partitions(n);
    std::vector<BigInt> degrees;
    degrees.reserve(shapes.size());
    for (const auto& s : shapes)
        degrees.push_back(degree_hook(s));
    std::vector<std::size_t> order(shapes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degrees[a] > degrees[b]; });

    MurnaghanNakayama mn;
    std::vector<CycleType> out;
    for (const auto& mu : cycle_types(n)) {
        bool vanishes = false;
        for (std::size_t idx : order) {
            if (mn.value(shapes[idx], mu) == 0) {
                vanishes = true;
                break;
            }
        }
        if (!vanishes)
            out.push_back(mu);
    }
    return out;
}

} // namespace knutson
