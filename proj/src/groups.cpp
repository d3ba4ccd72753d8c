#include "knutson/groups.hpp"

namespace knutson {

std::string GroupSpec::label() const
{
    const std::string k = std::to_string(n);
    switch (family) {
    case GroupFamily::symmetric: return "S" + k;
    case GroupFamily::alternating: return "A" + k;
    case GroupFamily::sl2: return "SL2(" + k + ")";
    case GroupFamily::psl2: return "PSL2(" + k + ")";
    }
    return k;
}

std::string GroupSpec::key() const
{
    const std::string k = std::to_string(n);
    switch (family) {
    case GroupFamily::symmetric: return "sn-" + k;
    case GroupFamily::alternating: return "an-" + k;
    case GroupFamily::sl2: return "sl2-" + k;
    case GroupFamily::psl2: return "psl2-" + k;
    }
    return k;
}

GroupSpec parse_group(const std::string& family, int n)
{
    GroupSpec spec{GroupFamily::symmetric, n};
    if (family == "sn")
        spec.family = GroupFamily::symmetric;
    else if (family == "an")
        spec.family = GroupFamily::alternating;
    else if (family == "sl2")
        spec.family = GroupFamily::sl2;
    else if (family == "psl2")
        spec.family = GroupFamily::psl2;
    else
        throw PreconditionError("unknown group family '" + family + "' (expected sn, an, sl2 or psl2)");

    switch (spec.family) {
    case GroupFamily::symmetric:
        if (n < 1)
            throw PreconditionError("S_n needs n >= 1");
        break;
    case GroupFamily::alternating:
        if (n < 3)
            throw PreconditionError("A_n needs n >= 3");
        break;
    default:
        make_sl2_param(n);
        break;
    }
    return spec;
}

CharacterTable build_table(const GroupSpec& spec, const GroupCaps& caps)
{
    switch (spec.family) {
    case GroupFamily::symmetric: return sn_table(spec.n, caps.symmetric);
    case GroupFamily::alternating: return an_table(spec.n, caps.symmetric);
    case GroupFamily::sl2: return sl2_table(make_sl2_param(spec.n), caps.sl2);
    case GroupFamily::psl2: return psl2_table(make_sl2_param(spec.n), caps.sl2);
    }
    throw PreconditionError("unknown group family");
}

KnutsonSummary summarize_knutson(const GroupSpec& spec, const CharacterRing& ring)
{
    const CharacterTable& t = ring.table();
    KnutsonSummary s;
    s.group = t.label;
    s.order = t.order;
    s.L = lcm_of_degrees(t);
    s.lower_bound = generalized_lower_bound(t);
    s.zero_columns = zero_in_every_nontrivial_column(t);
    const auto indices = knutson_indices(ring);
    s.K = 1;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        s.characters.push_back({t.irreducibles[i].label, t.irreducibles[i].degree, indices[i]});
        s.K = lcm(s.K, indices[i]);
    }

    const bool sl2_odd = spec.family == GroupFamily::sl2 && spec.n % 2 == 1 && spec.n >= 5;
    if (s.zero_columns) {
        s.k_prime = Rational(s.K);
        s.k_prime_reason = "every non-trivial column has a zero, so K' = K";
    } else if (sl2_odd) {
        s.obstruction = verify_rho_pm_obstruction(ring, make_sl2_param(spec.n));
        if (s.obstruction->confirmed()) {
            s.k_prime = Rational(1);
            s.k_prime_reason = "the theorem character inverts every irreducible and neither character of degree "
                               "|G|/2 supported on +-1 does";
        }
    } else if (s.K == 1 && s.L == s.order) {
        s.k_prime = Rational(1);
        s.k_prime_reason = "Knutson type with L(G) = |G|";
    }
    if (!s.k_prime && t.order <= kSearchOrderLimit) {
        s.search = min_rho_search(ring, t.order);
        if (s.search) {
            s.k_prime = s.search->k_prime;
            s.k_prime_reason = "least-degree rho found by exhaustive search: " + s.search->rho.to_string();
        }
    }
    if (!s.k_prime)
        s.k_prime_reason = "not determined; L(G)/|G| <= K' <= K";
    return s;
}

} // namespace knutson
