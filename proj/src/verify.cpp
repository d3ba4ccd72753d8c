#include "knutson/verify.hpp"

#include "knutson/groups.hpp"
#include "knutson/numtheory.hpp"
#include "knutson/sequences.hpp"

#include <sstream>

namespace knutson {

bool SuiteReport::pass() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"orthogonality", "sequences", "sl2-rho", "knutson-small", "cores"};
    return names;
}

namespace {

template <class T>
std::string join(const std::vector<T>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << v[i];
    return os.str();
}

void orthogonality(SuiteReport& r)
{
    std::vector<GroupSpec> specs;
    for (int n = 1; n <= 8; ++n)
        specs.push_back({GroupFamily::symmetric, n});
    for (int n = 3; n <= 8; ++n)
        specs.push_back({GroupFamily::alternating, n});
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
        specs.push_back({GroupFamily::sl2, q});
        specs.push_back({GroupFamily::psl2, q});
    }
    for (const auto& s : specs) {
        SuiteCheck c{s.label(), false, ""};
        try {
            const auto rep = check_orthogonality(build_table(s));
            c.pass = rep.ok;
            c.detail = rep.ok ? "exact row and column orthogonality" : rep.failure;
        } catch (const std::exception& e) {
            c.detail = e.what();
        }
        r.checks.push_back(std::move(c));
    }
}

void sequences(SuiteReport& r)
{
    auto add = [&](const std::string& name, const std::vector<std::uint64_t>& got,
                   const std::vector<std::uint64_t>& want) {
        r.checks.push_back({name, got == want, join(got)});
    };
    add("a363675 to 200", seq_L_Sn(200).terms, {1, 6, 10, 21, 36, 66, 105, 120, 136, 190});
    add("a363676 to 60", seq_L_An(60).terms, {1, 2, 5, 6, 8, 10, 12, 17, 21, 30, 36, 57});
    add("a363701 to 21", seq_zero_columns_sn(21).terms, {1, 5, 6, 8, 9, 10, 12, 14, 17, 21});
}

void sl2_rho(SuiteReport& r, std::optional<int> q)
{
    std::vector<int> qs = q ? std::vector<int>{*q} : std::vector<int>{5, 7, 9, 11, 13};
    for (int v : qs) {
        const Sl2Param p = make_sl2_param(v);
        if (p.even() || v < 5)
            throw PreconditionError("sl2-rho needs odd q >= 5");
        CharacterRing ring(sl2_table(p));
        const auto rep = verify_rho_inverses(ring, p, true);
        std::ostringstream os;
        if (rep.selected_column)
            os << "column " << *rep.selected_column + 1 << " for q = " << (v % 4) << " mod 4";
        else
            os << "no unique column";
        for (const auto& row : rep.rows) {
            if (!rep.selected_column)
                break;
            const auto& c = row.columns[static_cast<std::size_t>(*rep.selected_column)];
            os << "; " << row.name << ": "
               << (c.vacuous ? "vacuous" : c.verified ? "verified" : !c.instantiable ? "not integral" : "fails");
            if (row.correction)
                os << " (" << row.correction->replaced_term << " -> " << row.correction->replacement << ")";
        }
        r.checks.push_back({"q = " + std::to_string(v), rep.all_verified_or_corrected(), os.str()});
    }
}

void knutson_small(SuiteReport& r)
{
    auto index_check = [&](const GroupSpec& s, int expected) {
        CharacterRing ring(build_table(s));
        const BigInt k = knutson_index_group(ring);
        r.checks.push_back({"K(" + s.label() + ") = " + std::to_string(expected), k == expected, "computed " + k.get_str()});
    };
    for (int q : {2, 3, 4, 8})
        index_check({GroupFamily::sl2, q}, 1);
    for (int q : {5, 7, 9, 11, 13})
        index_check({GroupFamily::sl2, q}, 2);
    for (int q : {4, 5, 7, 8, 9})
        index_check({GroupFamily::psl2, q}, 1);
    for (int q : {11, 13})
        index_check({GroupFamily::psl2, q}, 2);
    for (int n = 1; n <= 7; ++n)
        index_check({GroupFamily::symmetric, n}, 1);

    auto kprime_check = [&](int q, const Rational& expected) {
        CharacterRing ring(sl2_table(make_sl2_param(q)));
        const auto s = min_rho_search(ring, ring.table().order);
        const std::string got = s ? to_string(s->k_prime) : "none";
        r.checks.push_back({"K'(SL2(" + std::to_string(q) + ")) = " + to_string(expected),
                            s && s->k_prime == expected, "computed " + got + (s ? " with rho = " + s->rho.to_string() : "")});
    };
    kprime_check(2, Rational(1, 3));
    kprime_check(3, Rational(1, 2));
}

void cores(SuiteReport& r)
{
    bool ok = true;
    std::string detail = "n <= 150";
    for (int n = 0; n <= 150 && ok; ++n)
        if (static_cast<std::int64_t>(count_t_cores(n, 3)) != sigma3(3 * static_cast<std::uint64_t>(n) + 1)) {
            ok = false;
            detail = "mismatch at n = " + std::to_string(n);
        }
    r.checks.push_back({"3-core count equals sigma3(3n+1)", ok, detail});

    ok = true;
    detail = "n <= 40, t in {2, 3, 5, 7, 11, 13}";
    for (int t : {2, 3, 5, 7, 11, 13})
        for (int n = 0; n <= 40 && ok; ++n)
            if (exists_t_core(n, t) != exists_t_core(n, t, CoreMethod::brute_force)) {
                ok = false;
                detail = "mismatch at n = " + std::to_string(n) + ", t = " + std::to_string(t);
            }
    r.checks.push_back({"t-core existence fast paths", ok, detail});

    ok = true;
    detail = "n <= 2000";
    for (std::uint64_t n = 0; n <= 2000 && ok; ++n)
        if (quadform_xxyy(n, QuadformMethod::brute_force) != is_loeschian(3 * n + 1)) {
            ok = false;
            detail = "mismatch at n = " + std::to_string(n);
        }
    r.checks.push_back({"X^2+X+XY+Y+Y^2 = n iff 3n+1 Loeschian", ok, detail});
}

} // namespace

SuiteReport run_suite(const std::string& name, std::optional<int> q)
{
    SuiteReport r{name, {}};
    if (name == "orthogonality")
        orthogonality(r);
    else if (name == "sequences")
        sequences(r);
    else if (name == "sl2-rho")
        sl2_rho(r, q);
    else if (name == "knutson-small")
        knutson_small(r);
    else if (name == "cores")
        cores(r);
    else
        throw PreconditionError("unknown suite '" + name + "'");
    return r;
}

} // namespace knutson
