#include "knutson/knutsonlat.hpp"

#include <functional>
#include <set>

namespace knutson {

std::vector<BigInt> SNFResult::diagonal() const
{
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        d.push_back(D(i, i));
    return d;
}

namespace {

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt truncated_quotient(const BigInt& a, const BigInt& b)
{
    BigInt q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void check_snf(const IntegerMatrix& M, const SNFResult& r)
{
    if (r.U * M * r.V != r.D)
        throw InternalError("Smith form: U M V != D");
    if (!r.D.is_diagonal())
        throw InternalError("Smith form: D is not diagonal");
    const auto d = r.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] < 0)
            throw InternalError("Smith form: negative invariant factor");
        if (d[i] == 0 ? d[i + 1] != 0 : !mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()))
            throw InternalError("Smith form: divisibility chain broken");
    }
    if (abs_value(r.U.determinant()) != 1 || abs_value(r.V.determinant()) != 1)
        throw InternalError("Smith form: transform is not unimodular");
}

} // namespace

SNFResult smith_normal_form(const IntegerMatrix& M)
{
    const std::size_t rows = M.rows();
    const std::size_t cols = M.cols();
    SNFResult r{IntegerMatrix::identity(rows), M, IntegerMatrix::identity(cols), 0};
    IntegerMatrix& A = r.D;

    auto row_op = [&](std::size_t dst, std::size_t src, const BigInt& k) {
        A.add_row_multiple(dst, src, k);
        r.U.add_row_multiple(dst, src, k);
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const BigInt& k) {
        A.add_col_multiple(dst, src, k);
        r.V.add_col_multiple(dst, src, k);
    };
    auto move_to_pivot = [&](std::size_t t, std::size_t i, std::size_t j) {
        A.swap_rows(t, i);
        r.U.swap_rows(t, i);
        A.swap_cols(t, j);
        r.V.swap_cols(t, j);
    };

    std::size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (A(i, j) != 0 && (pi == rows || abs_value(A(i, j)) < abs_value(A(pi, pj))))
                    pi = i, pj = j;
        if (pi == rows)
            break;
        move_to_pivot(t, pi, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (A(i, t) != 0) {
                    row_op(i, t, -truncated_quotient(A(i, t), A(t, t)));
                    clean = clean && A(i, t) == 0;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (A(t, j) != 0) {
                    col_op(j, t, -truncated_quotient(A(t, j), A(t, t)));
                    clean = clean && A(t, j) == 0;
                }
            if (!clean) {
                // A remainder is smaller than the pivot; promote the smallest.
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (A(i, t) != 0 && abs_value(A(i, t)) < abs_value(A(bi, bj)))
                        bi = i, bj = t;
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (A(t, j) != 0 && abs_value(A(t, j)) < abs_value(A(bi, bj)))
                        bi = t, bj = j;
                move_to_pivot(t, bi, bj);
                continue;
            }
            bool fixed = false;
            for (std::size_t i = t + 1; i < rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) {
                        row_op(t, i, 1);
                        fixed = true;
                        break;
                    }
            if (!fixed)
                break;
        }
        if (A(t, t) < 0) {
            A.negate_row(t);
            r.U.negate_row(t);
        }
    }
    r.rank = t;
    check_snf(M, r);
    return r;
}

std::optional<std::vector<BigInt>> solve_integer(const IntegerMatrix& M, const SNFResult& snf,
                                                 const std::vector<BigInt>& b)
{
    if (b.size() != M.rows())
        throw PreconditionError("right-hand side length does not match the matrix");
    const auto c = snf.U.apply(b);
    std::vector<BigInt> y(M.cols(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < snf.rank) {
            const BigInt& d = snf.D(i, i);
            if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t()))
                return std::nullopt;
            y[i] = c[i] / d;
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    auto x = snf.V.apply(y);
    if (M.apply(x) != b)
        throw InternalError("integer solution fails re-verification");
    return x;
}

std::optional<std::vector<BigInt>> solve_integer(const IntegerMatrix& M, const std::vector<BigInt>& b)
{
    return solve_integer(M, smith_normal_form(M), b);
}

std::optional<BigInt> min_multiplier(const IntegerMatrix& M, const SNFResult& snf, const std::vector<BigInt>& v)
{
    if (v.size() != M.rows())
        throw PreconditionError("vector length does not match the matrix");
    const auto c = snf.U.apply(v);
    BigInt n = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i >= snf.rank) {
            if (c[i] != 0)
                return std::nullopt;
            continue;
        }
        const BigInt& d = snf.D(i, i);
        BigInt g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), c[i].get_mpz_t());
        n = lcm(n, BigInt(d / g));
    }
    std::vector<BigInt> nv = v;
    for (auto& x : nv)
        x *= n;
    if (!solve_integer(M, snf, nv))
        throw InternalError("minimal multiplier fails re-verification");
    return n;
}

std::optional<BigInt> min_multiplier(const IntegerMatrix& M, const std::vector<BigInt>& v)
{
    return min_multiplier(M, smith_normal_form(M), v);
}

namespace {

void require_ring_character(const CharacterRing& ring, std::size_t chi, const VirtualCharacter& rho)
{
    if (chi >= ring.table().num_irreducibles())
        throw PreconditionError("irreducible index out of range");
    if (rho.table != ring.table_ptr())
        throw PreconditionError("rho belongs to a different table");
}

void verify_on_classes(const CharacterTable& t, std::size_t chi, const VirtualCharacter& lambda,
                       const VirtualCharacter& rho)
{
    for (std::size_t c = 0; c < t.num_classes(); ++c)
        if (t.value(chi, c) * evaluate(lambda, c) != evaluate(rho, c))
            throw InternalError("rho-inverse fails on class " + t.classes[c].label);
}

} // namespace

std::optional<VirtualCharacter> is_rho_invertible(const CharacterRing& ring, std::size_t chi,
                                                  const VirtualCharacter& rho)
{
    require_ring_character(ring, chi, rho);
    const IntegerMatrix F = ring.fusion_matrix(chi).to_matrix();
    const auto x = solve_integer(F, rho.multiplicities);
    if (!x)
        return std::nullopt;
    VirtualCharacter lambda{ring.table_ptr(), *x};
    verify_on_classes(ring.table(), chi, lambda, rho);
    return lambda;
}

BigInt knutson_index_char(const CharacterRing& ring, std::size_t chi)
{
    const CharacterTable& t = ring.table();
    if (chi >= t.num_irreducibles())
        throw PreconditionError("irreducible index out of range");
    const IntegerMatrix F = ring.fusion_matrix(chi).to_matrix();
    const auto n = min_multiplier(F, t.degrees());
    if (!n)
        throw InternalError("no multiple of the regular character is reached by " + t.irreducibles[chi].label);
    if (!mpz_divisible_p(t.irreducibles[chi].degree.get_mpz_t(), n->get_mpz_t()))
        throw InternalError("Knutson index of " + t.irreducibles[chi].label + " does not divide its degree");
    return *n;
}

std::vector<BigInt> knutson_indices(const CharacterRing& ring)
{
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < ring.table().num_irreducibles(); ++i)
        out.push_back(knutson_index_char(ring, i));
    return out;
}

BigInt knutson_index_group(const CharacterRing& ring)
{
    BigInt k = 1;
    for (const auto& x : knutson_indices(ring))
        k = lcm(k, x);
    return k;
}

Rational generalized_lower_bound(const CharacterTable& t) { return make_rational(lcm_of_degrees(t), t.order); }

std::optional<BigInt> zero_column_criterion(const CharacterRing& ring)
{
    if (!zero_in_every_nontrivial_column(ring.table()))
        return std::nullopt;
    return knutson_index_group(ring);
}

std::optional<RhoSearchResult> min_rho_search(const CharacterRing& ring, const BigInt& degree_bound)
{
    const CharacterTable& t = ring.table();
    if (degree_bound > t.order)
        throw PreconditionError("degree bound exceeds |G|");
    const std::size_t k = t.num_irreducibles();
    const auto degrees = t.degrees();

    std::vector<std::size_t> zero_classes;
    for (std::size_t c = 1; c < t.num_classes(); ++c)
        for (std::size_t i = 0; i < k; ++i)
            if (t.value(i, c).is_zero()) {
                zero_classes.push_back(c);
                break;
            }

    std::vector<IntegerMatrix> fusion;
    std::vector<SNFResult> snf;
    for (std::size_t i = 0; i < k; ++i) {
        fusion.push_back(ring.fusion_matrix(i).to_matrix());
        snf.push_back(smith_normal_form(fusion.back()));
    }

    RhoSearchResult result{{ring.table_ptr(), std::vector<BigInt>(k, 0)}, 0, {}, 0};
    std::vector<BigInt> mult(k, 0);

    auto accept = [&]() -> bool {
        for (std::size_t c : zero_classes) {
            AlgebraicNumber v = 0;
            for (std::size_t i = 0; i < k; ++i)
                if (mult[i] != 0)
                    v += AlgebraicNumber(mult[i]) * t.value(i, c);
            if (!v.is_zero())
                return false;
        }
        ++result.candidates;
        std::vector<VirtualCharacter> inverses;
        for (std::size_t i = 0; i < k; ++i) {
            const auto x = solve_integer(fusion[i], snf[i], mult);
            if (!x)
                return false;
            inverses.push_back({ring.table_ptr(), *x});
        }
        result.inverses = std::move(inverses);
        return true;
    };

    // Lexicographically ascending multiplicity vectors of total degree `remaining`.
    std::function<bool(std::size_t, const BigInt&)> walk = [&](std::size_t i, const BigInt& remaining) -> bool {
        if (i == k)
            return remaining == 0 && accept();
        const BigInt top = remaining / degrees[i];
        for (BigInt m = 0; m <= top; ++m) {
            mult[i] = m;
            if (walk(i + 1, remaining - m * degrees[i]))
                return true;
        }
        mult[i] = 0;
        return false;
    };

    const BigInt L = lcm_of_degrees(t);
    for (BigInt d = L; d <= degree_bound; d += L) {
        if (walk(0, d)) {
            result.rho.multiplicities = mult;
            result.k_prime = make_rational(d, t.order);
            for (std::size_t i = 0; i < k; ++i)
                verify_on_classes(t, i, result.inverses[i], result.rho);
            return result;
        }
    }
    return std::nullopt;
}

ObstructionReport verify_rho_pm_obstruction(const CharacterRing& ring, const Sl2Param& param)
{
    if (param.even() || param.q < 5)
        throw PreconditionError("the obstruction is stated for odd q >= 5");
    const CharacterTable& t = ring.table();
    if (t.label != "SL2(" + std::to_string(param.q) + ")")
        throw PreconditionError("ring is not over the table of SL2(" + std::to_string(param.q) + ")");
    const std::size_t k = t.num_irreducibles();
    const BigInt half = t.order / 2;

    ObstructionReport rep;
    rep.q = param.q;

    rep.premise = true;
    for (std::size_t c = 2; c < t.num_classes(); ++c) {
        bool zero = false;
        for (std::size_t i = 0; i < k && !zero; ++i)
            zero = t.value(i, c).is_zero();
        rep.premise = rep.premise && zero;
    }

    // sign[i] = chi_i(-1) / chi_i(1)
    std::vector<int> sign(k);
    for (std::size_t i = 0; i < k; ++i) {
        const AlgebraicNumber& v = t.value(i, 1);
        if (v == AlgebraicNumber(t.irreducibles[i].degree))
            sign[i] = 1;
        else if (v == AlgebraicNumber(BigInt(-t.irreducibles[i].degree)))
            sign[i] = -1;
        else
            throw InternalError("-1 does not act by a scalar in " + t.irreducibles[i].label);
    }

    // Characters with degree a multiple of L below |G| that vanish off +-1:
    // value x at 1 and y at -1, multiplicities (x chi(1) + y chi(-1)) / |G|.
    const BigInt L = lcm_of_degrees(t);
    std::set<std::pair<BigInt, BigInt>> found;
    for (BigInt x = L; x < t.order; x += L)
        for (BigInt y = -x; y <= x; ++y) {
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i) {
                const BigInt num = t.irreducibles[i].degree * (x + sign[i] * y);
                ok = num >= 0 && mpz_divisible_p(num.get_mpz_t(), t.order.get_mpz_t());
            }
            if (ok)
                found.emplace(x, y);
        }
    rep.candidates_exact = found == std::set<std::pair<BigInt, BigInt>>{{half, half}, {half, BigInt(-half)}};

    VirtualCharacter plus{ring.table_ptr(), std::vector<BigInt>(k, 0)};
    VirtualCharacter minus = plus;
    for (std::size_t i = 0; i < k; ++i)
        (sign[i] > 0 ? plus : minus).multiplicities[i] = t.irreducibles[i].degree;
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
        const AlgebraicNumber p = c == 0 || c == 1 ? AlgebraicNumber(half) : AlgebraicNumber(0);
        const AlgebraicNumber m = c == 0 ? AlgebraicNumber(half) : c == 1 ? AlgebraicNumber(BigInt(-half)) : AlgebraicNumber(0);
        if (evaluate(plus, c) != p || evaluate(minus, c) != m)
            throw InternalError("rho+- have unexpected values on class " + t.classes[c].label);
    }

    const bool one_mod_four = param.q % 4 == 1;
    rep.family = one_mod_four ? "theta_j" : "chi_i";
    const auto irrs = sl2_irreducibles(param);
    for (std::size_t i = 0; i < k; ++i) {
        const bool designated = irrs[i].kind == (one_mod_four ? Sl2Kind::theta : Sl2Kind::chi);
        if (!designated)
            continue;
        if (!is_rho_invertible(ring, i, plus))
            rep.fail_plus.push_back(irrs[i].label);
        if (!is_rho_invertible(ring, i, minus))
            rep.fail_minus.push_back(irrs[i].label);
    }

    const VirtualCharacter rho = rho_theorem_character(ring, param);
    rep.theorem_rho_inverts_all = true;
    for (std::size_t i = 0; i < k && rep.theorem_rho_inverts_all; ++i)
        rep.theorem_rho_inverts_all = is_rho_invertible(ring, i, rho).has_value();
    return rep;
}

} // namespace knutson
