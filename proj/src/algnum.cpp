#include "knutson/algnum.hpp"

#include "knutson/numtheory.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>

namespace knutson {

// ---------------------------------------------------------------------------
// MultiQuadratic

std::pair<std::int64_t, std::int64_t> squarefree_decompose(std::int64_t d)
{
    if (d == 0)
        throw PreconditionError("squarefree_decompose: zero");
    const std::int64_t sign = d < 0 ? -1 : 1;
    std::int64_t s = 1;
    std::int64_t g = 1;
    for (const auto& [p, e] : factorize(static_cast<std::uint64_t>(d < 0 ? -d : d))) {
        const auto pp = static_cast<std::int64_t>(p);
        for (unsigned i = 0; i < e / 2; ++i)
            g *= pp;
        if (e % 2 == 1)
            s *= pp;
    }
    return {sign * s, g};
}

MultiQuadratic::MultiQuadratic(const Rational& r)
{
    if (r != 0)
        terms_.emplace(1, r);
}

MultiQuadratic MultiQuadratic::sqrt(std::int64_t d, const Rational& c)
{
    const auto [s, g] = squarefree_decompose(d);
    MultiQuadratic out;
    out.add_term(s, c * g);
    return out;
}

void MultiQuadratic::add_term(std::int64_t radicand, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(radicand, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool MultiQuadratic::is_rational() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational MultiQuadratic::rational_part() const
{
    auto it = terms_.find(1);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiQuadratic MultiQuadratic::conj() const
{
    MultiQuadratic out = *this;
    for (auto& [d, c] : out.terms_)
        if (d < 0)
            c = -c;
    return out;
}

std::complex<double> MultiQuadratic::to_complex() const
{
    std::complex<double> z = 0;
    for (const auto& [d, c] : terms_) {
        const double mag = std::sqrt(static_cast<double>(d < 0 ? -d : d));
        const double coeff = c.get_d();
        z += d < 0 ? std::complex<double>(0, coeff * mag) : std::complex<double>(coeff * mag, 0);
    }
    return z;
}

std::string MultiQuadratic::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (!first)
            os << (neg ? " - " : " + ");
        else if (neg)
            os << "-";
        first = false;
        if (d == 1) {
            os << knutson::to_string(a);
            continue;
        }
        if (a != 1)
            os << knutson::to_string(a) << "*";
        os << "sqrt(" << d << ")";
    }
    return os.str();
}

MultiQuadratic& MultiQuadratic::operator+=(const MultiQuadratic& o)
{
    for (const auto& [d, c] : o.terms_)
        add_term(d, c);
    return *this;
}

MultiQuadratic& MultiQuadratic::operator-=(const MultiQuadratic& o)
{
    for (const auto& [d, c] : o.terms_)
        add_term(d, -c);
    return *this;
}

MultiQuadratic MultiQuadratic::operator-() const
{
    MultiQuadratic out = *this;
    for (auto& [d, c] : out.terms_)
        c = -c;
    return out;
}

MultiQuadratic& MultiQuadratic::operator*=(const MultiQuadratic& o)
{
    MultiQuadratic out;
    for (const auto& [d1, c1] : terms_) {
        for (const auto& [d2, c2] : o.terms_) {
            // sqrt(d1) sqrt(d2) = g sqrt(d1 d2 / g^2), g = gcd(|d1|, |d2|);
            // i * i contributes -1 when both radicands are negative.
            const std::int64_t a1 = d1 < 0 ? -d1 : d1;
            const std::int64_t a2 = d2 < 0 ? -d2 : d2;
            const std::int64_t g = std::gcd(a1, a2);
            std::int64_t rad = (a1 / g) * (a2 / g);
            Rational c = c1 * c2 * g;
            if (d1 < 0 && d2 < 0)
                c = -c;
            else if (d1 < 0 || d2 < 0)
                rad = -rad;
            out.add_term(rad, c);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

// ---------------------------------------------------------------------------
// Cyclotomic fields

namespace {

/// Exact division of integer polynomials (constant term first); divisor monic.
std::vector<BigInt> poly_divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den)
{
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size())
        throw InternalError("polynomial division: degree too small");
    std::vector<BigInt> q(num.size() - dn);
    for (std::size_t k = num.size(); k-- > dn;) {
        const BigInt c = num[k];
        q[k - dn] = c;
        if (c == 0)
            continue;
        for (std::size_t i = 0; i <= dn; ++i)
            num[k - dn + i] -= c * den[i];
    }
    for (std::size_t i = 0; i < dn; ++i)
        if (num[i] != 0)
            throw InternalError("polynomial division not exact");
    return q;
}

} // namespace

std::vector<BigInt> cyclotomic_polynomial(unsigned m)
{
    if (m == 0)
        throw PreconditionError("cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<unsigned, std::vector<BigInt>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(m); it != cache.end())
            return it->second;
    }
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<BigInt> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0)
            num = poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
    std::lock_guard lock(mu);
    cache.emplace(m, num);
    return num;
}

CyclotomicField::CyclotomicField(unsigned order) : order_(order), phi_(cyclotomic_polynomial(order))
{
    degree_ = static_cast<unsigned>(phi_.size() - 1);
    powers_.assign(order_, std::vector<std::int64_t>(degree_, 0));
    std::vector<BigInt> cur(degree_, 0);
    for (unsigned k = 0; k < order_; ++k) {
        if (k < degree_) {
            std::fill(cur.begin(), cur.end(), 0);
            cur[k] = 1;
        } else {
            // x * cur, then eliminate x^degree via the monic Phi_m.
            const BigInt top = cur[degree_ - 1];
            for (unsigned i = degree_ - 1; i > 0; --i)
                cur[i] = cur[i - 1];
            cur[0] = 0;
            for (unsigned i = 0; i < degree_; ++i)
                cur[i] -= top * phi_[i];
        }
        for (unsigned i = 0; i < degree_; ++i) {
            if (!cur[i].fits_slong_p())
                throw ResourceCapError("cyclotomic reduction coefficients overflow");
            powers_[k][i] = cur[i].get_si();
        }
    }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(unsigned order)
{
    if (order == 0)
        throw PreconditionError("cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<const CyclotomicField>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[order];
    if (!slot)
        slot = std::make_shared<const CyclotomicField>(order);
    return slot;
}

// ---------------------------------------------------------------------------
// CyclotomicTau

namespace {

std::optional<std::int64_t> exact_sqrt(std::int64_t v)
{
    if (v < 0)
        return std::nullopt;
    const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(v)));
    if (s * s != v)
        return std::nullopt;
    return s;
}

bool all_zero(const std::vector<Rational>& v)
{
    for (const auto& c : v)
        if (c != 0)
            return false;
    return true;
}

} // namespace

CyclotomicTau::CyclotomicTau(unsigned order, std::int64_t eq)
    : field_(CyclotomicField::get(order)), eq_(eq), base_(field_->degree()), tau_(field_->degree())
{
}

CyclotomicTau::CyclotomicTau(unsigned order, std::int64_t eq, const Rational& r) : CyclotomicTau(order, eq)
{
    base_[0] = r;
}

CyclotomicTau CyclotomicTau::root_of_unity(unsigned order, unsigned k, std::int64_t eq)
{
    if (k >= order)
        throw PreconditionError("root_of_unity: exponent must be below the order");
    CyclotomicTau out(order, eq);
    out.add_power(k, 1);
    return out;
}

CyclotomicTau CyclotomicTau::tau(unsigned order, std::int64_t eq)
{
    if (eq == 0)
        throw PreconditionError("tau requires a nonzero relation tau^2 = eq");
    CyclotomicTau out(order, eq);
    out.tau_[0] = 1;
    out.fold_square_tau();
    return out;
}

void CyclotomicTau::add_power(unsigned k, const Rational& c, bool on_tau)
{
    if (on_tau && eq_ == 0)
        throw PreconditionError("no tau adjoined");
    auto& target = on_tau ? tau_ : base_;
    const auto& row = field_->power(k);
    for (unsigned i = 0; i < field_->degree(); ++i)
        if (row[i] != 0)
            target[i] += c * row[i];
    if (on_tau)
        fold_square_tau();
}

void CyclotomicTau::fold_square_tau()
{
    if (eq_ == 0)
        return;
    const auto s = exact_sqrt(eq_);
    if (!s || all_zero(tau_))
        return;
    for (std::size_t i = 0; i < tau_.size(); ++i) {
        base_[i] += tau_[i] * *s;
        tau_[i] = 0;
    }
}

void CyclotomicTau::check_compatible(const CyclotomicTau& o) const
{
    if (order() != o.order())
        throw OrderMismatchError("cyclotomic operands of different orders " + std::to_string(order()) +
                                 " and " + std::to_string(o.order()));
    if (eq_ != o.eq_)
        throw OrderMismatchError("cyclotomic operands with different tau relations");
}

bool CyclotomicTau::is_zero() const { return all_zero(base_) && all_zero(tau_); }

bool CyclotomicTau::is_rational() const
{
    if (!all_zero(tau_))
        return false;
    for (std::size_t i = 1; i < base_.size(); ++i)
        if (base_[i] != 0)
            return false;
    return true;
}

CyclotomicTau CyclotomicTau::conj() const
{
    const unsigned m = order();
    CyclotomicTau out(m, eq_);
    const Rational tau_sign = eq_ < 0 ? -1 : 1;
    for (unsigned i = 0; i < field_->degree(); ++i) {
        const unsigned k = (m - i) % m;
        if (base_[i] != 0)
            out.add_power(k, base_[i]);
        if (tau_[i] != 0) {
            const auto& row = field_->power(k);
            for (unsigned j = 0; j < field_->degree(); ++j)
                if (row[j] != 0)
                    out.tau_[j] += tau_sign * tau_[i] * row[j];
        }
    }
    return out;
}

std::complex<double> CyclotomicTau::to_complex() const
{
    const double angle = 2.0 * std::numbers::pi / order();
    std::complex<double> b = 0;
    std::complex<double> t = 0;
    for (unsigned i = 0; i < field_->degree(); ++i) {
        const std::complex<double> z = std::polar(1.0, angle * i);
        b += base_[i].get_d() * z;
        t += tau_[i].get_d() * z;
    }
    if (eq_ == 0)
        return b;
    const double mag = std::sqrt(std::abs(static_cast<double>(eq_)));
    const std::complex<double> tv = eq_ < 0 ? std::complex<double>(0, mag) : std::complex<double>(mag, 0);
    return b + t * tv;
}

namespace {

std::string poly_string(const std::vector<Rational>& c, unsigned m)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0)
            continue;
        const bool neg = c[i] < 0;
        const Rational a = neg ? Rational(-c[i]) : c[i];
        if (!first)
            os << (neg ? " - " : " + ");
        else if (neg)
            os << "-";
        first = false;
        if (i == 0) {
            os << to_string(a);
            continue;
        }
        if (a != 1)
            os << to_string(a) << "*";
        os << "z" << m;
        if (i > 1)
            os << "^" << i;
    }
    return first ? "0" : os.str();
}

} // namespace

std::string CyclotomicTau::to_string() const
{
    const bool has_tau = !all_zero(tau_);
    const std::string b = poly_string(base_, order());
    if (!has_tau)
        return b;
    const std::string t = poly_string(tau_, order());
    std::string out = all_zero(base_) ? "" : b + " + ";
    out += "(" + t + ")*tau";
    return out;
}

std::vector<Rational> CyclotomicTau::multiply(const CyclotomicField& f, const std::vector<Rational>& a,
                                              const std::vector<Rational>& b)
{
    // Clear denominators and work over the integers; divide once at the end.
    const unsigned n = f.degree();
    auto to_integers = [n](const std::vector<Rational>& v, BigInt& den) {
        den = 1;
        for (const auto& x : v)
            if (x.get_den() != 1)
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        std::vector<BigInt> out(n);
        for (unsigned i = 0; i < n; ++i)
            if (v[i] != 0)
                out[i] = v[i].get_num() * (den / v[i].get_den());
        return out;
    };
    BigInt da, db;
    const auto ia = to_integers(a, da);
    const auto ib = to_integers(b, db);
    std::vector<BigInt> raw(2 * n - 1);
    for (unsigned i = 0; i < n; ++i) {
        if (ia[i] == 0)
            continue;
        for (unsigned j = 0; j < n; ++j)
            if (ib[j] != 0)
                mpz_addmul(raw[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
    for (unsigned k = n; k < raw.size(); ++k) {
        if (raw[k] == 0)
            continue;
        const auto& row = f.power(k);
        for (unsigned i = 0; i < n; ++i) {
            if (row[i] > 0)
                mpz_addmul_ui(raw[i].get_mpz_t(), raw[k].get_mpz_t(), static_cast<unsigned long>(row[i]));
            else if (row[i] < 0)
                mpz_submul_ui(raw[i].get_mpz_t(), raw[k].get_mpz_t(), static_cast<unsigned long>(-row[i]));
        }
    }
    const BigInt den = da * db;
    std::vector<Rational> out(n);
    for (unsigned i = 0; i < n; ++i)
        if (raw[i] != 0)
            out[i] = make_rational(raw[i], den);
    return out;
}

CyclotomicTau& CyclotomicTau::operator+=(const CyclotomicTau& o)
{
    check_compatible(o);
    for (std::size_t i = 0; i < base_.size(); ++i) {
        base_[i] += o.base_[i];
        tau_[i] += o.tau_[i];
    }
    return *this;
}

CyclotomicTau& CyclotomicTau::operator-=(const CyclotomicTau& o)
{
    check_compatible(o);
    for (std::size_t i = 0; i < base_.size(); ++i) {
        base_[i] -= o.base_[i];
        tau_[i] -= o.tau_[i];
    }
    return *this;
}

CyclotomicTau CyclotomicTau::operator-() const
{
    CyclotomicTau out = *this;
    for (std::size_t i = 0; i < base_.size(); ++i) {
        out.base_[i] = -out.base_[i];
        out.tau_[i] = -out.tau_[i];
    }
    return out;
}

CyclotomicTau& CyclotomicTau::operator*=(const Rational& r)
{
    for (std::size_t i = 0; i < base_.size(); ++i) {
        base_[i] *= r;
        tau_[i] *= r;
    }
    return *this;
}

CyclotomicTau& CyclotomicTau::operator*=(const CyclotomicTau& o)
{
    check_compatible(o);
    const bool ta = !all_zero(tau_);
    const bool tb = !all_zero(o.tau_);
    // (a + b tau)(c + d tau) = (ac + eq bd) + (ad + bc) tau
    std::vector<Rational> base = multiply(*field_, base_, o.base_);
    std::vector<Rational> tau(base_.size());
    if (ta && tb) {
        const auto bd = multiply(*field_, tau_, o.tau_);
        for (std::size_t i = 0; i < base.size(); ++i)
            base[i] += bd[i] * eq_;
    }
    if (tb) {
        const auto ad = multiply(*field_, base_, o.tau_);
        for (std::size_t i = 0; i < tau.size(); ++i)
            tau[i] += ad[i];
    }
    if (ta) {
        const auto bc = multiply(*field_, tau_, o.base_);
        for (std::size_t i = 0; i < tau.size(); ++i)
            tau[i] += bc[i];
    }
    base_ = std::move(base);
    tau_ = std::move(tau);
    return *this;
}

bool operator==(const CyclotomicTau& a, const CyclotomicTau& b)
{
    a.check_compatible(b);
    return a.base_ == b.base_ && a.tau_ == b.tau_;
}

// ---------------------------------------------------------------------------
// AlgebraicNumber

AlgebraicNumber::AlgebraicNumber(MultiQuadratic m) : value_(std::move(m)) { normalize(); }

AlgebraicNumber::AlgebraicNumber(CyclotomicTau c) : value_(std::move(c)) { normalize(); }

void AlgebraicNumber::normalize()
{
    if (auto* mq = std::get_if<MultiQuadratic>(&value_); mq && mq->is_rational())
        value_ = mq->rational_part();
    else if (auto* cy = std::get_if<CyclotomicTau>(&value_); cy && cy->is_rational())
        value_ = cy->rational_part();
}

const Rational& AlgebraicNumber::as_rational() const
{
    if (const auto* r = std::get_if<Rational>(&value_))
        return *r;
    throw PreconditionError("algebraic number is not rational: " + to_string());
}

bool AlgebraicNumber::is_zero() const
{
    return std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Rational>)
                return v == 0;
            else
                return v.is_zero();
        },
        value_);
}

AlgebraicNumber AlgebraicNumber::conj() const
{
    return std::visit(
        [](const auto& v) -> AlgebraicNumber {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Rational>)
                return v;
            else
                return v.conj();
        },
        value_);
}

std::complex<double> AlgebraicNumber::to_complex() const
{
    return std::visit(
        [](const auto& v) -> std::complex<double> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Rational>)
                return {v.get_d(), 0.0};
            else
                return v.to_complex();
        },
        value_);
}

std::string AlgebraicNumber::to_string() const
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Rational>)
                return knutson::to_string(v);
            else
                return v.to_string();
        },
        value_);
}

namespace {

[[noreturn]] void mixed_systems()
{
    throw OrderMismatchError("cannot combine multi-quadratic and cyclotomic numbers");
}

template <class Op>
AlgebraicNumber::Storage combine(const AlgebraicNumber::Storage& a, const AlgebraicNumber::Storage& b, Op op)
{
    return std::visit(
        [&](const auto& x, const auto& y) -> AlgebraicNumber::Storage {
            using X = std::decay_t<decltype(x)>;
            using Y = std::decay_t<decltype(y)>;
            if constexpr (std::is_same_v<X, Y>) {
                return op(x, y);
            } else if constexpr (std::is_same_v<X, Rational> && std::is_same_v<Y, MultiQuadratic>) {
                return op(MultiQuadratic(x), y);
            } else if constexpr (std::is_same_v<X, MultiQuadratic> && std::is_same_v<Y, Rational>) {
                return op(x, MultiQuadratic(y));
            } else if constexpr (std::is_same_v<X, Rational> && std::is_same_v<Y, CyclotomicTau>) {
                return op(CyclotomicTau(y.order(), y.eq(), x), y);
            } else if constexpr (std::is_same_v<X, CyclotomicTau> && std::is_same_v<Y, Rational>) {
                return op(x, CyclotomicTau(x.order(), x.eq(), y));
            } else {
                mixed_systems();
            }
        },
        a, b);
}

} // namespace

AlgebraicNumber& AlgebraicNumber::operator+=(const AlgebraicNumber& o)
{
    if (auto* r = std::get_if<Rational>(&value_); r && o.is_rational()) {
        *r += o.as_rational();
        return *this;
    }
    value_ = combine(value_, o.value_, [](auto x, const auto& y) { return x += y; });
    normalize();
    return *this;
}

AlgebraicNumber& AlgebraicNumber::operator-=(const AlgebraicNumber& o)
{
    if (auto* r = std::get_if<Rational>(&value_); r && o.is_rational()) {
        *r -= o.as_rational();
        return *this;
    }
    value_ = combine(value_, o.value_, [](auto x, const auto& y) { return x -= y; });
    normalize();
    return *this;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const AlgebraicNumber& o)
{
    if (auto* r = std::get_if<Rational>(&value_)) {
        if (o.is_rational()) {
            *r *= o.as_rational();
            return *this;
        }
        if (*r == 0)
            return *this;
        if (const auto* c = std::get_if<CyclotomicTau>(&o.value_)) {
            CyclotomicTau scaled = *c;
            scaled *= *r;
            value_ = std::move(scaled);
            return *this;
        }
    } else if (o.is_rational()) {
        if (o.as_rational() == 0) {
            value_ = Rational(0);
            return *this;
        }
        if (auto* c = std::get_if<CyclotomicTau>(&value_)) {
            *c *= o.as_rational();
            return *this;
        }
    }
    value_ = combine(value_, o.value_, [](auto x, const auto& y) { return x *= y; });
    normalize();
    return *this;
}

AlgebraicNumber AlgebraicNumber::operator-() const
{
    return std::visit(
        [](const auto& v) -> AlgebraicNumber {
            using T = std::decay_t<decltype(v)>;
            return T(-v);
        },
        value_);
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return (a - b).is_zero(); }

} // namespace knutson
