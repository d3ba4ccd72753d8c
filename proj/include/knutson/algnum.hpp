#pragma once

#include "knutson/common.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace knutson {

/// Two operands of CyclotomicTau carry different orders or different tau relations.
class OrderMismatchError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Squarefree part s of d (sign kept) and g with d = g^2 s.
std::pair<std::int64_t, std::int64_t> squarefree_decompose(std::int64_t d);

/// Q-linear combination of square roots of squarefree integers. Radicand 1 is
/// the rational part; sqrt(d) for d < 0 means i*sqrt(|d|).
class MultiQuadratic {
public:
    MultiQuadratic() = default;
    MultiQuadratic(const Rational& r);
    MultiQuadratic(int r) : MultiQuadratic(Rational(r)) {}

    /// c * sqrt(d) for any nonzero integer d.
    static MultiQuadratic sqrt(std::int64_t d, const Rational& c = 1);

    const std::map<std::int64_t, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    Rational rational_part() const;

    MultiQuadratic conj() const;
    std::complex<double> to_complex() const;
    std::string to_string() const;

    MultiQuadratic& operator+=(const MultiQuadratic& o);
    MultiQuadratic& operator-=(const MultiQuadratic& o);
    MultiQuadratic& operator*=(const MultiQuadratic& o);
    friend MultiQuadratic operator+(MultiQuadratic a, const MultiQuadratic& b) { return a += b; }
    friend MultiQuadratic operator-(MultiQuadratic a, const MultiQuadratic& b) { return a -= b; }
    friend MultiQuadratic operator*(MultiQuadratic a, const MultiQuadratic& b) { return a *= b; }
    MultiQuadratic operator-() const;
    friend bool operator==(const MultiQuadratic&, const MultiQuadratic&) = default;

private:
    void add_term(std::int64_t radicand, const Rational& c);
    std::map<std::int64_t, Rational> terms_;
};

/// Shared data for Q(zeta_m): the cyclotomic polynomial and the reduction of
/// every power zeta^k, 0 <= k < m, to the power basis 1, zeta, ..., zeta^(phi-1).
class CyclotomicField {
public:
    static std::shared_ptr<const CyclotomicField> get(unsigned order);

    unsigned order() const { return order_; }
    unsigned degree() const { return degree_; }
    /// Coefficients of Phi_m, constant term first.
    const std::vector<BigInt>& polynomial() const { return phi_; }
    const std::vector<std::int64_t>& power(unsigned k) const { return powers_[k % order_]; }

    explicit CyclotomicField(unsigned order);

private:
    unsigned order_;
    unsigned degree_;
    std::vector<BigInt> phi_;
    std::vector<std::vector<std::int64_t>> powers_;
};

/// Phi_m over the integers, constant term first.
std::vector<BigInt> cyclotomic_polynomial(unsigned m);

/// Elements base + tau * tau_part of Q(zeta_m)[tau]/(tau^2 - eq). Both parts are
/// kept reduced modulo Phi_m. eq = 0 means no tau is adjoined. When eq is a
/// perfect square s^2, tau is identified with s.
class CyclotomicTau {
public:
    CyclotomicTau(unsigned order, std::int64_t eq);
    CyclotomicTau(unsigned order, std::int64_t eq, const Rational& r);

    static CyclotomicTau root_of_unity(unsigned order, unsigned k, std::int64_t eq = 0);
    static CyclotomicTau tau(unsigned order, std::int64_t eq);

    unsigned order() const { return field_->order(); }
    std::int64_t eq() const { return eq_; }
    const std::vector<Rational>& base() const { return base_; }
    const std::vector<Rational>& tau_part() const { return tau_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const { return base_[0]; }

    /// zeta -> zeta^(m-1), tau -> sign(eq) * tau.
    CyclotomicTau conj() const;
    std::complex<double> to_complex() const;
    std::string to_string() const;

    /// Adds c * zeta^k to the base (or tau) component.
    void add_power(unsigned k, const Rational& c, bool on_tau = false);

    CyclotomicTau& operator+=(const CyclotomicTau& o);
    CyclotomicTau& operator-=(const CyclotomicTau& o);
    CyclotomicTau& operator*=(const CyclotomicTau& o);
    CyclotomicTau& operator*=(const Rational& r);
    friend CyclotomicTau operator+(CyclotomicTau a, const CyclotomicTau& b) { return a += b; }
    friend CyclotomicTau operator-(CyclotomicTau a, const CyclotomicTau& b) { return a -= b; }
    friend CyclotomicTau operator*(CyclotomicTau a, const CyclotomicTau& b) { return a *= b; }
    CyclotomicTau operator-() const;
    friend bool operator==(const CyclotomicTau& a, const CyclotomicTau& b);

private:
    void check_compatible(const CyclotomicTau& o) const;
    void fold_square_tau();
    static std::vector<Rational> multiply(const CyclotomicField& f, const std::vector<Rational>& a,
                                          const std::vector<Rational>& b);

    std::shared_ptr<const CyclotomicField> field_;
    std::int64_t eq_;
    std::vector<Rational> base_;
    std::vector<Rational> tau_;
};

/// Exact character value: a rational, a multi-quadratic number or an element
/// of a cyclotomic field with tau. Results that happen to be rational are
/// stored as Rational.
class AlgebraicNumber {
public:
    using Storage = std::variant<Rational, MultiQuadratic, CyclotomicTau>;

    AlgebraicNumber() : value_(Rational(0)) {}
    AlgebraicNumber(const Rational& r) : value_(r) {}
    AlgebraicNumber(const BigInt& r) : value_(Rational(r)) {}
    AlgebraicNumber(int r) : value_(Rational(r)) {}
    AlgebraicNumber(MultiQuadratic m);
    AlgebraicNumber(CyclotomicTau c);

    const Storage& storage() const { return value_; }
    bool is_rational() const { return std::holds_alternative<Rational>(value_); }
    const Rational& as_rational() const;
    bool is_zero() const;

    AlgebraicNumber conj() const;
    std::complex<double> to_complex() const;
    std::string to_string() const;

    AlgebraicNumber& operator+=(const AlgebraicNumber& o);
    AlgebraicNumber& operator-=(const AlgebraicNumber& o);
    AlgebraicNumber& operator*=(const AlgebraicNumber& o);
    friend AlgebraicNumber operator+(AlgebraicNumber a, const AlgebraicNumber& b) { return a += b; }
    friend AlgebraicNumber operator-(AlgebraicNumber a, const AlgebraicNumber& b) { return a -= b; }
    friend AlgebraicNumber operator*(AlgebraicNumber a, const AlgebraicNumber& b) { return a *= b; }
    AlgebraicNumber operator-() const;
    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);

private:
    void normalize();
    Storage value_;
};

} // namespace knutson
