#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace knutson {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Argument outside an operation's documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Requested size exceeds a configured computation cap.
class ResourceCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (exact arithmetic disagrees with theory).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A transcribed character table failed its orthogonality checks.
class TranscriptionError : public InternalError {
public:
    using InternalError::InternalError;
};

inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline std::string to_string(const Rational& x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw PreconditionError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

BigInt factorial(unsigned n);

inline BigInt lcm(const BigInt& a, const BigInt& b)
{
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b)
{
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace knutson
