#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace nova {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Coefficient domain: the rationals (p == 0) or a prime field GF(p) with
/// p < 2^16.  Every tensor, operator and form carries one of these and all
/// entries must live in it.
struct Field {
    std::uint32_t p = 0;  ///< 0 means Q, otherwise the prime modulus.

    bool is_rational() const { return p == 0; }
    bool operator==(const Field&) const = default;

    std::string name() const;

    static Field rationals() { return Field{0}; }
    /// Throws std::invalid_argument unless p is prime and below 2^16.
    static Field gf(std::uint32_t p);
    /// Accepts "Q", "GF(p)" or "GF:p".
    static Field parse(const std::string& text);
};

/// Exact scalar value: a reduced rational with arbitrary-precision parts, or
/// a residue in GF(p).  The mode is part of the value; arithmetic or
/// comparison between different modes throws std::invalid_argument.
class Scalar {
public:
    /// Rational zero.
    Scalar() = default;

    static Scalar zero(Field f) { return from_int(0, f); }
    static Scalar one(Field f) { return from_int(1, f); }
    static Scalar from_int(long long v, Field f);
    static Scalar rational(BigRat q);
    static Scalar rational(BigInt num, BigInt den);  ///< Reduces; den == 0 throws.
    static Scalar residue(std::uint32_t p, long long v);

    /// Parses "a", "-a" or "a/b".  In GF(p) mode the fraction is mapped to
    /// a * b^-1 mod p; b divisible by p is an error.
    static Scalar parse(const std::string& text, Field f);

    Field field() const { return Field{p_}; }
    bool same_mode(const Scalar& o) const { return p_ == o.p_; }

    bool is_zero() const;
    bool is_one() const;

    /// Reduced decimal form: "a", "-a" or "a/b"; GF residues print as "r".
    std::string str() const;

    const BigRat& rat() const;        ///< Throws if in GF mode.
    std::uint32_t residue_value() const;  ///< Throws if rational.

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);  ///< Division by zero throws.

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;       ///< Throws on zero.
    Scalar pow(long long e) const;  ///< Negative e needs a nonzero base.

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
    BigRat q_;             // payload in rational mode
    std::uint32_t p_ = 0;  // 0 = rational mode, else prime modulus
    std::uint32_t r_ = 0;  // residue in [0, p) when p_ != 0

    void require_same_mode(const Scalar& o) const;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace nova
