#include "nova/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace nova {

namespace {

bool small_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t mod_inverse(std::uint32_t r, std::uint32_t p) {
    if (r == 0) throw std::domain_error("division by zero in GF(" + std::to_string(p) + ")");
    // p is prime, so r^(p-2) is the inverse.
    return mod_pow(r, p - 2, p);
}

BigInt parse_bigint(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw std::invalid_argument("bad integer literal '" + text + "'");
    for (; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("bad integer literal '" + text + "'");
    return BigInt(text);
}

}  // namespace

std::string Field::name() const {
    return is_rational() ? "Q" : "GF(" + std::to_string(p) + ")";
}

Field Field::gf(std::uint32_t p) {
    if (p >= (1u << 16))
        throw std::invalid_argument("GF modulus " + std::to_string(p) + " exceeds 2^16");
    if (!small_prime(p))
        throw std::invalid_argument("GF modulus " + std::to_string(p) + " is not prime");
    return Field{p};
}

Field Field::parse(const std::string& text) {
    if (text == "Q" || text == "q") return rationals();
    std::string body;
    if (text.rfind("GF(", 0) == 0 && text.back() == ')')
        body = text.substr(3, text.size() - 4);
    else if (text.rfind("GF:", 0) == 0)
        body = text.substr(3);
    else
        throw std::invalid_argument("bad field '" + text + "' (want Q, GF(p) or GF:p)");
    BigInt p = parse_bigint(body);
    if (p <= 0 || p >= (1 << 16))
        throw std::invalid_argument("bad field '" + text + "'");
    return gf(static_cast<std::uint32_t>(p));
}

Scalar Scalar::from_int(long long v, Field f) {
    if (f.is_rational()) return rational(BigRat(v));
    return residue(f.p, v);
}

Scalar Scalar::rational(BigRat q) {
    Scalar s;
    s.q_ = std::move(q);  // cpp_rational keeps itself reduced with positive denominator
    return s;
}

Scalar Scalar::rational(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return rational(BigRat(std::move(num)) / BigRat(std::move(den)));
}

Scalar Scalar::residue(std::uint32_t p, long long v) {
    Field::gf(p);  // validate the modulus
    Scalar s;
    s.p_ = p;
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += p;
    s.r_ = static_cast<std::uint32_t>(m);
    return s;
}

Scalar Scalar::parse(const std::string& text, Field f) {
    std::size_t slash = text.find('/');
    BigInt num, den = 1;
    if (slash == std::string::npos) {
        num = parse_bigint(text);
    } else {
        num = parse_bigint(text.substr(0, slash));
        den = parse_bigint(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("scalar '" + text + "' has zero denominator");
    }
    if (f.is_rational()) return rational(std::move(num), std::move(den));
    BigInt p(f.p);
    BigInt nm = num % p, dm = den % p;
    if (nm < 0) nm += p;
    if (dm < 0) dm += p;
    if (dm == 0)
        throw std::invalid_argument("scalar '" + text + "' has denominator divisible by " +
                                    std::to_string(f.p));
    std::uint32_t n = nm.convert_to<std::uint32_t>();
    std::uint32_t d = dm.convert_to<std::uint32_t>();
    Scalar s;
    s.p_ = f.p;
    s.r_ = static_cast<std::uint32_t>(std::uint64_t(n) * mod_inverse(d, f.p) % f.p);
    return s;
}

bool Scalar::is_zero() const { return p_ == 0 ? q_.is_zero() : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }

std::string Scalar::str() const {
    if (p_ != 0) return std::to_string(r_);
    std::string out = numerator(q_).str();
    if (denominator(q_) != 1) out += "/" + denominator(q_).str();
    return out;
}

const BigRat& Scalar::rat() const {
    if (p_ != 0) throw std::logic_error("GF scalar has no rational payload");
    return q_;
}

std::uint32_t Scalar::residue_value() const {
    if (p_ == 0) throw std::logic_error("rational scalar has no residue");
    return r_;
}

void Scalar::require_same_mode(const Scalar& o) const {
    if (p_ != o.p_)
        throw std::invalid_argument("mixed scalar modes: " + field().name() + " vs " +
                                    o.field().name());
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_ == 0)
        s.q_ = -s.q_;
    else if (s.r_ != 0)
        s.r_ = p_ - s.r_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_mode(o);
    if (p_ == 0) {
        q_ += o.q_;
    } else {
        std::uint64_t t = std::uint64_t(r_) + o.r_;
        r_ = static_cast<std::uint32_t>(t >= p_ ? t - p_ : t);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same_mode(o);
    if (p_ == 0) {
        q_ -= o.q_;
    } else {
        std::uint64_t t = std::uint64_t(r_) + p_ - o.r_;
        r_ = static_cast<std::uint32_t>(t >= p_ ? t - p_ : t);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_mode(o);
    if (p_ == 0)
        q_ *= o.q_;
    else
        r_ = static_cast<std::uint32_t>(std::uint64_t(r_) * o.r_ % p_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same_mode(o);
    if (o.is_zero()) throw std::domain_error("scalar division by zero");
    if (p_ == 0)
        q_ /= o.q_;
    else
        r_ = static_cast<std::uint32_t>(std::uint64_t(r_) * mod_inverse(o.r_, p_) % p_);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    return one(field()) / *this;
}

Scalar Scalar::pow(long long e) const {
    Scalar base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    Scalar acc = one(field());
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_mode(o);
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace nova
