#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "harmcheck/errors.hpp"
#include "harmcheck/rational.hpp"
#include "harmcheck/sieve.hpp"

namespace harmcheck {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

/// p^e, rejecting moduli that would overflow 64-bit products.
inline std::uint64_t checked_pow(std::uint64_t p, unsigned e) {
    constexpr std::uint64_t kMax = std::uint64_t{1} << 62;
    std::uint64_t m = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (m > kMax / p) {
            throw std::invalid_argument("prime power modulus exceeds supported range");
        }
        m *= p;
    }
    return m;
}

inline std::uint64_t egcd_inverse(std::uint64_t a, std::uint64_t m) {
    // iterative extended Euclid; coefficients tracked in signed 128-bit
    __int128 old_r = a % m, r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        __int128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        throw NonInvertible("residue shares a factor with the modulus");
    }
    __int128 x = old_s % static_cast<__int128>(m);
    if (x < 0) x += m;
    return static_cast<std::uint64_t>(x);
}

}  // namespace detail

/// An element of Z/p^e, viewed as the reduction of a rational with
/// p-coprime denominator: the class of m/n is the class of m·n' where
/// n' inverts n modulo p^e. Stored canonically in [0, p^e). Residues
/// combine arithmetically only when their (prime, exponent) match.
class Residue {
public:
    Residue(std::uint64_t value, std::uint64_t prime, unsigned exponent)
        : prime_(prime),
          exponent_(exponent),
          modulus_(detail::checked_pow(prime, exponent)),
          value_(value % modulus_) {
        if (exponent == 0) throw std::invalid_argument("exponent must be >= 1");
    }

    std::uint64_t value() const { return value_; }
    std::uint64_t prime() const { return prime_; }
    unsigned exponent() const { return exponent_; }
    std::uint64_t modulus() const { return modulus_; }

    std::string str() const { return std::to_string(value_); }

    friend Residue operator+(const Residue& a, const Residue& b) {
        check_context(a, b);
        std::uint64_t v = a.value_ + b.value_;
        if (v >= a.modulus_) v -= a.modulus_;
        return a.with_value(v);
    }

    friend Residue operator-(const Residue& a, const Residue& b) {
        check_context(a, b);
        std::uint64_t v = a.value_ >= b.value_ ? a.value_ - b.value_
                                               : a.value_ + (a.modulus_ - b.value_);
        return a.with_value(v);
    }

    friend Residue operator*(const Residue& a, const Residue& b) {
        check_context(a, b);
        return a.with_value(detail::mul_mod(a.value_, b.value_, a.modulus_));
    }

    Residue operator-() const {
        return with_value(value_ == 0 ? 0 : modulus_ - value_);
    }

    friend Residue operator/(const Residue& a, const Residue& b) {
        check_context(a, b);
        return a * inv(b);
    }

    /// Multiplicative inverse; requires the value to be coprime to p.
    friend Residue inv(const Residue& a) {
        if (a.value_ % a.prime_ == 0) {
            throw NonInvertible("residue divisible by the prime has no inverse");
        }
        return a.with_value(detail::egcd_inverse(a.value_, a.modulus_));
    }

    friend Residue pow(Residue base, unsigned e) {
        Residue acc = base.with_value(1 % base.modulus_);
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Residue& a, const Residue& b) {
        check_context(a, b);
        return a.value_ == b.value_;
    }
    friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

private:
    Residue with_value(std::uint64_t v) const {
        Residue r = *this;
        r.value_ = v;
        return r;
    }

    static void check_context(const Residue& a, const Residue& b) {
        if (a.prime_ != b.prime_ || a.exponent_ != b.exponent_) {
            throw ContextMismatch("residues live in different rings: " +
                                  std::to_string(a.prime_) + "^" +
                                  std::to_string(a.exponent_) + " vs " +
                                  std::to_string(b.prime_) + "^" +
                                  std::to_string(b.exponent_));
        }
    }

    std::uint64_t prime_;
    unsigned exponent_;
    std::uint64_t modulus_;
    std::uint64_t value_;
};

/// A prime p with working exponent e and a table of inverses of 1..p-1
/// modulo p^e, so that division by small k inside long sums costs one
/// table lookup instead of one extended Euclid.
class PrimeContext {
public:
    PrimeContext(std::uint64_t prime, unsigned exponent)
        : prime_(prime),
          exponent_(exponent),
          modulus_(detail::checked_pow(prime, exponent)) {
        if (exponent == 0) throw std::invalid_argument("exponent must be >= 1");
        if (!is_prime(prime)) {
            throw std::invalid_argument(std::to_string(prime) + " is not prime");
        }
        inverses_.resize(prime_);
        for (std::uint64_t k = 1; k < prime_; ++k) {
            inverses_[k] = detail::egcd_inverse(k, modulus_);
        }
    }

    std::uint64_t prime() const { return prime_; }
    unsigned exponent() const { return exponent_; }
    std::uint64_t modulus() const { return modulus_; }

    /// Inverse of k mod p^e for 1 <= k <= p-1 (table lookup).
    std::uint64_t inverse(std::uint64_t k) const { return inverses_[k]; }

    /// Embed an integer.
    Residue residue(const Integer& v) const {
        return Residue(mod_u64(v, modulus_), prime_, exponent_);
    }
    Residue residue(std::int64_t v) const { return residue(Integer(v)); }

    Residue zero() const { return Residue(0, prime_, exponent_); }
    Residue one() const { return Residue(1, prime_, exponent_); }

private:
    std::uint64_t prime_;
    unsigned exponent_;
    std::uint64_t modulus_;
    std::vector<std::uint64_t> inverses_;
};

/// Reduce a rational with p-coprime denominator to its residue class
/// mod p^e: numerator times inverse denominator. Ring homomorphism on
/// its domain.
inline Residue reduce(const Rational& q, const PrimeContext& ctx) {
    if (denominator(q) % ctx.prime() == 0) {
        throw NonInvertibleDenominator("denominator divisible by " +
                                       std::to_string(ctx.prime()));
    }
    const std::uint64_t n = mod_u64(numerator(q), ctx.modulus());
    const std::uint64_t d = mod_u64(denominator(q), ctx.modulus());
    return Residue(detail::mul_mod(n, detail::egcd_inverse(d, ctx.modulus()),
                                   ctx.modulus()),
                   ctx.prime(), ctx.exponent());
}

/// Exact division by p^t, dropping the exponent from e+t to e.
/// Requires p^t to divide the stored residue; that divisibility is what
/// makes the quotient well defined mod p^e.
inline Residue lift_divide(const Residue& a, unsigned t) {
    if (t == 0) throw std::invalid_argument("lift_divide: t must be >= 1");
    if (a.exponent() <= t) {
        throw std::invalid_argument("lift_divide: resulting exponent would be < 1");
    }
    const std::uint64_t pt = detail::checked_pow(a.prime(), t);
    if (a.value() % pt != 0) {
        throw InsufficientValuation("residue " + std::to_string(a.value()) +
                                    " is not divisible by " + std::to_string(a.prime()) +
                                    "^" + std::to_string(t));
    }
    return Residue(a.value() / pt, a.prime(), a.exponent() - t);
}

}  // namespace harmcheck
