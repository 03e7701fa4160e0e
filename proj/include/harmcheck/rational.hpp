#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "harmcheck/errors.hpp"

namespace harmcheck {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision fraction, kept reduced with positive denominator;
/// zero is canonically 0/1. This is the ground-truth arithmetic domain:
/// every modular fast path in the library is checked against values
/// computed here.
using Rational = boost::multiprecision::cpp_rational;

/// Canonical rendering: "n" for integers, "n/d" otherwise.
inline std::string rational_str(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Canonical residue of v modulo m, in [0, m).
inline std::uint64_t mod_u64(const Integer& v, std::uint64_t m) {
    Integer r = v % m;
    if (r < 0) r += m;
    return r.convert_to<std::uint64_t>();
}

/// Exact binomial coefficient C(n, k).
inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer c = 1;
    for (unsigned i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return c;
}

/// Divide-and-conquer sum of a term list. Balanced splits keep the
/// intermediate numerators/denominators far smaller than a left fold.
inline Rational pairwise_sum(std::span<const Rational> terms) {
    if (terms.empty()) return Rational(0);
    if (terms.size() == 1) return terms[0];
    const std::size_t mid = terms.size() / 2;
    return pairwise_sum(terms.subspan(0, mid)) + pairwise_sum(terms.subspan(mid));
}

/// p-adic valuation of a nonzero rational: the v with q = p^v * (u/w), p ∤ uw.
/// Negative when p divides the denominator.
inline int valuation(const Rational& q, std::uint64_t p) {
    if (q == 0) throw UndefinedValuation("valuation of zero is undefined");
    int v = 0;
    Integer n = numerator(q);
    if (n < 0) n = -n;
    if (n % p == 0) {
        while (n % p == 0) {
            n /= p;
            ++v;
        }
        return v;
    }
    Integer d = denominator(q);
    while (d % p == 0) {
        d /= p;
        --v;
    }
    return v;
}

}  // namespace harmcheck
