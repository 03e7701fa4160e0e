#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "harmcheck/check_result.hpp"
#include "harmcheck/harmonic.hpp"
#include "harmcheck/rational.hpp"
#include "harmcheck/residue.hpp"

namespace harmcheck {

/// Exponent tuple (s_1, ..., s_d) of a multiple harmonic sum
///   sum_{1 <= i_1 < ... < i_d <= n} prod_j 1 / i_j^{s_j}.
struct MhsSpec {
    std::vector<unsigned> exponents;

    MhsSpec(std::initializer_list<unsigned> s) : exponents(s) { validate(); }
    explicit MhsSpec(std::vector<unsigned> s) : exponents(std::move(s)) { validate(); }

    std::size_t depth() const { return exponents.size(); }
    unsigned weight() const {
        return std::accumulate(exponents.begin(), exponents.end(), 0u);
    }
    MhsSpec reversed() const {
        return MhsSpec(std::vector<unsigned>(exponents.rbegin(), exponents.rend()));
    }
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(exponents[i]);
        }
        return s + ")";
    }

private:
    void validate() const {
        if (exponents.empty()) throw std::invalid_argument("MhsSpec: depth must be >= 1");
        for (unsigned s : exponents) {
            if (s == 0) throw std::invalid_argument("MhsSpec: exponents must be >= 1");
        }
    }
};

/// Fast path: d nested prefix passes,
///   P_0 ≡ 1,  P_r[j] = P_r[j-1] + P_{r-1}[j-1] / j^{s_r},
/// giving the depth-d sum at cost O(d·n). Enumeration of the depth-4
/// sum near p = 499 is ~2.5e9 tuples; the prefix form is ~2e3 ops.
inline Residue mhs(const MhsSpec& spec, std::size_t n, const PrimeContext& ctx) {
    if (n >= ctx.prime()) {
        throw NonInvertibleDenominator("mhs: 1/k has no residue class at k = p = " +
                                       std::to_string(ctx.prime()));
    }
    const std::uint64_t m = ctx.modulus();
    std::vector<std::uint64_t> prev(n + 1, 1), cur(n + 1, 0);
    for (unsigned s : spec.exponents) {
        cur[0] = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            std::uint64_t term = 1;
            const std::uint64_t ij = ctx.inverse(j);
            for (unsigned i = 0; i < s; ++i) term = detail::mul_mod(term, ij, m);
            term = detail::mul_mod(term, prev[j - 1], m);
            cur[j] = cur[j - 1] + term;
            if (cur[j] >= m) cur[j] -= m;
        }
        std::swap(prev, cur);
    }
    return Residue(prev[n], ctx.prime(), ctx.exponent());
}

namespace detail {

inline Rational mhs_brute_rec(const MhsSpec& spec, std::size_t pos, std::size_t lo,
                              std::size_t n) {
    Rational acc(0);
    // highest start index still leaving room for the remaining coordinates
    const std::size_t slack = spec.depth() - pos - 1;
    for (std::size_t i = lo; i + slack <= n; ++i) {
        Integer ip = boost::multiprecision::pow(Integer(i), spec.exponents[pos]);
        if (pos + 1 == spec.depth()) {
            acc += Rational(1, ip);
        } else {
            acc += Rational(1, ip) * mhs_brute_rec(spec, pos + 1, i + 1, n);
        }
    }
    return acc;
}

}  // namespace detail

/// Independent oracle: explicit enumeration of every strictly increasing
/// tuple, in exact rational arithmetic. Bounded to n <= 60 and depth <= 4.
inline Rational mhs_bruteforce(const MhsSpec& spec, std::size_t n) {
    if (n > 60 || spec.depth() > 4) {
        throw OracleBoundExceeded("mhs_bruteforce is bounded to n <= 60, depth <= 4");
    }
    if (n < spec.depth()) return Rational(0);  // no admissible tuple
    return detail::mhs_brute_rec(spec, 0, 1, n);
}

/// Both sides of the Newton-identity cross-check at upper bound n,
/// everything by brute force:
///   (sum 1/ijk)(sum 1/l) = A + B + C + 4 sum 1/ijkl   over 1..n,
/// where A, B, C square the first/second/third coordinate.
inline std::pair<Rational, Rational> newton_identity_sides(unsigned n) {
    Rational lhs = mhs_bruteforce(MhsSpec{1, 1, 1}, n) * mhs_bruteforce(MhsSpec{1}, n);
    Rational rhs = mhs_bruteforce(MhsSpec{2, 1, 1}, n) +
                   mhs_bruteforce(MhsSpec{1, 2, 1}, n) +
                   mhs_bruteforce(MhsSpec{1, 1, 2}, n) +
                   4 * mhs_bruteforce(MhsSpec{1, 1, 1, 1}, n);
    return {lhs, rhs};
}

inline CheckResult newton_identity_check(unsigned n, bool /*oracle*/ = false) {
    if (n < 4) {
        throw OutOfApplicabilityRange(
            "newton_identity requires n >= 4 (the quadruple sum must be non-empty)");
    }
    if (n > 60) throw OracleBoundExceeded("newton_identity is bounded to n <= 60");
    detail::CheckBuilder b("newton_identity", 0);
    auto [lhs, rhs] = newton_identity_sides(n);
    b.require(lhs, rhs);
    return b.finish();
}

/// Relations among the weight-4 triple sums at n = p-1, mod p:
/// each of A = sum 1/i²jk, B = sum 1/ij²k, C = sum 1/ijk² vanishes,
/// and A ≡ C ≡ -B/2.
inline CheckResult triple_relations_check(std::uint64_t p, bool oracle = false) {
    detail::require_applicable(p, 7, "triple_relations");
    detail::CheckBuilder b("triple_relations", p);
    auto ctx = shared_context(p, 1);
    const std::size_t n = p - 1;
    const Residue a = mhs(MhsSpec{2, 1, 1}, n, *ctx);
    const Residue bb = mhs(MhsSpec{1, 2, 1}, n, *ctx);
    const Residue c = mhs(MhsSpec{1, 1, 2}, n, *ctx);
    const Residue zero = ctx->zero();
    b.require(a, zero);
    b.require(bb, zero);
    b.require(c, zero);
    b.require(a, -(bb * Residue(ctx->inverse(2), p, 1)));
    b.require(a, c);
    if (oracle && n <= 60) {
        b.require(reduce(mhs_bruteforce(MhsSpec{2, 1, 1}, n), *ctx), a);
        b.require(reduce(mhs_bruteforce(MhsSpec{1, 2, 1}, n), *ctx), bb);
        b.require(reduce(mhs_bruteforce(MhsSpec{1, 1, 2}, n), *ctx), c);
        b.note_oracle();
    }
    return b.finish();
}

/// sum_{i<j<k<l <= p-1} 1/(ijkl) ≡ 0 (mod p).
inline CheckResult quadruple_check(std::uint64_t p, bool oracle = false) {
    detail::require_applicable(p, 7, "quadruple");
    detail::CheckBuilder b("quadruple", p);
    auto ctx = shared_context(p, 1);
    const std::size_t n = p - 1;
    const Residue q = mhs(MhsSpec{1, 1, 1, 1}, n, *ctx);
    b.require(q, ctx->zero());
    if (oracle && n <= 30) {  // depth-4 enumeration bound
        b.require(reduce(mhs_bruteforce(MhsSpec{1, 1, 1, 1}, n), *ctx), q);
        b.note_oracle();
    }
    return b.finish();
}

}  // namespace harmcheck
