#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "harmcheck/check_result.hpp"
#include "harmcheck/rational.hpp"
#include "harmcheck/residue.hpp"

namespace harmcheck {

/// H_{n,m} = sum_{k=1..n} 1/k^m as a reduced fraction; H_{0,m} = 0.
/// Summed divide-and-conquer so intermediate gcd work stays balanced.
inline Rational harmonic_exact(unsigned n, unsigned m) {
    if (m == 0) throw std::invalid_argument("harmonic order must be >= 1");
    struct Rec {
        unsigned m;
        Rational run(unsigned lo, unsigned hi) const {
            if (lo == hi) {
                Integer km = boost::multiprecision::pow(Integer(lo), m);
                return Rational(1, km);
            }
            unsigned mid = lo + (hi - lo) / 2;
            return run(lo, mid) + run(mid + 1, hi);
        }
    };
    if (n == 0) return Rational(0);
    return Rec{m}.run(1, n);
}

/// Prefix sums of 1/k^m reduced mod p^e: values[k] = H_{k,m} as a residue,
/// for k = 0..N. Requires N <= p-1 (1/p has no residue class).
struct HarmonicTable {
    std::uint64_t prime = 0;
    unsigned exponent = 0;
    unsigned order = 0;
    std::vector<Residue> values;
};

inline HarmonicTable harmonic_table(std::size_t n, unsigned order,
                                    const PrimeContext& ctx) {
    if (order == 0) throw std::invalid_argument("harmonic order must be >= 1");
    if (n >= ctx.prime()) {
        throw NonInvertibleDenominator(
            "harmonic_table: 1/k has no residue class at k = p = " +
            std::to_string(ctx.prime()));
    }
    HarmonicTable t{ctx.prime(), ctx.exponent(), order, {}};
    t.values.reserve(n + 1);
    t.values.push_back(ctx.zero());
    const std::uint64_t m = ctx.modulus();
    std::uint64_t acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        std::uint64_t term = 1;
        const std::uint64_t ik = ctx.inverse(k);
        for (unsigned i = 0; i < order; ++i) term = detail::mul_mod(term, ik, m);
        acc += term;
        if (acc >= m) acc -= m;
        t.values.push_back(Residue(acc, ctx.prime(), ctx.exponent()));
    }
    return t;
}

/// Process-wide cache of contexts and full-length tables (N = p-1).
/// Checks running in parallel for the same prime share these read-only.
inline std::shared_ptr<const PrimeContext> shared_context(std::uint64_t prime,
                                                          unsigned exponent) {
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, unsigned>,
                    std::shared_ptr<const PrimeContext>>
        cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{prime, exponent}];
    if (!slot) slot = std::make_shared<const PrimeContext>(prime, exponent);
    return slot;
}

inline std::shared_ptr<const HarmonicTable> shared_harmonic_table(
    std::uint64_t prime, unsigned exponent, unsigned order) {
    static std::mutex mu;
    static std::map<std::tuple<std::uint64_t, unsigned, unsigned>,
                    std::shared_ptr<const HarmonicTable>>
        cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{prime, exponent, order}];
    if (!slot) {
        auto ctx = shared_context(prime, exponent);
        slot = std::make_shared<const HarmonicTable>(
            harmonic_table(prime - 1, order, *ctx));
    }
    return slot;
}

/// Wolstenholme-type vanishing of H_{p-1,m} for m = 1..4: zero mod p^2
/// for odd m, zero mod p for even m. Includes the classical
/// H_{p-1} ≡ 0 (mod p^2).
inline CheckResult wolstenholme_suite(std::uint64_t p, bool oracle = false) {
    detail::require_applicable(p, 7, "wolstenholme");
    detail::CheckBuilder b("wolstenholme", p);
    for (unsigned m = 1; m <= 4; ++m) {
        const unsigned e = (m % 2 == 1) ? 2 : 1;
        auto table = shared_harmonic_table(p, e, m);
        const Residue& total = table->values.back();
        b.require(total, Residue(0, p, e));
        if (oracle) {
            // independent route: the exact fraction must carry enough
            // powers of p, and must reduce to the same residue
            Rational h = harmonic_exact(static_cast<unsigned>(p - 1), m);
            auto ctx = shared_context(p, e);
            b.require(reduce(h, *ctx), total);
            if (valuation(h, p) < static_cast<int>(e)) {
                b.require(Residue(1, p, e), Residue(0, p, e));  // force failure
            }
            b.note_oracle();
        }
    }
    return b.finish();
}

/// Reflection symmetry H_{p-k} ≡ H_{k-1} (mod p) for k = 1..p-1;
/// k = 1 is the H_0 = 0 endpoint, which holds because p | H_{p-1}.
inline CheckResult reflection_check(std::uint64_t p, bool oracle = false) {
    detail::require_applicable(p, 7, "reflection");
    detail::CheckBuilder b("reflection", p);
    auto table = shared_harmonic_table(p, 1, 1);
    for (std::uint64_t k = p - 1; k >= 1; --k) {
        b.require(table->values[p - k], table->values[k - 1]);
        if (b.failed()) break;
    }
    if (oracle) {
        auto ctx = shared_context(p, 1);
        Rational h_prev(0);
        std::vector<Rational> exact(p);
        exact[0] = Rational(0);
        for (std::uint64_t k = 1; k <= p - 1; ++k) {
            exact[k] = exact[k - 1] + Rational(1, k);
        }
        for (std::uint64_t k = 1; k <= p - 1; ++k) {
            b.require(reduce(exact[p - k], *ctx), reduce(exact[k - 1], *ctx));
            if (b.failed()) break;
        }
        b.note_oracle();
    }
    return b.finish();
}

/// (-1)^k C(p-1,k) ≡ 1 - p·H_k + (p²/2)(H_k² - H_{k,2}) (mod p³) for
/// k = 1..p-1, with the binomial built as the running product of
/// (p-i)·i⁻¹ mod p³.
inline CheckResult binomial_expansion_check(std::uint64_t p, bool oracle = false) {
    detail::require_applicable(p, 7, "binomial_expansion");
    detail::CheckBuilder b("binomial_expansion", p);
    auto ctx = shared_context(p, 3);
    auto h1 = shared_harmonic_table(p, 3, 1);
    auto h2 = shared_harmonic_table(p, 3, 2);
    const std::uint64_t m = ctx->modulus();
    const Residue pr = ctx->residue(static_cast<std::int64_t>(p));
    const Residue half_p2 = pr * pr * Residue(ctx->inverse(2), p, 3);
    Residue binom = ctx->one();
    for (std::uint64_t k = 1; k <= p - 1; ++k) {
        binom = binom * ctx->residue(static_cast<std::int64_t>(p - k)) *
                Residue(ctx->inverse(k), p, 3);
        const Residue lhs = (k % 2 == 0) ? binom : -binom;
        const Residue hk = h1->values[k];
        const Residue rhs =
            ctx->one() - pr * hk + half_p2 * (hk * hk - h2->values[k]);
        b.require(lhs, rhs);
        if (b.failed()) break;
    }
    (void)m;
    if (oracle) {
        // exact binomials against the exact right-hand fraction
        for (std::uint64_t k = 1; k <= p - 1; ++k) {
            Integer c = binomial(static_cast<unsigned>(p - 1), static_cast<unsigned>(k));
            if (k % 2 == 1) c = -c;
            Rational hk = harmonic_exact(static_cast<unsigned>(k), 1);
            Rational hk2 = harmonic_exact(static_cast<unsigned>(k), 2);
            Rational rhs = 1 - Rational(p) * hk +
                           Rational(Integer(p) * p, 2) * (hk * hk - hk2);
            b.require(ctx->residue(c), reduce(rhs, *ctx));
            if (b.failed()) break;
        }
        b.note_oracle();
    }
    return b.finish();
}

/// 2·H_{p-1} ≡ -p·H_{p-1,2} (mod p⁴).
inline CheckResult doubling_check(std::uint64_t p, bool oracle = false) {
    detail::require_applicable(p, 7, "doubling");
    detail::CheckBuilder b("doubling", p);
    auto ctx = shared_context(p, 4);
    const Residue h1 = shared_harmonic_table(p, 4, 1)->values.back();
    const Residue h2 = shared_harmonic_table(p, 4, 2)->values.back();
    const Residue two = ctx->residue(2);
    const Residue pr = ctx->residue(static_cast<std::int64_t>(p));
    b.require(two * h1, -(pr * h2));
    if (oracle) {
        Rational lhs = 2 * harmonic_exact(static_cast<unsigned>(p - 1), 1);
        Rational rhs = -Rational(p) * harmonic_exact(static_cast<unsigned>(p - 1), 2);
        b.require(reduce(lhs, *ctx), reduce(rhs, *ctx));
        b.require(reduce(lhs, *ctx), two * h1);
        b.note_oracle();
    }
    return b.finish();
}

}  // namespace harmcheck
