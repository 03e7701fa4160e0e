#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "harmcheck/bernoulli.hpp"
#include "harmcheck/check_result.hpp"
#include "harmcheck/harmonic.hpp"
#include "harmcheck/mhs.hpp"
#include "harmcheck/rational.hpp"
#include "harmcheck/residue.hpp"

namespace harmcheck {

// ---------------------------------------------------------------------------
// Modular sum kernels over k = 1..p-1, built from shared prefix tables.
// ---------------------------------------------------------------------------

namespace detail {

template <class Term>
Residue sum_over_k(const PrimeContext& ctx, Term term) {
    const std::uint64_t m = ctx.modulus();
    std::uint64_t acc = 0;
    for (std::uint64_t k = 1; k < ctx.prime(); ++k) {
        acc += term(k);
        if (acc >= m) acc -= m;
    }
    return Residue(acc, ctx.prime(), ctx.exponent());
}

inline std::uint64_t inv_pow(const PrimeContext& ctx, std::uint64_t k, unsigned s) {
    std::uint64_t v = 1;
    const std::uint64_t ik = ctx.inverse(k);
    for (unsigned i = 0; i < s; ++i) v = mul_mod(v, ik, ctx.modulus());
    return v;
}

}  // namespace detail

/// sum H_k / k^s  (mod p^e)
inline Residue sum_h_div_ks(std::uint64_t p, unsigned e, unsigned s) {
    auto ctx = shared_context(p, e);
    auto h1 = shared_harmonic_table(p, e, 1);
    return detail::sum_over_k(*ctx, [&](std::uint64_t k) {
        return detail::mul_mod(h1->values[k].value(), detail::inv_pow(*ctx, k, s),
                               ctx->modulus());
    });
}

/// sum H_k^2 / k^s  (mod p^e)
inline Residue sum_hsq_div_ks(std::uint64_t p, unsigned e, unsigned s) {
    auto ctx = shared_context(p, e);
    auto h1 = shared_harmonic_table(p, e, 1);
    return detail::sum_over_k(*ctx, [&](std::uint64_t k) {
        const std::uint64_t h = h1->values[k].value();
        return detail::mul_mod(detail::mul_mod(h, h, ctx->modulus()),
                               detail::inv_pow(*ctx, k, s), ctx->modulus());
    });
}

/// sum H_k^3 / k  (mod p^e)
inline Residue sum_hcube_div_k(std::uint64_t p, unsigned e) {
    auto ctx = shared_context(p, e);
    auto h1 = shared_harmonic_table(p, e, 1);
    return detail::sum_over_k(*ctx, [&](std::uint64_t k) {
        const std::uint64_t m = ctx->modulus();
        const std::uint64_t h = h1->values[k].value();
        std::uint64_t v = detail::mul_mod(detail::mul_mod(h, h, m), h, m);
        return detail::mul_mod(v, ctx->inverse(k), m);
    });
}

/// sum H_k · H_{k,2} / k  (mod p^e)
inline Residue sum_h_h2_div_k(std::uint64_t p, unsigned e) {
    auto ctx = shared_context(p, e);
    auto h1 = shared_harmonic_table(p, e, 1);
    auto h2 = shared_harmonic_table(p, e, 2);
    return detail::sum_over_k(*ctx, [&](std::uint64_t k) {
        const std::uint64_t m = ctx->modulus();
        std::uint64_t v = detail::mul_mod(h1->values[k].value(), h2->values[k].value(), m);
        return detail::mul_mod(v, ctx->inverse(k), m);
    });
}

/// sum H_{k-1} / k^3  (mod p^e)
inline Residue sum_hprev_div_k3(std::uint64_t p, unsigned e) {
    auto ctx = shared_context(p, e);
    auto h1 = shared_harmonic_table(p, e, 1);
    return detail::sum_over_k(*ctx, [&](std::uint64_t k) {
        return detail::mul_mod(h1->values[k - 1].value(), detail::inv_pow(*ctx, k, 3),
                               ctx->modulus());
    });
}

/// sum H_{k,3} / k  or, shifted, sum H_{k-1,3} / k  (mod p^e)
inline Residue sum_h3_div_k(std::uint64_t p, unsigned e, bool shifted) {
    auto ctx = shared_context(p, e);
    auto h3 = shared_harmonic_table(p, e, 3);
    return detail::sum_over_k(*ctx, [&](std::uint64_t k) {
        return detail::mul_mod(h3->values[shifted ? k - 1 : k].value(),
                               ctx->inverse(k), ctx->modulus());
    });
}

// ---------------------------------------------------------------------------
// Exact (rational) counterparts used by the oracle routes.
// ---------------------------------------------------------------------------

namespace detail {

/// H_1..H_{n,order} as exact prefix values.
inline std::vector<Rational> exact_harmonic_prefix(unsigned n, unsigned order) {
    std::vector<Rational> h(n + 1);
    for (unsigned k = 1; k <= n; ++k) {
        h[k] = h[k - 1] + Rational(1, boost::multiprecision::pow(Integer(k), order));
    }
    return h;
}

}  // namespace detail

/// Exact sum H_k / k^s over k = 1..n.
inline Rational exact_sum_h_div_ks(unsigned n, unsigned s) {
    auto h = detail::exact_harmonic_prefix(n, 1);
    std::vector<Rational> terms;
    terms.reserve(n);
    for (unsigned k = 1; k <= n; ++k) {
        terms.push_back(h[k] / boost::multiprecision::pow(Integer(k), s));
    }
    return pairwise_sum(terms);
}

/// Exact sum H_k^2 / k^s over k = 1..n.
inline Rational exact_sum_hsq_div_ks(unsigned n, unsigned s) {
    auto h = detail::exact_harmonic_prefix(n, 1);
    std::vector<Rational> terms;
    terms.reserve(n);
    for (unsigned k = 1; k <= n; ++k) {
        terms.push_back(h[k] * h[k] / boost::multiprecision::pow(Integer(k), s));
    }
    return pairwise_sum(terms);
}

/// Exact sum H_k^3 / k over k = 1..n.
inline Rational exact_sum_hcube_div_k(unsigned n) {
    auto h = detail::exact_harmonic_prefix(n, 1);
    std::vector<Rational> terms;
    terms.reserve(n);
    for (unsigned k = 1; k <= n; ++k) terms.push_back(h[k] * h[k] * h[k] / k);
    return pairwise_sum(terms);
}

/// Exact sum H_k · H_{k,2} / k over k = 1..n.
inline Rational exact_sum_h_h2_div_k(unsigned n) {
    auto h1 = detail::exact_harmonic_prefix(n, 1);
    auto h2 = detail::exact_harmonic_prefix(n, 2);
    std::vector<Rational> terms;
    terms.reserve(n);
    for (unsigned k = 1; k <= n; ++k) terms.push_back(h1[k] * h2[k] / k);
    return pairwise_sum(terms);
}

// ---------------------------------------------------------------------------
// Hernández identity
//   sum_{k=1..n} C(n,k)(-1)^{k-1} sum_{1<=i_1<=...<=i_m=k} 1/(i_1...i_m)
//     = H_{n,m}
// ---------------------------------------------------------------------------

namespace detail {

inline void hernandez_inner_rec(unsigned remaining, unsigned lo, unsigned k,
                                const Rational& partial, Rational& acc) {
    if (remaining == 0) {
        acc += partial / k;
        return;
    }
    for (unsigned i = lo; i <= k; ++i) {
        hernandez_inner_rec(remaining - 1, i, k, partial * Rational(1, i), acc);
    }
}

/// Inner sum over non-decreasing m-tuples with last coordinate pinned to k,
/// streamed depth-first (O(m) memory).
inline Rational hernandez_inner(unsigned m, unsigned k) {
    Rational acc(0);
    hernandez_inner_rec(m - 1, 1, k, Rational(1), acc);
    return acc;
}

}  // namespace detail

inline constexpr unsigned kHernandezMaxN = 25;
inline constexpr unsigned kHernandezMaxM = 4;

inline std::pair<Rational, Rational> hernandez_sides(unsigned n, unsigned m) {
    std::vector<Rational> terms;
    terms.reserve(n);
    for (unsigned k = 1; k <= n; ++k) {
        Rational t = Rational(binomial(n, k)) * detail::hernandez_inner(m, k);
        terms.push_back(k % 2 == 1 ? t : -t);
    }
    return {pairwise_sum(terms), harmonic_exact(n, m)};
}

inline CheckResult hernandez_check(unsigned n, unsigned m, bool /*oracle*/ = false) {
    if (n < 1 || m < 1) {
        throw OutOfApplicabilityRange("hernandez requires n >= 1 and m >= 1");
    }
    if (n > kHernandezMaxN || m > kHernandezMaxM) {
        throw OracleBoundExceeded("hernandez enumeration is bounded to n <= 25, m <= 4");
    }
    detail::CheckBuilder b("hernandez", 0);
    auto [lhs, rhs] = hernandez_sides(n, m);
    b.require(lhs, rhs);
    return b.finish();
}

// ---------------------------------------------------------------------------
// The four-member chain, mod p²:
//   sum H_k/k² ≡ sum H_k²/k ≡ -(3/p²) sum 1/k ≡ (3/2p) sum 1/k².
// The divided members are computed at a raised exponent and then divided
// exactly by the prime power, so no negative-valuation fraction is ever
// materialized.
// ---------------------------------------------------------------------------

struct Theorem11Members {
    Residue sum_h_div_k2;    // mod p²
    Residue sum_hsq_div_k;   // mod p²
    Residue scaled_h1;       // -(3/p²)·H_{p-1}, via a mod-p⁴ sum
    Residue scaled_h2;       // (3/2p)·H_{p-1,2}, via a mod-p³ sum
};

inline Theorem11Members theorem_1_1_members(std::uint64_t p) {
    auto ctx2 = shared_context(p, 2);
    const Residue m1 = sum_h_div_ks(p, 2, 2);
    const Residue m2 = sum_hsq_div_ks(p, 2, 1);
    const Residue h1_at4 = shared_harmonic_table(p, 4, 1)->values.back();
    const Residue m3 = -(ctx2->residue(3) * lift_divide(h1_at4, 2));
    const Residue h2_at3 = shared_harmonic_table(p, 3, 2)->values.back();
    const Residue m4 =
        ctx2->residue(3) * Residue(ctx2->inverse(2), p, 2) * lift_divide(h2_at3, 1);
    return {m1, m2, m3, m4};
}

inline CheckResult theorem_1_1_check(std::uint64_t p, bool oracle = false) {
    detail::require_applicable(p, 7, "theorem_1_1");
    detail::CheckBuilder b("theorem_1_1", p);
    auto ctx2 = shared_context(p, 2);
    const auto m = theorem_1_1_members(p);
    b.require(m.sum_h_div_k2, m.sum_hsq_div_k);
    b.require(m.sum_hsq_div_k, m.scaled_h1);
    b.require(m.scaled_h1, m.scaled_h2);
    if (oracle) {
        // exact route: the lifts become honest rational division by p^t
        const unsigned n = static_cast<unsigned>(p - 1);
        b.require(reduce(exact_sum_h_div_ks(n, 2), *ctx2), m.sum_h_div_k2);
        b.require(reduce(exact_sum_hsq_div_ks(n, 1), *ctx2), m.sum_hsq_div_k);
        Rational e3 = Rational(-3) / (Integer(p) * p) * harmonic_exact(n, 1);
        Rational e4 = Rational(3, 2 * p) * harmonic_exact(n, 2);
        b.require(reduce(e3, *ctx2), m.scaled_h1);
        b.require(reduce(e4, *ctx2), m.scaled_h2);
        b.note_oracle();
    }
    return b.finish();
}

// ---------------------------------------------------------------------------
// Bernoulli forms of the chain:
//   both sums ≡ 3(B_{2p-4}/(2p-4) - 2B_{p-3}/(p-3))  (mod p²)
//   both sums ≡ B_{p-3}                              (mod p)
// ---------------------------------------------------------------------------

inline CheckResult corollary_1_2_check(std::uint64_t p, bool oracle = false) {
    detail::require_applicable(p, 7, "corollary_1_2");
    detail::CheckBuilder b("corollary_1_2", p);
    auto ctx2 = shared_context(p, 2);
    auto ctx1 = shared_context(p, 1);
    const Residue sa = sum_h_div_ks(p, 2, 2);
    const Residue sb = sum_hsq_div_ks(p, 2, 1);
    const Residue t1 = bernoulli_mod(2 * p - 4, *ctx2) /
                       ctx2->residue(static_cast<std::int64_t>(2 * p - 4));
    const Residue t2 = bernoulli_mod(p - 3, *ctx2) /
                       ctx2->residue(static_cast<std::int64_t>(p - 3));
    const Residue rhs = ctx2->residue(3) * (t1 - ctx2->residue(2) * t2);
    b.require(sa, rhs);
    b.require(sb, rhs);
    const Residue bp3 = bernoulli_mod(p - 3, *ctx1);
    b.require(Residue(sa.value() % p, p, 1), bp3);
    b.require(Residue(sb.value() % p, p, 1), bp3);
    if (oracle) {
        const unsigned n = static_cast<unsigned>(p - 1);
        b.require(reduce(exact_sum_h_div_ks(n, 2), *ctx2), sa);
        b.require(reduce(exact_sum_hsq_div_ks(n, 1), *ctx2), sb);
        Rational exact_rhs = 3 * (bernoulli_exact(2 * p - 4) / (2 * p - 4) -
                                  2 * bernoulli_exact(p - 3) / (p - 3));
        b.require(reduce(exact_rhs, *ctx2), rhs);
        b.note_oracle();
    }
    return b.finish();
}

// ---------------------------------------------------------------------------
// Auxiliary congruence families.
// ---------------------------------------------------------------------------

/// sum H_{k-1}/k³ ≡ sum H_k/k³ ≡ 0 and sum H_{k-1,3}/k ≡ sum H_{k,3}/k ≡ 0
/// (mod p); sum H_k³/k ≡ (3/2) sum H_k²/k² (mod p); and the mod-p² equality
/// of sum H_k/k² with sum H_k²/k.
inline CheckResult lemma_2_3_check(std::uint64_t p, bool oracle = false) {
    detail::require_applicable(p, 7, "lemma_2_3");
    detail::CheckBuilder b("lemma_2_3", p);
    auto ctx1 = shared_context(p, 1);
    const Residue zero = ctx1->zero();
    b.require(sum_hprev_div_k3(p, 1), zero);
    b.require(sum_h_div_ks(p, 1, 3), zero);
    const Residue three_half =
        ctx1->residue(3) * Residue(ctx1->inverse(2), p, 1);
    b.require(sum_hcube_div_k(p, 1), three_half * sum_hsq_div_ks(p, 1, 2));
    b.require(sum_h3_div_k(p, 1, true), zero);
    b.require(sum_h3_div_k(p, 1, false), zero);
    b.require(sum_h_div_ks(p, 2, 2), sum_hsq_div_ks(p, 2, 1));
    if (oracle) {
        const unsigned n = static_cast<unsigned>(p - 1);
        auto ctx2 = shared_context(p, 2);
        b.require(reduce(exact_sum_h_div_ks(n, 3), *ctx1), sum_h_div_ks(p, 1, 3));
        b.require(reduce(exact_sum_hcube_div_k(n), *ctx1), sum_hcube_div_k(p, 1));
        b.require(reduce(exact_sum_hsq_div_ks(n, 2), *ctx1), sum_hsq_div_ks(p, 1, 2));
        b.require(reduce(exact_sum_h_div_ks(n, 2), *ctx2), sum_h_div_ks(p, 2, 2));
        b.require(reduce(exact_sum_hsq_div_ks(n, 1), *ctx2), sum_hsq_div_ks(p, 2, 1));
        b.note_oracle();
    }
    return b.finish();
}

inline constexpr unsigned kIdentity21MaxN = 200;

/// Exact telescoped identity, any upper bound n:
///   sum_{k<=n} H_k²/k - sum_{k<=n} H_k/k² = (H_n³ - H_{n,3}) / 3.
inline std::pair<Rational, Rational> identity_21_sides(unsigned n) {
    Rational lhs = exact_sum_hsq_div_ks(n, 1) - exact_sum_h_div_ks(n, 2);
    Rational hn = harmonic_exact(n, 1);
    Rational rhs = (hn * hn * hn - harmonic_exact(n, 3)) / 3;
    return {lhs, rhs};
}

inline CheckResult identity_21_check(unsigned n, bool /*oracle*/ = false) {
    if (n < 1) throw OutOfApplicabilityRange("identity_21 requires n >= 1");
    if (n > kIdentity21MaxN) {
        throw OracleBoundExceeded("identity_21 is bounded to n <= 200");
    }
    detail::CheckBuilder b("identity_21", 0);
    auto [lhs, rhs] = identity_21_sides(n);
    b.require(lhs, rhs);
    return b.finish();
}

/// sum H_k·H_{k,2}/k ≡ sum 1/(ij²k) + sum 1/(i²jk)  (mod p).
inline CheckResult lemma_2_4_check(std::uint64_t p, bool oracle = false) {
    detail::require_applicable(p, 7, "lemma_2_4");
    detail::CheckBuilder b("lemma_2_4", p);
    auto ctx1 = shared_context(p, 1);
    const std::size_t n = p - 1;
    const Residue lhs = sum_h_h2_div_k(p, 1);
    const Residue rhs = mhs(MhsSpec{1, 2, 1}, n, *ctx1) + mhs(MhsSpec{2, 1, 1}, n, *ctx1);
    b.require(lhs, rhs);
    if (oracle && n <= 60) {
        b.require(reduce(exact_sum_h_h2_div_k(static_cast<unsigned>(n)), *ctx1), lhs);
        b.require(reduce(mhs_bruteforce(MhsSpec{1, 2, 1}, n) +
                             mhs_bruteforce(MhsSpec{2, 1, 1}, n),
                         *ctx1),
                  rhs);
        b.note_oracle();
    }
    return b.finish();
}

/// sum H_k·H_{k,2}/k ≡ -(3/2) sum H_k²/k²  (mod p).
inline CheckResult lemma_2_6_check(std::uint64_t p, bool oracle = false) {
    detail::require_applicable(p, 7, "lemma_2_6");
    detail::CheckBuilder b("lemma_2_6", p);
    auto ctx1 = shared_context(p, 1);
    const Residue lhs = sum_h_h2_div_k(p, 1);
    const Residue rhs = -(ctx1->residue(3) * Residue(ctx1->inverse(2), p, 1) *
                          sum_hsq_div_ks(p, 1, 2));
    b.require(lhs, rhs);
    if (oracle) {
        const unsigned n = static_cast<unsigned>(p - 1);
        b.require(reduce(exact_sum_h_h2_div_k(n), *ctx1), lhs);
        b.require(reduce(Rational(-3, 2) * exact_sum_hsq_div_ks(n, 2), *ctx1), rhs);
        b.note_oracle();
    }
    return b.finish();
}

/// sum H_k²/k² ≡ -sum 1/(ij²k)  (mod p).
inline CheckResult lemma_2_8_check(std::uint64_t p, bool oracle = false) {
    detail::require_applicable(p, 7, "lemma_2_8");
    detail::CheckBuilder b("lemma_2_8", p);
    auto ctx1 = shared_context(p, 1);
    const std::size_t n = p - 1;
    const Residue lhs = sum_hsq_div_ks(p, 1, 2);
    const Residue rhs = -mhs(MhsSpec{1, 2, 1}, n, *ctx1);
    b.require(lhs, rhs);
    if (oracle && n <= 60) {
        b.require(reduce(exact_sum_hsq_div_ks(static_cast<unsigned>(n), 2), *ctx1), lhs);
        b.require(reduce(-mhs_bruteforce(MhsSpec{1, 2, 1}, n), *ctx1), rhs);
        b.note_oracle();
    }
    return b.finish();
}

/// The three weight-4 vanishing congruences mod p:
///   sum H_k²/k² ≡ 0,  sum H_k·H_{k,2}/k ≡ 0,  sum H_k³/k ≡ 0.
inline CheckResult lemma_2_9_check(std::uint64_t p, bool oracle = false) {
    detail::require_applicable(p, 7, "lemma_2_9");
    detail::CheckBuilder b("lemma_2_9", p);
    auto ctx1 = shared_context(p, 1);
    const Residue zero = ctx1->zero();
    b.require(sum_hsq_div_ks(p, 1, 2), zero);
    b.require(sum_h_h2_div_k(p, 1), zero);
    b.require(sum_hcube_div_k(p, 1), zero);
    if (oracle) {
        const unsigned n = static_cast<unsigned>(p - 1);
        b.require(reduce(exact_sum_hsq_div_ks(n, 2), *ctx1), zero);
        b.require(reduce(exact_sum_h_h2_div_k(n), *ctx1), zero);
        b.require(reduce(exact_sum_hcube_div_k(n), *ctx1), zero);
        b.note_oracle();
    }
    return b.finish();
}

// ---------------------------------------------------------------------------
// Remarks: the Bernoulli convolution and the mod-p³ refinements.
// ---------------------------------------------------------------------------

/// sum_{j=0..p-3} B_j · B_{p-3-j}  (mod p). Never hits a von Staudt–Clausen
/// pole: every index is below p-1.
inline Residue bernoulli_convolution(const PrimeContext& ctx) {
    const std::uint64_t p = ctx.prime();
    Residue acc = ctx.zero();
    for (std::uint64_t j = 0; j + 3 <= p; ++j) {
        if (j >= 3 && j % 2 == 1) continue;  // B_j = 0
        const std::uint64_t jj = p - 3 - j;
        if (jj >= 3 && jj % 2 == 1) continue;
        acc = acc + bernoulli_mod(j, ctx) * bernoulli_mod(jj, ctx);
    }
    return acc;
}

/// Exact counterpart of the convolution.
inline Rational bernoulli_convolution_exact(std::uint64_t p) {
    std::vector<Rational> terms;
    for (std::uint64_t j = 0; j + 3 <= p; ++j) {
        if (j >= 3 && j % 2 == 1) continue;
        const std::uint64_t jj = p - 3 - j;
        if (jj >= 3 && jj % 2 == 1) continue;
        terms.push_back(bernoulli_exact(j) * bernoulli_exact(jj));
    }
    return pairwise_sum(terms);
}

/// (i)  sum B_j B_{p-3-j} ≡ 0 (mod p)
/// (ii) sum H_k²/k² ≡ -sum B_j B_{p-3-j} (mod p)
/// (iii) H_{p-1,3} ≡ -6p²B_{p-5}/5 (mod p³)
/// (iv) sum H_k²/k - sum H_k/k² ≡ 2p²B_{p-5}/5 (mod p³)
inline CheckResult remarks_check(std::uint64_t p, bool oracle = false) {
    detail::require_applicable(p, 7, "remarks");
    detail::CheckBuilder b("remarks", p);
    auto ctx1 = shared_context(p, 1);
    auto ctx3 = shared_context(p, 3);
    const Residue conv = bernoulli_convolution(*ctx1);
    b.require(conv, ctx1->zero());
    b.require(sum_hsq_div_ks(p, 1, 2), -conv);
    const Residue p2 = ctx3->residue(Integer(p) * p);
    const Residue b5 = bernoulli_mod(p - 5, *ctx3);
    const Residue inv5 = Residue(ctx3->inverse(5), p, 3);
    const Residue h3_total = shared_harmonic_table(p, 3, 3)->values.back();
    b.require(h3_total, -(ctx3->residue(6) * p2 * b5 * inv5));
    const Residue diff = sum_hsq_div_ks(p, 3, 1) - sum_h_div_ks(p, 3, 2);
    b.require(diff, ctx3->residue(2) * p2 * b5 * inv5);
    if (oracle) {
        const unsigned n = static_cast<unsigned>(p - 1);
        b.require(reduce(bernoulli_convolution_exact(p), *ctx1), conv);
        b.require(reduce(harmonic_exact(n, 3), *ctx3), h3_total);
        Rational exact_diff = exact_sum_hsq_div_ks(n, 1) - exact_sum_h_div_ks(n, 2);
        b.require(reduce(exact_diff, *ctx3), diff);
        Rational exact_rhs = Rational(2 * Integer(p) * p, 5) * bernoulli_exact(p - 5);
        b.require(reduce(exact_rhs, *ctx3),
                  ctx3->residue(2) * p2 * b5 * inv5);
        b.note_oracle();
    }
    return b.finish();
}

}  // namespace harmcheck
