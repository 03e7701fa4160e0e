#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "harmcheck/bernoulli.hpp"
#include "harmcheck/check_result.hpp"
#include "harmcheck/checks.hpp"
#include "harmcheck/harmonic.hpp"
#include "harmcheck/mhs.hpp"
#include "harmcheck/sieve.hpp"

namespace harmcheck {

/// A registered congruence or identity. `min_prime` is 0 for checks that
/// are exact identities independent of any prime; those run once per
/// invocation. `oracle_max_prime` bounds the independent cross-check
/// route (0 = none; enumeration-backed oracles have tight bounds).
struct CheckDescriptor {
    std::string id;
    std::string description;
    std::string anchor;  // statement label in the source numbering
    unsigned modulus_exponent = 0;
    std::uint64_t min_prime = 0;
    std::uint64_t oracle_max_prime = 0;
    std::function<CheckResult(std::uint64_t prime, bool oracle)> run;
};

inline constexpr std::uint64_t kNoOracleBound = std::numeric_limits<std::uint64_t>::max();

namespace detail {

inline CheckResult hernandez_sweep(std::uint64_t, bool) {
    CheckBuilder b("hernandez", 0);
    for (unsigned m = 1; m <= kHernandezMaxM && !b.failed(); ++m) {
        for (unsigned n = 1; n <= kHernandezMaxN && !b.failed(); ++n) {
            auto [lhs, rhs] = hernandez_sides(n, m);
            b.require(lhs, rhs);
        }
    }
    return b.finish();
}

inline CheckResult newton_sweep(std::uint64_t, bool) {
    CheckBuilder b("newton_identity", 0);
    for (unsigned n = 4; n <= 40 && !b.failed(); ++n) {
        auto [lhs, rhs] = newton_identity_sides(n);
        b.require(lhs, rhs);
    }
    return b.finish();
}

inline CheckResult identity_21_sweep(std::uint64_t, bool) {
    CheckBuilder b("identity_21", 0);
    for (unsigned n = 1; n <= 50 && !b.failed(); ++n) {
        auto [lhs, rhs] = identity_21_sides(n);
        b.require(lhs, rhs);
    }
    return b.finish();
}

}  // namespace detail

inline const std::vector<CheckDescriptor>& registry() {
    static const std::vector<CheckDescriptor> checks = {
        {"reflection", "harmonic reflection H_{p-k} ≡ H_{k-1} for k = 1..p-1",
         "Lemma 2.1, (8)", 1, 7, kNoOracleBound,
         [](std::uint64_t p, bool o) { return reflection_check(p, o); }},
        {"binomial_expansion",
         "(-1)^k C(p-1,k) ≡ 1 - pH_k + (p²/2)(H_k² - H_{k,2})",
         "Lemma 2.1, (9)", 3, 7, kNoOracleBound,
         [](std::uint64_t p, bool o) { return binomial_expansion_check(p, o); }},
        {"wolstenholme",
         "H_{p-1,m} ≡ 0 mod p² (odd m) and mod p (even m), m = 1..4",
         "Lemma 2.2, (10)-(11)", 2, 7, kNoOracleBound,
         [](std::uint64_t p, bool o) { return wolstenholme_suite(p, o); }},
        {"doubling", "2 H_{p-1} ≡ -p H_{p-1,2} (mod p⁴)",
         "Lemma 2.10, (50)", 4, 7, kNoOracleBound,
         [](std::uint64_t p, bool o) { return doubling_check(p, o); }},
        {"lemma_2_3",
         "shifted cubic sums vanish mod p; Σ H_k³/k ≡ (3/2) Σ H_k²/k²;"
         " Σ H_k/k² ≡ Σ H_k²/k mod p²",
         "Lemma 2.3, (12)-(15)", 2, 7, kNoOracleBound,
         [](std::uint64_t p, bool o) { return lemma_2_3_check(p, o); }},
        {"lemma_2_4", "Σ H_k·H_{k,2}/k ≡ Σ 1/(ij²k) + Σ 1/(i²jk) (mod p)",
         "Lemma 2.4, (22)", 1, 7, 61,
         [](std::uint64_t p, bool o) { return lemma_2_4_check(p, o); }},
        {"lemma_2_6", "Σ H_k·H_{k,2}/k ≡ -(3/2) Σ H_k²/k² (mod p)",
         "Lemma 2.6, (28)", 1, 7, kNoOracleBound,
         [](std::uint64_t p, bool o) { return lemma_2_6_check(p, o); }},
        {"triple_relations",
         "A ≡ C ≡ -B/2 and A ≡ B ≡ C ≡ 0 (mod p) for the weight-4 triple sums",
         "Lemma 2.7, (35); Remarks, (49)", 1, 7, 61,
         [](std::uint64_t p, bool o) { return triple_relations_check(p, o); }},
        {"quadruple", "Σ 1/(ijkl) ≡ 0 (mod p)", "(37)", 1, 7, 31,
         [](std::uint64_t p, bool o) { return quadruple_check(p, o); }},
        {"lemma_2_8", "Σ H_k²/k² ≡ -Σ 1/(ij²k) (mod p)",
         "Lemma 2.8, (41)", 1, 7, 61,
         [](std::uint64_t p, bool o) { return lemma_2_8_check(p, o); }},
        {"lemma_2_9", "Σ H_k²/k² ≡ Σ H_k·H_{k,2}/k ≡ Σ H_k³/k ≡ 0 (mod p)",
         "Lemma 2.9, (44)-(46)", 1, 7, kNoOracleBound,
         [](std::uint64_t p, bool o) { return lemma_2_9_check(p, o); }},
        {"theorem_1_1",
         "Σ H_k/k² ≡ Σ H_k²/k ≡ -(3/p²) Σ 1/k ≡ (3/2p) Σ 1/k² (mod p²)",
         "Theorem 1.1, (3)", 2, 7, kNoOracleBound,
         [](std::uint64_t p, bool o) { return theorem_1_1_check(p, o); }},
        {"corollary_1_2",
         "both sums ≡ 3(B_{2p-4}/(2p-4) - 2B_{p-3}/(p-3)) mod p², ≡ B_{p-3} mod p",
         "Corollary 1.2, (4)-(5)", 2, 7, kNoOracleBound,
         [](std::uint64_t p, bool o) { return corollary_1_2_check(p, o); }},
        {"remarks",
         "Σ B_j B_{p-3-j} ≡ 0 mod p; Σ H_k²/k² ≡ -Σ B_j B_{p-3-j};"
         " H_{p-1,3} ≡ -6p²B_{p-5}/5 and Σ H_k²/k - Σ H_k/k² ≡ 2p²B_{p-5}/5 mod p³",
         "Remarks; closing Remark", 3, 7, kNoOracleBound,
         [](std::uint64_t p, bool o) { return remarks_check(p, o); }},
        {"hernandez",
         "alternating-binomial representation of H_{n,m}, n <= 25, m <= 4",
         "Lemma 2.5, (27)", 0, 0, 0, detail::hernandez_sweep},
        {"newton_identity",
         "(Σ 1/ijk)(Σ 1/l) = A + B + C + 4 Σ 1/ijkl, exact, n = 4..40",
         "(36)", 0, 0, 0, detail::newton_sweep},
        {"identity_21",
         "Σ H_k²/k - Σ H_k/k² = (H_n³ - H_{n,3})/3, exact, n = 1..50",
         "(21)", 0, 0, 0, detail::identity_21_sweep},
    };
    return checks;
}

inline const CheckDescriptor* find_check(std::string_view id) {
    for (const auto& d : registry()) {
        if (d.id == id) return &d;
    }
    return nullptr;
}

inline std::vector<std::string> all_check_ids() {
    std::vector<std::string> ids;
    for (const auto& d : registry()) ids.push_back(d.id);
    return ids;
}

struct SkippedCheck {
    std::string id;
    std::uint64_t prime = 0;
    std::string reason;
};

struct RegistryRun {
    std::vector<CheckResult> results;   // ordered by (prime, id)
    std::vector<SkippedCheck> skipped;  // same ordering
};

/// Run the selected checks over the given primes on a bounded worker
/// pool. The result order is (prime, id), independent of the schedule.
/// Applicability bounds are not silently dropped: below-bound pairs are
/// returned in `skipped`. Prime-free checks run once per invocation
/// (with prime recorded as 0) when the prime list is non-empty.
inline RegistryRun run_registry(const std::vector<std::uint64_t>& primes,
                                const std::vector<std::string>& ids,
                                unsigned jobs = 1, bool oracle = false) {
    std::vector<const CheckDescriptor*> selected;
    for (const auto& id : ids) {
        const CheckDescriptor* d = find_check(id);
        if (!d) throw UnknownCheckId("unknown check id: " + id);
        if (std::find(selected.begin(), selected.end(), d) == selected.end()) {
            selected.push_back(d);
        }
    }
    for (std::uint64_t p : primes) {
        if (!is_prime(p)) {
            throw std::invalid_argument("run_registry: " + std::to_string(p) +
                                        " is not prime");
        }
    }

    RegistryRun out;
    struct Task {
        const CheckDescriptor* d;
        std::uint64_t prime;
    };
    std::vector<Task> tasks;
    std::uint64_t max_bernoulli = 0;
    for (const CheckDescriptor* d : selected) {
        if (d->min_prime == 0) {
            if (!primes.empty()) tasks.push_back({d, 0});
            continue;
        }
        for (std::uint64_t p : primes) {
            if (p < d->min_prime) {
                out.skipped.push_back(
                    {d->id, p, "requires p >= " + std::to_string(d->min_prime)});
                continue;
            }
            tasks.push_back({d, p});
            if (d->id == "corollary_1_2") max_bernoulli = std::max(max_bernoulli, 2 * p - 4);
            if (d->id == "remarks") max_bernoulli = std::max(max_bernoulli, p - 3);
        }
    }
    // the Bernoulli cache extends single-threaded, before the fan-out
    if (max_bernoulli > 0) BernoulliCache::instance().ensure(max_bernoulli);

    std::vector<CheckResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            const Task& t = tasks[i];
            try {
                results[i] = t.d->run(t.prime, oracle);
            } catch (const Error& e) {
                CheckResult r;
                r.id = t.d->id;
                r.prime = t.prime;
                r.pass = false;
                r.lhs = std::string("error: ") + e.what();
                results[i] = r;
            }
        }
    };
    const unsigned workers = std::max<unsigned>(
        1, std::min<std::size_t>(jobs == 0 ? 1 : jobs, tasks.size()));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    out.results = std::move(results);
    auto order = [](const auto& a, const auto& b) {
        return a.prime != b.prime ? a.prime < b.prime : a.id < b.id;
    };
    std::sort(out.results.begin(), out.results.end(), order);
    std::sort(out.skipped.begin(), out.skipped.end(), order);
    return out;
}

}  // namespace harmcheck
