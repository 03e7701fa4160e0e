#pragma once

#include <cstdint>
#include <shared_mutex>
#include <vector>

#include "harmcheck/errors.hpp"
#include "harmcheck/rational.hpp"
#include "harmcheck/residue.hpp"

namespace harmcheck {

/// Bernoulli numbers B_0, B_1, ... as exact rationals, via the binomial
/// recurrence sum_{j=0..k} C(k+1,j) B_j = 0 (k >= 1), i.e. the
/// generating function x/(e^x - 1).
///
/// The recurrence is evaluated over a running common denominator: with
/// L a common multiple of den(B_0..B_{k-1}) and N_j = B_j·L, the sum
/// S = sum_j C(k+1,j)·N_j is integral and B_k = -S / ((k+1)·L). That
/// keeps the inner loop in integer arithmetic with one normalization
/// per index. The cache grows monotonically and is retained for the
/// process lifetime; reads are shared, extension is exclusive.
class BernoulliCache {
public:
    static BernoulliCache& instance() {
        static BernoulliCache cache;
        return cache;
    }

    /// Extend the cache so indices 0..k are available.
    void ensure(std::size_t k) {
        std::unique_lock lock(mutex_);
        extend(k);
    }

    Rational at(std::size_t k) {
        {
            std::shared_lock lock(mutex_);
            if (k < values_.size()) return values_[k];
        }
        std::unique_lock lock(mutex_);
        extend(k);
        return values_[k];
    }

private:
    BernoulliCache() {
        values_ = {Rational(1)};
        scaled_ = {Integer(1)};
        denom_lcm_ = 1;
    }

    void extend(std::size_t k) {
        while (values_.size() <= k) {
            const std::size_t n = values_.size();  // computing B_n
            Integer c = 1;                         // C(n+1, j), starting at j = 0
            Integer s = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (!scaled_[j].is_zero()) s += c * scaled_[j];
                c *= n + 1 - j;
                c /= j + 1;
            }
            Rational bn(-s, denom_lcm_ * Integer(n + 1));
            const Integer& d = denominator(bn);
            Integer g = gcd(denom_lcm_, d);
            if (g != d) {
                // a new prime entered the denominator: rescale
                Integer f = d / g;
                denom_lcm_ *= f;
                for (auto& sc : scaled_) sc *= f;
            }
            scaled_.push_back(numerator(bn) * (denom_lcm_ / d));
            values_.push_back(std::move(bn));
        }
    }

    mutable std::shared_mutex mutex_;
    std::vector<Rational> values_;
    std::vector<Integer> scaled_;  // values_[j] * denom_lcm_
    Integer denom_lcm_;
};

/// B_k as an exact reduced fraction.
inline Rational bernoulli_exact(std::size_t k) {
    return BernoulliCache::instance().at(k);
}

/// B_k reduced mod p^e. By von Staudt–Clausen the denominator of B_k is
/// the product of the primes q with (q-1) | k, so reduction fails exactly
/// for even k > 0 with (p-1) | k.
inline Residue bernoulli_mod(std::size_t k, const PrimeContext& ctx) {
    Rational bk = bernoulli_exact(k);
    if (denominator(bk) % ctx.prime() == 0) {
        throw VonStaudtPole("B_" + std::to_string(k) + " has a pole at p = " +
                            std::to_string(ctx.prime()));
    }
    return reduce(bk, ctx);
}

}  // namespace harmcheck
