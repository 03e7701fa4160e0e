#pragma once

#include <cstdint>
#include <vector>

#include "harmcheck/errors.hpp"

namespace harmcheck {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

/// All primes in [lo, hi], ascending. Requires 2 <= lo <= hi.
inline std::vector<std::uint64_t> sieve_primes(std::uint64_t lo, std::uint64_t hi) {
    if (lo < 2 || lo > hi) throw BadRange("sieve_primes: need 2 <= lo <= hi");
    if (hi > 100'000'000) throw BadRange("sieve_primes: upper bound too large");
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    }
    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = lo < 2 ? 2 : lo; n <= hi; ++n) {
        if (!composite[n]) primes.push_back(n);
    }
    return primes;
}

}  // namespace harmcheck
