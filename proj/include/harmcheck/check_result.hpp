#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>

#include "harmcheck/rational.hpp"
#include "harmcheck/residue.hpp"

namespace harmcheck {

/// Outcome of one registered check at one prime (prime = 0 for checks
/// that are exact identities, independent of any prime). For residue
/// checks `modulus` is p^e and lhs/rhs are canonical residues; for
/// exact checks `modulus` is 0 and lhs/rhs are reduced fractions.
/// Invariant: pass == (lhs == rhs).
struct CheckResult {
    std::string id;
    std::uint64_t prime = 0;
    std::uint64_t modulus = 0;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    bool oracle_checked = false;
    bool mutated = false;
    double elapsed_ms = 0.0;
};

namespace detail {

/// Accumulates the sub-assertions of a check. A check passes when every
/// recorded pair agrees; the reported (lhs, rhs, modulus) triple is the
/// first disagreeing pair if any, otherwise the last agreeing one.
class CheckBuilder {
public:
    CheckBuilder(std::string id, std::uint64_t prime)
        : start_(std::chrono::steady_clock::now()) {
        result_.id = std::move(id);
        result_.prime = prime;
        result_.pass = true;
    }

    void require(const Residue& lhs, const Residue& rhs) {
        record(lhs.str(), rhs.str(), lhs.modulus(), lhs == rhs);
    }

    void require(const Rational& lhs, const Rational& rhs) {
        record(rational_str(lhs), rational_str(rhs), 0, lhs == rhs);
    }

    void note_oracle() { result_.oracle_checked = true; }

    bool failed() const { return !result_.pass; }

    CheckResult finish() {
        result_.elapsed_ms =
            std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - start_)
                .count();
        return result_;
    }

private:
    void record(std::string lhs, std::string rhs, std::uint64_t modulus, bool ok) {
        if (!result_.pass) return;  // keep the first failure
        result_.lhs = std::move(lhs);
        result_.rhs = std::move(rhs);
        result_.modulus = modulus;
        result_.pass = ok;
    }

    CheckResult result_;
    std::chrono::steady_clock::time_point start_;
};

inline void require_applicable(std::uint64_t p, std::uint64_t min_prime,
                               const char* what) {
    if (!is_prime(p) || p < min_prime) {
        throw OutOfApplicabilityRange(std::string(what) + " requires a prime p >= " +
                                      std::to_string(min_prime) + ", got " +
                                      std::to_string(p));
    }
}

}  // namespace detail

}  // namespace harmcheck
