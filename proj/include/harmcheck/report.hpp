#pragma once

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "harmcheck/registry.hpp"
#include "harmcheck/sieve.hpp"

namespace harmcheck {

enum class OutputFormat { text, json, csv };

struct RunConfig {
    std::uint64_t prime_lo = 7;
    std::uint64_t prime_hi = 499;
    std::vector<std::string> check_ids;  // empty = every registered check
    OutputFormat format = OutputFormat::text;
    unsigned jobs = 0;  // 0 = available parallelism
    bool oracle = false;
    std::optional<std::uint64_t> mutate_seed;  // falsifiability self-test
};

/// Perturb the lhs of one seed-selected record by +1 (mod its modulus for
/// residue records, literally for exact records) and refresh its pass flag.
/// The harness must report the mutation as a failure.
inline void apply_mutation(std::vector<CheckResult>& results, std::uint64_t seed) {
    if (results.empty()) return;
    std::mt19937_64 rng(seed);
    CheckResult& r = results[rng() % results.size()];
    if (r.modulus > 0) {
        const std::uint64_t v = std::stoull(r.lhs);
        r.lhs = std::to_string((v + 1) % r.modulus);
    } else {
        const auto slash = r.lhs.find('/');
        Integer num(slash == std::string::npos ? r.lhs : r.lhs.substr(0, slash));
        Integer den(slash == std::string::npos ? "1" : r.lhs.substr(slash + 1));
        r.lhs = rational_str(Rational(num + den, den));
    }
    r.pass = (r.lhs == r.rhs);
    r.mutated = true;
}

namespace detail {

inline double rounded_ms(double ms) { return std::round(ms * 1000.0) / 1000.0; }

inline std::string text_line(const CheckResult& r) {
    std::string line = r.pass ? "PASS " : "FAIL ";
    line += r.id;
    line += r.prime ? " p=" + std::to_string(r.prime) : " exact";
    if (r.modulus > 0) line += " mod=" + std::to_string(r.modulus);
    line += " lhs=" + r.lhs + " rhs=" + r.rhs;
    if (r.oracle_checked) line += " oracle";
    if (r.mutated) line += " mutated";
    return line;
}

inline std::string text_line(const SkippedCheck& s) {
    return "SKIP " + s.id + " p=" + std::to_string(s.prime) + " (" + s.reason + ")";
}

inline std::string json_line(const CheckResult& r) {
    nlohmann::ordered_json j;
    j["check_id"] = r.id;
    j["prime"] = r.prime;
    j["modulus"] = r.modulus;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["pass"] = r.pass;
    j["oracle_checked"] = r.oracle_checked;
    j["elapsed_ms"] = rounded_ms(r.elapsed_ms);
    if (r.mutated) j["mutated"] = true;
    return j.dump();
}

inline std::string json_line(const SkippedCheck& s) {
    nlohmann::ordered_json j;
    j["check_id"] = s.id;
    j["prime"] = s.prime;
    j["skipped"] = true;
    j["reason"] = s.reason;
    return j.dump();
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

inline constexpr const char* kCsvHeader =
    "check_id,prime,modulus,lhs,rhs,pass,oracle_checked,elapsed_ms";

inline std::string csv_line(const CheckResult& r) {
    char ms[32];
    std::snprintf(ms, sizeof(ms), "%.3f", r.elapsed_ms);
    return csv_field(r.id) + "," + std::to_string(r.prime) + "," +
           std::to_string(r.modulus) + "," + csv_field(r.lhs) + "," +
           csv_field(r.rhs) + "," + (r.pass ? "true" : "false") + "," +
           (r.oracle_checked ? "true" : "false") + "," + ms;
}

}  // namespace detail

/// Sieve the configured range, run the registry, and stream one record
/// per (prime, check) in (prime, id) order. Exit code 0 if every check
/// passed, 1 if any failed, 2 on a usage or configuration error.
///
/// Text output carries no timings, so it is byte-identical across runs
/// with the same config; json/csv include elapsed_ms, which is the one
/// field that varies between runs.
inline int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.prime_hi > 46340) {
            throw BadRange("primes above 46340 are unsupported (p^4 must fit 64 bits)");
        }
        const auto primes = sieve_primes(config.prime_lo, config.prime_hi);
        const auto ids =
            config.check_ids.empty() ? all_check_ids() : config.check_ids;
        const unsigned jobs = config.jobs != 0
                                  ? config.jobs
                                  : std::max(1u, std::thread::hardware_concurrency());
        RegistryRun run = run_registry(primes, ids, jobs, config.oracle);
        if (config.mutate_seed) apply_mutation(run.results, *config.mutate_seed);

        // merge records and skips in (prime, id) order
        std::size_t ir = 0, is = 0;
        auto skip_first = [&] {
            if (is >= run.skipped.size()) return false;
            if (ir >= run.results.size()) return true;
            const auto& s = run.skipped[is];
            const auto& r = run.results[ir];
            return s.prime != r.prime ? s.prime < r.prime : s.id < r.id;
        };
        if (config.format == OutputFormat::csv) out << detail::kCsvHeader << "\n";
        while (ir < run.results.size() || is < run.skipped.size()) {
            if (skip_first()) {
                const auto& s = run.skipped[is++];
                switch (config.format) {
                    case OutputFormat::text: out << detail::text_line(s) << "\n"; break;
                    case OutputFormat::json: out << detail::json_line(s) << "\n"; break;
                    case OutputFormat::csv: err << "skipped: " << detail::text_line(s) << "\n"; break;
                }
            } else {
                const auto& r = run.results[ir++];
                switch (config.format) {
                    case OutputFormat::text: out << detail::text_line(r) << "\n"; break;
                    case OutputFormat::json: out << detail::json_line(r) << "\n"; break;
                    case OutputFormat::csv: out << detail::csv_line(r) << "\n"; break;
                }
            }
        }

        std::size_t failed = 0;
        for (const auto& r : run.results) {
            if (!r.pass) ++failed;
        }
        std::string summary = "summary: " +
                              std::to_string(run.results.size() - failed) + " passed, " +
                              std::to_string(failed) + " failed, " +
                              std::to_string(run.skipped.size()) + " skipped";
        (config.format == OutputFormat::text ? out : err) << summary << "\n";
        return failed > 0 ? 1 : 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace harmcheck
