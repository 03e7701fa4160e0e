// Command-line front end: congruence scans over prime ranges, the check
// catalog, and ad-hoc evaluation of the underlying operations.

#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "harmcheck/harmcheck.hpp"

namespace {

using harmcheck::Rational;

bool parse_prime_range(const std::string& s, std::uint64_t& lo, std::uint64_t& hi) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoull(s);
            return true;
        }
        lo = std::stoull(s.substr(0, dots));
        hi = std::stoull(s.substr(dots + 2));
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

int run_list_checks() {
    std::cout << std::left << std::setw(20) << "id" << std::setw(10) << "scope"
              << std::setw(9) << "modulus" << std::setw(13) << "oracle"
              << std::setw(30) << "anchor"
              << "description\n";
    for (const auto& d : harmcheck::registry()) {
        std::string scope = d.min_prime ? "p >= " + std::to_string(d.min_prime) : "exact";
        std::string mod = d.modulus_exponent
                              ? "p^" + std::to_string(d.modulus_exponent)
                              : "exact";
        std::string oracle;
        if (d.oracle_max_prime == 0) {
            oracle = "-";
        } else if (d.oracle_max_prime == harmcheck::kNoOracleBound) {
            oracle = "any p";
        } else {
            oracle = "p <= " + std::to_string(d.oracle_max_prime);
        }
        std::cout << std::left << std::setw(20) << d.id << std::setw(10) << scope
                  << std::setw(9) << mod << std::setw(13) << oracle
                  << std::setw(30) << d.anchor << d.description << "\n";
    }
    return 0;
}

struct EvalArgs {
    std::map<std::string, std::string> kv;

    bool has(const std::string& k) const { return kv.count(k) > 0; }

    std::uint64_t num(const std::string& k) const {
        auto it = kv.find(k);
        if (it == kv.end()) throw harmcheck::Error("eval: missing argument " + k);
        return std::stoull(it->second);
    }

    std::uint64_t num_or(const std::string& k, std::uint64_t fallback) const {
        return has(k) ? num(k) : fallback;
    }

    std::vector<unsigned> nums(const std::string& k) const {
        auto it = kv.find(k);
        if (it == kv.end()) throw harmcheck::Error("eval: missing argument " + k);
        std::vector<unsigned> out;
        std::stringstream ss(it->second);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stoul(tok));
        return out;
    }
};

std::optional<harmcheck::PrimeContext> eval_context(const EvalArgs& args) {
    if (!args.has("p")) return std::nullopt;
    return harmcheck::PrimeContext(args.num("p"),
                                   static_cast<unsigned>(args.num_or("e", 1)));
}

int run_eval(const std::string& op, const std::vector<std::string>& raw,
             bool oracle) {
    EvalArgs args;
    for (const auto& tok : raw) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) {
            std::cerr << "error: --args expects key=value, got '" << tok << "'\n";
            return 2;
        }
        args.kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    try {
        if (op == "harmonic") {
            const auto n = static_cast<unsigned>(args.num("n"));
            const auto m = static_cast<unsigned>(args.num_or("m", 1));
            Rational h = harmcheck::harmonic_exact(n, m);
            std::cout << "H(" << n << "," << m << ") = " << harmcheck::rational_str(h);
            if (auto ctx = eval_context(args)) {
                std::cout << " ≡ " << harmcheck::reduce(h, *ctx).value() << " (mod "
                          << ctx->prime() << "^" << ctx->exponent() << ")";
            }
            std::cout << "\n";
            return 0;
        }
        if (op == "bernoulli") {
            const auto k = args.num("k");
            Rational b = harmcheck::bernoulli_exact(k);
            std::cout << "B(" << k << ") = " << harmcheck::rational_str(b);
            if (auto ctx = eval_context(args)) {
                std::cout << " ≡ " << harmcheck::bernoulli_mod(k, *ctx).value()
                          << " (mod " << ctx->prime() << "^" << ctx->exponent() << ")";
            }
            std::cout << "\n";
            return 0;
        }
        if (op == "mhs") {
            const harmcheck::MhsSpec spec(args.nums("s"));
            const auto n = args.num("n");
            std::cout << "mhs" << spec.str() << " n=" << n;
            if (auto ctx = eval_context(args)) {
                const auto fast = harmcheck::mhs(spec, n, *ctx);
                std::cout << " ≡ " << fast.value() << " (mod " << ctx->prime() << "^"
                          << ctx->exponent() << ")";
                if (oracle) {
                    const auto exact = harmcheck::mhs_bruteforce(spec, n);
                    const bool agree = harmcheck::reduce(exact, *ctx) == fast;
                    std::cout << " oracle=" << harmcheck::rational_str(exact)
                              << (agree ? " [agree]" : " [MISMATCH]");
                    std::cout << "\n";
                    return agree ? 0 : 1;
                }
            } else {
                std::cout << " = "
                          << harmcheck::rational_str(harmcheck::mhs_bruteforce(spec, n));
            }
            std::cout << "\n";
            return 0;
        }
        if (op == "hernandez") {
            const auto n = static_cast<unsigned>(args.num("n"));
            const auto m = static_cast<unsigned>(args.num("m"));
            auto [lhs, rhs] = harmcheck::hernandez_sides(n, m);
            const bool equal = lhs == rhs;
            std::cout << "hernandez(n=" << n << ", m=" << m
                      << "): lhs = " << harmcheck::rational_str(lhs)
                      << ", rhs = " << harmcheck::rational_str(rhs)
                      << (equal ? " [equal]" : " [NOT EQUAL]") << "\n";
            return equal ? 0 : 1;
        }
        std::cerr << "error: unknown op '" << op
                  << "' (expected harmonic, bernoulli, mhs, hernandez)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of harmonic-number congruences modulo prime powers"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run checks over a prime range");
    std::string primes_arg = "7..499";
    std::vector<std::string> check_arg;
    std::string format_arg = "text";
    unsigned jobs_arg = 0;
    bool oracle_arg = false;
    std::optional<std::uint64_t> mutate_arg;
    verify->add_option("--primes", primes_arg, "inclusive prime range lo..hi")
        ->capture_default_str();
    verify->add_option("--check", check_arg,
                       "comma-separated check ids (default: all)")
        ->delimiter(',');
    verify->add_option("--format", format_arg, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    verify->add_option("--jobs", jobs_arg, "worker count (0 = all cores)");
    verify->add_flag("--oracle", oracle_arg,
                     "cross-check against brute-force/exact oracles where bounded");
    verify->add_option("--mutate", mutate_arg,
                       "falsifiability self-test: perturb one record "
                       "(seed-selected) and expect a failure");

    // list-checks
    auto* list = app.add_subcommand("list-checks", "print the check registry");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a single operation");
    std::string op_arg;
    std::vector<std::string> eval_args;
    bool eval_oracle = false;
    eval->add_option("--op", op_arg, "harmonic | bernoulli | mhs | hernandez")
        ->required();
    eval->add_option("--args", eval_args, "key=value arguments (e.g. n=6 m=1 p=7 e=2)");
    eval->add_flag("--oracle", eval_oracle, "cross-check the fast path (mhs only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors are exit 2
    }

    if (list->parsed()) return run_list_checks();
    if (eval->parsed()) return run_eval(op_arg, eval_args, eval_oracle);

    harmcheck::RunConfig config;
    if (!parse_prime_range(primes_arg, config.prime_lo, config.prime_hi)) {
        std::cerr << "error: --primes expects lo..hi, got '" << primes_arg << "'\n";
        return 2;
    }
    config.check_ids = check_arg;
    if (format_arg == "json") {
        config.format = harmcheck::OutputFormat::json;
    } else if (format_arg == "csv") {
        config.format = harmcheck::OutputFormat::csv;
    }
    config.jobs = jobs_arg;
    config.oracle = oracle_arg;
    config.mutate_seed = mutate_arg;
    return harmcheck::execute(config, std::cout, std::cerr);
}
