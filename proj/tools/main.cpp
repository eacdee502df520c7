#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sixsieve/oracle.hpp"
#include "sixsieve/parallel.hpp"
#include "sixsieve/pi.hpp"

namespace {

using nlohmann::json;
using namespace sixsieve;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitMismatch = 3;

std::atomic<bool> g_cancel{false};

void on_signal(int) { g_cancel.store(true); }

struct CommonOpts {
    std::string variant = "fast";
    int workers = 1;
    std::string format = "text";
    std::string checkpoint_path;
    std::int64_t chunk = 100'000;
};

ScanVariant variant_of(const std::string& name) {
    return name == "faithful" ? ScanVariant::Faithful : ScanVariant::Fast;
}

const char* tag_name(ClassTag t) {
    return t == ClassTag::Alpha ? "alpha" : "beta";
}

// Evaluate L over [a,b] honoring --workers and --checkpoint. Interruption
// (SIGINT) leaves the checkpoint behind and is reported as a resource exit.
std::uint64_t eval_lambda_cli(std::int64_t a, std::int64_t b,
                              const CommonOpts& opts) {
    const auto variant = variant_of(opts.variant);
    if (opts.workers == 1 && opts.checkpoint_path.empty())
        return lambda_range(GeneratorIndex{a}, GeneratorIndex{b}, false, variant).L;

    std::optional<CheckpointConfig> ckpt;
    std::optional<Checkpoint> resume;
    if (!opts.checkpoint_path.empty()) {
        ckpt = CheckpointConfig{opts.checkpoint_path, opts.chunk, 0};
        if (std::filesystem::exists(opts.checkpoint_path)) {
            resume = load_checkpoint(opts.checkpoint_path);
            std::cerr << "resuming from checkpoint " << opts.checkpoint_path
                      << "\n";
        }
    }
    auto run = run_parallel(GeneratorIndex{a}, GeneratorIndex{b}, opts.workers,
                            false, variant, ckpt, resume, &g_cancel);
    if (!run.complete) {
        std::cerr << "interrupted; progress saved"
                  << (ckpt ? " to " + opts.checkpoint_path : "") << "\n";
        throw ResourceError("run interrupted");
    }
    if (ckpt)
        std::filesystem::remove(opts.checkpoint_path);
    return run.result.L;
}

int cmd_pi(std::int64_t h, const CommonOpts& opts) {
    const auto variant = variant_of(opts.variant);
    std::int64_t c2 = h >= 49 ? (h - 1) / 6 : 0;
    std::uint64_t lambda_value = 0;
    const auto start = std::chrono::steady_clock::now();
    const auto count = pi_of_h(h, variant, [&](std::int64_t a, std::int64_t b) {
        lambda_value = eval_lambda_cli(a, b, opts);
        return lambda_value;
    });
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;

    if (opts.format == "json") {
        json rec = {{"kind", "PI"},          {"h", h},
                    {"pi", count},           {"c2", c2},
                    {"lambda", lambda_value}, {"variant", opts.variant},
                    {"workers", opts.workers}, {"seconds", elapsed.count()}};
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << "pi(" << h << ") = " << count << "\n"
                  << "  c2      = " << c2 << "\n"
                  << "  lambda  = " << lambda_value << "\n"
                  << "  variant = " << opts.variant << "\n"
                  << "  time    = " << elapsed.count() << " s\n";
    }
    return kExitOk;
}

int cmd_range(std::int64_t c1, std::int64_t c2, bool exact_only,
              const CommonOpts& opts) {
    if (c1 < 1 || c1 > c2) {
        std::cerr << "error: need 1 <= c1 <= c2\n";
        return kExitUsage;
    }
    const bool delta_applicable = c1 >= 8 && c1 < c2;
    if (!delta_applicable && !exact_only) {
        std::cerr << "error: the interval formula needs 8 <= c1 < c2; "
                     "pass --exact for the inclusive count only\n";
        return kExitUsage;
    }

    const auto lambda_value = eval_lambda_cli(c1, c2, opts);
    const auto exact =
        2 * static_cast<std::uint64_t>(c2 - c1 + 1) - lambda_value;
    std::optional<std::int64_t> delta;
    if (delta_applicable)
        delta = 2 * (c2 - c1) - static_cast<std::int64_t>(lambda_value) + 1;

    const bool lower_endpoint_prime = is_prime_trial(6 * c1 - 1);
    if (delta && !lower_endpoint_prime)
        std::cerr << "note: 6*c1-1 = " << 6 * c1 - 1
                  << " is composite, so the interval formula undercounts the "
                     "primes in (" << 6 * c1 - 1 << ", " << 6 * c2 + 1
                  << "]; use the exact inclusive count\n";

    if (opts.format == "json") {
        json rec = {{"kind", "RANGE"},
                    {"c1", c1},
                    {"c2", c2},
                    {"lambda", lambda_value},
                    {"exact", exact},
                    {"lower_endpoint_prime", lower_endpoint_prime},
                    {"variant", opts.variant}};
        if (delta)
            rec["delta_pi"] = *delta;
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << "lambda(" << c1 << ", " << c2 << ") = " << lambda_value
                  << "\n";
        if (delta)
            std::cout << "  delta_pi (interval formula) = " << *delta << "\n";
        std::cout << "  exact primes among 6c±1, c in [" << c1 << "," << c2
                  << "] = " << exact << "\n";
    }
    return kExitOk;
}

int cmd_list(std::int64_t c1, std::int64_t c2, const CommonOpts& opts) {
    if (c1 < 1 || c1 > c2) {
        std::cerr << "error: need 1 <= c1 <= c2\n";
        return kExitUsage;
    }
    const auto result = lambda_range(GeneratorIndex{c1}, GeneratorIndex{c2},
                                     true, variant_of(opts.variant));
    if (opts.format == "csv")
        std::cout << "c,value,class\n";
    for (const auto& p : result.primes) {
        if (opts.format == "json") {
            json rec = {{"kind", "PRIME"},
                        {"c", p.c},
                        {"value", p.value},
                        {"class", tag_name(p.tag)}};
            std::cout << rec.dump() << "\n";
        } else if (opts.format == "csv") {
            std::cout << p.c << ',' << p.value << ',' << tag_name(p.tag) << "\n";
        } else {
            std::cout << p.value << "  (c=" << p.c << ", " << tag_name(p.tag)
                      << ")\n";
        }
    }
    return kExitOk;
}

int cmd_verify(std::int64_t c1, std::int64_t c2, std::int64_t inject_fault,
               const CommonOpts& opts) {
    if (c1 < 1 || c1 > c2) {
        std::cerr << "error: need 1 <= c1 <= c2\n";
        return kExitUsage;
    }
    if (c2 > 2'000'000)
        throw ResourceError("verify range exceeds the oracle budget");

    const auto variant = variant_of(opts.variant);
    for (std::int64_t c = c1; c <= c2; ++c) {
        auto cls = variant == ScanVariant::Fast ? classify_fast(GeneratorIndex{c})
                                                : classify(GeneratorIndex{c});
        if (c == inject_fault)
            cls.alpha_composite = !cls.alpha_composite;
        const bool alpha_expected = !is_prime_trial(6 * c + 1);
        const bool beta_expected = !is_prime_trial(6 * c - 1);
        if (cls.alpha_composite != alpha_expected ||
            cls.beta_composite != beta_expected) {
            if (opts.format == "json") {
                json rec = {{"kind", "VERIFY"},
                            {"status", "mismatch"},
                            {"c", c},
                            {"alpha_got", cls.alpha_composite},
                            {"alpha_expected", alpha_expected},
                            {"beta_got", cls.beta_composite},
                            {"beta_expected", beta_expected}};
                std::cout << rec.dump() << "\n";
            } else {
                std::cout << "MISMATCH at c=" << c << ": alpha composite got "
                          << cls.alpha_composite << " expected "
                          << alpha_expected << ", beta composite got "
                          << cls.beta_composite << " expected " << beta_expected
                          << "\n";
            }
            return kExitMismatch;
        }
    }
    if (opts.format == "json") {
        json rec = {{"kind", "VERIFY"},
                    {"status", "ok"},
                    {"c1", c1},
                    {"c2", c2},
                    {"variant", opts.variant}};
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << "verified c in [" << c1 << "," << c2
                  << "]: classification matches trial division\n";
    }
    return kExitOk;
}

int cmd_bench(std::int64_t c1, std::int64_t c2,
              const std::vector<int>& workers_list, const CommonOpts& opts) {
    const auto variant = variant_of(opts.variant);
    std::optional<std::uint64_t> reference_L;
    std::optional<double> base_time;
    for (int w : workers_list) {
        const auto start = std::chrono::steady_clock::now();
        const auto run = run_parallel(GeneratorIndex{c1}, GeneratorIndex{c2}, w,
                                      false, variant);
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;
        if (!base_time)
            base_time = elapsed.count();
        if (reference_L && *reference_L != run.result.L) {
            std::cerr << "error: L diverged across worker counts\n";
            return kExitMismatch;
        }
        reference_L = run.result.L;
        const double speedup = *base_time / elapsed.count();
        if (opts.format == "json") {
            json rec = {{"kind", "BENCH"},     {"c1", c1},
                        {"c2", c2},            {"workers", w},
                        {"lambda", run.result.L}, {"seconds", elapsed.count()},
                        {"speedup", speedup},  {"variant", opts.variant}};
            std::cout << rec.dump() << "\n";
        } else {
            std::cout << "workers=" << w << "  L=" << run.result.L
                      << "  time=" << elapsed.count() << " s"
                      << "  speedup=" << speedup << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, on_signal);

    CLI::App app{"prime counting via the 6n±1 candidate sieve"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::int64_t h = 0, c1 = 0, c2 = 0, inject_fault = -1;
    bool exact_only = false;
    std::vector<int> workers_list{1};

    auto add_common = [&](CLI::App* sub, const char* default_variant) {
        opts.variant = default_variant;
        sub->add_option("--variant", opts.variant, "scan variant")
            ->check(CLI::IsMember({"fast", "faithful"}));
        sub->add_option("--workers", opts.workers, "worker threads")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--checkpoint", opts.checkpoint_path,
                        "checkpoint file for long runs");
        sub->add_option("--chunk", opts.chunk, "indices between checkpoints")
            ->check(CLI::PositiveNumber);
    };

    auto* sub_pi = app.add_subcommand("pi", "compute pi(h)");
    sub_pi->add_option("limit", h, "inclusive upper limit h")->required();
    add_common(sub_pi, "fast");

    auto* sub_range = app.add_subcommand("range", "count primes over [c1,c2]");
    sub_range->add_option("c1", c1)->required();
    sub_range->add_option("c2", c2)->required();
    sub_range->add_flag("--exact", exact_only,
                        "report only the exact inclusive count");
    add_common(sub_range, "fast");

    auto* sub_list = app.add_subcommand("list", "list primes 6c±1 for c in [c1,c2]");
    sub_list->add_option("c1", c1)->required();
    sub_list->add_option("c2", c2)->required();
    add_common(sub_list, "fast");

    auto* sub_verify =
        app.add_subcommand("verify", "check classification against trial division");
    sub_verify->add_option("c1", c1)->required();
    sub_verify->add_option("c2", c2)->required();
    add_common(sub_verify, "faithful");
    sub_verify->add_option("--inject-fault", inject_fault)->group("");  // hidden

    auto* sub_bench = app.add_subcommand("bench", "measure scaling across worker counts");
    sub_bench->add_option("c1", c1)->required();
    sub_bench->add_option("c2", c2)->required();
    sub_bench
        ->add_option("--workers-list", workers_list,
                     "comma separated worker counts")
        ->delimiter(',');
    add_common(sub_bench, "fast");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sub_pi->parsed()) {
            if (h < 2) {
                std::cerr << "error: need h >= 2\n";
                return kExitUsage;
            }
            return cmd_pi(h, opts);
        }
        if (sub_range->parsed())
            return cmd_range(c1, c2, exact_only, opts);
        if (sub_list->parsed())
            return cmd_list(c1, c2, opts);
        if (sub_verify->parsed())
            return cmd_verify(c1, c2, inject_fault, opts);
        if (sub_bench->parsed())
            return cmd_bench(c1, c2, workers_list, opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IntegrityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::range_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    }
    return kExitUsage;
}
