#pragma once

// Command-line front end.
//
//   run         one protocol execution, prints the outcome (exit 2 on abort)
//   montecarlo  repeated executions, aggregated detection statistics
//   verify      shift-invariance identities for every level up to a bound
//
// Option precedence: explicit flags, then --config file entries, then the
// MQPC_SEED environment variable (seed only), then built-in defaults.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mqpc/experiment.hpp"
#include "mqpc/protocol.hpp"
#include "mqpc/qudit.hpp"
#include "mqpc/rng.hpp"

namespace mqpc {
namespace cli_detail {

inline std::int64_t parse_i64(const std::string& text) {
    std::size_t pos = 0;
    const long long value = std::stoll(text, &pos);
    if (pos != text.size())
        throw std::invalid_argument("not an integer: '" + text + "'");
    return value;
}

inline std::uint64_t parse_u64(const std::string& text) {
    if (!text.empty() && text[0] == '-')
        throw std::invalid_argument("expected a non-negative integer, got '" + text + "'");
    std::size_t pos = 0;
    const unsigned long long value = std::stoull(text, &pos);
    if (pos != text.size())
        throw std::invalid_argument("not an integer: '" + text + "'");
    return value;
}

inline double parse_double(const std::string& text) {
    std::size_t pos = 0;
    const double value = std::stod(text, &pos);
    if (pos != text.size())
        throw std::invalid_argument("not a number: '" + text + "'");
    return value;
}

inline std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
    std::vector<std::uint64_t> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (item.empty())
            throw std::invalid_argument("empty entry in list '" + text + "'");
        values.push_back(parse_u64(item));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return values;
}

inline ReportFormat parse_format(const std::string& name) {
    if (name == "csv")
        return ReportFormat::Csv;
    if (name == "json")
        return ReportFormat::Json;
    throw std::invalid_argument("unknown format '" + name + "' (expected csv or json)");
}

// One settable option: its CLI handle plus a config-file setter, so file
// values apply exactly where the command line stayed silent.
struct Binding {
    CLI::Option* opt;
    std::string key;
    std::function<void(const std::string&)> set;
};

struct CommonFlags {
    int level = 2;
    int parties = 2;
    int bits = 4;
    std::string secrets;                // comma-separated; empty draws random inputs
    std::string attack = "none";
    std::string basis_policy = "random";
    int decoys = -1;                    // -1 keeps the 2L default
    double threshold = 0.0;
    std::int64_t trials = 1000;
    std::uint64_t seed = 0;
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    int attack_hop = 1;
    int attack_party = 1;
    int attack_victim = 2;

    std::vector<Binding> bindings;
    CLI::Option* seed_opt = nullptr;
    bool config_had_seed = false;
};

inline void add_common_options(CLI::App* cmd, CommonFlags& f, bool with_trials) {
    auto bind = [&f](CLI::Option* opt, const std::string& key,
                     std::function<void(const std::string&)> set) {
        f.bindings.push_back({opt, key, std::move(set)});
    };

    bind(cmd->add_option("--level", f.level, "particle level d (>= 2)"), "level",
         [&f](const std::string& v) { f.level = static_cast<int>(parse_i64(v)); });
    bind(cmd->add_option("--parties", f.parties, "number of comparing parties (must equal d)"),
         "parties", [&f](const std::string& v) { f.parties = static_cast<int>(parse_i64(v)); });
    bind(cmd->add_option("--bits", f.bits, "secret length in bits"), "bits",
         [&f](const std::string& v) { f.bits = static_cast<int>(parse_i64(v)); });
    bind(cmd->add_option("--secrets", f.secrets,
                         "comma-separated secrets, one per party (default: random)"),
         "secrets", [&f](const std::string& v) { f.secrets = v; });
    bind(cmd->add_option("--attack", f.attack,
                         "none, intercept-resend, premature-measure, fake-substitution or "
                         "collude-observe"),
         "attack", [&f](const std::string& v) { f.attack = v; });
    bind(cmd->add_option("--basis-policy", f.basis_policy,
                         "intercept-resend measurement basis: t1, t2 or random"),
         "basis-policy", [&f](const std::string& v) { f.basis_policy = v; });
    bind(cmd->add_option("--decoys", f.decoys, "decoy particles per hop (default: 2 * bits)")
             ->check(CLI::NonNegativeNumber),
         "decoys", [&f](const std::string& v) {
             f.decoys = static_cast<int>(parse_i64(v));
             if (f.decoys < 0)
                 throw std::invalid_argument("decoys must be non-negative");
         });
    bind(cmd->add_option("--threshold", f.threshold, "tolerated check error rate in [0, 1]"),
         "threshold", [&f](const std::string& v) { f.threshold = parse_double(v); });
    if (with_trials)
        bind(cmd->add_option("--trials", f.trials, "number of protocol executions")
                 ->check(CLI::PositiveNumber),
             "trials", [&f](const std::string& v) { f.trials = parse_i64(v); });
    f.seed_opt = cmd->add_option("--seed", f.seed, "master RNG seed (env: MQPC_SEED)");
    bind(f.seed_opt, "seed", [&f](const std::string& v) {
        f.seed = parse_u64(v);
        f.config_had_seed = true;
    });
    cmd->add_option("--config", f.config_path, "key=value settings file ('#' comments)");
    bind(cmd->add_option("--out", f.out_path, "write the report (or transcript) to this file"),
         "out", [&f](const std::string& v) { f.out_path = v; });
    bind(cmd->add_option("--format", f.format, "report format: csv or json"), "format",
         [&f](const std::string& v) { f.format = v; });
    bind(cmd->add_option("--attack-hop", f.attack_hop, "intercept-resend: hop to tap (1..p+1)"),
         "attack-hop", [&f](const std::string& v) { f.attack_hop = static_cast<int>(parse_i64(v)); });
    bind(cmd->add_option("--attack-party", f.attack_party,
                         "premature-measure / fake-substitution: dishonest party"),
         "attack-party",
         [&f](const std::string& v) { f.attack_party = static_cast<int>(parse_i64(v)); });
    bind(cmd->add_option("--attack-victim", f.attack_victim, "collude-observe: observed party"),
         "attack-victim",
         [&f](const std::string& v) { f.attack_victim = static_cast<int>(parse_i64(v)); });
}

inline void apply_config_and_env(CommonFlags& f) {
    if (!f.config_path.empty()) {
        const auto values = parse_config_file(f.config_path);
        for (const auto& [key, value] : values) {
            const auto binding =
                std::find_if(f.bindings.begin(), f.bindings.end(),
                             [&key](const Binding& b) { return b.key == key; });
            if (binding == f.bindings.end())
                throw std::invalid_argument("config file: unknown key '" + key + "'");
            if (binding->opt->count() > 0)
                continue; // explicit flag wins
            try {
                binding->set(value);
            } catch (const std::exception& e) {
                throw std::invalid_argument("config file: key '" + key + "': " + e.what());
            }
        }
    }
    if (f.seed_opt->count() == 0 && !f.config_had_seed) {
        if (const char* env = std::getenv("MQPC_SEED")) {
            try {
                f.seed = parse_u64(env);
            } catch (const std::exception&) {
                throw std::invalid_argument("MQPC_SEED is not a non-negative integer: '" +
                                            std::string(env) + "'");
            }
        }
    }
}

inline ExperimentSpec build_spec(const CommonFlags& f, std::int64_t trials) {
    ExperimentSpec spec;
    spec.config.d = f.level;
    spec.config.p = f.parties;
    spec.config.L = f.bits;
    if (f.decoys >= 0)
        spec.config.decoys_per_hop = f.decoys;
    spec.config.threshold = f.threshold;
    spec.config.seed = f.seed;
    if (!f.secrets.empty()) {
        SecretTable table;
        table.values = parse_u64_list(f.secrets);
        spec.secrets = table;
    }
    spec.attack.kind = parse_attack_kind(f.attack);
    spec.attack.hop = f.attack_hop;
    spec.attack.basis_policy = parse_basis_policy(f.basis_policy);
    spec.attack.dishonest_party = f.attack_party;
    spec.attack.victim = f.attack_victim;
    spec.trials = trials;
    spec.format = parse_format(f.format);
    spec.out_path = f.out_path;
    spec.validate();
    return spec;
}

inline int do_run(const CommonFlags& f, std::ostream& out) {
    const ExperimentSpec spec = build_spec(f, 1);
    Rng rng(derive_stream_seed(spec.config.seed, 0));
    const KeyTable keys = distribute_keys(spec.config, rng);
    const SecretTable secrets =
        spec.secrets ? *spec.secrets : SecretTable::draw_uniform(spec.config, rng);
    const RunResult run = run_protocol(spec.config, secrets, spec.attack, keys, rng);
    out << describe(run.outcome) << "\n";
    out << "transcript: " << run.transcript.entries().size() << " messages\n";
    if (!spec.out_path.empty()) {
        std::ofstream file(spec.out_path);
        if (!file)
            throw std::runtime_error("cannot open output file '" + spec.out_path + "'");
        file << run.transcript.to_text();
        out << "transcript written to " << spec.out_path << "\n";
    }
    return run.outcome.kind == ComparisonOutcome::Kind::Aborted ? 2 : 0;
}

inline int do_montecarlo(const CommonFlags& f, std::ostream& out) {
    const ExperimentSpec spec = build_spec(f, f.trials);
    const ExperimentReport report = run_montecarlo(spec);
    const Interval ci = report.stats.wilson95();
    out << "trials=" << report.stats.trials << " detected=" << report.stats.detected
        << " detection_rate=" << format_fixed(report.stats.rate(), 8) << " wilson=["
        << format_fixed(ci.low, 8) << "," << format_fixed(ci.high, 8) << "]";
    if (report.analytic_detection)
        out << " analytic=" << format_fixed(*report.analytic_detection, 8);
    out << "\n";
    for (const auto& [stage, count] : report.stats.stage_histogram)
        out << "stage " << stage << ": " << count << "\n";
    if (!spec.out_path.empty()) {
        write_report_file(report);
        out << "report written to " << spec.out_path << "\n";
    }
    return 0;
}

inline int do_verify(int max_level, std::ostream& out) {
    bool all_ok = true;
    for (int d = 2; d <= max_level; ++d) {
        bool level_ok = true;
        for (int k = 0; k < d; ++k) {
            const StateVector fourier = prepare({Basis::Fourier, k}, d);
            for (int m = 0; m < d; ++m) {
                const StateVector shifted = apply_shift(fourier, m);
                if (!equal_up_to_global_phase(shifted, fourier, 1e-12))
                    level_ok = false;
                const Complex phase = inner_product(fourier, shifted);
                if (std::abs(phase - omega(d, -static_cast<long long>(m) * k)) > 1e-12)
                    level_ok = false;
                const StateVector comp = apply_shift(prepare({Basis::Computational, k}, d), m);
                if (comp.amplitude((k + m) % d) != Complex(1.0, 0.0))
                    level_ok = false;
            }
        }
        out << "level " << d << ": " << (level_ok ? "pass" : "FAIL") << " (" << d * d
            << " index/shift pairs)\n";
        all_ok = all_ok && level_ok;
    }
    out << (all_ok ? "all levels pass\n" : "verification FAILED\n");
    return all_ok ? 0 : 1;
}

} // namespace cli_detail

// Runs one CLI invocation against the given streams; returns the exit code
// (0 success, 1 usage or I/O error, 2 protocol abort under `run`).
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;

    CLI::App app{"circular d-level private comparison simulator"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    CLI::App* run_cmd = app.add_subcommand("run", "execute one protocol run");
    add_common_options(run_cmd, run_flags, /*with_trials=*/false);

    CommonFlags mc_flags;
    CLI::App* mc_cmd = app.add_subcommand("montecarlo", "measure detection rates over many runs");
    add_common_options(mc_cmd, mc_flags, /*with_trials=*/true);

    int max_level = 16;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check shift invariance for all levels up to a bound");
    verify_cmd->add_option("--max-level", max_level, "largest level to check (>= 2)")
        ->check(CLI::Range(2, 4096));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run_cmd->parsed()) {
            apply_config_and_env(run_flags);
            return do_run(run_flags, out);
        }
        if (mc_cmd->parsed()) {
            apply_config_and_env(mc_flags);
            return do_montecarlo(mc_flags, out);
        }
        if (verify_cmd->parsed())
            return do_verify(max_level, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand given\n";
    return 1;
}

} // namespace mqpc
