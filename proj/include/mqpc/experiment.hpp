#pragma once

// Experiment runner: repeated protocol executions under derived per-trial
// seeds, aggregated into detection statistics with the matching closed-form
// rates, written out as CSV or JSON reports.

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mqpc/adversary.hpp"
#include "mqpc/protocol.hpp"
#include "mqpc/rng.hpp"
#include "mqpc/stats.hpp"

namespace mqpc {

enum class ReportFormat { Csv, Json };

struct ExperimentSpec {
    ProtocolConfig config;
    std::optional<SecretTable> secrets; // fixed inputs; empty draws fresh ones per trial
    AttackStrategy attack;
    std::int64_t trials = 1;
    ReportFormat format = ReportFormat::Csv;
    std::string out_path; // empty writes no file

    void validate() const {
        config.validate();
        if (secrets)
            secrets->validate(config);
        detail::validate_attack(attack, config);
        if (trials < 1)
            throw std::invalid_argument("ExperimentSpec: trials must be at least 1");
    }
};

struct TrialRecord {
    std::int64_t index;
    ComparisonOutcome outcome;
    bool secrets_equal; // ground truth of the inputs used in this trial
};

struct ExperimentReport {
    ExperimentSpec spec;
    std::vector<TrialRecord> trials;
    DetectionStats stats;
    std::optional<double> analytic_detection;
};

inline std::string attack_kind_name(AttackStrategy::Kind kind) {
    switch (kind) {
    case AttackStrategy::Kind::None: return "none";
    case AttackStrategy::Kind::InterceptResend: return "intercept-resend";
    case AttackStrategy::Kind::PrematureMeasure: return "premature-measure";
    case AttackStrategy::Kind::FakeSubstitution: return "fake-substitution";
    default: return "collude-observe";
    }
}

inline AttackStrategy::Kind parse_attack_kind(const std::string& name) {
    if (name == "none")
        return AttackStrategy::Kind::None;
    if (name == "intercept-resend")
        return AttackStrategy::Kind::InterceptResend;
    if (name == "premature-measure")
        return AttackStrategy::Kind::PrematureMeasure;
    if (name == "fake-substitution")
        return AttackStrategy::Kind::FakeSubstitution;
    if (name == "collude-observe")
        return AttackStrategy::Kind::ColludeObserve;
    throw std::invalid_argument("unknown attack '" + name +
                                "' (expected none, intercept-resend, premature-measure, "
                                "fake-substitution or collude-observe)");
}

inline std::string basis_policy_name(BasisPolicy policy) {
    switch (policy) {
    case BasisPolicy::AlwaysT1: return "t1";
    case BasisPolicy::AlwaysT2: return "t2";
    default: return "random";
    }
}

inline BasisPolicy parse_basis_policy(const std::string& name) {
    if (name == "t1")
        return BasisPolicy::AlwaysT1;
    if (name == "t2")
        return BasisPolicy::AlwaysT2;
    if (name == "random")
        return BasisPolicy::RandomPerParticle;
    throw std::invalid_argument("unknown basis policy '" + name +
                                "' (expected t1, t2 or random)");
}

inline std::string outcome_name(ComparisonOutcome::Kind kind) {
    switch (kind) {
    case ComparisonOutcome::Kind::Equal: return "equal";
    case ComparisonOutcome::Kind::NotEqual: return "not-equal";
    default: return "aborted";
    }
}

// Closed-form run-level detection (= abort) probability for each attack at
// threshold 0, with s = 1/2 + 1/(2d) the chance one decoy survives a tap:
// a decoy matches the tap basis half the time and otherwise collapses back
// to its preparation index with probability 1/d. References behave the same
// way against computational taps, contributing 1/d each.
inline std::optional<double> analytic_detection_rate(const ProtocolConfig& cfg,
                                                     const AttackStrategy& attack) {
    if (cfg.threshold != 0.0)
        return std::nullopt; // formulas assume any mismatch aborts
    const double d = cfg.d;
    const double s = 0.5 + 0.5 / d;
    const double decoy_pass = std::pow(s, cfg.decoys());
    const double reference_pass = std::pow(1.0 / d, cfg.L);
    switch (attack.kind) {
    case AttackStrategy::Kind::None: return 0.0;
    case AttackStrategy::Kind::InterceptResend:
        switch (attack.basis_policy) {
        case BasisPolicy::AlwaysT1: return 1.0 - decoy_pass * reference_pass;
        case BasisPolicy::AlwaysT2: return 1.0 - decoy_pass;
        default: return 1.0 - decoy_pass * std::pow(s, cfg.L);
        }
    case AttackStrategy::Kind::PrematureMeasure: return 1.0 - reference_pass;
    case AttackStrategy::Kind::FakeSubstitution:
        return cfg.decoys() == 0 ? 0.0 : 1.0 - decoy_pass * reference_pass;
    default: return 0.0; // collusion evades every check
    }
}

inline ExperimentReport run_montecarlo(const ExperimentSpec& spec) {
    spec.validate();
    ExperimentReport report;
    report.spec = spec;
    report.analytic_detection = analytic_detection_rate(spec.config, spec.attack);
    report.trials.reserve(static_cast<std::size_t>(spec.trials));
    for (std::int64_t t = 0; t < spec.trials; ++t) {
        // Counter-based seed split: adding trials never perturbs earlier ones.
        Rng rng(derive_stream_seed(spec.config.seed, static_cast<std::uint64_t>(t)));
        const KeyTable keys = distribute_keys(spec.config, rng);
        const SecretTable secrets =
            spec.secrets ? *spec.secrets : SecretTable::draw_uniform(spec.config, rng);
        const RunResult run = run_protocol(spec.config, secrets, spec.attack, keys, rng);

        bool all_equal = true;
        for (std::uint64_t x : secrets.values)
            all_equal = all_equal && x == secrets.values.front();
        report.trials.push_back({t, run.outcome, all_equal});

        const bool detected = run.outcome.kind == ComparisonOutcome::Kind::Aborted;
        report.stats.add(detected, detected ? run.outcome.abort_stage : std::string());
    }
    return report;
}

inline std::string report_to_csv(const ExperimentReport& report) {
    std::string out = "trial,outcome,abort_stage,error_rate\n";
    for (const TrialRecord& trial : report.trials) {
        out += std::to_string(trial.index);
        out += ',';
        out += outcome_name(trial.outcome.kind);
        out += ',';
        out += trial.outcome.abort_stage;
        out += ',';
        out += format_fixed(trial.outcome.abort_error_rate, 8);
        out += '\n';
    }
    const Interval ci = report.stats.wilson95();
    out += "# trials=" + std::to_string(report.stats.trials);
    out += " detected=" + std::to_string(report.stats.detected);
    out += " detection_rate=" + format_fixed(report.stats.rate(), 8);
    out += " wilson_low=" + format_fixed(ci.low, 8);
    out += " wilson_high=" + format_fixed(ci.high, 8);
    if (report.analytic_detection)
        out += " analytic=" + format_fixed(*report.analytic_detection, 8);
    out += '\n';
    return out;
}

namespace detail {

// Round through the fixed decimal encoding used by the CSV writer, so both
// report formats carry bit-identical values.
inline double csv_rounded(double value, int decimals = 8) {
    return std::stod(format_fixed(value, decimals));
}

} // namespace detail

inline nlohmann::ordered_json report_to_json(const ExperimentReport& report) {
    nlohmann::ordered_json doc;
    const ProtocolConfig& cfg = report.spec.config;
    doc["config"] = {{"level", cfg.d},           {"parties", cfg.p},
                     {"bits", cfg.L},            {"decoys_per_hop", cfg.decoys()},
                     {"threshold", detail::csv_rounded(cfg.threshold)}, {"seed", cfg.seed}};
    doc["attack"] = {{"kind", attack_kind_name(report.spec.attack.kind)},
                     {"hop", report.spec.attack.hop},
                     {"basis_policy", basis_policy_name(report.spec.attack.basis_policy)},
                     {"dishonest_party", report.spec.attack.dishonest_party},
                     {"victim", report.spec.attack.victim}};
    doc["trials"] = nlohmann::ordered_json::array();
    for (const TrialRecord& trial : report.trials)
        doc["trials"].push_back({{"trial", trial.index},
                                 {"outcome", outcome_name(trial.outcome.kind)},
                                 {"abort_stage", trial.outcome.abort_stage},
                                 {"error_rate", detail::csv_rounded(trial.outcome.abort_error_rate)}});
    const Interval ci = report.stats.wilson95();
    nlohmann::ordered_json summary;
    summary["trials"] = report.stats.trials;
    summary["detected"] = report.stats.detected;
    summary["detection_rate"] = detail::csv_rounded(report.stats.rate());
    summary["wilson_low"] = detail::csv_rounded(ci.low);
    summary["wilson_high"] = detail::csv_rounded(ci.high);
    if (report.analytic_detection)
        summary["analytic"] = detail::csv_rounded(*report.analytic_detection);
    else
        summary["analytic"] = nullptr;
    nlohmann::ordered_json histogram = nlohmann::ordered_json::object();
    for (const auto& [stage, count] : report.stats.stage_histogram)
        histogram[stage] = count;
    summary["stage_histogram"] = histogram;
    doc["summary"] = summary;
    return doc;
}

inline std::string render_report(const ExperimentReport& report, ReportFormat format) {
    return format == ReportFormat::Csv ? report_to_csv(report)
                                       : report_to_json(report).dump(2) + "\n";
}

inline void write_report_file(const ExperimentReport& report) {
    if (report.spec.out_path.empty())
        return;
    std::ofstream out(report.spec.out_path);
    if (!out)
        throw std::runtime_error("cannot open output file '" + report.spec.out_path + "'");
    out << render_report(report, report.spec.format);
    if (!out.good())
        throw std::runtime_error("failed writing output file '" + report.spec.out_path + "'");
}

// Plain key=value settings file; '#' starts a comment, blank lines ignored.
inline std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file '" + path + "'");
    std::map<std::string, std::string> values;
    std::string line;
    int line_no = 0;
    auto trim = [](std::string s) {
        const auto first = s.find_first_not_of(" \t\r");
        const auto last = s.find_last_not_of(" \t\r");
        return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
    };
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config file '" + path + "' line " +
                                        std::to_string(line_no) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("config file '" + path + "' line " +
                                        std::to_string(line_no) + ": empty key");
        values[key] = value;
    }
    return values;
}

} // namespace mqpc
