#pragma once

// Circular private-comparison choreography over d-level particles.
//
// A third party (the dealer, P_0) prepares for each secret bit a carrier
// group: a computational payload |k> and a Fourier reference F|k>, in random
// intra-pair order, padded with decoy particles at random positions. The
// sequence travels the ring P_0 -> P_1 -> ... -> P_p -> P_0. Every hop runs a
// two-phase decoy check; every party shifts both particles of group l by
// (q_i^l + x_i^l) mod d, which advances the payload index and leaves the
// reference invariant up to global phase. The dealer finally verifies the
// references and decodes: with p == d the secret bits cancel mod d exactly
// when all parties hold equal secrets.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mqpc/adversary.hpp"
#include "mqpc/qudit.hpp"
#include "mqpc/registry.hpp"
#include "mqpc/rng.hpp"

namespace mqpc {

// A check or message violated the choreography itself (malformed
// announcements, wrong group counts) — distinct from an honest abort.
class ProtocolViolation : public std::logic_error {
  public:
    explicit ProtocolViolation(const std::string& what) : std::logic_error(what) {}
};

struct ProtocolConfig {
    int d = 2;                         // particle level, >= 2
    int p = 2;                         // comparing parties, must equal d
    int L = 1;                         // secret length in bits = carrier group count
    std::optional<int> decoys_per_hop; // defaults to 2L when unset
    double threshold = 0.0;            // tolerated check error rate
    std::uint64_t seed = 0;

    int decoys() const { return decoys_per_hop ? *decoys_per_hop : 2 * L; }

    void validate() const {
        if (d < 2)
            throw std::invalid_argument("ProtocolConfig: level must be at least 2");
        if (p != d)
            throw std::invalid_argument(
                "ProtocolConfig: party count must equal the level; the decode relies on p "
                "equal secret bits summing to 0 or p, both of which are 0 mod d only when p == d");
        if (L < 1 || L > 62)
            throw std::invalid_argument("ProtocolConfig: bit length must be in [1, 62]");
        if (decoys_per_hop && *decoys_per_hop < 0)
            throw std::invalid_argument("ProtocolConfig: decoy count must be non-negative");
        if (threshold < 0.0 || threshold > 1.0)
            throw std::invalid_argument("ProtocolConfig: threshold must lie in [0, 1]");
    }
};

// Pre-shared shift keys: q_i^l for party i in 1..p, group l in 1..L.
struct KeyTable {
    std::vector<std::vector<int>> rows; // rows[i-1][l-1]

    int q_of(int party, int group) const {
        return rows.at(static_cast<std::size_t>(party) - 1).at(static_cast<std::size_t>(group) - 1);
    }

    void validate(const ProtocolConfig& cfg) const {
        if (static_cast<int>(rows.size()) != cfg.p)
            throw std::invalid_argument("KeyTable: need one key row per party");
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != cfg.L)
                throw std::invalid_argument("KeyTable: key rows must have length L");
            for (int q : row)
                if (q < 0 || q >= cfg.d)
                    throw std::invalid_argument("KeyTable: key entries must lie in [0, d)");
        }
    }
};

// Private inputs: x_i in [0, 2^L) with bit l of party i equal to
// (x_i >> (l-1)) & 1, so x_i = sum_l x_i^l 2^{l-1}.
struct SecretTable {
    std::vector<std::uint64_t> values; // values[i-1] = x_i

    int bit(int party, int group) const {
        return static_cast<int>((values.at(static_cast<std::size_t>(party) - 1) >> (group - 1)) &
                                1u);
    }

    void validate(const ProtocolConfig& cfg) const {
        if (static_cast<int>(values.size()) != cfg.p)
            throw std::invalid_argument("SecretTable: need one secret per party");
        for (std::uint64_t x : values)
            if (x >> cfg.L)
                throw std::invalid_argument("SecretTable: secret exceeds the configured bit length");
    }

    static SecretTable draw_uniform(const ProtocolConfig& cfg, Rng& rng) {
        SecretTable s;
        s.values.resize(static_cast<std::size_t>(cfg.p));
        for (auto& x : s.values) {
            x = 0;
            for (int l = 0; l < cfg.L; ++l)
                x |= static_cast<std::uint64_t>(rng.coin() ? 1 : 0) << l;
        }
        return s;
    }
};

// Dealer-private record of one carrier group.
struct PairRecord {
    ParticleId payload;   // computational particle |k_l>
    ParticleId reference; // Fourier particle F|k_l>
    bool payload_first;   // intra-pair order in the transmitted sequence
    int initial_index;    // k_l
};

// Sender-private record of one decoy.
struct DecoyEntry {
    int position; // index into the transmitted sequence
    BasisState prepared;
};

struct TransmittedSequence {
    std::vector<ParticleId> particles; // carriers and decoys interleaved
    std::vector<DecoyEntry> decoys;    // sender-private, ascending positions
};

struct ComparisonOutcome {
    enum class Kind { Equal, NotEqual, Aborted };

    Kind kind = Kind::Equal;
    int first_differing_bit = 0; // smallest 1-based group with nonzero difference
    std::string abort_stage;     // "hop-<h>" or "tp-reference-check"
    double abort_error_rate = 0.0;

    static ComparisonOutcome equal() { return {}; }
    static ComparisonOutcome not_equal(int first_bit) {
        ComparisonOutcome o;
        o.kind = Kind::NotEqual;
        o.first_differing_bit = first_bit;
        return o;
    }
    static ComparisonOutcome aborted(std::string stage, double error_rate) {
        ComparisonOutcome o;
        o.kind = Kind::Aborted;
        o.abort_stage = std::move(stage);
        o.abort_error_rate = error_rate;
        return o;
    }
};

inline std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

inline std::string describe(const ComparisonOutcome& outcome) {
    switch (outcome.kind) {
    case ComparisonOutcome::Kind::Equal: return "Equal";
    case ComparisonOutcome::Kind::NotEqual:
        return "NotEqual (first differing bit l=" + std::to_string(outcome.first_differing_bit) +
               ")";
    default: break;
    }
    std::string where = outcome.abort_stage;
    if (where.rfind("hop-", 0) == 0)
        where = "hop " + where.substr(4);
    return "Aborted at " + where + " (error rate " + format_fixed(outcome.abort_error_rate, 6) +
           ")";
}

// One record per classical message plus the carrier order after each decoy
// strip; serializes to a line-delimited log for golden-file tests.
struct TranscriptEntry {
    int hop;
    std::string type;
    std::string detail;
};

class Transcript {
  public:
    void record(int hop, std::string type, std::string detail) {
        entries_.push_back({hop, std::move(type), std::move(detail)});
    }

    const std::vector<TranscriptEntry>& entries() const { return entries_; }

    std::string to_text() const {
        std::string out;
        for (const auto& e : entries_) {
            out += "hop=" + std::to_string(e.hop) + " type=" + e.type;
            if (!e.detail.empty()) {
                out += ' ';
                out += e.detail;
            }
            out += '\n';
        }
        return out;
    }

  private:
    std::vector<TranscriptEntry> entries_;
};

namespace detail {

inline std::string int_list(std::span<const int> values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(values[i]);
    }
    return out + "]";
}

inline std::string token_list(std::span<const ParticleId> particles) {
    std::string out = "[";
    for (std::size_t i = 0; i < particles.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(particles[i].token());
    }
    return out + "]";
}

inline std::string basis_label(Basis b) { return b == Basis::Computational ? "T1" : "T2"; }

} // namespace detail

inline KeyTable distribute_keys(const ProtocolConfig& cfg, Rng& rng) {
    KeyTable keys;
    keys.rows.resize(static_cast<std::size_t>(cfg.p));
    for (auto& row : keys.rows) {
        row.resize(static_cast<std::size_t>(cfg.L));
        for (auto& q : row)
            q = rng.uniform_int(cfg.d);
    }
    return keys;
}

// Pads carriers with freshly prepared decoys (uniform basis, uniform index)
// at uniformly random insertion points; carrier relative order is preserved.
inline TransmittedSequence insert_decoys(const std::vector<ParticleId>& carriers, int count,
                                         Registry& reg, Rng& rng) {
    TransmittedSequence seq;
    seq.particles = carriers;
    std::vector<int> slot(carriers.size(), -1); // -1 carrier, else decoy ordinal
    std::vector<BasisState> prepared;
    prepared.reserve(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        const Basis basis = rng.coin() ? Basis::Computational : Basis::Fourier;
        const int index = rng.uniform_int(reg.dimension());
        const ParticleId pid = reg.create_particle({basis, index});
        const int pos = rng.uniform_int(static_cast<int>(seq.particles.size()) + 1);
        seq.particles.insert(seq.particles.begin() + pos, pid);
        slot.insert(slot.begin() + pos, j);
        prepared.push_back({basis, index});
    }
    for (std::size_t pos = 0; pos < slot.size(); ++pos)
        if (slot[pos] >= 0)
            seq.decoys.push_back({static_cast<int>(pos), prepared[static_cast<std::size_t>(slot[pos])]});
    return seq;
}

struct TpPreparation {
    TransmittedSequence sequence;
    std::vector<PairRecord> pairs;
};

inline TpPreparation tp_prepare(const ProtocolConfig& cfg, Registry& reg, Rng& rng) {
    TpPreparation prep;
    std::vector<ParticleId> carriers;
    carriers.reserve(static_cast<std::size_t>(2 * cfg.L));
    for (int l = 0; l < cfg.L; ++l) {
        const int k = rng.uniform_int(cfg.d);
        PairRecord pair{reg.create_particle({Basis::Computational, k}),
                        reg.create_particle({Basis::Fourier, k}), rng.coin(), k};
        carriers.push_back(pair.payload_first ? pair.payload : pair.reference);
        carriers.push_back(pair.payload_first ? pair.reference : pair.payload);
        prep.pairs.push_back(pair);
    }
    prep.sequence = insert_decoys(carriers, cfg.decoys(), reg, rng);
    return prep;
}

struct CheckReport {
    double error_rate = 0.0;
    bool pass = true;
};

// Two-phase decoy verification: the sender announces positions and bases of
// its Fourier decoys, the receiver measures them and reports outcomes, the
// sender compares against what it prepared; then the same for computational
// decoys, skipped if the first phase already exceeded the threshold. The
// reported rate is mismatches over decoys checked so far.
inline CheckReport decoy_check(const TransmittedSequence& seq, Registry& reg, Rng& rng,
                               double threshold, int hop, Transcript& transcript) {
    std::vector<bool> seen(seq.particles.size(), false);
    for (const DecoyEntry& entry : seq.decoys) {
        if (entry.position < 0 || entry.position >= static_cast<int>(seq.particles.size()))
            throw ProtocolViolation("decoy_check: announced position outside the sequence");
        if (seen[static_cast<std::size_t>(entry.position)])
            throw ProtocolViolation("decoy_check: position announced twice");
        seen[static_cast<std::size_t>(entry.position)] = true;
    }

    int checked = 0;
    int mismatched = 0;
    for (Basis phase : {Basis::Fourier, Basis::Computational}) {
        std::vector<int> positions;
        std::vector<int> outcomes;
        for (const DecoyEntry& entry : seq.decoys) {
            if (entry.prepared.basis != phase)
                continue;
            positions.push_back(entry.position);
            const int outcome = reg.measure_particle(
                seq.particles[static_cast<std::size_t>(entry.position)], phase, rng);
            outcomes.push_back(outcome);
            ++checked;
            if (outcome != entry.prepared.index)
                ++mismatched;
        }
        transcript.record(hop, "decoy-announce",
                          "basis=" + detail::basis_label(phase) +
                              " positions=" + detail::int_list(positions));
        transcript.record(hop, "decoy-report",
                          "basis=" + detail::basis_label(phase) +
                              " outcomes=" + detail::int_list(outcomes));
        const double rate = checked ? static_cast<double>(mismatched) / checked : 0.0;
        if (rate > threshold) {
            transcript.record(hop, "decoy-verdict", "rate=" + format_fixed(rate, 6) + " pass=no");
            return {rate, false};
        }
    }
    const double rate = checked ? static_cast<double>(mismatched) / checked : 0.0;
    transcript.record(hop, "decoy-verdict", "rate=" + format_fixed(rate, 6) + " pass=yes");
    return {rate, true};
}

// Receiver-side removal of checked decoys; carrier order is preserved.
inline std::vector<ParticleId> strip_decoys(const TransmittedSequence& seq) {
    std::vector<bool> is_decoy(seq.particles.size(), false);
    for (const DecoyEntry& entry : seq.decoys) {
        if (entry.position < 0 || entry.position >= static_cast<int>(seq.particles.size()))
            throw ProtocolViolation("strip_decoys: position outside the sequence");
        if (is_decoy[static_cast<std::size_t>(entry.position)])
            throw ProtocolViolation("strip_decoys: position announced twice");
        is_decoy[static_cast<std::size_t>(entry.position)] = true;
    }
    std::vector<ParticleId> carriers;
    carriers.reserve(seq.particles.size() - seq.decoys.size());
    for (std::size_t pos = 0; pos < seq.particles.size(); ++pos)
        if (!is_decoy[pos])
            carriers.push_back(seq.particles[pos]);
    return carriers;
}

// Party i shifts both particles of group l by (q_i^l + x_i^l) mod d. The
// payload index advances; the reference only picks up a global phase.
inline void party_encode(std::span<const ParticleId> carriers, int party,
                         const SecretTable& secrets, const KeyTable& keys,
                         const ProtocolConfig& cfg, Registry& reg) {
    if (static_cast<int>(carriers.size()) != 2 * cfg.L)
        throw ProtocolViolation("party_encode: expected " + std::to_string(2 * cfg.L) +
                                " carriers, got " + std::to_string(carriers.size()));
    for (int l = 1; l <= cfg.L; ++l) {
        const int m = (keys.q_of(party, l) + secrets.bit(party, l)) % cfg.d;
        reg.shift_particle(carriers[static_cast<std::size_t>(2 * (l - 1))], m);
        reg.shift_particle(carriers[static_cast<std::size_t>(2 * l - 1)], m);
    }
}

// Dealer measures every reference in the Fourier basis; any outcome away from
// its preparation index k_l means someone disturbed the carriers.
inline CheckReport tp_reference_check(const std::vector<PairRecord>& pairs,
                                      std::span<const ParticleId> carriers, Registry& reg,
                                      Rng& rng, double threshold, int hop,
                                      Transcript& transcript) {
    if (carriers.size() != 2 * pairs.size())
        throw ProtocolViolation("tp_reference_check: carrier count does not match records");
    int mismatched = 0;
    for (std::size_t l = 0; l < pairs.size(); ++l) {
        const ParticleId ref = carriers[2 * l + (pairs[l].payload_first ? 1u : 0u)];
        if (reg.measure_particle(ref, Basis::Fourier, rng) != pairs[l].initial_index)
            ++mismatched;
    }
    const double rate =
        pairs.empty() ? 0.0 : static_cast<double>(mismatched) / static_cast<double>(pairs.size());
    const bool pass = rate <= threshold;
    transcript.record(hop, "reference-check",
                      "rate=" + format_fixed(rate, 6) + (pass ? " pass=yes" : " pass=no"));
    return {rate, pass};
}

// Dealer decode: v_l = (k_l + sum_i q_i^l + sum_i x_i^l) mod d, key sum
// R_l = (sum_i q_i^l) mod d, difference D_l = (v_l + (d - k_l) - R_l) mod d.
// All D_l vanish exactly when every party holds the same secret.
inline ComparisonOutcome tp_compute_result(const std::vector<PairRecord>& pairs,
                                           std::span<const ParticleId> carriers,
                                           const KeyTable& keys, const ProtocolConfig& cfg,
                                           Registry& reg, Rng& rng, Transcript& transcript) {
    if (carriers.size() != 2 * pairs.size())
        throw ProtocolViolation("tp_compute_result: carrier count does not match records");
    std::vector<int> differences;
    int first_differing = 0;
    for (std::size_t l = 0; l < pairs.size(); ++l) {
        const ParticleId payload = carriers[2 * l + (pairs[l].payload_first ? 0u : 1u)];
        const int v = reg.measure_particle(payload, Basis::Computational, rng);
        int key_sum = 0;
        for (int i = 1; i <= cfg.p; ++i)
            key_sum = (key_sum + keys.q_of(i, static_cast<int>(l) + 1)) % cfg.d;
        const int diff = ((v + cfg.d - pairs[l].initial_index - key_sum) % cfg.d + cfg.d) % cfg.d;
        differences.push_back(diff);
        if (diff != 0 && first_differing == 0)
            first_differing = static_cast<int>(l) + 1;
    }
    transcript.record(cfg.p + 1, "decode", "difference=" + detail::int_list(differences));
    return first_differing == 0 ? ComparisonOutcome::equal()
                                : ComparisonOutcome::not_equal(first_differing);
}

struct RunResult {
    ComparisonOutcome outcome;
    Transcript transcript;
    KeyTable keys;
    // Raw values an attacker measured, in the order it saw them, and the
    // per-group shifts it could derive from them (see AttackStrategy).
    std::vector<int> attacker_observations;
    std::vector<int> attacker_learned;
};

namespace detail {

inline void validate_attack(const AttackStrategy& attack, const ProtocolConfig& cfg) {
    switch (attack.kind) {
    case AttackStrategy::Kind::InterceptResend:
        if (attack.hop < 1 || attack.hop > cfg.p + 1)
            throw std::invalid_argument("AttackStrategy: hop must lie in [1, p+1]");
        break;
    case AttackStrategy::Kind::PrematureMeasure:
        if (attack.dishonest_party < 1 || attack.dishonest_party > cfg.p)
            throw std::invalid_argument("AttackStrategy: dishonest party must lie in [1, p]");
        break;
    case AttackStrategy::Kind::FakeSubstitution:
        if (attack.dishonest_party < 1 || attack.dishonest_party > cfg.p - 1)
            throw std::invalid_argument(
                "AttackStrategy: fake substitution needs a downstream party victim, so the "
                "dishonest party must lie in [1, p-1]");
        break;
    case AttackStrategy::Kind::ColludeObserve:
        if (cfg.p < 3)
            throw std::invalid_argument(
                "AttackStrategy: collusion needs parties on both sides of the victim, so p >= 3");
        if (attack.victim < 2 || attack.victim > cfg.p - 1)
            throw std::invalid_argument("AttackStrategy: victim must lie in [2, p-1]");
        break;
    case AttackStrategy::Kind::None: break;
    }
}

} // namespace detail

// Executes the full circle under a fixed key table and an external random
// source. Hop h carries the sequence from P_{h-1} to P_h (P_{p+1} is the
// dealer again); every hop ends in a decoy check, the last additionally in
// the reference check and decode.
inline RunResult run_protocol(const ProtocolConfig& cfg, const SecretTable& secrets,
                              const AttackStrategy& attack, const KeyTable& keys, Rng& rng) {
    cfg.validate();
    secrets.validate(cfg);
    keys.validate(cfg);
    detail::validate_attack(attack, cfg);

    Registry reg(cfg.d);
    RunResult result;
    result.keys = keys;
    Transcript& tr = result.transcript;

    TpPreparation prep = tp_prepare(cfg, reg, rng);
    TransmittedSequence seq = std::move(prep.sequence);

    std::vector<ParticleId> withheld; // real carriers an insider holds back
    std::vector<int> fake_indices;    // preparation indices of planted fakes

    std::vector<ParticleId> carriers;
    for (int hop = 1; hop <= cfg.p + 1; ++hop) {
        const int receiver = hop <= cfg.p ? hop : 0;
        tr.record(hop, "transmit", "particles=" + detail::token_list(seq.particles));

        if (attack.kind == AttackStrategy::Kind::InterceptResend && attack.hop == hop)
            tap_intercept_resend(seq.particles, attack.basis_policy, reg, rng);

        if (attack.kind == AttackStrategy::Kind::FakeSubstitution &&
            hop == attack.dishonest_party + 2) {
            // The victim's outgoing sequence: measure everything in transit.
            // Without decoys the fakes are exactly the sequence, so the
            // learned shifts can be replayed onto the withheld carriers and
            // nobody is the wiser; with decoys the attacker cannot tell fakes
            // from the victim's fresh decoys and has to forward the damage.
            for (ParticleId pid : seq.particles)
                result.attacker_observations.push_back(
                    reg.measure_particle(pid, Basis::Computational, rng));
            if (cfg.decoys() == 0) {
                result.attacker_learned =
                    infer_group_shifts(result.attacker_observations, fake_indices, cfg.d);
                for (int l = 0; l < cfg.L; ++l) {
                    reg.shift_particle(withheld[static_cast<std::size_t>(2 * l)],
                                       result.attacker_learned[static_cast<std::size_t>(l)]);
                    reg.shift_particle(withheld[static_cast<std::size_t>(2 * l + 1)],
                                       result.attacker_learned[static_cast<std::size_t>(l)]);
                }
                seq.particles = withheld;
            }
        }

        const CheckReport check = decoy_check(seq, reg, rng, cfg.threshold, hop, tr);
        if (!check.pass) {
            const std::string stage = "hop-" + std::to_string(hop);
            result.outcome = ComparisonOutcome::aborted(stage, check.error_rate);
            tr.record(hop, "announce", "result=abort stage=" + stage);
            return result;
        }
        carriers = strip_decoys(seq);
        tr.record(hop, "carriers", "order=" + detail::token_list(carriers));
        if (receiver == 0)
            break;

        if (attack.kind == AttackStrategy::Kind::PrematureMeasure &&
            receiver == attack.dishonest_party) {
            // Dishonest receiver reads all carriers before encoding. Payload
            // values are key-masked; the references collapse and betray the
            // measurement at the dealer's final check.
            result.attacker_observations = premature_measure(carriers, reg, rng);
            for (int l = 0; l < cfg.L; ++l) {
                const std::size_t payload_pos =
                    static_cast<std::size_t>(2 * l) + (prep.pairs[static_cast<std::size_t>(l)].payload_first ? 0u : 1u);
                result.attacker_learned.push_back(result.attacker_observations[payload_pos]);
            }
        }

        if (attack.kind == AttackStrategy::Kind::ColludeObserve && receiver == attack.victim + 1) {
            // Downstream colluder: read the victim's shifts off the planted
            // fakes, replay them onto the withheld carriers, rejoin the ring.
            for (ParticleId pid : carriers)
                result.attacker_observations.push_back(
                    reg.measure_particle(pid, Basis::Computational, rng));
            result.attacker_learned =
                infer_group_shifts(result.attacker_observations, fake_indices, cfg.d);
            for (int l = 0; l < cfg.L; ++l) {
                reg.shift_particle(withheld[static_cast<std::size_t>(2 * l)],
                                   result.attacker_learned[static_cast<std::size_t>(l)]);
                reg.shift_particle(withheld[static_cast<std::size_t>(2 * l + 1)],
                                   result.attacker_learned[static_cast<std::size_t>(l)]);
            }
            carriers = withheld;
        }

        party_encode(carriers, receiver, secrets, keys, cfg, reg);

        bool plant_fakes = false;
        if (attack.kind == AttackStrategy::Kind::FakeSubstitution &&
            receiver == attack.dishonest_party)
            plant_fakes = true;
        if (attack.kind == AttackStrategy::Kind::ColludeObserve && receiver == attack.victim - 1)
            plant_fakes = true;
        if (plant_fakes) {
            // Keep the encoded carriers, hand known computational particles
            // to the next party instead.
            withheld = carriers;
            FakeCarriers fake = make_fake_carriers(cfg.L, reg, rng);
            carriers = fake.particles;
            fake_indices = fake.known_indices;
        }

        seq = insert_decoys(carriers, cfg.decoys(), reg, rng);
    }

    const CheckReport ref = tp_reference_check(prep.pairs, carriers, reg, rng, cfg.threshold,
                                               cfg.p + 1, tr);
    if (!ref.pass) {
        result.outcome = ComparisonOutcome::aborted("tp-reference-check", ref.error_rate);
        tr.record(cfg.p + 1, "announce", "result=abort stage=tp-reference-check");
        return result;
    }
    result.outcome = tp_compute_result(prep.pairs, carriers, keys, cfg, reg, rng, tr);
    tr.record(cfg.p + 1, "announce",
              result.outcome.kind == ComparisonOutcome::Kind::Equal ? "result=equal"
                                                                    : "result=not-equal");
    return result;
}

// Convenience entry point: seeds the run from the config and draws fresh
// keys, as a deployment would via pre-shared key agreement.
inline RunResult run_protocol(const ProtocolConfig& cfg, const SecretTable& secrets,
                              const AttackStrategy& attack = AttackStrategy::none()) {
    cfg.validate();
    Rng rng(cfg.seed);
    const KeyTable keys = distribute_keys(cfg, rng);
    return run_protocol(cfg, secrets, attack, keys, rng);
}

} // namespace mqpc
