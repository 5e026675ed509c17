#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mqpc/registry.hpp"
#include "mqpc/rng.hpp"
#include "mqpc/stats.hpp"

namespace mqpc {

// Measurement basis an eavesdropper uses on tapped particles.
enum class BasisPolicy { AlwaysT1, AlwaysT2, RandomPerParticle };

// The attacks under study, as channel taps and misbehaving roles.
//
//   InterceptResend   measure every particle of one hop's sequence and
//                     forward the collapsed states. Measure-resend is the
//                     same code path: in an exact simulator a measured
//                     particle already is the basis state an attacker would
//                     resend.
//   PrematureMeasure  a dishonest party measures her decoy-stripped carriers
//                     in the computational basis before encoding, then plays
//                     on; the collapsed reference particles betray her at the
//                     final reference check.
//   FakeSubstitution  dishonest party i hands party i+1 computational fakes
//                     instead of the real carriers, then measures i+1's
//                     outgoing sequence in the computational basis and
//                     forwards it. With zero decoys the attacker can locate
//                     its fakes and splice the real carriers back in
//                     unnoticed; with decoys present it cannot, and the
//                     victim's own Fourier decoys expose the tap.
//   ColludeObserve    every party except the victim cooperates: the
//                     predecessor feeds known computational fakes, the
//                     successor measures them after the victim encodes and
//                     replays the learned shifts onto the withheld real
//                     carriers. Evades every check but learns only
//                     (q + x) mod d per bit.
struct AttackStrategy {
    enum class Kind { None, InterceptResend, PrematureMeasure, FakeSubstitution, ColludeObserve };

    Kind kind = Kind::None;
    int hop = 1;                                            // InterceptResend: attacked hop, 1..p+1
    BasisPolicy basis_policy = BasisPolicy::RandomPerParticle; // InterceptResend
    int dishonest_party = 1;                                // PrematureMeasure, FakeSubstitution
    int victim = 2;                                         // ColludeObserve

    static AttackStrategy none() { return {}; }
    static AttackStrategy intercept_resend(int hop, BasisPolicy policy) {
        AttackStrategy a;
        a.kind = Kind::InterceptResend;
        a.hop = hop;
        a.basis_policy = policy;
        return a;
    }
    static AttackStrategy premature_measure(int party) {
        AttackStrategy a;
        a.kind = Kind::PrematureMeasure;
        a.dishonest_party = party;
        return a;
    }
    static AttackStrategy fake_substitution(int party) {
        AttackStrategy a;
        a.kind = Kind::FakeSubstitution;
        a.dishonest_party = party;
        return a;
    }
    static AttackStrategy collude_observe(int victim) {
        AttackStrategy a;
        a.kind = Kind::ColludeObserve;
        a.victim = victim;
        return a;
    }
};

// Aggregated outcome counts of an attack campaign.
struct DetectionStats {
    std::int64_t trials = 0;
    std::int64_t detected = 0;
    std::map<std::string, std::int64_t> stage_histogram;

    void add(bool was_detected, const std::string& stage) {
        ++trials;
        if (was_detected) {
            ++detected;
            ++stage_histogram[stage];
        }
    }

    double rate() const {
        return trials == 0 ? 0.0 : static_cast<double>(detected) / static_cast<double>(trials);
    }

    Interval wilson95() const { return wilson_interval(detected, trials); }
};

// Measures every particle of an in-transit sequence under the given policy.
// The collapsed particles are what travels on; nothing is removed or added.
inline void tap_intercept_resend(std::span<const ParticleId> sequence, BasisPolicy policy,
                                 Registry& reg, Rng& rng) {
    for (ParticleId pid : sequence) {
        Basis b;
        switch (policy) {
        case BasisPolicy::AlwaysT1: b = Basis::Computational; break;
        case BasisPolicy::AlwaysT2: b = Basis::Fourier; break;
        default: b = rng.coin() ? Basis::Computational : Basis::Fourier; break;
        }
        reg.measure_particle(pid, b, rng);
    }
}

// A dishonest party's premature computational-basis sweep over her carriers.
// Returns the observed values in carrier order.
inline std::vector<int> premature_measure(std::span<const ParticleId> carriers, Registry& reg,
                                          Rng& rng) {
    std::vector<int> observed;
    observed.reserve(carriers.size());
    for (ParticleId pid : carriers)
        observed.push_back(reg.measure_particle(pid, Basis::Computational, rng));
    return observed;
}

// Carriers an attacker fabricates to impersonate the dealer's groups:
// 2L computational particles with indices the attacker knows.
struct FakeCarriers {
    std::vector<ParticleId> particles;
    std::vector<int> known_indices;
};

inline FakeCarriers make_fake_carriers(int group_count, Registry& reg, Rng& rng) {
    FakeCarriers fake;
    const int n = 2 * group_count;
    fake.particles.reserve(static_cast<std::size_t>(n));
    fake.known_indices.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const int k = rng.uniform_int(reg.dimension());
        fake.particles.push_back(reg.create_particle({Basis::Computational, k}));
        fake.known_indices.push_back(k);
    }
    return fake;
}

// Shift the victim applied to group g, reconstructed from measured fakes.
// Both particles of a group received the same shift; they must agree.
inline std::vector<int> infer_group_shifts(const std::vector<int>& measured,
                                           const std::vector<int>& known_indices, int d) {
    if (measured.size() != known_indices.size() || measured.size() % 2 != 0)
        throw std::invalid_argument("infer_group_shifts: malformed inputs");
    std::vector<int> shifts;
    shifts.reserve(measured.size() / 2);
    for (std::size_t g = 0; g < measured.size() / 2; ++g) {
        const int a = ((measured[2 * g] - known_indices[2 * g]) % d + d) % d;
        const int b = ((measured[2 * g + 1] - known_indices[2 * g + 1]) % d + d) % d;
        if (a != b)
            throw std::logic_error("infer_group_shifts: group particles disagree");
        shifts.push_back(a);
    }
    return shifts;
}

} // namespace mqpc
