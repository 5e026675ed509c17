#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mqpc/qudit.hpp"
#include "mqpc/rng.hpp"

namespace mqpc {

struct TestProbe; // defined only under tests/; grants amplitude read access there

// Opaque handle to one live particle. Copying the handle does not copy the
// particle; amplitudes are reachable only through the owning Registry.
class ParticleId {
public:
    std::uint64_t token() const noexcept { return token_; }
    friend bool operator==(ParticleId a, ParticleId b) noexcept { return a.token_ == b.token_; }
    friend bool operator!=(ParticleId a, ParticleId b) noexcept { return a.token_ != b.token_; }

private:
    friend class Registry;
    explicit ParticleId(std::uint64_t t) noexcept : token_(t) {}
    std::uint64_t token_;
};

// Owns every live particle of one protocol run and enforces the quantum
// semantics protocol code must respect: holders see only ParticleIds, no
// operation hands out a second handle to an existing state, and measurement
// collapses the stored state in place. Tokens are a creation counter and are
// never reused; measured particles persist in their collapsed state.
class Registry {
public:
    explicit Registry(int dimension) : dim_(dimension) {
        if (dimension < 2)
            throw std::invalid_argument("Registry: dimension must be >= 2");
    }

    Registry(const Registry&) = delete;
    Registry& operator=(const Registry&) = delete;
    Registry(Registry&&) = delete;
    Registry& operator=(Registry&&) = delete;

    int dimension() const noexcept { return dim_; }

    ParticleId create_particle(BasisState b) {
        states_.push_back(prepare(b, dim_)); // validates the index
        return ParticleId(static_cast<std::uint64_t>(states_.size() - 1));
    }

    void shift_particle(ParticleId pid, int shift_amount) {
        StateVector& s = state_of(pid);
        s = apply_shift(s, shift_amount);
    }

    int measure_particle(ParticleId pid, Basis basis, Rng& rng) {
        StateVector& s = state_of(pid);
        MeasurementResult r = measure_in_basis(s, basis, rng);
        s = std::move(r.collapsed);
        return r.outcome;
    }

private:
    friend struct TestProbe;

    StateVector& state_of(ParticleId pid) {
        if (pid.token_ >= states_.size())
            throw std::out_of_range("Registry: unknown particle");
        return states_[static_cast<std::size_t>(pid.token_)];
    }

    int dim_;
    std::vector<StateVector> states_;
};

} // namespace mqpc
