#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mqpc/rng.hpp"

namespace mqpc {

using Complex = std::complex<double>;

// Tolerances: algebraic identities must hold to kAlgebraTol; state validity
// (normalization) to kStateTol. Drift past kStateTol is an internal error and
// is never silently renormalized.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kStateTol = 1e-9;

// The two conjugate bases of a d-level system: the computational basis
// {|k>} and its discrete-Fourier image {F|k>}.
enum class Basis { Computational, Fourier };

struct BasisState {
    Basis basis;
    int index; // k in [0, d)
};

// omega_d^power = exp(2*pi*i*power/d), the primitive d-th root of unity.
// The exponent is reduced mod d before evaluation so large products of
// indices do not accumulate angle error.
inline Complex omega(int d, long long power = 1) {
    const long long r = ((power % d) + d) % d;
    return std::polar(1.0, 2.0 * M_PI * static_cast<double>(r) / static_cast<double>(d));
}

// Pure state of a single d-level system: d complex amplitudes with unit
// squared norm. Immutable after construction; operations return new values.
class StateVector {
public:
    explicit StateVector(std::vector<Complex> amplitudes)
        : amps_(std::move(amplitudes)) {
        if (amps_.size() < 2)
            throw std::invalid_argument("StateVector: dimension must be >= 2");
        double n = 0.0;
        for (const auto& a : amps_) n += std::norm(a);
        if (std::abs(n - 1.0) > kStateTol)
            throw std::invalid_argument("StateVector: amplitudes are not normalized");
    }

    int dim() const noexcept { return static_cast<int>(amps_.size()); }
    const std::vector<Complex>& amplitudes() const noexcept { return amps_; }
    Complex amplitude(int j) const { return amps_.at(static_cast<std::size_t>(j)); }

private:
    std::vector<Complex> amps_;
};

// <a|b> = sum_j conj(a_j) b_j.
inline Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("inner_product: dimension mismatch");
    Complex s{0.0, 0.0};
    for (int j = 0; j < a.dim(); ++j)
        s += std::conj(a.amplitude(j)) * b.amplitude(j);
    return s;
}

// Prepares the basis state |k> or F|k> = (1/sqrt(d)) sum_j omega^{jk} |j>.
inline StateVector prepare(BasisState b, int dim) {
    if (dim < 2) throw std::invalid_argument("prepare: dimension must be >= 2");
    if (b.index < 0 || b.index >= dim)
        throw std::invalid_argument("prepare: basis index out of range");
    std::vector<Complex> amps(static_cast<std::size_t>(dim), Complex{0.0, 0.0});
    if (b.basis == Basis::Computational) {
        amps[static_cast<std::size_t>(b.index)] = Complex{1.0, 0.0};
    } else {
        const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
        for (int j = 0; j < dim; ++j)
            amps[static_cast<std::size_t>(j)] =
                omega(dim, static_cast<long long>(j) * b.index) * scale;
    }
    return StateVector(std::move(amps));
}

// Cyclic index shift: the amplitude at position r moves to (r+m) mod d.
// Sends |k> to |(k+m) mod d> and leaves every Fourier state fixed up to the
// global factor omega^{-mk}.
inline StateVector apply_shift(const StateVector& s, int m) {
    const int d = s.dim();
    if (m < 0 || m >= d)
        throw std::invalid_argument("apply_shift: shift amount out of range");
    std::vector<Complex> out(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r)
        out[static_cast<std::size_t>((r + m) % d)] = s.amplitude(r);
    return StateVector(std::move(out));
}

struct MeasurementResult {
    int outcome;
    StateVector collapsed;
};

// Born-rule measurement in either basis. Outcome k is drawn with probability
// |<basis_k|s>|^2 and the collapsed state is exactly the basis state k.
// Fourier-basis probabilities are computed by projecting onto prepared
// Fourier states rather than transforming the input.
inline MeasurementResult measure_in_basis(const StateVector& s, Basis basis, Rng& rng) {
    const int d = s.dim();
    std::vector<double> probs(static_cast<std::size_t>(d));
    double total = 0.0;
    if (basis == Basis::Computational) {
        for (int j = 0; j < d; ++j) {
            probs[static_cast<std::size_t>(j)] = std::norm(s.amplitude(j));
            total += probs[static_cast<std::size_t>(j)];
        }
    } else {
        for (int k = 0; k < d; ++k) {
            const StateVector fk = prepare({Basis::Fourier, k}, d);
            probs[static_cast<std::size_t>(k)] = std::norm(inner_product(fk, s));
            total += probs[static_cast<std::size_t>(k)];
        }
    }
    if (std::abs(total - 1.0) > kStateTol)
        throw std::logic_error("measure_in_basis: outcome probabilities drifted from 1");

    const double u = rng.uniform_unit() * total;
    double acc = 0.0;
    int outcome = d - 1;
    for (int k = 0; k < d; ++k) {
        acc += probs[static_cast<std::size_t>(k)];
        if (u < acc) {
            outcome = k;
            break;
        }
    }
    return MeasurementResult{outcome, prepare({basis, outcome}, d)};
}

// True iff |<a|b>| >= 1 - tol, i.e. the states agree up to an unobservable
// global phase.
inline bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                                     double tol = kAlgebraTol) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("equal_up_to_global_phase: dimension mismatch");
    return std::abs(inner_product(a, b)) >= 1.0 - tol;
}

} // namespace mqpc
