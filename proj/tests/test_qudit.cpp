#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "mqpc/qudit.hpp"
#include "mqpc/rng.hpp"
#include "mqpc/stats.hpp"
#include "support/oracles.hpp"

using namespace mqpc;

namespace {

StateVector random_state(int d, Rng& rng) {
    std::vector<Complex> amps(static_cast<std::size_t>(d));
    double norm = 0.0;
    for (auto& a : amps) {
        a = Complex{rng.uniform_unit() - 0.5, rng.uniform_unit() - 0.5};
        norm += std::norm(a);
    }
    for (auto& a : amps)
        a /= std::sqrt(norm);
    return StateVector(std::move(amps));
}

} // namespace

TEST_CASE("omega reduces its exponent before evaluating", "[qudit]") {
    CHECK(omega(3, 1) == omega(3, 3000001LL));
    CHECK(omega(5, -2) == omega(5, 3));
    CHECK(omega(2, 1) == Complex(std::cos(M_PI), std::sin(M_PI)));
}

TEST_CASE("prepare builds computational and Fourier basis states", "[qudit]") {
    const StateVector c0 = prepare({Basis::Computational, 0}, 3);
    CHECK(c0.amplitude(0) == Complex(1.0, 0.0));
    CHECK(c0.amplitude(1) == Complex(0.0, 0.0));
    CHECK(c0.amplitude(2) == Complex(0.0, 0.0));

    const StateVector f0 = prepare({Basis::Fourier, 0}, 2);
    CHECK(std::abs(f0.amplitude(0) - Complex(1.0 / std::sqrt(2.0), 0.0)) < kAlgebraTol);
    CHECK(std::abs(f0.amplitude(1) - Complex(1.0 / std::sqrt(2.0), 0.0)) < kAlgebraTol);

    const StateVector f1 = prepare({Basis::Fourier, 1}, 3);
    const auto want = oracle::fourier_state(3, 1);
    for (int j = 0; j < 3; ++j)
        CHECK(std::abs(f1.amplitude(j) - want[static_cast<std::size_t>(j)]) < kAlgebraTol);
}

TEST_CASE("prepare rejects out-of-range indices", "[qudit]") {
    CHECK_THROWS_AS(prepare({Basis::Computational, 3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(prepare({Basis::Fourier, -1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(prepare({Basis::Computational, 0}, 1), std::invalid_argument);
}

TEST_CASE("StateVector enforces normalization and dimension", "[qudit]") {
    CHECK_THROWS_AS(StateVector({Complex(1.0, 0.0)}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector({Complex(1.0, 0.0), Complex(1.0, 0.0)}), std::invalid_argument);
    CHECK_NOTHROW(StateVector({Complex(0.6, 0.0), Complex(0.0, 0.8)}));
}

TEST_CASE("apply_shift moves computational indices cyclically", "[qudit]") {
    const StateVector shifted = apply_shift(prepare({Basis::Computational, 1}, 3), 2);
    CHECK(shifted.amplitude(0) == Complex(1.0, 0.0));

    for (int d = 2; d <= 9; ++d)
        for (int k = 0; k < d; ++k)
            for (int m = 0; m < d; ++m) {
                const StateVector s = apply_shift(prepare({Basis::Computational, k}, d), m);
                CHECK(s.amplitude((k + m) % d) == Complex(1.0, 0.0));
            }
}

TEST_CASE("apply_shift with amount zero is the identity", "[qudit]") {
    Rng rng(11);
    const StateVector s = random_state(5, rng);
    const StateVector t = apply_shift(s, 0);
    for (int j = 0; j < 5; ++j)
        CHECK(t.amplitude(j) == s.amplitude(j));
}

TEST_CASE("apply_shift rejects out-of-range amounts", "[qudit]") {
    const StateVector s = prepare({Basis::Computational, 0}, 3);
    CHECK_THROWS_AS(apply_shift(s, 3), std::invalid_argument);
    CHECK_THROWS_AS(apply_shift(s, -1), std::invalid_argument);
}

TEST_CASE("shifts compose additively mod d", "[qudit]") {
    Rng rng(23);
    for (int d = 2; d <= 9; ++d) {
        const StateVector s = random_state(d, rng);
        for (int trial = 0; trial < 8; ++trial) {
            const int a = rng.uniform_int(d);
            const int b = rng.uniform_int(d);
            const StateVector two_step = apply_shift(apply_shift(s, a), b);
            const StateVector one_step = apply_shift(s, (a + b) % d);
            for (int j = 0; j < d; ++j)
                CHECK(std::abs(two_step.amplitude(j) - one_step.amplitude(j)) < kAlgebraTol);
        }
    }
}

TEST_CASE("shifting a Fourier state only contributes a global phase", "[qudit]") {
    for (int d = 2; d <= 16; ++d)
        for (int k = 0; k < d; ++k) {
            const StateVector fk = prepare({Basis::Fourier, k}, d);
            for (int m = 0; m < d; ++m) {
                const StateVector shifted = apply_shift(fk, m);
                CHECK(equal_up_to_global_phase(shifted, fk, kAlgebraTol));
                // the phase factor is exactly omega^{-mk}
                const Complex phase = inner_product(fk, shifted);
                CHECK(std::abs(phase - omega(d, -static_cast<long long>(m) * k)) < kAlgebraTol);
            }
        }
}

TEST_CASE("F|1> at d=3 picks up omega^{-1} under a unit shift", "[qudit]") {
    const StateVector f1 = prepare({Basis::Fourier, 1}, 3);
    const StateVector shifted = apply_shift(f1, 1);
    for (int j = 0; j < 3; ++j)
        CHECK(std::abs(shifted.amplitude(j) - omega(3, -1) * f1.amplitude(j)) < kAlgebraTol);
}

TEST_CASE("each basis is orthonormal and the two are mutually unbiased", "[qudit]") {
    for (int d = 2; d <= 16; ++d) {
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                const Complex cc = inner_product(prepare({Basis::Computational, j}, d),
                                                 prepare({Basis::Computational, k}, d));
                const Complex ff = inner_product(prepare({Basis::Fourier, j}, d),
                                                 prepare({Basis::Fourier, k}, d));
                const double want = j == k ? 1.0 : 0.0;
                CHECK(std::abs(cc - Complex(want, 0.0)) < kAlgebraTol);
                CHECK(std::abs(ff - Complex(want, 0.0)) < kAlgebraTol);

                const Complex cross = inner_product(prepare({Basis::Computational, j}, d),
                                                    prepare({Basis::Fourier, k}, d));
                CHECK(std::abs(std::norm(cross) - 1.0 / d) < kAlgebraTol);
            }
    }
}

TEST_CASE("measuring an eigenstate is deterministic", "[qudit]") {
    Rng rng(5);
    const MeasurementResult c = measure_in_basis(prepare({Basis::Computational, 2}, 4),
                                                 Basis::Computational, rng);
    CHECK(c.outcome == 2);
    const MeasurementResult f =
        measure_in_basis(prepare({Basis::Fourier, 1}, 4), Basis::Fourier, rng);
    CHECK(f.outcome == 1);
}

TEST_CASE("measurement collapses to the outcome's basis state", "[qudit]") {
    Rng rng(7);
    for (int d = 2; d <= 5; ++d)
        for (int rep = 0; rep < 20; ++rep) {
            const MeasurementResult first =
                measure_in_basis(prepare({Basis::Fourier, rep % d}, d), Basis::Computational, rng);
            const StateVector want = prepare({Basis::Computational, first.outcome}, d);
            for (int j = 0; j < d; ++j)
                CHECK(first.collapsed.amplitude(j) == want.amplitude(j));
            // measuring the collapsed state again cannot move the outcome
            const MeasurementResult second =
                measure_in_basis(first.collapsed, Basis::Computational, rng);
            CHECK(second.outcome == first.outcome);
        }
}

TEST_CASE("cross-basis measurement outcomes are uniform", "[qudit]") {
    // |<F_k|j>|^2 = 1/d for every j, so computational outcomes of a Fourier
    // state follow the uniform distribution.
    Rng rng(101);
    const int d = 4;
    const int draws = 100000;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(d), 0);
    const StateVector f0 = prepare({Basis::Fourier, 0}, d);
    for (int n = 0; n < draws; ++n)
        ++counts[static_cast<std::size_t>(measure_in_basis(f0, Basis::Computational, rng).outcome)];
    const std::vector<double> uniform(static_cast<std::size_t>(d), 1.0 / d);
    CHECK(chi_square_gof_pvalue(counts, uniform) >= 0.001);
}

TEST_CASE("Born rule holds for a skewed superposition", "[qudit]") {
    // amplitudes proportional to (1, 2, 3) give outcome weights (1, 4, 9)/14
    Rng rng(202);
    const double scale = 1.0 / std::sqrt(14.0);
    const StateVector s(
        {Complex(1.0 * scale, 0.0), Complex(2.0 * scale, 0.0), Complex(0.0, 3.0 * scale)});
    std::vector<std::int64_t> counts(3, 0);
    for (int n = 0; n < 100000; ++n)
        ++counts[static_cast<std::size_t>(measure_in_basis(s, Basis::Computational, rng).outcome)];
    CHECK(chi_square_gof_pvalue(counts, {1.0 / 14, 4.0 / 14, 9.0 / 14}) >= 0.001);
}

TEST_CASE("equal_up_to_global_phase compares modulo unit scalars", "[qudit]") {
    Rng rng(31);
    const StateVector s = random_state(4, rng);
    CHECK(equal_up_to_global_phase(s, s, kAlgebraTol));
    CHECK_FALSE(equal_up_to_global_phase(prepare({Basis::Computational, 0}, 2),
                                         prepare({Basis::Computational, 1}, 2), kAlgebraTol));
    CHECK_THROWS_AS(equal_up_to_global_phase(prepare({Basis::Computational, 0}, 2),
                                             prepare({Basis::Computational, 0}, 3), kAlgebraTol),
                    std::invalid_argument);
}

TEST_CASE("inner_product requires matching dimensions", "[qudit]") {
    CHECK_THROWS_AS(inner_product(prepare({Basis::Computational, 0}, 2),
                                  prepare({Basis::Computational, 0}, 3)),
                    std::invalid_argument);
}
