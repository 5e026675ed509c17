#pragma once

// Independent reference computations for the test suite. Everything here is
// derived from first principles (explicit amplitude tables, exhaustive
// enumeration, plain modular arithmetic) without touching the library code
// under test, so agreement between the two is meaningful.

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

using cx = std::complex<double>;

inline std::vector<cx> comp_state(int d, int k) {
    std::vector<cx> v(static_cast<std::size_t>(d), cx{0.0, 0.0});
    v[static_cast<std::size_t>(k)] = cx{1.0, 0.0};
    return v;
}

inline std::vector<cx> fourier_state(int d, int k) {
    std::vector<cx> v(static_cast<std::size_t>(d));
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j)
        v[static_cast<std::size_t>(j)] =
            scale * std::polar(1.0, 2.0 * M_PI * double((j * k) % d) / d);
    return v;
}

inline double overlap2(const std::vector<cx>& a, const std::vector<cx>& b) {
    cx s{0.0, 0.0};
    for (std::size_t j = 0; j < a.size(); ++j)
        s += std::conj(a[j]) * b[j];
    return std::norm(s);
}

enum class Policy { T1, T2, Random };

// Probability that one decoy — prepared in a uniformly random basis with a
// uniformly random index — fails the sender's comparison after an
// interceptor measured it under the given policy. Exhaustive enumeration
// over decoy basis x decoy index x attacker basis x attacker outcome x
// checker outcome, weighted by Born probabilities from the amplitude tables.
inline double per_decoy_detection(int d, Policy policy) {
    double detect = 0.0;
    for (int decoy_fourier = 0; decoy_fourier < 2; ++decoy_fourier) {
        for (int k = 0; k < d; ++k) {
            const auto prepared = decoy_fourier ? fourier_state(d, k) : comp_state(d, k);
            std::vector<std::pair<bool, double>> attacker_bases;
            if (policy == Policy::T1)
                attacker_bases = {{false, 1.0}};
            else if (policy == Policy::T2)
                attacker_bases = {{true, 1.0}};
            else
                attacker_bases = {{false, 0.5}, {true, 0.5}};
            for (const auto& [a_fourier, aw] : attacker_bases) {
                for (int o = 0; o < d; ++o) {
                    const auto a_state = a_fourier ? fourier_state(d, o) : comp_state(d, o);
                    const double p_outcome = overlap2(a_state, prepared);
                    if (p_outcome == 0.0)
                        continue;
                    for (int c = 0; c < d; ++c) {
                        if (c == k)
                            continue;
                        const auto c_state = decoy_fourier ? fourier_state(d, c) : comp_state(d, c);
                        detect += 0.5 * (1.0 / d) * aw * p_outcome * overlap2(c_state, a_state);
                    }
                }
            }
        }
    }
    return detect;
}

// Difference value the dealer computes for one group: encode k with every
// party's q + bit shift, then strip k and the key sum back off.
inline int decode_difference(int d, int k, const std::vector<int>& q_column,
                             const std::vector<int>& bit_column) {
    if (q_column.size() != bit_column.size())
        throw std::invalid_argument("decode_difference: column size mismatch");
    int v = k;
    int key_sum = 0;
    for (std::size_t i = 0; i < q_column.size(); ++i) {
        v = (v + q_column[i] + bit_column[i]) % d;
        key_sum = (key_sum + q_column[i]) % d;
    }
    return ((v + d - k - key_sum) % d + d) % d;
}

struct Prediction {
    bool equal;
    int first_differing; // smallest 1-based group with nonzero difference, 0 if none
};

// Expected comparison verdict: group l decodes to (sum of bits l) mod d,
// which is zero exactly when the column sum is 0 or p (= d).
inline Prediction predict_outcome(int d, int p, int L, const std::vector<std::uint64_t>& secrets) {
    Prediction pr{true, 0};
    for (int l = 1; l <= L; ++l) {
        int sum = 0;
        for (int i = 0; i < p; ++i)
            sum += static_cast<int>((secrets[static_cast<std::size_t>(i)] >> (l - 1)) & 1u);
        if (sum % d != 0) {
            pr.equal = false;
            pr.first_differing = l;
            break;
        }
    }
    return pr;
}

inline double binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Mutual information (bits) between the leaked value f = (q + x) mod d and
// the secret bit x, with q uniform on [0,d) and x uniform on {0,1}. Exact
// enumeration of the joint distribution.
inline double leakage_mutual_information(int d) {
    std::vector<std::vector<double>> joint(static_cast<std::size_t>(d),
                                           std::vector<double>(2, 0.0));
    for (int x = 0; x < 2; ++x)
        for (int q = 0; q < d; ++q)
            joint[static_cast<std::size_t>((q + x) % d)][static_cast<std::size_t>(x)] +=
                0.5 / d;
    std::vector<double> pf(static_cast<std::size_t>(d), 0.0);
    double px[2] = {0.0, 0.0};
    for (int f = 0; f < d; ++f)
        for (int x = 0; x < 2; ++x) {
            pf[static_cast<std::size_t>(f)] += joint[static_cast<std::size_t>(f)][static_cast<std::size_t>(x)];
            px[x] += joint[static_cast<std::size_t>(f)][static_cast<std::size_t>(x)];
        }
    double info = 0.0;
    for (int f = 0; f < d; ++f)
        for (int x = 0; x < 2; ++x) {
            const double j = joint[static_cast<std::size_t>(f)][static_cast<std::size_t>(x)];
            if (j > 0.0)
                info += j * std::log2(j / (pf[static_cast<std::size_t>(f)] * px[x]));
        }
    return info;
}

} // namespace oracle
