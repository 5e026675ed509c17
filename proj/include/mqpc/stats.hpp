#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mqpc {

// z for a central 95% normal interval.
inline constexpr double kZ95 = 1.959963984540054;

struct Interval {
    double low;
    double high;
};

// Wilson score interval for a binomial proportion; well behaved at rates
// near 0 and 1.
inline Interval wilson_interval(std::int64_t successes, std::int64_t trials, double z = kZ95) {
    if (trials <= 0) return {0.0, 1.0};
    if (successes < 0 || successes > trials)
        throw std::invalid_argument("wilson_interval: successes out of range");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

inline double binomial_sigma(double p, std::int64_t trials) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

namespace detail {

// Regularized lower incomplete gamma P(a,x) by series expansion.
inline double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a,x) by continued fraction.
inline double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace detail

// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
inline double gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_q: invalid arguments");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
    return detail::gamma_q_cf(a, x);
}

// Upper-tail p-value of a chi-square statistic with `dof` degrees of freedom.
inline double chi_square_pvalue(double statistic, int dof) {
    if (dof <= 0) throw std::invalid_argument("chi_square_pvalue: dof must be positive");
    if (statistic < 0.0) return 1.0;
    return gamma_q(static_cast<double>(dof) / 2.0, statistic / 2.0);
}

// Goodness-of-fit of observed counts against expected probabilities.
// Bins with zero expected probability must also have zero observations.
// Returns the p-value; the caller compares it against a significance level.
inline double chi_square_gof_pvalue(const std::vector<std::int64_t>& observed,
                                    const std::vector<double>& expected_probs) {
    if (observed.size() != expected_probs.size() || observed.empty())
        throw std::invalid_argument("chi_square_gof_pvalue: size mismatch");
    std::int64_t n = 0;
    for (auto c : observed) n += c;
    if (n <= 0) throw std::invalid_argument("chi_square_gof_pvalue: no observations");

    double stat = 0.0;
    int bins = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double e = expected_probs[i] * static_cast<double>(n);
        if (expected_probs[i] <= 0.0) {
            if (observed[i] != 0) return 0.0; // impossible outcome observed
            continue;
        }
        const double diff = static_cast<double>(observed[i]) - e;
        stat += diff * diff / e;
        ++bins;
    }
    if (bins < 2) return 1.0; // single possible outcome, nothing to test
    return chi_square_pvalue(stat, bins - 1);
}

} // namespace mqpc
