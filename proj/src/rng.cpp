#include "stereoknn/rng.hpp"

#include <cmath>
#include <numbers>

#include "stereoknn/errors.hpp"

namespace stereoknn {

std::pair<double, double> SplitMix64::gaussPair() {
    // u1 shifted into (0, 1] so the log stays finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

namespace {

std::int64_t binomialByCounting(std::int64_t n, double p, SplitMix64& rng) {
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        if (rng.uniform() < p) ++hits;
    }
    return hits;
}

// BINV: walk the CDF from k = 0. Expected O(n*p) steps; requires p <= 0.5.
std::int64_t binomialInversion(std::int64_t n, double p, SplitMix64& rng) {
    const double logq = std::log1p(-p);
    const double odds = p / (1.0 - p);
    while (true) {
        double u = rng.uniform();
        double pmf = std::exp(static_cast<double>(n) * logq);  // P(X = 0)
        std::int64_t k = 0;
        bool overran = false;
        while (u > pmf) {
            u -= pmf;
            ++k;
            if (k > n) {  // rounding in the far tail; retry
                overran = true;
                break;
            }
            pmf *= odds * static_cast<double>(n - k + 1) / static_cast<double>(k);
        }
        if (!overran) return k;
    }
}

// BTRS (Hormann's transformed rejection). O(1) expected; requires p <= 0.5
// and n*p >= 10.
std::int64_t binomialBtrs(std::int64_t n, double p, SplitMix64& rng) {
    const double nd = static_cast<double>(n);
    const double spq = std::sqrt(nd * p * (1.0 - p));
    const double b = 1.15 + 2.53 * spq;
    const double a = -0.0873 + 0.0248 * b + 0.01 * p;
    const double c = nd * p + 0.5;
    const double vr = 0.92 - 4.2 / b;
    const double alpha = (2.83 + 5.1 / b) * spq;
    const double lpq = std::log(p / (1.0 - p));
    const double m = std::floor((nd + 1.0) * p);
    const double h = std::lgamma(m + 1.0) + std::lgamma(nd - m + 1.0);
    while (true) {
        const double u = rng.uniform() - 0.5;
        double v = rng.uniform();
        const double us = 0.5 - std::fabs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + c);
        if (kf < 0.0 || kf > nd) continue;
        if (us >= 0.07 && v <= vr) return static_cast<std::int64_t>(kf);
        v = std::log(v * alpha / (a / (us * us) + b));
        const double logRatio =
            h - std::lgamma(kf + 1.0) - std::lgamma(nd - kf + 1.0) + (kf - m) * lpq;
        if (v <= logRatio) return static_cast<std::int64_t>(kf);
    }
}

}  // namespace

std::int64_t binomialDraw(std::int64_t n, double p, SplitMix64& rng) {
    if (n < 0 || !(p >= 0.0) || !(p <= 1.0)) {
        throw InvalidInputError("binomialDraw: need n >= 0 and p in [0, 1]");
    }
    if (n == 0 || p == 0.0) return 0;
    if (p == 1.0) return n;
    if (n <= 1000) return binomialByCounting(n, p, rng);
    const bool flipped = p > 0.5;
    const double q = flipped ? 1.0 - p : p;
    const std::int64_t k = (static_cast<double>(n) * q < 10.0)
                               ? binomialInversion(n, q, rng)
                               : binomialBtrs(n, q, rng);
    return flipped ? n - k : k;
}

}  // namespace stereoknn
