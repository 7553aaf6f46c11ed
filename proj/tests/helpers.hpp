#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "stereoknn/geometry.hpp"
#include "stereoknn/rng.hpp"

namespace testutil {

using stereoknn::Point2;
using stereoknn::Point3;
using stereoknn::SplitMix64;

inline double uniformIn(SplitMix64& rng, double lo, double hi) {
    return lo + (hi - lo) * rng.uniform();
}

inline Point2 randomPoint2(SplitMix64& rng, double spread = 2.0) {
    return {uniformIn(rng, -spread, spread), uniformIn(rng, -spread, spread)};
}

/// Uniform direction on the unit n-sphere in R^{n+1} (Gaussian trick).
inline std::vector<double> randomUnitVector(SplitMix64& rng, std::size_t dim) {
    std::vector<double> v(dim);
    while (true) {
        double nsq = 0.0;
        for (std::size_t i = 0; i < dim; i += 2) {
            const auto [g1, g2] = rng.gaussPair();
            v[i] = g1;
            if (i + 1 < dim) v[i + 1] = g2;
            nsq += g1 * g1 + ((i + 1 < dim) ? g2 * g2 : 0.0);
        }
        if (nsq > 1e-12) {
            const double inv = 1.0 / std::sqrt(nsq);
            for (double& x : v) x *= inv;
            return v;
        }
    }
}

inline Point3 randomUnitPoint3(SplitMix64& rng) {
    const auto v = randomUnitVector(rng, 3);
    return {v[0], v[1], v[2]};
}

inline stereoknn::SphereAngles randomAngles(SplitMix64& rng) {
    return {uniformIn(rng, 0.0, std::numbers::pi),
            uniformIn(rng, -std::numbers::pi, std::numbers::pi)};
}

/// Ray-trace oracle for the displaced-sphere geometry: the line from
/// N = (0, 0, nHeight) through (p, 0) is intersected with the sphere of
/// radius rho centred at (0, 0, nHeight - rho) (which also passes through N),
/// and the angles of the second intersection are measured about that centre.
inline stereoknn::SphereAngles displacedSphereAnglesOracle(Point2 p, double nHeight,
                                                           double rho) {
    const double t = 2.0 * rho * nHeight / (normSq(p) + nHeight * nHeight);
    const Point3 fromCentre{t * p.x, t * p.y, rho - t * nHeight};
    return stereoknn::anglesOf(fromCentre);
}

}  // namespace testutil
