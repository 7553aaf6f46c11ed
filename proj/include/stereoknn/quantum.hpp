#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "stereoknn/geometry.hpp"

namespace stereoknn {

/// Single-qubit pure state amp0|0> + amp1|1>, |amp0|^2 + |amp1|^2 = 1.
struct PureQubit {
    std::complex<double> amp0{1.0, 0.0};
    std::complex<double> amp1{0.0, 0.0};
};

/// Bloch vector, |a| <= 1. Pure states sit on the unit sphere, mixed states
/// strictly inside.
struct BlochVector {
    Point3 a;
};

/// Shot budget and seed for one Monte Carlo estimator call. Each call seeds
/// its own generator, so estimates are reproducible and order-independent.
struct ShotConfig {
    std::int64_t shots = 1;
    std::uint64_t seed = 0;
};

/// State preparation from the zero state:
/// amp0 = cos(theta/2), amp1 = e^{i phi} sin(theta/2).
PureQubit prepare(SphereAngles angles);

/// Bloch vector of a pure state (unit length up to rounding).
Point3 blochVectorOf(const PureQubit& q);

/// Bloch embedding: the pure state whose Bloch vector is p/|p|.
PureQubit blochEmbed(Point3 p);

/// |<q1|q2>|^2. Equals (1 + a1.a2)/2 for the corresponding Bloch vectors.
double fidelityPure(const PureQubit& q1, const PureQubit& q2);

/// Probability of the ij = 11 outcome of the Bell-state measurement,
/// (1 - |<q1|q2>|^2)/2.
double bellP11Exact(const PureQubit& q1, const PureQubit& q2);

/// Monte Carlo estimate of bellP11Exact: k/shots with
/// k ~ Binomial(shots, p11), drawn from a generator seeded by cfg.seed.
double bellP11Sampled(const PureQubit& q1, const PureQubit& q2, const ShotConfig& cfg);

/// Mixed-state dissimilarity (1 - tr(rho_a1 rho_a2))/2 = (1 - a1.a2)/4.
double noisyQuantumDissimilarity(const BlochVector& a1, const BlochVector& a2);

/// Eigendecomposition of a Bloch vector: rho_a = p rho_plus + (1-p) rho_minus
/// with p = (1 + |a|)/2 and plus/minus the antipodal unit directions of a.
struct EigenSplit {
    double p = 1.0;
    Point3 plus;
    Point3 minus;
};
EigenSplit eigenSplit(const BlochVector& a);

/// Dense angle encoding: qubit j prepared from the feature pair
/// (f[2j], f[2j+1]). The feature count must be even; callers pad odd vectors
/// with a trailing zero themselves.
std::vector<PureQubit> denseAngleEncode(const std::vector<double>& features);

/// High-dimensional quantum dissimilarity: the sum over encoded qubit pairs
/// of the Bell p11 outcome, exact or shot-sampled per pair.
double highDimQuantumDissimilarity(const std::vector<double>& f1,
                                   const std::vector<double>& f2,
                                   const std::optional<ShotConfig>& shots = std::nullopt);

/// Probability of the maximally entangled |Phi> outcome of a qudit Bell
/// measurement on two real unit vectors: (v1.v2)^2 / d.
double quditBellOutcomeProbability(const std::vector<double>& v1,
                                   const std::vector<double>& v2);

}  // namespace stereoknn
