#pragma once

#include <cstdint>
#include <span>

#include "stereoknn/geometry.hpp"
#include "stereoknn/quantum.hpp"

namespace stereoknn {

/// Pluggable dissimilarity selector for clustering states.
struct DissimilarityKind {
    enum class Tag { Euclidean, Cosine, QuantumExact, QuantumShots, NoisyQuantum };

    Tag tag = Tag::Euclidean;
    std::int64_t shots = 0;  // QuantumShots only
    std::uint64_t seed = 0;  // QuantumShots only

    static DissimilarityKind euclidean() { return {Tag::Euclidean}; }
    static DissimilarityKind cosine() { return {Tag::Cosine}; }
    static DissimilarityKind quantumExact() { return {Tag::QuantumExact}; }
    static DissimilarityKind quantumShots(std::int64_t shots, std::uint64_t seed);
    static DissimilarityKind noisyQuantum() { return {Tag::NoisyQuantum}; }
};

/// Squared Euclidean distance |a - b|^2.
double dEuclidean(std::span<const double> a, std::span<const double> b);

/// Cosine dissimilarity 1 - a.b/(|a||b|); scale invariant, in [0, 2].
double dCosine(std::span<const double> a, std::span<const double> b);

/// Quantum dissimilarity of the Bloch embeddings, dCosine/4; equals
/// (1 - fidelity)/2 of the embedded pure states.
double dQuantumExact(Point3 p1, Point3 p2);

/// Shot-sampled quantum dissimilarity: the Bell p11 estimator applied to the
/// Bloch embeddings of p1/|p1| and p2/|p2|.
double dQuantumShots(Point3 p1, Point3 p2, const ShotConfig& cfg);

/// Closed form of dCosine(isp(p1, r), isp(p2, r)):
/// d_e(p1, p2) * 2r^2 / ((r^2 + |p1|^2)(r^2 + |p2|^2)).
double dStereoComposed(Point2 p1, Point2 p2, double r);

/// Dispatch on the selector. pairSalt individualizes the shot stream of a
/// QuantumShots evaluation (hashed with the selector's seed); exact kinds
/// ignore it.
double evaluate(const DissimilarityKind& kind, std::span<const double> a,
                std::span<const double> b, std::uint64_t pairSalt = 0);

}  // namespace stereoknn
