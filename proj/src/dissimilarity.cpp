#include "stereoknn/dissimilarity.hpp"

#include <cmath>

#include "stereoknn/rng.hpp"

namespace stereoknn {

DissimilarityKind DissimilarityKind::quantumShots(std::int64_t shots, std::uint64_t seed) {
    if (shots < 1) throw InvalidInputError("DissimilarityKind: shots must be >= 1");
    return {Tag::QuantumShots, shots, seed};
}

double dEuclidean(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw InvalidInputError("dEuclidean: dimension mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        sum += diff * diff;
    }
    return sum;
}

double dCosine(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw InvalidInputError("dCosine: dimension mismatch");
    double na = 0.0, nb = 0.0, inner = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        na += a[i] * a[i];
        nb += b[i] * b[i];
        inner += a[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) {
        throw DegenerateDirectionError("dCosine: zero vector has no direction");
    }
    return 1.0 - inner / (std::sqrt(na) * std::sqrt(nb));
}

double dQuantumExact(Point3 p1, Point3 p2) {
    const double a[] = {p1.x, p1.y, p1.z};
    const double b[] = {p2.x, p2.y, p2.z};
    return 0.25 * dCosine(a, b);
}

double dQuantumShots(Point3 p1, Point3 p2, const ShotConfig& cfg) {
    return bellP11Sampled(blochEmbed(p1), blochEmbed(p2), cfg);
}

double dStereoComposed(Point2 p1, Point2 p2, double r) {
    if (!std::isfinite(r) || !(r > 0.0)) {
        throw InvalidInputError("dStereoComposed: radius must be positive and finite");
    }
    const double a[] = {p1.x, p1.y};
    const double b[] = {p2.x, p2.y};
    const double r2 = r * r;
    return dEuclidean(a, b) * 2.0 * r2 / ((r2 + normSq(p1)) * (r2 + normSq(p2)));
}

namespace {

Point3 asPoint3(std::span<const double> v, const char* who) {
    if (v.size() != 3) {
        throw InvalidInputError(std::string(who) + ": expected 3-dimensional points");
    }
    return {v[0], v[1], v[2]};
}

}  // namespace

double evaluate(const DissimilarityKind& kind, std::span<const double> a,
                std::span<const double> b, std::uint64_t pairSalt) {
    switch (kind.tag) {
        case DissimilarityKind::Tag::Euclidean:
            return dEuclidean(a, b);
        case DissimilarityKind::Tag::Cosine:
            return dCosine(a, b);
        case DissimilarityKind::Tag::QuantumExact:
            return dQuantumExact(asPoint3(a, "evaluate"), asPoint3(b, "evaluate"));
        case DissimilarityKind::Tag::QuantumShots: {
            const ShotConfig cfg{kind.shots, hashCombine(kind.seed, pairSalt)};
            return dQuantumShots(asPoint3(a, "evaluate"), asPoint3(b, "evaluate"), cfg);
        }
        case DissimilarityKind::Tag::NoisyQuantum:
            return noisyQuantumDissimilarity({asPoint3(a, "evaluate")},
                                             {asPoint3(b, "evaluate")});
    }
    throw InvalidInputError("evaluate: unknown dissimilarity kind");
}

}  // namespace stereoknn
