#include "stereoknn/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stereoknn/rng.hpp"

namespace stereoknn {

namespace {

constexpr double kNormTol = 1e-12;

void requireNormalized(const PureQubit& q, const char* who) {
    const double n = std::norm(q.amp0) + std::norm(q.amp1);
    if (std::fabs(n - 1.0) > kNormTol) {
        throw InvalidStateError(std::string(who) + ": qubit state is not normalized");
    }
}

void requireInBall(const BlochVector& a, const char* who) {
    if (norm(a.a) > 1.0 + kNormTol) {
        throw InvalidStateError(std::string(who) + ": Bloch vector outside the unit ball");
    }
}

}  // namespace

PureQubit prepare(SphereAngles angles) {
    const double half = angles.theta / 2.0;
    return {std::complex<double>{std::cos(half), 0.0},
            std::polar(std::sin(half), angles.phi)};
}

Point3 blochVectorOf(const PureQubit& q) {
    const std::complex<double> coherence = std::conj(q.amp0) * q.amp1;
    return {2.0 * coherence.real(), 2.0 * coherence.imag(),
            std::norm(q.amp0) - std::norm(q.amp1)};
}

PureQubit blochEmbed(Point3 p) { return prepare(anglesOf(p)); }

double fidelityPure(const PureQubit& q1, const PureQubit& q2) {
    requireNormalized(q1, "fidelityPure");
    requireNormalized(q2, "fidelityPure");
    const std::complex<double> overlap =
        std::conj(q1.amp0) * q2.amp0 + std::conj(q1.amp1) * q2.amp1;
    return std::norm(overlap);
}

double bellP11Exact(const PureQubit& q1, const PureQubit& q2) {
    return 0.5 * (1.0 - fidelityPure(q1, q2));
}

double bellP11Sampled(const PureQubit& q1, const PureQubit& q2, const ShotConfig& cfg) {
    if (cfg.shots < 1) throw InvalidInputError("bellP11Sampled: shots must be >= 1");
    const double p = std::clamp(bellP11Exact(q1, q2), 0.0, 1.0);
    SplitMix64 rng(cfg.seed);
    const std::int64_t hits = binomialDraw(cfg.shots, p, rng);
    return static_cast<double>(hits) / static_cast<double>(cfg.shots);
}

double noisyQuantumDissimilarity(const BlochVector& a1, const BlochVector& a2) {
    requireInBall(a1, "noisyQuantumDissimilarity");
    requireInBall(a2, "noisyQuantumDissimilarity");
    return 0.25 * (1.0 - dot(a1.a, a2.a));
}

EigenSplit eigenSplit(const BlochVector& a) {
    const double len = norm(a.a);
    if (len == 0.0) {
        throw DegenerateDirectionError(
            "eigenSplit: the maximally mixed state has no preferred axis");
    }
    requireInBall(a, "eigenSplit");
    const Point3 plus = (1.0 / len) * a.a;
    return {0.5 * (1.0 + len), plus, -1.0 * plus};
}

std::vector<PureQubit> denseAngleEncode(const std::vector<double>& features) {
    if (features.size() % 2 != 0) {
        throw InvalidInputError("denseAngleEncode: feature count must be even");
    }
    std::vector<PureQubit> qubits;
    qubits.reserve(features.size() / 2);
    for (std::size_t j = 0; j + 1 < features.size(); j += 2) {
        qubits.push_back(prepare({features[j], features[j + 1]}));
    }
    return qubits;
}

double highDimQuantumDissimilarity(const std::vector<double>& f1,
                                   const std::vector<double>& f2,
                                   const std::optional<ShotConfig>& shots) {
    if (f1.size() != f2.size()) {
        throw InvalidInputError("highDimQuantumDissimilarity: feature length mismatch");
    }
    const auto qubits1 = denseAngleEncode(f1);
    const auto qubits2 = denseAngleEncode(f2);
    double total = 0.0;
    for (std::size_t j = 0; j < qubits1.size(); ++j) {
        if (shots) {
            const ShotConfig pairCfg{shots->shots, hashAll(shots->seed, j)};
            total += bellP11Sampled(qubits1[j], qubits2[j], pairCfg);
        } else {
            total += bellP11Exact(qubits1[j], qubits2[j]);
        }
    }
    return total;
}

double quditBellOutcomeProbability(const std::vector<double>& v1,
                                   const std::vector<double>& v2) {
    if (v1.empty() || v1.size() != v2.size()) {
        throw InvalidInputError("quditBellOutcomeProbability: need equal nonempty dimensions");
    }
    double n1 = 0.0, n2 = 0.0, inner = 0.0;
    for (std::size_t i = 0; i < v1.size(); ++i) {
        n1 += v1[i] * v1[i];
        n2 += v2[i] * v2[i];
        inner += v1[i] * v2[i];
    }
    if (std::fabs(n1 - 1.0) > 1e-9 || std::fabs(n2 - 1.0) > 1e-9) {
        throw InvalidInputError("quditBellOutcomeProbability: inputs must be unit vectors");
    }
    return inner * inner / static_cast<double>(v1.size());
}

}  // namespace stereoknn
