#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stereoknn/clustering.hpp"
#include "stereoknn/geometry.hpp"

namespace stereoknn {

/// 64-QAM constellation: symbol positions and their 6-bit labels. The first
/// three bits (most significant) Gray-encode the column, the last three the
/// row, so grid-adjacent symbols differ in exactly one bit.
struct Alphabet {
    std::vector<Point2> symbols;
    std::vector<std::uint8_t> bits;

    std::size_t size() const { return symbols.size(); }
};

/// Received symbols with ground truth. launchPowerDbm is carried as metadata
/// (NaN when unknown, e.g. for synthetic or loaded data); snrDb is measured
/// against the launched alphabet symbols (+inf for a noiseless set).
struct QamDataset {
    std::vector<Point2> rx;
    std::vector<std::uint8_t> labels;
    Alphabet alphabet;
    double launchPowerDbm = 0.0;
    double snrDb = 0.0;
};

/// Synthetic channel: a global phase rotation plus complex AWGN with
/// per-axis standard deviation sigma.
struct ChannelConfig {
    double sigma = 0.0;
    double phaseRotation = 0.0;
    std::uint64_t seed = 0;
    std::int64_t count = 0;
};

/// 8x8 grid on {±1,±3,±5,±7}^2, rescaled to the given mean symbol power
/// (unit by default), with Gray-coded labels.
Alphabet buildAlphabet64(double meanPower = 1.0);

/// Draws `count` symbols uniformly, rotates them by the configured phase and
/// adds Gaussian noise. Deterministic for a fixed seed.
QamDataset generateDataset(const Alphabet& alphabet, const ChannelConfig& cfg);

/// 10*log10( mean|rx|^2 / mean|rx - tx|^2 ). Throws InfiniteSnrError when
/// the noise power is zero.
double computeSnr(std::span<const Point2> rx, std::span<const Point2> tx);

/// dBm to watts: 10^((p - 30)/10).
double dbmToWatts(double dbm);

/// Nearest alphabet symbol per centroid, matched in the 2D signal plane.
/// 3D centroids are first rescaled onto S^2(sphereRadius) and mapped back
/// through the forward stereographic projection.
std::vector<int> matchCentroidsToAlphabet(const std::vector<PointVec>& centroids,
                                          const Alphabet& alphabet,
                                          double sphereRadius = 0.0);

enum class DemapPolicy {
    Strict,   // two centroids matching one symbol is an AmbiguousDemapError
    Lenient,  // collisions stand; the colliding clusters share a label
};

/// Bit labels for every point: each centroid is matched to its nearest
/// alphabet symbol and points inherit their centroid's label.
std::vector<std::uint8_t> demap(const Assignment& assignment,
                                const std::vector<PointVec>& centroids,
                                const Alphabet& alphabet, double sphereRadius = 0.0,
                                DemapPolicy policy = DemapPolicy::Strict);

struct Metrics {
    double symbolAccuracy = 0.0;
    double symbolErrorRate = 0.0;
    double bitErrorRate = 0.0;
};

Metrics computeMetrics(std::span<const std::uint8_t> predicted,
                       std::span<const std::uint8_t> truth);

/// Deterministic shuffled split; both parts keep the alphabet metadata.
std::pair<QamDataset, QamDataset> splitTrainTest(const QamDataset& dataset,
                                                 double trainFraction, std::uint64_t seed);

/// Dataset CSV: header `rx_re,rx_im,bits`, floats at 17 significant digits.
void saveDataset(const QamDataset& dataset, const std::filesystem::path& path);
QamDataset loadDataset(const std::filesystem::path& path);

/// Alphabet CSV: header `index,re,im,bits`.
void saveAlphabet(const Alphabet& alphabet, const std::filesystem::path& path);
Alphabet loadAlphabet(const std::filesystem::path& path);

/// 6-character 0/1 string, most significant bit first.
std::string bitsToString(std::uint8_t bits);
std::uint8_t bitsFromString(std::string_view text);

}  // namespace stereoknn
