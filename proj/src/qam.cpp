#include "stereoknn/qam.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>

#include "stereoknn/rng.hpp"

namespace stereoknn {

namespace {

constexpr int kGridSide = 8;
constexpr double kRawMeanPower = 42.0;  // mean of x^2 + y^2 over {±1,±3,±5,±7}^2

std::string formatDouble(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double meanNoisePower(std::span<const Point2> rx, std::span<const Point2> tx) {
    double noise = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) noise += normSq(rx[i] - tx[i]);
    return noise / static_cast<double>(rx.size());
}

}  // namespace

Alphabet buildAlphabet64(double meanPower) {
    if (!std::isfinite(meanPower) || !(meanPower > 0.0)) {
        throw InvalidInputError("buildAlphabet64: mean power must be positive");
    }
    const double scale = std::sqrt(meanPower / kRawMeanPower);
    Alphabet alphabet;
    alphabet.symbols.reserve(64);
    alphabet.bits.reserve(64);
    for (int row = 0; row < kGridSide; ++row) {
        for (int col = 0; col < kGridSide; ++col) {
            alphabet.symbols.push_back(
                {(2 * col - 7) * scale, (2 * row - 7) * scale});
            const unsigned grayCol = static_cast<unsigned>(col ^ (col >> 1));
            const unsigned grayRow = static_cast<unsigned>(row ^ (row >> 1));
            alphabet.bits.push_back(static_cast<std::uint8_t>((grayCol << 3) | grayRow));
        }
    }
    return alphabet;
}

QamDataset generateDataset(const Alphabet& alphabet, const ChannelConfig& cfg) {
    if (alphabet.size() == 0) throw InvalidInputError("generateDataset: empty alphabet");
    if (!std::isfinite(cfg.sigma) || cfg.sigma < 0.0) {
        throw InvalidInputError("generateDataset: sigma must be >= 0");
    }
    if (!std::isfinite(cfg.phaseRotation)) {
        throw InvalidInputError("generateDataset: non-finite phase rotation");
    }
    if (cfg.count < 1) throw InvalidInputError("generateDataset: count must be >= 1");

    SplitMix64 rng(cfg.seed);
    const double c = std::cos(cfg.phaseRotation);
    const double s = std::sin(cfg.phaseRotation);

    QamDataset dataset;
    dataset.alphabet = alphabet;
    dataset.launchPowerDbm = std::numeric_limits<double>::quiet_NaN();
    dataset.rx.reserve(static_cast<std::size_t>(cfg.count));
    dataset.labels.reserve(static_cast<std::size_t>(cfg.count));

    std::vector<Point2> launched;
    launched.reserve(static_cast<std::size_t>(cfg.count));
    for (std::int64_t i = 0; i < cfg.count; ++i) {
        const std::size_t idx = rng.below(alphabet.size());
        const Point2 sym = alphabet.symbols[idx];
        const Point2 rotated{sym.x * c - sym.y * s, sym.x * s + sym.y * c};
        const auto [g1, g2] = rng.gaussPair();
        dataset.rx.push_back({rotated.x + cfg.sigma * g1, rotated.y + cfg.sigma * g2});
        dataset.labels.push_back(alphabet.bits[idx]);
        launched.push_back(sym);
    }

    const double noise = meanNoisePower(dataset.rx, launched);
    if (noise == 0.0) {
        dataset.snrDb = std::numeric_limits<double>::infinity();
    } else {
        dataset.snrDb = computeSnr(dataset.rx, launched);
    }
    return dataset;
}

double computeSnr(std::span<const Point2> rx, std::span<const Point2> tx) {
    if (rx.empty() || rx.size() != tx.size()) {
        throw InvalidInputError("computeSnr: need equal nonempty signal lists");
    }
    double signal = 0.0;
    for (const Point2& z : rx) signal += normSq(z);
    signal /= static_cast<double>(rx.size());
    const double noise = meanNoisePower(rx, tx);
    if (noise == 0.0) throw InfiniteSnrError("computeSnr: zero noise power");
    return 10.0 * std::log10(signal / noise);
}

double dbmToWatts(double dbm) {
    if (!std::isfinite(dbm)) throw InvalidInputError("dbmToWatts: non-finite input");
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

std::vector<int> matchCentroidsToAlphabet(const std::vector<PointVec>& centroids,
                                          const Alphabet& alphabet, double sphereRadius) {
    if (centroids.empty()) throw InvalidInputError("matchCentroidsToAlphabet: no centroids");
    const std::size_t dim = centroids.front().size();
    if (dim != 2 && dim != 3) {
        throw InvalidInputError("matchCentroidsToAlphabet: centroids must be 2D or 3D");
    }
    if (dim == 3 && !(sphereRadius > 0.0)) {
        throw InvalidInputError(
            "matchCentroidsToAlphabet: 3D centroids need the projection radius");
    }
    std::vector<int> matched(centroids.size());
    for (std::size_t j = 0; j < centroids.size(); ++j) {
        Point2 flat;
        if (dim == 2) {
            flat = {centroids[j][0], centroids[j][1]};
        } else {
            const Point3 c{centroids[j][0], centroids[j][1], centroids[j][2]};
            const double len = norm(c);
            if (len == 0.0) {
                throw DegenerateDirectionError(
                    "matchCentroidsToAlphabet: zero centroid has no sphere representative");
            }
            flat = stereoForward((sphereRadius / len) * c, sphereRadius);
        }
        int best = 0;
        double bestD = normSq(flat - alphabet.symbols[0]);
        for (std::size_t m = 1; m < alphabet.size(); ++m) {
            const double d = normSq(flat - alphabet.symbols[m]);
            if (d < bestD) {
                bestD = d;
                best = static_cast<int>(m);
            }
        }
        matched[j] = best;
    }
    return matched;
}

std::vector<std::uint8_t> demap(const Assignment& assignment,
                                const std::vector<PointVec>& centroids,
                                const Alphabet& alphabet, double sphereRadius,
                                DemapPolicy policy) {
    if (centroids.size() != alphabet.size()) {
        throw InvalidInputError("demap: centroid count must equal the alphabet size");
    }
    const std::vector<int> matched =
        matchCentroidsToAlphabet(centroids, alphabet, sphereRadius);
    if (policy == DemapPolicy::Strict) {
        std::vector<int> owner(alphabet.size(), -1);
        for (std::size_t j = 0; j < matched.size(); ++j) {
            int& slot = owner[static_cast<std::size_t>(matched[j])];
            if (slot >= 0) {
                throw AmbiguousDemapError("demap: centroids " + std::to_string(slot) +
                                          " and " + std::to_string(j) +
                                          " both matched alphabet symbol " +
                                          std::to_string(matched[j]));
            }
            slot = static_cast<int>(j);
        }
    }
    std::vector<std::uint8_t> out(assignment.labels.size());
    for (std::size_t i = 0; i < assignment.labels.size(); ++i) {
        const int label = assignment.labels[i];
        if (label < 0 || static_cast<std::size_t>(label) >= centroids.size()) {
            throw InvalidInputError("demap: cluster label out of range");
        }
        out[i] = alphabet.bits[static_cast<std::size_t>(matched[static_cast<std::size_t>(label)])];
    }
    return out;
}

Metrics computeMetrics(std::span<const std::uint8_t> predicted,
                       std::span<const std::uint8_t> truth) {
    if (predicted.empty() || predicted.size() != truth.size()) {
        throw InvalidInputError("computeMetrics: need equal nonempty label lists");
    }
    std::size_t correct = 0;
    std::size_t bitErrors = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        if (predicted[i] == truth[i]) ++correct;
        bitErrors += static_cast<std::size_t>(
            std::popcount(static_cast<unsigned>((predicted[i] ^ truth[i]) & 0x3F)));
    }
    const double n = static_cast<double>(predicted.size());
    const double accuracy = static_cast<double>(correct) / n;
    return {accuracy, 1.0 - accuracy, static_cast<double>(bitErrors) / (6.0 * n)};
}

std::pair<QamDataset, QamDataset> splitTrainTest(const QamDataset& dataset,
                                                 double trainFraction, std::uint64_t seed) {
    if (!(trainFraction > 0.0) || !(trainFraction < 1.0)) {
        throw InvalidInputError("splitTrainTest: fraction must be in (0, 1)");
    }
    const std::size_t n = dataset.rx.size();
    if (dataset.labels.size() != n) throw InvalidInputError("splitTrainTest: corrupt dataset");
    const std::size_t nTrain =
        static_cast<std::size_t>(std::llround(trainFraction * static_cast<double>(n)));
    if (nTrain == 0 || nTrain >= n) {
        throw InvalidInputError("splitTrainTest: fraction produces an empty split");
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    SplitMix64 rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) {
        std::swap(order[i], order[rng.below(i + 1)]);
    }
    QamDataset train, test;
    train.alphabet = test.alphabet = dataset.alphabet;
    train.launchPowerDbm = test.launchPowerDbm = dataset.launchPowerDbm;
    train.snrDb = test.snrDb = dataset.snrDb;
    for (std::size_t i = 0; i < n; ++i) {
        QamDataset& part = (i < nTrain) ? train : test;
        part.rx.push_back(dataset.rx[order[i]]);
        part.labels.push_back(dataset.labels[order[i]]);
    }
    return {std::move(train), std::move(test)};
}

std::string bitsToString(std::uint8_t bits) {
    std::string out(6, '0');
    for (int i = 0; i < 6; ++i) {
        if (bits & (1u << (5 - i))) out[static_cast<std::size_t>(i)] = '1';
    }
    return out;
}

std::uint8_t bitsFromString(std::string_view text) {
    if (text.size() != 6) throw InvalidInputError("bits field must have 6 characters");
    unsigned value = 0;
    for (char ch : text) {
        if (ch != '0' && ch != '1') {
            throw InvalidInputError("bits field must contain only 0 and 1");
        }
        value = (value << 1) | static_cast<unsigned>(ch - '0');
    }
    return static_cast<std::uint8_t>(value);
}

namespace {

std::vector<std::string> splitCsvLine(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    fields.push_back(current);
    return fields;
}

double parseDouble(const std::string& text, std::size_t line) {
    try {
        std::size_t consumed = 0;
        const double value = std::stod(text, &consumed);
        if (consumed != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw ParseError("malformed floating-point field '" + text + "'", line);
    }
}

}  // namespace

void saveDataset(const QamDataset& dataset, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << "rx_re,rx_im,bits\n";
    for (std::size_t i = 0; i < dataset.rx.size(); ++i) {
        out << formatDouble(dataset.rx[i].x) << ',' << formatDouble(dataset.rx[i].y) << ','
            << bitsToString(dataset.labels[i]) << '\n';
    }
    if (!out) throw IoError("write failed: " + path.string());
}

QamDataset loadDataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw ParseError("missing header", 1);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "rx_re,rx_im,bits") {
        throw ParseError("expected header 'rx_re,rx_im,bits', got '" + line + "'", 1);
    }

    QamDataset dataset;
    dataset.alphabet = buildAlphabet64();
    dataset.launchPowerDbm = std::numeric_limits<double>::quiet_NaN();

    std::size_t lineNo = 1;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = splitCsvLine(line);
        if (fields.size() != 3) {
            throw ParseError("expected 3 fields, got " + std::to_string(fields.size()),
                             lineNo);
        }
        const double re = parseDouble(fields[0], lineNo);
        const double im = parseDouble(fields[1], lineNo);
        std::uint8_t bits;
        try {
            bits = bitsFromString(fields[2]);
        } catch (const InvalidInputError& e) {
            throw ParseError(e.what(), lineNo);
        }
        dataset.rx.push_back({re, im});
        dataset.labels.push_back(bits);
    }

    // Measured against the launched alphabet positions implied by the labels.
    std::vector<int> symbolOfBits(64, -1);
    for (std::size_t m = 0; m < dataset.alphabet.size(); ++m) {
        symbolOfBits[dataset.alphabet.bits[m]] = static_cast<int>(m);
    }
    std::vector<Point2> launched;
    launched.reserve(dataset.rx.size());
    for (std::uint8_t bits : dataset.labels) {
        launched.push_back(dataset.alphabet.symbols[static_cast<std::size_t>(
            symbolOfBits[bits])]);
    }
    if (!dataset.rx.empty()) {
        dataset.snrDb = (meanNoisePower(dataset.rx, launched) == 0.0)
                            ? std::numeric_limits<double>::infinity()
                            : computeSnr(dataset.rx, launched);
    }
    return dataset;
}

void saveAlphabet(const Alphabet& alphabet, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << "index,re,im,bits\n";
    for (std::size_t m = 0; m < alphabet.size(); ++m) {
        out << m << ',' << formatDouble(alphabet.symbols[m].x) << ','
            << formatDouble(alphabet.symbols[m].y) << ',' << bitsToString(alphabet.bits[m])
            << '\n';
    }
    if (!out) throw IoError("write failed: " + path.string());
}

Alphabet loadAlphabet(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw ParseError("missing header", 1);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "index,re,im,bits") {
        throw ParseError("expected header 'index,re,im,bits', got '" + line + "'", 1);
    }
    Alphabet alphabet;
    std::size_t lineNo = 1;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = splitCsvLine(line);
        if (fields.size() != 4) {
            throw ParseError("expected 4 fields, got " + std::to_string(fields.size()),
                             lineNo);
        }
        const double index = parseDouble(fields[0], lineNo);
        if (index != static_cast<double>(alphabet.size())) {
            throw ParseError("indices must be consecutive from 0", lineNo);
        }
        const double re = parseDouble(fields[1], lineNo);
        const double im = parseDouble(fields[2], lineNo);
        std::uint8_t bits;
        try {
            bits = bitsFromString(fields[3]);
        } catch (const InvalidInputError& e) {
            throw ParseError(e.what(), lineNo);
        }
        alphabet.symbols.push_back({re, im});
        alphabet.bits.push_back(bits);
    }
    return alphabet;
}

}  // namespace stereoknn
