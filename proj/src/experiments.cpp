#include "stereoknn/experiments.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "stereoknn/rng.hpp"

namespace stereoknn {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

std::string formatDouble(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct CellTask {
    Algorithm algorithm;
    double radius;
    int nPoints;
    int repetition;
};

std::string cellContext(const CellTask& t) {
    return " [cell algorithm=" + algorithmName(t.algorithm) +
           " radius=" + formatDouble(t.radius) + " n_points=" + std::to_string(t.nPoints) +
           " repetition=" + std::to_string(t.repetition) + "]";
}

std::vector<CellTask> enumerateTasks(const ExperimentGrid& grid) {
    if (grid.algorithms.empty() || grid.nPoints.empty() || grid.repetitions < 1) {
        throw InvalidInputError("experiment grid: need algorithms, nPoints and repetitions >= 1");
    }
    std::vector<CellTask> tasks;
    for (Algorithm algo : grid.algorithms) {
        const std::vector<double> radii =
            (algo == Algorithm::Dec2D) ? std::vector<double>{0.0} : grid.radii;
        if (radii.empty()) {
            throw InvalidInputError("experiment grid: projected algorithms need radii");
        }
        for (double r : radii) {
            for (int n : grid.nPoints) {
                for (int rep = 0; rep < grid.repetitions; ++rep) {
                    tasks.push_back({algo, r, n, rep});
                }
            }
        }
    }
    return tasks;
}

// Dataset and split draws are shared by every algorithm and radius of one
// (nPoints, repetition) cell, so cross-algorithm comparisons are paired and
// the exact-mode SQ rows reproduce the 2DSC rows. The algorithm and radius
// enter only the shot-stream seed.
std::uint64_t dataSeed(std::uint64_t base, const CellTask& t) {
    return hashAll(base, static_cast<std::uint64_t>(t.nPoints),
                   static_cast<std::uint64_t>(t.repetition));
}

std::uint64_t shotSeed(std::uint64_t base, const CellTask& t) {
    return hashAll(base, static_cast<std::uint64_t>(t.algorithm) + 1, keyOf(t.radius),
                   static_cast<std::uint64_t>(t.nPoints),
                   static_cast<std::uint64_t>(t.repetition));
}

KnnResult runAlgorithm(Algorithm algo, const std::vector<Point2>& data,
                       const std::vector<Point2>& init, double radius,
                       const StopRule& stop, std::int64_t shots, std::uint64_t streamSeed) {
    switch (algo) {
        case Algorithm::Dec2D:
            return run2DecKnn(data, init, stop);
        case Algorithm::Sc3D:
            return run3DscKnn(data, init, radius, stop);
        case Algorithm::Sc2D:
            return run2DscKnn(data, init, radius, stop);
        case Algorithm::SqExact:
            return runSqKnn(data, init, radius, stop);
        case Algorithm::SqShots:
            return runSqKnn(data, init, radius, stop, ShotConfig{shots, streamSeed});
    }
    throw InvalidInputError("runAlgorithm: unknown algorithm");
}

DissimilarityKind dissimilarityFor(Algorithm algo, std::int64_t shots,
                                   std::uint64_t streamSeed) {
    switch (algo) {
        case Algorithm::SqExact:
            return DissimilarityKind::quantumExact();
        case Algorithm::SqShots:
            return DissimilarityKind::quantumShots(shots, streamSeed);
        default:
            return DissimilarityKind::euclidean();
    }
}

Dataspace dataspaceFor(Algorithm algo, double radius) {
    switch (algo) {
        case Algorithm::Dec2D:
            return Dataspace::plane2d();
        case Algorithm::Sc2D:
            return Dataspace::sphere(radius);
        default:
            return Dataspace::space3d();
    }
}

double demappedAccuracy(const Assignment& assignment,
                        const std::vector<PointVec>& centroids, const Alphabet& alphabet,
                        double radius, std::span<const std::uint8_t> truthBits) {
    // Lenient: a centroid collision costs accuracy instead of aborting the sweep.
    const auto bits = demap(assignment, centroids, alphabet, radius, DemapPolicy::Lenient);
    return computeMetrics(bits, truthBits).symbolAccuracy;
}

RunRecord runOverfitCell(const CellTask& t, const ExperimentGrid& grid,
                         const ChannelConfig& channel, const Alphabet& alphabet) {
    const std::uint64_t dseed = dataSeed(grid.baseSeed, t);
    const std::uint64_t sseed = shotSeed(grid.baseSeed, t);
    const ChannelConfig cellCfg{channel.sigma, channel.phaseRotation, hashAll(dseed, 1),
                                t.nPoints};
    const QamDataset dataset = generateDataset(alphabet, cellCfg);
    const auto [train, test] = splitTrainTest(dataset, 0.8, hashAll(dseed, 2));
    const StopRule stop = StopRule::naturalEndpoint(grid.maxIterations);

    const auto trainStart = Clock::now();
    const KnnResult trained = runAlgorithm(t.algorithm, train.rx, alphabet.symbols,
                                           t.radius, stop, grid.shots, hashAll(sseed, 3));
    const double trainMs =
        std::chrono::duration<double, std::milli>(Clock::now() - trainStart).count();

    RunRecord record;
    record.algorithm = t.algorithm;
    record.radius = t.radius;
    record.nPoints = t.nPoints;
    record.repetition = t.repetition;
    record.iterations = trained.iterations;
    record.trainMs = trainMs;
    record.naturalEndpointIteration = trained.naturalEndpointIteration;
    record.trainingAccuracy = demappedAccuracy(
        trained.finalAssignment, trained.state.centroids, alphabet, t.radius, train.labels);
    for (const IterationRecord& it : trained.trace) {
        record.perIterationAccuracy.push_back(
            demappedAccuracy(it.assignment, it.centroids, alphabet, t.radius, train.labels));
    }

    // Testing: one assignment pass against the trained centroids.
    ClusteringState testState;
    testState.centroids = trained.state.centroids;
    testState.dissimilarity = dissimilarityFor(t.algorithm, grid.shots, hashAll(sseed, 4));
    testState.dataspace = dataspaceFor(t.algorithm, t.radius);
    testState.dataset = (t.algorithm == Algorithm::Dec2D) ? toPointVecs(test.rx)
                                                          : projectPoints(test.rx, t.radius);
    const auto testStart = Clock::now();
    const Assignment testAssignment = assignClusters(testState);
    record.testMs =
        std::chrono::duration<double, std::milli>(Clock::now() - testStart).count();
    record.testingAccuracy = demappedAccuracy(testAssignment, testState.centroids, alphabet,
                                              t.radius, test.labels);
    record.overfitting = *record.testingAccuracy - record.trainingAccuracy;
    return record;
}

RunRecord runStoppingCell(const CellTask& t, const ExperimentGrid& grid,
                          const ChannelConfig& channel, const Alphabet& alphabet) {
    const std::uint64_t dseed = dataSeed(grid.baseSeed, t);
    const std::uint64_t sseed = shotSeed(grid.baseSeed, t);
    const ChannelConfig cellCfg{channel.sigma, channel.phaseRotation, hashAll(dseed, 1),
                                t.nPoints};
    const QamDataset dataset = generateDataset(alphabet, cellCfg);
    const StopRule stop = StopRule::naturalEndpoint(grid.maxIterations);

    const auto start = Clock::now();
    const KnnResult result = runAlgorithm(t.algorithm, dataset.rx, alphabet.symbols,
                                          t.radius, stop, grid.shots, hashAll(sseed, 3));
    const double wallMs =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();

    RunRecord record;
    record.algorithm = t.algorithm;
    record.radius = t.radius;
    record.nPoints = t.nPoints;
    record.repetition = t.repetition;
    record.iterations = result.iterations;
    record.trainMs = wallMs;
    record.naturalEndpointIteration = result.naturalEndpointIteration;
    for (const IterationRecord& it : result.trace) {
        record.perIterationAccuracy.push_back(demappedAccuracy(
            it.assignment, it.centroids, alphabet, t.radius, dataset.labels));
    }
    record.trainingAccuracy = record.perIterationAccuracy.back();
    return record;
}

void parallelFor(std::size_t count, const std::function<void(std::size_t)>& body) {
    if (count == 0) return;
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t workers = std::min<std::size_t>(hw == 0 ? 1 : hw, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex errorMutex;
    std::exception_ptr firstError;
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            {
                std::lock_guard<std::mutex> lock(errorMutex);
                if (firstError) return;
            }
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(errorMutex);
                if (!firstError) firstError = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& thread : pool) thread.join();
    if (firstError) std::rethrow_exception(firstError);
}

double sampleMean(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

KpiStats statsOf(const std::vector<double>& values) {
    const double mean = sampleMean(values);
    if (values.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

// Positive gain = better than the baseline, matching the sign conventions of
// the accuracy/iteration/time gain KPIs.
double gainOf(const std::string& kpi, double candidate, double baseline) {
    if (kpi == "iterations" || kpi == "train_ms" || kpi == "test_ms") {
        return baseline - candidate;
    }
    return candidate - baseline;
}

std::vector<AggregateRecord> aggregateRuns(const std::vector<RunRecord>& runs) {
    std::vector<AggregateRecord> aggregates;
    std::size_t i = 0;
    while (i < runs.size()) {
        std::size_t j = i;
        while (j < runs.size() && runs[j].algorithm == runs[i].algorithm &&
               runs[j].radius == runs[i].radius && runs[j].nPoints == runs[i].nPoints) {
            ++j;
        }
        AggregateRecord agg;
        agg.algorithm = runs[i].algorithm;
        agg.radius = runs[i].radius;
        agg.nPoints = runs[i].nPoints;
        agg.repetitions = static_cast<int>(j - i);
        std::map<std::string, std::vector<double>> columns;
        for (std::size_t r = i; r < j; ++r) {
            const RunRecord& run = runs[r];
            columns["training_accuracy"].push_back(run.trainingAccuracy);
            columns["iterations"].push_back(static_cast<double>(run.iterations));
            columns["train_ms"].push_back(run.trainMs);
            if (run.testingAccuracy) columns["testing_accuracy"].push_back(*run.testingAccuracy);
            if (run.testMs) columns["test_ms"].push_back(*run.testMs);
            if (run.overfitting) columns["overfitting"].push_back(*run.overfitting);
            if (run.naturalEndpointIteration) {
                columns["natural_endpoint_iteration"].push_back(
                    static_cast<double>(*run.naturalEndpointIteration));
            }
        }
        for (const auto& [kpi, values] : columns) agg.kpis[kpi] = statsOf(values);
        aggregates.push_back(std::move(agg));
        i = j;
    }
    // Gains against the 2dec cell sharing nPoints.
    for (AggregateRecord& agg : aggregates) {
        const AggregateRecord* baseline = nullptr;
        for (const AggregateRecord& other : aggregates) {
            if (other.algorithm == Algorithm::Dec2D && other.nPoints == agg.nPoints) {
                baseline = &other;
                break;
            }
        }
        if (baseline == nullptr) continue;
        const auto baselineKpis = baseline->kpis;  // copy: agg may alias baseline
        for (const auto& [kpi, stats] : agg.kpis) {
            const auto it = baselineKpis.find(kpi);
            if (it != baselineKpis.end()) {
                agg.gains[kpi] = gainOf(kpi, stats.mean, it->second.mean);
            }
        }
    }
    return aggregates;
}

std::vector<StoppingCurve> curvesOf(const std::vector<RunRecord>& runs) {
    std::vector<StoppingCurve> curves;
    std::size_t i = 0;
    while (i < runs.size()) {
        std::size_t j = i;
        while (j < runs.size() && runs[j].algorithm == runs[i].algorithm &&
               runs[j].radius == runs[i].radius && runs[j].nPoints == runs[i].nPoints) {
            ++j;
        }
        StoppingCurve curve;
        curve.algorithm = runs[i].algorithm;
        curve.radius = runs[i].radius;
        curve.nPoints = runs[i].nPoints;
        std::size_t maxLen = 0;
        for (std::size_t r = i; r < j; ++r) {
            maxLen = std::max(maxLen, runs[r].perIterationAccuracy.size());
        }
        const double count = static_cast<double>(j - i);
        for (std::size_t it = 0; it < maxLen; ++it) {
            double accSum = 0.0;
            double stopped = 0.0;
            for (std::size_t r = i; r < j; ++r) {
                const auto& acc = runs[r].perIterationAccuracy;
                accSum += (it < acc.size()) ? acc[it] : acc.back();
                const auto& endpoint = runs[r].naturalEndpointIteration;
                if (endpoint && static_cast<std::size_t>(*endpoint) <= it + 1) stopped += 1.0;
            }
            curve.meanAccuracy.push_back(accSum / count);
            curve.stopProbCumulative.push_back(stopped / count);
            const double previous =
                (it == 0) ? 0.0 : curve.stopProbCumulative[it - 1];
            curve.stopProbIncrement.push_back(curve.stopProbCumulative[it] - previous);
        }
        curves.push_back(std::move(curve));
        i = j;
    }
    return curves;
}

ExperimentReport runExperiment(
    const ExperimentGrid& grid, const ChannelConfig& channelCfg, const std::string& name,
    const std::function<RunRecord(const CellTask&, const ExperimentGrid&,
                                  const ChannelConfig&, const Alphabet&)>& cellRunner,
    bool withCurves) {
    const Alphabet alphabet = buildAlphabet64();
    const std::vector<CellTask> tasks = enumerateTasks(grid);
    std::vector<RunRecord> runs(tasks.size());
    parallelFor(tasks.size(), [&](std::size_t i) {
        try {
            runs[i] = cellRunner(tasks[i], grid, channelCfg, alphabet);
        } catch (const DegenerateClusterError& e) {
            throw DegenerateClusterError(e.what() + cellContext(tasks[i]));
        } catch (const Error& e) {
            throw Error(e.what() + cellContext(tasks[i]));
        }
    });
    ExperimentReport report;
    report.experiment = name;
    report.aggregates = aggregateRuns(runs);
    if (withCurves) report.curves = curvesOf(runs);
    report.runs = std::move(runs);
    return report;
}

}  // namespace

std::string algorithmName(Algorithm a) {
    switch (a) {
        case Algorithm::Dec2D: return "2dec";
        case Algorithm::Sc3D: return "3dsc";
        case Algorithm::Sc2D: return "2dsc";
        case Algorithm::SqExact: return "sq-exact";
        case Algorithm::SqShots: return "sq-shots";
    }
    return "unknown";
}

std::optional<Algorithm> algorithmFromName(std::string_view name) {
    if (name == "2dec") return Algorithm::Dec2D;
    if (name == "3dsc") return Algorithm::Sc3D;
    if (name == "2dsc") return Algorithm::Sc2D;
    if (name == "sq-exact") return Algorithm::SqExact;
    if (name == "sq-shots") return Algorithm::SqShots;
    return std::nullopt;
}

ExperimentReport runOverfittingExperiment(const ExperimentGrid& grid,
                                          const ChannelConfig& channelCfg) {
    return runExperiment(grid, channelCfg, "overfit", runOverfitCell, false);
}

ExperimentReport runStoppingExperiment(const ExperimentGrid& grid,
                                       const ChannelConfig& channelCfg) {
    return runExperiment(grid, channelCfg, "stopping", runStoppingCell, true);
}

namespace {

void writeCsv(const ExperimentReport& report, std::ostream& out) {
    out << "experiment,algorithm,radius,n_points,repetition,kpi,value\n";
    const auto row = [&](Algorithm algo, double radius, int nPoints, long long rep,
                         const std::string& kpi, double value) {
        out << report.experiment << ',' << algorithmName(algo) << ',' << formatDouble(radius)
            << ',' << nPoints << ',' << rep << ',' << kpi << ',' << formatDouble(value)
            << '\n';
    };
    for (const RunRecord& r : report.runs) {
        row(r.algorithm, r.radius, r.nPoints, r.repetition, "training_accuracy",
            r.trainingAccuracy);
        if (r.testingAccuracy) {
            row(r.algorithm, r.radius, r.nPoints, r.repetition, "testing_accuracy",
                *r.testingAccuracy);
        }
        row(r.algorithm, r.radius, r.nPoints, r.repetition, "iterations", r.iterations);
        row(r.algorithm, r.radius, r.nPoints, r.repetition, "train_ms", r.trainMs);
        if (r.testMs) row(r.algorithm, r.radius, r.nPoints, r.repetition, "test_ms", *r.testMs);
        if (r.overfitting) {
            row(r.algorithm, r.radius, r.nPoints, r.repetition, "overfitting", *r.overfitting);
        }
        if (r.naturalEndpointIteration) {
            row(r.algorithm, r.radius, r.nPoints, r.repetition, "natural_endpoint_iteration",
                *r.naturalEndpointIteration);
        }
        for (std::size_t i = 0; i < r.perIterationAccuracy.size(); ++i) {
            row(r.algorithm, r.radius, r.nPoints, r.repetition,
                "accuracy_iter_" + std::to_string(i + 1), r.perIterationAccuracy[i]);
        }
    }
    for (const AggregateRecord& a : report.aggregates) {
        for (const auto& [kpi, stats] : a.kpis) {
            row(a.algorithm, a.radius, a.nPoints, -1, kpi + "_mean", stats.mean);
            row(a.algorithm, a.radius, a.nPoints, -1, kpi + "_std", stats.stddev);
        }
        for (const auto& [kpi, gain] : a.gains) {
            row(a.algorithm, a.radius, a.nPoints, -1, "gain_" + kpi, gain);
        }
    }
    for (const StoppingCurve& c : report.curves) {
        for (std::size_t i = 0; i < c.meanAccuracy.size(); ++i) {
            row(c.algorithm, c.radius, c.nPoints, -1,
                "mean_accuracy_iter_" + std::to_string(i + 1), c.meanAccuracy[i]);
            row(c.algorithm, c.radius, c.nPoints, -1,
                "prob_stopping_le_" + std::to_string(i + 1), c.stopProbCumulative[i]);
            row(c.algorithm, c.radius, c.nPoints, -1,
                "prob_stopping_at_" + std::to_string(i + 1), c.stopProbIncrement[i]);
        }
    }
}

json runToJson(const RunRecord& r) {
    json j{{"algorithm", algorithmName(r.algorithm)},
           {"radius", r.radius},
           {"n_points", r.nPoints},
           {"repetition", r.repetition},
           {"training_accuracy", r.trainingAccuracy},
           {"iterations", r.iterations},
           {"train_ms", r.trainMs},
           {"per_iteration_accuracy", r.perIterationAccuracy}};
    if (r.testingAccuracy) j["testing_accuracy"] = *r.testingAccuracy;
    if (r.testMs) j["test_ms"] = *r.testMs;
    if (r.overfitting) j["overfitting"] = *r.overfitting;
    if (r.naturalEndpointIteration) {
        j["natural_endpoint_iteration"] = *r.naturalEndpointIteration;
    }
    return j;
}

Algorithm algorithmFromJson(const json& j, const char* key) {
    const auto parsed = algorithmFromName(j.at(key).get<std::string>());
    if (!parsed) throw InvalidInputError("reportFromJson: unknown algorithm name");
    return *parsed;
}

RunRecord runFromJson(const json& j) {
    RunRecord r;
    r.algorithm = algorithmFromJson(j, "algorithm");
    r.radius = j.at("radius").get<double>();
    r.nPoints = j.at("n_points").get<int>();
    r.repetition = j.at("repetition").get<int>();
    r.trainingAccuracy = j.at("training_accuracy").get<double>();
    r.iterations = j.at("iterations").get<int>();
    r.trainMs = j.at("train_ms").get<double>();
    r.perIterationAccuracy = j.at("per_iteration_accuracy").get<std::vector<double>>();
    if (j.contains("testing_accuracy")) r.testingAccuracy = j["testing_accuracy"].get<double>();
    if (j.contains("test_ms")) r.testMs = j["test_ms"].get<double>();
    if (j.contains("overfitting")) r.overfitting = j["overfitting"].get<double>();
    if (j.contains("natural_endpoint_iteration")) {
        r.naturalEndpointIteration = j["natural_endpoint_iteration"].get<int>();
    }
    return r;
}

json aggregateToJson(const AggregateRecord& a) {
    json kpis = json::object();
    for (const auto& [kpi, stats] : a.kpis) {
        kpis[kpi] = {{"mean", stats.mean}, {"stddev", stats.stddev}};
    }
    return {{"algorithm", algorithmName(a.algorithm)},
            {"radius", a.radius},
            {"n_points", a.nPoints},
            {"repetitions", a.repetitions},
            {"kpis", kpis},
            {"gains", a.gains}};
}

AggregateRecord aggregateFromJson(const json& j) {
    AggregateRecord a;
    a.algorithm = algorithmFromJson(j, "algorithm");
    a.radius = j.at("radius").get<double>();
    a.nPoints = j.at("n_points").get<int>();
    a.repetitions = j.at("repetitions").get<int>();
    for (const auto& [kpi, stats] : j.at("kpis").items()) {
        a.kpis[kpi] = {stats.at("mean").get<double>(), stats.at("stddev").get<double>()};
    }
    for (const auto& [kpi, gain] : j.at("gains").items()) {
        a.gains[kpi] = gain.get<double>();
    }
    return a;
}

json curveToJson(const StoppingCurve& c) {
    return {{"algorithm", algorithmName(c.algorithm)},
            {"radius", c.radius},
            {"n_points", c.nPoints},
            {"mean_accuracy", c.meanAccuracy},
            {"prob_stopping_cumulative", c.stopProbCumulative},
            {"prob_stopping_increment", c.stopProbIncrement}};
}

StoppingCurve curveFromJson(const json& j) {
    StoppingCurve c;
    c.algorithm = algorithmFromJson(j, "algorithm");
    c.radius = j.at("radius").get<double>();
    c.nPoints = j.at("n_points").get<int>();
    c.meanAccuracy = j.at("mean_accuracy").get<std::vector<double>>();
    c.stopProbCumulative = j.at("prob_stopping_cumulative").get<std::vector<double>>();
    c.stopProbIncrement = j.at("prob_stopping_increment").get<std::vector<double>>();
    return c;
}

}  // namespace

std::string reportToJson(const ExperimentReport& report) {
    json j{{"experiment", report.experiment},
           {"runs", json::array()},
           {"aggregates", json::array()},
           {"curves", json::array()}};
    for (const RunRecord& r : report.runs) j["runs"].push_back(runToJson(r));
    for (const AggregateRecord& a : report.aggregates) {
        j["aggregates"].push_back(aggregateToJson(a));
    }
    for (const StoppingCurve& c : report.curves) j["curves"].push_back(curveToJson(c));
    return j.dump(2);
}

ExperimentReport reportFromJson(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid report JSON: ") + e.what(), 0);
    }
    try {
        ExperimentReport report;
        report.experiment = j.at("experiment").get<std::string>();
        for (const json& r : j.at("runs")) report.runs.push_back(runFromJson(r));
        for (const json& a : j.at("aggregates")) {
            report.aggregates.push_back(aggregateFromJson(a));
        }
        for (const json& c : j.at("curves")) report.curves.push_back(curveFromJson(c));
        return report;
    } catch (const json::exception& e) {
        throw ParseError(std::string("report JSON schema mismatch: ") + e.what(), 0);
    }
}

void emitReport(const ExperimentReport& report, const std::filesystem::path& path,
                ReportFormat format) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    if (format == ReportFormat::Csv) {
        writeCsv(report, out);
    } else {
        out << reportToJson(report) << '\n';
    }
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace stereoknn
