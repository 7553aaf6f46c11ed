#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stereoknn/qam.hpp"

namespace stereoknn {

enum class Algorithm { Dec2D, Sc3D, Sc2D, SqExact, SqShots };

/// Canonical names: 2dec, 3dsc, 2dsc, sq-exact, sq-shots.
std::string algorithmName(Algorithm a);
std::optional<Algorithm> algorithmFromName(std::string_view name);

/// Sweep definition. Cells are (algorithm, radius, nPoints, repetition);
/// the radius axis collapses to a single slot (reported as 0) for 2dec.
/// Per-cell seeds derive from baseSeed, so results are independent of
/// worker count and scheduling.
struct ExperimentGrid {
    std::vector<Algorithm> algorithms;
    std::vector<double> radii;
    std::vector<int> nPoints;
    int repetitions = 1;
    int maxIterations = 50;
    std::uint64_t baseSeed = 1;
    std::int64_t shots = 10000;  // sq-shots only
};

/// KPIs of one repetition. Testing-phase fields are absent for experiments
/// without a train/test split.
struct RunRecord {
    Algorithm algorithm = Algorithm::Dec2D;
    double radius = 0.0;
    int nPoints = 0;
    int repetition = 0;
    double trainingAccuracy = 0.0;
    std::optional<double> testingAccuracy;
    int iterations = 0;
    double trainMs = 0.0;
    std::optional<double> testMs;
    std::optional<double> overfitting;  // testing minus training accuracy
    std::optional<int> naturalEndpointIteration;
    std::vector<double> perIterationAccuracy;

    bool operator==(const RunRecord&) const = default;
};

struct KpiStats {
    double mean = 0.0;
    double stddev = 0.0;

    bool operator==(const KpiStats&) const = default;
};

/// Mean/stddev of each KPI over a cell's repetitions, plus gains versus the
/// 2dec baseline cell with the same nPoints (when that cell exists).
/// Accuracy-valued gains are candidate minus baseline; iteration and time
/// gains are baseline minus candidate, so positive always means better.
struct AggregateRecord {
    Algorithm algorithm = Algorithm::Dec2D;
    double radius = 0.0;
    int nPoints = 0;
    int repetitions = 0;
    std::map<std::string, KpiStats> kpis;
    std::map<std::string, double> gains;

    bool operator==(const AggregateRecord&) const = default;
};

/// Per-iteration aggregate of a stopping-experiment cell. Accuracy curves
/// are padded past a run's endpoint with its final value (the state no
/// longer changes there). stopProbCumulative[i] is the fraction of
/// repetitions whose natural endpoint occurred at or before iteration i+1.
struct StoppingCurve {
    Algorithm algorithm = Algorithm::Dec2D;
    double radius = 0.0;
    int nPoints = 0;
    std::vector<double> meanAccuracy;
    std::vector<double> stopProbCumulative;
    std::vector<double> stopProbIncrement;

    bool operator==(const StoppingCurve&) const = default;
};

struct ExperimentReport {
    std::string experiment;  // "overfit" or "stopping"
    std::vector<RunRecord> runs;
    std::vector<AggregateRecord> aggregates;
    std::vector<StoppingCurve> curves;

    bool operator==(const ExperimentReport&) const = default;
};

/// Per cell: generate nPoints samples, split 80/20, cluster the training
/// part from the alphabet-initialized centroids until the natural endpoint
/// (capped), then classify the test part in a single assignment pass with
/// the trained centroids. channelCfg supplies sigma and phaseRotation; its
/// seed and count are superseded per cell.
ExperimentReport runOverfittingExperiment(const ExperimentGrid& grid,
                                          const ChannelConfig& channelCfg);

/// Per cell: cluster the full sample (no split), recording accuracy at every
/// iteration and the natural-endpoint iteration; emits per-iteration curves
/// and the probability-of-stopping histogram.
ExperimentReport runStoppingExperiment(const ExperimentGrid& grid,
                                       const ChannelConfig& channelCfg);

enum class ReportFormat { Csv, Json };

/// Long-format report, one row per record per KPI. CSV header:
/// experiment,algorithm,radius,n_points,repetition,kpi,value
/// (repetition -1 marks aggregate rows).
void emitReport(const ExperimentReport& report, const std::filesystem::path& path,
                ReportFormat format);

std::string reportToJson(const ExperimentReport& report);
ExperimentReport reportFromJson(const std::string& text);

}  // namespace stereoknn
