// Experiment CLI: synthetic 64-QAM generation, single clustering runs, and
// the overfitting/stopping experiment sweeps.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stereoknn/clustering.hpp"
#include "stereoknn/experiments.hpp"
#include "stereoknn/qam.hpp"
#include "stereoknn/rng.hpp"

using namespace stereoknn;

namespace {

// Exit codes: 0 success, 2 invalid arguments, 3 data error, 4 degenerate cluster.
constexpr int kExitInvalidArguments = 2;
constexpr int kExitDataError = 3;
constexpr int kExitDegenerateCluster = 4;

struct GenerateOptions {
    int symbols = 64;
    double sigma = 0.0;
    double phase = 0.0;
    std::int64_t count = 0;
    std::uint64_t seed = 1;
    std::string out;
};

struct ClusterOptions {
    std::string algo;
    double radius = 2.0;
    std::int64_t shots = 10000;
    int maxIter = 50;
    std::string stop = "natural";
    std::string data;
    std::string out;
};

struct ExperimentOptions {
    std::string mode;
    std::vector<double> radii{0.25, 0.5, 1.0, 2.0, 3.0, 5.0, 10.0};
    std::vector<int> points{640, 2560, 10240};
    int reps = 100;
    std::uint64_t seed = 1;
    std::string format = "csv";
    std::string out;
    std::vector<std::string> algos{"2dec", "3dsc", "2dsc", "sq-exact"};
    double sigma = 0.1;
    double phase = 0.0;
    int maxIter = 50;
    std::int64_t shots = 10000;
};

int runGenerate(const GenerateOptions& opt) {
    if (opt.symbols != 64) {
        std::cerr << "generate: only 64-symbol constellations are supported\n";
        return kExitInvalidArguments;
    }
    const Alphabet alphabet = buildAlphabet64();
    const QamDataset dataset =
        generateDataset(alphabet, {opt.sigma, opt.phase, opt.seed, opt.count});
    saveDataset(dataset, opt.out);
    std::cout << "wrote " << dataset.rx.size() << " samples to " << opt.out;
    if (std::isfinite(dataset.snrDb)) std::cout << " (measured SNR " << dataset.snrDb << " dB)";
    std::cout << '\n';
    return 0;
}

StopRule stopRuleFrom(const std::string& name, int maxIter) {
    if (name == "natural") return StopRule::naturalEndpoint(maxIter);
    if (name == "max") return StopRule::fixedIterations(maxIter);
    return StopRule::dissimilarityIncrease(maxIter);
}

int runCluster(const ClusterOptions& opt) {
    const auto algorithm = algorithmFromName(opt.algo);
    if (!algorithm) {
        std::cerr << "cluster: unknown algorithm '" << opt.algo << "'\n";
        return kExitInvalidArguments;
    }
    const QamDataset dataset = loadDataset(opt.data);
    if (dataset.rx.empty()) {
        std::cerr << "cluster: dataset is empty\n";
        return kExitDataError;
    }
    const Alphabet& alphabet = dataset.alphabet;
    const StopRule stop = stopRuleFrom(opt.stop, opt.maxIter);
    // Fixed stream constant: repeated invocations reproduce the same run.
    const std::uint64_t shotSeed = hashAll(0x5EED, opt.shots);

    KnnResult result = [&] {
        switch (*algorithm) {
            case Algorithm::Dec2D:
                return run2DecKnn(dataset.rx, alphabet.symbols, stop);
            case Algorithm::Sc3D:
                return run3DscKnn(dataset.rx, alphabet.symbols, opt.radius, stop);
            case Algorithm::Sc2D:
                return run2DscKnn(dataset.rx, alphabet.symbols, opt.radius, stop);
            case Algorithm::SqExact:
                return runSqKnn(dataset.rx, alphabet.symbols, opt.radius, stop);
            case Algorithm::SqShots:
            default:
                return runSqKnn(dataset.rx, alphabet.symbols, opt.radius, stop,
                                ShotConfig{opt.shots, shotSeed});
        }
    }();

    const double radius3d = (*algorithm == Algorithm::Dec2D) ? 0.0 : opt.radius;
    const auto matched =
        matchCentroidsToAlphabet(result.state.centroids, alphabet, radius3d);
    int collisions = 0;
    {
        std::vector<int> seen(alphabet.size(), 0);
        for (int m : matched) {
            if (seen[static_cast<std::size_t>(m)]++ > 0) ++collisions;
        }
    }
    const auto bits =
        demap(result.finalAssignment, result.state.centroids, alphabet, radius3d,
              DemapPolicy::Lenient);
    const Metrics metrics = computeMetrics(bits, dataset.labels);

    nlohmann::json output{
        {"algorithm", algorithmName(*algorithm)},
        {"radius", opt.radius},
        {"stop", opt.stop},
        {"max_iter", opt.maxIter},
        {"iterations", result.iterations},
        {"symbol_accuracy", metrics.symbolAccuracy},
        {"symbol_error_rate", metrics.symbolErrorRate},
        {"bit_error_rate", metrics.bitErrorRate},
        {"demap_collisions", collisions},
        {"centroids", result.state.centroids},
        {"labels", result.finalAssignment.labels},
    };
    if (*algorithm == Algorithm::SqShots) output["shots"] = opt.shots;
    if (result.naturalEndpointIteration) {
        output["natural_endpoint_iteration"] = *result.naturalEndpointIteration;
    }
    std::vector<std::string> bitStrings;
    bitStrings.reserve(bits.size());
    for (std::uint8_t b : bits) bitStrings.push_back(bitsToString(b));
    output["bits"] = bitStrings;

    std::ofstream out(opt.out);
    if (!out) throw IoError("cannot open for writing: " + opt.out);
    out << output.dump(2) << '\n';
    std::cout << "clustered " << dataset.rx.size() << " points in " << result.iterations
              << " iterations; symbol accuracy " << metrics.symbolAccuracy << '\n';
    return 0;
}

int runExperiment(const ExperimentOptions& opt) {
    ExperimentGrid grid;
    for (const std::string& name : opt.algos) {
        const auto algorithm = algorithmFromName(name);
        if (!algorithm) {
            std::cerr << "experiment: unknown algorithm '" << name << "'\n";
            return kExitInvalidArguments;
        }
        grid.algorithms.push_back(*algorithm);
    }
    grid.radii = opt.radii;
    grid.nPoints = opt.points;
    grid.repetitions = opt.reps;
    grid.maxIterations = opt.maxIter;
    grid.baseSeed = opt.seed;
    grid.shots = opt.shots;
    const ChannelConfig channel{opt.sigma, opt.phase, 0, 0};

    const ExperimentReport report = (opt.mode == "overfit")
                                        ? runOverfittingExperiment(grid, channel)
                                        : runStoppingExperiment(grid, channel);
    emitReport(report, opt.out,
               opt.format == "json" ? ReportFormat::Json : ReportFormat::Csv);
    std::cout << "wrote " << report.runs.size() << " runs / " << report.aggregates.size()
              << " aggregates to " << opt.out << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stereographic k-NN clustering experiments on 64-QAM data"};
    app.require_subcommand(1);

    GenerateOptions gen;
    CLI::App* generate = app.add_subcommand("generate", "Generate a synthetic noisy dataset");
    generate->add_option("--symbols", gen.symbols, "Constellation size")->capture_default_str();
    generate->add_option("--sigma", gen.sigma, "AWGN std dev per axis")->required();
    generate->add_option("--phase", gen.phase, "Global phase rotation (radians)")
        ->capture_default_str();
    generate->add_option("--count", gen.count, "Number of samples")->required();
    generate->add_option("--seed", gen.seed, "PRNG seed")->capture_default_str();
    generate->add_option("--out", gen.out, "Output CSV path")->required();

    ClusterOptions clu;
    CLI::App* cluster = app.add_subcommand("cluster", "Cluster a dataset with one algorithm");
    cluster->add_option("--algo", clu.algo, "2dec|3dsc|2dsc|sq-exact|sq-shots")->required();
    cluster->add_option("--radius", clu.radius, "Projection radius")->capture_default_str();
    cluster->add_option("--shots", clu.shots, "Shots per estimate (sq-shots)")
        ->capture_default_str();
    cluster->add_option("--max-iter", clu.maxIter, "Iteration cap")->capture_default_str();
    cluster->add_option("--stop", clu.stop, "natural|max|dissim-increase")
        ->check(CLI::IsMember({"natural", "max", "dissim-increase"}))
        ->capture_default_str();
    cluster->add_option("--data", clu.data, "Input dataset CSV")->required();
    cluster->add_option("--out", clu.out, "Output JSON path")->required();

    ExperimentOptions exp;
    CLI::App* experiment = app.add_subcommand("experiment", "Run a KPI sweep");
    experiment->add_option("mode", exp.mode, "overfit|stopping")
        ->check(CLI::IsMember({"overfit", "stopping"}))
        ->required();
    experiment->add_option("--radii", exp.radii, "Projection radii")->capture_default_str();
    experiment->add_option("--points", exp.points, "Dataset sizes")->capture_default_str();
    experiment->add_option("--reps", exp.reps, "Repetitions per cell")->capture_default_str();
    experiment->add_option("--seed", exp.seed, "Base seed")->capture_default_str();
    experiment->add_option("--format", exp.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    experiment->add_option("--out", exp.out, "Report path")->required();
    experiment->add_option("--algos", exp.algos, "Algorithms to sweep")->capture_default_str();
    experiment->add_option("--sigma", exp.sigma, "AWGN std dev per axis")
        ->capture_default_str();
    experiment->add_option("--phase", exp.phase, "Global phase rotation (radians)")
        ->capture_default_str();
    experiment->add_option("--max-iter", exp.maxIter, "Iteration cap")->capture_default_str();
    experiment->add_option("--shots", exp.shots, "Shots per estimate (sq-shots)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidArguments;
    }

    try {
        if (generate->parsed()) return runGenerate(gen);
        if (cluster->parsed()) return runCluster(clu);
        return runExperiment(exp);
    } catch (const DegenerateClusterError& e) {
        std::cerr << "degenerate cluster: " << e.what() << '\n';
        return kExitDegenerateCluster;
    } catch (const InvalidInputError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInvalidArguments;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDataError;
    }
}
