#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "helpers.hpp"
#include "stereoknn/clustering.hpp"

using namespace stereoknn;
using testutil::randomPoint2;
using testutil::uniformIn;

namespace {

constexpr double kPi = std::numbers::pi;

// Straight-line reference k-means, written independently of the engine:
// squared Euclidean distance, mean update, lowest-index ties, empty clusters
// keep their centroid.
std::vector<int> referenceKmeansLabels(const std::vector<Point2>& data,
                                       std::vector<Point2> centroids, int iterations) {
    std::vector<int> labels(data.size(), 0);
    for (int it = 0; it < iterations; ++it) {
        for (std::size_t i = 0; i < data.size(); ++i) {
            int best = 0;
            double bestD = normSq(data[i] - centroids[0]);
            for (std::size_t j = 1; j < centroids.size(); ++j) {
                const double d = normSq(data[i] - centroids[j]);
                if (d < bestD) {
                    bestD = d;
                    best = static_cast<int>(j);
                }
            }
            labels[i] = best;
        }
        std::vector<Point2> sums(centroids.size(), Point2{0.0, 0.0});
        std::vector<int> counts(centroids.size(), 0);
        for (std::size_t i = 0; i < data.size(); ++i) {
            sums[static_cast<std::size_t>(labels[i])] =
                sums[static_cast<std::size_t>(labels[i])] + data[i];
            counts[static_cast<std::size_t>(labels[i])] += 1;
        }
        for (std::size_t j = 0; j < centroids.size(); ++j) {
            if (counts[j] > 0) centroids[j] = (1.0 / counts[j]) * sums[j];
        }
    }
    return labels;
}

// Four well-separated Gaussian blobs and their generating centers.
struct BlobInstance {
    std::vector<Point2> points;
    std::vector<Point2> centers;
    std::vector<int> truth;
};

BlobInstance makeBlobs(std::uint64_t seed, int perBlob, double spread = 0.25) {
    BlobInstance inst;
    inst.centers = {{-3.0, -3.0}, {3.0, -3.0}, {-3.0, 3.0}, {3.0, 3.0}};
    SplitMix64 rng(seed);
    for (int c = 0; c < 4; ++c) {
        for (int i = 0; i < perBlob; ++i) {
            const auto [g1, g2] = rng.gaussPair();
            inst.points.push_back(
                {inst.centers[static_cast<std::size_t>(c)].x + spread * g1,
                 inst.centers[static_cast<std::size_t>(c)].y + spread * g2});
            inst.truth.push_back(c);
        }
    }
    return inst;
}

ClusteringState euclidState(std::vector<PointVec> data, std::vector<PointVec> centroids) {
    return {std::move(data), std::move(centroids), DissimilarityKind::euclidean(),
            Dataspace::plane2d()};
}

double sumPointDissimilarity(const ClusteringState& state, const Assignment& assignment) {
    double total = 0.0;
    for (std::size_t i = 0; i < state.dataset.size(); ++i) {
        total += dEuclidean(state.dataset[i],
                            state.centroids[static_cast<std::size_t>(assignment.labels[i])]);
    }
    return total;
}

}  // namespace

TEST_CASE("assignClusters") {
    SUBCASE("k = 1 labels everything 0") {
        const auto state = euclidState({{0.0, 0.0}, {5.0, 1.0}, {-2.0, 3.0}}, {{1.0, 1.0}});
        const Assignment a = assignClusters(state);
        CHECK(a.labels == std::vector<int>{0, 0, 0});
    }
    SUBCASE("equidistant points take the lowest centroid index") {
        const auto state = euclidState({{0.0, 0.0}}, {{1.0, 0.0}, {-1.0, 0.0}});
        CHECK(assignClusters(state).labels == std::vector<int>{0});
    }
    SUBCASE("matches the brute-force argmin per point") {
        SplitMix64 rng(301);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<PointVec> data, centroids;
            std::vector<Point2> data2, cents2;
            for (int i = 0; i < 6; ++i) {
                const Point2 p = randomPoint2(rng, 4.0);
                data.push_back({p.x, p.y});
                data2.push_back(p);
            }
            for (int j = 0; j < 2; ++j) {
                const Point2 c = randomPoint2(rng, 4.0);
                centroids.push_back({c.x, c.y});
                cents2.push_back(c);
            }
            const Assignment got = assignClusters(euclidState(data, centroids));
            const std::vector<int> expected = referenceKmeansLabels(data2, cents2, 1);
            CHECK(got.labels == expected);
        }
    }
    SUBCASE("domain errors carry the point index") {
        ClusteringState state{{{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}},
                              {{0.0, 1.0, 0.0}},
                              DissimilarityKind::quantumExact(),
                              Dataspace::space3d()};
        CHECK_THROWS_WITH_AS(assignClusters(state),
                             doctest::Contains("point 1"), DegenerateDirectionError);
    }
    SUBCASE("sphere dataspace rejects off-sphere datasets") {
        ClusteringState state{{{1.0, 0.0, 0.0}},
                              {{0.0, 1.0, 0.0}},
                              DissimilarityKind::euclidean(),
                              Dataspace::sphere(2.0)};
        CHECK_THROWS_AS(assignClusters(state), InvalidInputError);
    }
}

TEST_CASE("updateCentroids") {
    SUBCASE("singleton cluster with the Euclidean mean is the point itself") {
        const auto state = euclidState({{2.0, -1.0}}, {{0.0, 0.0}});
        const auto updated = updateCentroids(state, {{std::vector<int>{0}}},
                                             CentroidRule::euclideanMean());
        CHECK(updated[0] == PointVec{2.0, -1.0});
    }
    SUBCASE("spherical mean of two orthogonal sphere points bisects them") {
        for (double r : {0.5, 1.0, 3.0}) {
            ClusteringState state{{{r, 0.0, 0.0}, {0.0, r, 0.0}},
                                  {{0.0, 0.0, r}},
                                  DissimilarityKind::euclidean(),
                                  Dataspace::sphere(r)};
            const auto updated = updateCentroids(state, {{std::vector<int>{0, 0}}},
                                                 CentroidRule::sphericalProjectedMean(r));
            CHECK(updated[0][0] == doctest::Approx(r / std::sqrt(2.0)).epsilon(1e-13));
            CHECK(updated[0][1] == doctest::Approx(r / std::sqrt(2.0)).epsilon(1e-13));
            CHECK(std::fabs(updated[0][2]) < 1e-13);
        }
    }
    SUBCASE("spherical mean beats every 1-degree grid direction (brute force)") {
        const double r = 2.0;
        SplitMix64 rng(302);
        std::vector<PointVec> cluster;
        for (int i = 0; i < 12; ++i) {
            const auto u = testutil::randomUnitVector(rng, 3);
            cluster.push_back({r * u[0], r * u[1], r * u[2]});
        }
        ClusteringState state{cluster, {{0.0, 0.0, r}}, DissimilarityKind::euclidean(),
                              Dataspace::sphere(r)};
        const auto updated = updateCentroids(
            state, {{std::vector<int>(cluster.size(), 0)}},
            CentroidRule::sphericalProjectedMean(r));
        const auto total = [&](const PointVec& x) {
            double sum = 0.0;
            for (const auto& p : cluster) sum += dCosine(x, p);
            return sum;
        };
        const double centroidTotal = total(updated[0]);
        for (int ti = 0; ti <= 180; ++ti) {
            for (int pj = -180; pj < 180; ++pj) {
                const double theta = ti * kPi / 180.0;
                const double phi = pj * kPi / 180.0;
                const Point3 grid = r * unitVectorOf({theta, phi});
                CHECK(centroidTotal <= total({grid.x, grid.y, grid.z}) + 1e-9);
            }
        }
    }
    SUBCASE("unnormalized sum is the componentwise sum") {
        ClusteringState state{{{1.5, 0.0, 0.5}, {0.0, 1.5, -0.5}},
                              {{1.0, 0.0, 0.0}},
                              DissimilarityKind::quantumExact(),
                              Dataspace::space3d()};
        const auto updated = updateCentroids(state, {{std::vector<int>{0, 0}}},
                                             CentroidRule::unnormalizedSum());
        CHECK(updated[0] == PointVec{1.5, 1.5, 0.0});
    }
    SUBCASE("empty clusters keep the previous centroid") {
        const auto state =
            euclidState({{0.1, 0.0}, {-0.1, 0.0}}, {{0.0, 0.0}, {10.0, 10.0}});
        const auto updated = updateCentroids(state, {{std::vector<int>{0, 0}}},
                                             CentroidRule::euclideanMean());
        CHECK(updated[1] == PointVec{10.0, 10.0});
    }
    SUBCASE("zero-sum spherical cluster is degenerate") {
        const double r = 1.0;
        ClusteringState state{{{r, 0.0, 0.0}, {-r, 0.0, 0.0}},
                              {{0.0, 0.0, r}},
                              DissimilarityKind::euclidean(),
                              Dataspace::sphere(r)};
        CHECK_THROWS_AS(updateCentroids(state, {{std::vector<int>{0, 0}}},
                                        CentroidRule::sphericalProjectedMean(r)),
                        DegenerateClusterError);
    }
}

TEST_CASE("runKnn") {
    SUBCASE("a fixed point stops after one iteration with an unchanged assignment") {
        // Two points sitting exactly at the two centroids.
        const auto state = euclidState({{-1.0, 0.0}, {1.0, 0.0}}, {{-1.0, 0.0}, {1.0, 0.0}});
        const KnnResult res =
            runKnn(state, CentroidRule::euclideanMean(), StopRule::naturalEndpoint(50));
        CHECK(res.iterations == 1);
        CHECK(res.naturalEndpointIteration == 1);
        CHECK(res.trace.size() == 1);
        CHECK(res.finalAssignment.labels == std::vector<int>{0, 1});
        CHECK(res.state.centroids[0] == PointVec{-1.0, 0.0});
    }
    SUBCASE("k = 1 converges to the mean in at most two iterations") {
        const auto state =
            euclidState({{0.0, 0.0}, {2.0, 0.0}, {1.0, 3.0}}, {{5.0, 5.0}});
        const KnnResult res =
            runKnn(state, CentroidRule::euclideanMean(), StopRule::naturalEndpoint(50));
        CHECK(res.iterations <= 2);
        CHECK(res.state.centroids[0][0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(res.state.centroids[0][1] == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("recovers Gaussian blobs and matches the reference implementation") {
        const BlobInstance inst = makeBlobs(303, 40);
        const std::vector<Point2> init{{-1.0, -1.0}, {1.0, -1.0}, {-1.0, 1.0}, {1.0, 1.0}};
        const KnnResult res = run2DecKnn(inst.points, init, StopRule::naturalEndpoint(50),
                                         &inst.truth);
        CHECK(res.finalAssignment.labels == inst.truth);
        CHECK(res.trace.back().accuracy == 1.0);
        const std::vector<int> reference =
            referenceKmeansLabels(inst.points, init, res.iterations);
        CHECK(res.finalAssignment.labels == reference);
    }
    SUBCASE("natural endpoint is a fixed point: one extra iteration changes nothing") {
        const BlobInstance inst = makeBlobs(304, 25);
        const std::vector<Point2> init{{-1.0, -1.0}, {1.0, -1.0}, {-1.0, 1.0}, {1.0, 1.0}};
        const KnnResult stopped =
            run2DecKnn(inst.points, init, StopRule::naturalEndpoint(50));
        REQUIRE(stopped.naturalEndpointIteration.has_value());
        const KnnResult extra = run2DecKnn(
            inst.points, init, StopRule::fixedIterations(stopped.iterations + 1));
        CHECK(extra.finalAssignment == stopped.finalAssignment);
        CHECK(extra.state.centroids == stopped.state.centroids);
    }
    SUBCASE("Euclidean-mean objective is non-increasing across iterations") {
        const BlobInstance inst = makeBlobs(305, 30, 1.8);  // overlapping blobs
        const std::vector<Point2> init{{-1.0, 0.0}, {1.0, 0.0}, {0.0, -1.0}, {0.0, 1.0}};
        const KnnResult res = run2DecKnn(inst.points, init, StopRule::naturalEndpoint(50));
        for (std::size_t i = 1; i < res.trace.size(); ++i) {
            ClusteringState snapshot{res.state.dataset, res.trace[i].centroids,
                                     DissimilarityKind::euclidean(), Dataspace::plane2d()};
            ClusteringState before{res.state.dataset, res.trace[i - 1].centroids,
                                   DissimilarityKind::euclidean(), Dataspace::plane2d()};
            const double now = sumPointDissimilarity(snapshot, res.trace[i].assignment);
            const double prev = sumPointDissimilarity(before, res.trace[i - 1].assignment);
            CHECK(now <= prev * (1.0 + 1e-9));
        }
    }
    SUBCASE("per-iteration accuracy list length equals iterations") {
        const BlobInstance inst = makeBlobs(306, 20);
        const std::vector<Point2> init{{-1.0, -1.0}, {1.0, -1.0}, {-1.0, 1.0}, {1.0, 1.0}};
        const KnnResult res = run2DecKnn(inst.points, init, StopRule::naturalEndpoint(50),
                                         &inst.truth);
        CHECK(res.trace.size() == static_cast<std::size_t>(res.iterations));
        for (const auto& record : res.trace) CHECK(record.accuracy.has_value());
    }
    SUBCASE("the hard cap is always enforced") {
        const BlobInstance inst = makeBlobs(307, 30, 2.5);
        const std::vector<Point2> init{{-0.2, 0.0}, {0.2, 0.0}, {0.0, -0.2}, {0.0, 0.2}};
        const KnnResult res = run2DecKnn(inst.points, init, StopRule::naturalEndpoint(3));
        CHECK(res.iterations <= 3);
    }
}

TEST_CASE("dissimilarity-increase stop rule reverts the offending update") {
    // One cluster; the unnormalized-sum update drags the centroid away from
    // the data, so the summed per-cluster mean dissimilarity increases at the
    // second iteration and the engine must return the first iteration's state.
    ClusteringState state{{{1.0, 0.0}, {1.1, 0.1}, {0.9, -0.1}},
                          {{1.0, 0.0}},
                          DissimilarityKind::euclidean(),
                          Dataspace::plane2d()};
    const KnnResult res =
        runKnn(state, CentroidRule::unnormalizedSum(), StopRule::dissimilarityIncrease(50));
    CHECK(res.iterations == 1);
    CHECK(res.state.centroids[0] == PointVec{1.0, 0.0});
    CHECK(res.finalAssignment.labels == std::vector<int>{0, 0, 0});
    CHECK(res.trace.size() == 1);
}

TEST_CASE("run2DecKnn empty-cluster case keeps the previous centroid") {
    const std::vector<Point2> points{{0.1, 0.0}, {-0.1, 0.0}, {0.0, 0.1}};
    const std::vector<Point2> init{{0.0, 0.0}, {50.0, 50.0}};
    const KnnResult res = run2DecKnn(points, init, StopRule::naturalEndpoint(50));
    CHECK(res.state.centroids[1] == PointVec{50.0, 50.0});
}

TEST_CASE("run3DscKnn") {
    SUBCASE("a huge radius reproduces the 2DEC assignment") {
        const BlobInstance inst = makeBlobs(308, 30);
        double maxNorm = 0.0;
        for (Point2 p : inst.points) maxNorm = std::max(maxNorm, norm(p));
        const std::vector<Point2> init{{-2.0, -2.0}, {2.0, -2.0}, {-2.0, 2.0}, {2.0, 2.0}};
        const KnnResult flat = run2DecKnn(inst.points, init, StopRule::naturalEndpoint(50));
        const KnnResult proj =
            run3DscKnn(inst.points, init, 100.0 * maxNorm, StopRule::naturalEndpoint(50));
        CHECK(proj.finalAssignment.labels == flat.finalAssignment.labels);
    }
    SUBCASE("single cluster: centroid is the mean, strictly inside the sphere") {
        const std::vector<Point2> points{{0.4, 0.0}, {0.0, 0.7}, {-0.5, 0.2}};
        const KnnResult res =
            run3DscKnn(points, {{0.0, 0.0}}, 1.5, StopRule::naturalEndpoint(50));
        const auto projected = projectPoints(points, 1.5);
        PointVec mean(3, 0.0);
        for (const auto& p : projected) {
            for (int d = 0; d < 3; ++d) mean[static_cast<std::size_t>(d)] += p[static_cast<std::size_t>(d)] / 3.0;
        }
        for (int d = 0; d < 3; ++d) {
            CHECK(res.state.centroids[0][static_cast<std::size_t>(d)] ==
                  doctest::Approx(mean[static_cast<std::size_t>(d)]).epsilon(1e-12));
        }
        const double len = std::sqrt(mean[0] * mean[0] + mean[1] * mean[1] + mean[2] * mean[2]);
        CHECK(len < 1.5 - 1e-6);
    }
    SUBCASE("blob recovery after projection") {
        const BlobInstance inst = makeBlobs(309, 25);
        const std::vector<Point2> init{{-2.0, -2.0}, {2.0, -2.0}, {-2.0, 2.0}, {2.0, 2.0}};
        const KnnResult res =
            run3DscKnn(inst.points, init, 2.0, StopRule::naturalEndpoint(50), &inst.truth);
        CHECK(res.trace.back().accuracy == 1.0);
    }
}

TEST_CASE("run2DscKnn") {
    SUBCASE("identical points collapse to that point") {
        const std::vector<Point2> points{{0.7, -0.2}, {0.7, -0.2}, {0.7, -0.2}};
        const KnnResult res =
            run2DscKnn(points, {{0.7, -0.2}}, 2.0, StopRule::naturalEndpoint(50));
        const Point3 expected = isp({0.7, -0.2}, 2.0);
        CHECK(res.state.centroids[0][0] == doctest::Approx(expected.x).epsilon(1e-12));
        CHECK(res.state.centroids[0][1] == doctest::Approx(expected.y).epsilon(1e-12));
        CHECK(res.state.centroids[0][2] == doctest::Approx(expected.z).epsilon(1e-12));
    }
    SUBCASE("centroids stay on the sphere at every iteration") {
        const BlobInstance inst = makeBlobs(310, 30, 1.5);
        const std::vector<Point2> init{{-2.0, -2.0}, {2.0, -2.0}, {-2.0, 2.0}, {2.0, 2.0}};
        const double r = 2.5;
        const KnnResult res =
            run2DscKnn(inst.points, init, r, StopRule::naturalEndpoint(50));
        for (const auto& record : res.trace) {
            for (const auto& c : record.centroids) {
                const double len = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
                CHECK(std::fabs(len - r) <= 1e-9 * r);
            }
        }
        for (const auto& c : res.state.centroids) {
            const double len = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
            CHECK(std::fabs(len - r) <= 1e-9 * r);
        }
    }
    SUBCASE("cosine and Euclidean dissimilarities give identical label sequences") {
        const BlobInstance inst = makeBlobs(311, 20, 1.0);
        const std::vector<Point2> init{{-2.0, -2.0}, {2.0, -2.0}, {-2.0, 2.0}, {2.0, 2.0}};
        const double r = 2.0;
        const KnnResult viaEuclid =
            run2DscKnn(inst.points, init, r, StopRule::naturalEndpoint(50));
        ClusteringState cosineState{projectPoints(inst.points, r),
                                    projectPoints(init, r), DissimilarityKind::cosine(),
                                    Dataspace::sphere(r)};
        const KnnResult viaCosine = runKnn(cosineState, CentroidRule::sphericalProjectedMean(r),
                                           StopRule::naturalEndpoint(50));
        REQUIRE(viaEuclid.trace.size() == viaCosine.trace.size());
        for (std::size_t i = 0; i < viaEuclid.trace.size(); ++i) {
            CHECK(viaEuclid.trace[i].assignment == viaCosine.trace[i].assignment);
        }
    }
}

TEST_CASE("argmin is invariant under positive scaling of the dissimilarity") {
    SplitMix64 rng(312);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<PointVec> data, centroids;
        for (int i = 0; i < 40; ++i) {
            const auto u = testutil::randomUnitVector(rng, 3);
            data.push_back({2.0 * u[0], 2.0 * u[1], 2.0 * u[2]});
        }
        for (int j = 0; j < 5; ++j) {
            const auto u = testutil::randomUnitVector(rng, 3);
            centroids.push_back({2.0 * u[0], 2.0 * u[1], 2.0 * u[2]});
        }
        // d_e = 2 r^2 d_s = 8 r^2 d_q on the sphere, so all three agree.
        ClusteringState viaEuclid{data, centroids, DissimilarityKind::euclidean(),
                                  Dataspace::sphere(2.0)};
        ClusteringState viaCosine{data, centroids, DissimilarityKind::cosine(),
                                  Dataspace::sphere(2.0)};
        ClusteringState viaQuantum{data, centroids, DissimilarityKind::quantumExact(),
                                   Dataspace::sphere(2.0)};
        const Assignment a = assignClusters(viaEuclid);
        CHECK(a == assignClusters(viaCosine));
        CHECK(a == assignClusters(viaQuantum));
    }
}

TEST_CASE("SQ-kNN in exact mode and 2DSC-kNN assign identically") {
    SplitMix64 rng(313);
    for (int instance = 0; instance < 5; ++instance) {
        const int n = 100 + static_cast<int>(rng.below(150));
        const int k = 2 + static_cast<int>(rng.below(15));
        const double r = uniformIn(rng, 0.5, 4.0);
        std::vector<Point2> points, init;
        for (int i = 0; i < n; ++i) points.push_back(randomPoint2(rng, 3.0));
        for (int j = 0; j < k; ++j) init.push_back(randomPoint2(rng, 3.0));
        const KnnResult classical =
            run2DscKnn(points, init, r, StopRule::naturalEndpoint(25));
        const KnnResult quantum =
            runSqKnn(points, init, r, StopRule::naturalEndpoint(25));
        REQUIRE(classical.trace.size() == quantum.trace.size());
        for (std::size_t i = 0; i < classical.trace.size(); ++i) {
            CHECK(classical.trace[i].assignment == quantum.trace[i].assignment);
        }
        CHECK(classical.naturalEndpointIteration == quantum.naturalEndpointIteration);
    }
}

TEST_CASE("runSqKnn") {
    SUBCASE("a single point becomes its own centroid direction") {
        const std::vector<Point2> points{{0.5, 0.5}};
        const KnnResult res =
            runSqKnn(points, {{0.5, 0.5}}, 2.0, StopRule::naturalEndpoint(50));
        const Point3 expected = isp({0.5, 0.5}, 2.0);
        CHECK(res.state.centroids[0][0] == doctest::Approx(expected.x).epsilon(1e-12));
        CHECK(res.state.centroids[0][2] == doctest::Approx(expected.z).epsilon(1e-12));
    }
    SUBCASE("shot mode agrees with exact mode on well-separated blobs") {
        const BlobInstance inst = makeBlobs(314, 25);
        const std::vector<Point2> init{{-2.0, -2.0}, {2.0, -2.0}, {-2.0, 2.0}, {2.0, 2.0}};
        const KnnResult exact =
            runSqKnn(inst.points, init, 2.0, StopRule::naturalEndpoint(20));
        const KnnResult sampled = runSqKnn(inst.points, init, 2.0,
                                           StopRule::naturalEndpoint(20),
                                           ShotConfig{1000000, 999});
        std::size_t agree = 0;
        for (std::size_t i = 0; i < inst.points.size(); ++i) {
            if (exact.finalAssignment.labels[i] == sampled.finalAssignment.labels[i]) {
                ++agree;
            }
        }
        CHECK(static_cast<double>(agree) / static_cast<double>(inst.points.size()) >= 0.99);
    }
    SUBCASE("shot mode is deterministic for a fixed seed") {
        const BlobInstance inst = makeBlobs(315, 10);
        const std::vector<Point2> init{{-2.0, -2.0}, {2.0, -2.0}, {-2.0, 2.0}, {2.0, 2.0}};
        const KnnResult a = runSqKnn(inst.points, init, 2.0, StopRule::naturalEndpoint(10),
                                     ShotConfig{512, 77});
        const KnnResult b = runSqKnn(inst.points, init, 2.0, StopRule::naturalEndpoint(10),
                                     ShotConfig{512, 77});
        CHECK(a.finalAssignment == b.finalAssignment);
        CHECK(a.iterations == b.iterations);
    }
}

TEST_CASE("state validation") {
    CHECK_THROWS_AS(validateState({{}, {{1.0}}, DissimilarityKind::euclidean(),
                                   Dataspace::plane2d()}),
                    InvalidInputError);
    CHECK_THROWS_AS(validateState({{{1.0}}, {}, DissimilarityKind::euclidean(),
                                   Dataspace::plane2d()}),
                    InvalidInputError);
    CHECK_THROWS_AS(validateState({{{1.0, 2.0}}, {{1.0}}, DissimilarityKind::euclidean(),
                                   Dataspace::plane2d()}),
                    InvalidInputError);
    CHECK_THROWS_AS(runKnn({{{1.0}}, {{1.0}}, DissimilarityKind::euclidean(),
                            Dataspace::plane2d()},
                           CentroidRule::euclideanMean(), StopRule::naturalEndpoint(0)),
                    InvalidInputError);
}
