#include "stereoknn/clustering.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "stereoknn/rng.hpp"

namespace stereoknn {

namespace {

constexpr double kSphereTol = 1e-9;
constexpr double kIncreaseEps = 1e-12;

double vecNorm(const PointVec& v) {
    double sum = 0.0;
    for (double x : v) sum += x * x;
    return std::sqrt(sum);
}

std::string pairContext(std::size_t point, std::size_t centroid) {
    return " [point " + std::to_string(point) + ", centroid " + std::to_string(centroid) + "]";
}

double evaluateAt(const ClusteringState& state, std::size_t i, std::size_t j,
                  std::uint64_t salt) {
    try {
        return evaluate(state.dissimilarity, state.dataset[i], state.centroids[j],
                        hashAll(salt, i, j));
    } catch (const DegenerateDirectionError& e) {
        throw DegenerateDirectionError(e.what() + pairContext(i, j));
    } catch (const InvalidStateError& e) {
        throw InvalidStateError(e.what() + pairContext(i, j));
    } catch (const InvalidInputError& e) {
        throw InvalidInputError(e.what() + pairContext(i, j));
    }
}

struct AssignmentDetail {
    Assignment assignment;
    double objective = 0.0;  // sum over clusters of the mean member dissimilarity
};

AssignmentDetail assignDetailed(const ClusteringState& state, std::uint64_t salt) {
    const std::size_t n = state.dataset.size();
    const std::size_t k = state.centroids.size();
    AssignmentDetail out;
    out.assignment.labels.resize(n);
    std::vector<double> clusterSum(k, 0.0);
    std::vector<std::size_t> clusterCount(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int best = 0;
        double bestD = evaluateAt(state, i, 0, salt);
        for (std::size_t j = 1; j < k; ++j) {
            const double d = evaluateAt(state, i, j, salt);
            if (d < bestD) {  // ties keep the lowest index
                bestD = d;
                best = static_cast<int>(j);
            }
        }
        out.assignment.labels[i] = best;
        clusterSum[static_cast<std::size_t>(best)] += bestD;
        clusterCount[static_cast<std::size_t>(best)] += 1;
    }
    for (std::size_t j = 0; j < k; ++j) {
        if (clusterCount[j] > 0) {
            out.objective += clusterSum[j] / static_cast<double>(clusterCount[j]);
        }
    }
    return out;
}

std::optional<double> accuracyAgainst(const Assignment& assignment,
                                      const std::vector<int>* truth) {
    if (truth == nullptr) return std::nullopt;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < assignment.labels.size(); ++i) {
        if (assignment.labels[i] == (*truth)[i]) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(assignment.labels.size());
}

}  // namespace

CentroidRule CentroidRule::sphericalProjectedMean(double r) {
    if (!std::isfinite(r) || !(r > 0.0)) {
        throw InvalidInputError("CentroidRule: spherical radius must be positive");
    }
    return {Tag::SphericalProjectedMean, r};
}

void validateState(const ClusteringState& state) {
    if (state.centroids.empty()) {
        throw InvalidInputError("clustering: need at least one centroid");
    }
    if (state.dataset.empty()) {
        throw InvalidInputError("clustering: dataset is empty");
    }
    const std::size_t dim = state.centroids.front().size();
    if (dim == 0) throw InvalidInputError("clustering: zero-dimensional points");
    for (const auto& c : state.centroids) {
        if (c.size() != dim) throw InvalidInputError("clustering: centroid dimension mismatch");
    }
    for (const auto& p : state.dataset) {
        if (p.size() != dim) throw InvalidInputError("clustering: dataset dimension mismatch");
    }
    if (state.dataspace.tag == Dataspace::Tag::Sphere) {
        const double r = state.dataspace.radius;
        if (!(r > 0.0)) throw InvalidInputError("clustering: sphere radius must be positive");
        for (const auto& p : state.dataset) {
            if (std::fabs(vecNorm(p) - r) > kSphereTol * r) {
                throw InvalidInputError("clustering: dataset point off the sphere surface");
            }
        }
    }
}

Assignment assignClusters(const ClusteringState& state, std::uint64_t seedSalt) {
    validateState(state);
    return assignDetailed(state, seedSalt).assignment;
}

std::vector<PointVec> updateCentroids(const ClusteringState& state,
                                      const Assignment& assignment,
                                      const CentroidRule& rule) {
    const std::size_t n = state.dataset.size();
    const std::size_t k = state.centroids.size();
    if (assignment.labels.size() != n) {
        throw InvalidInputError("updateCentroids: assignment length mismatch");
    }
    if (rule.tag == CentroidRule::Tag::SphericalProjectedMean && !(rule.radius > 0.0)) {
        throw InvalidInputError("updateCentroids: spherical radius must be positive");
    }
    const std::size_t dim = state.centroids.front().size();
    std::vector<PointVec> sums(k, PointVec(dim, 0.0));
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const int label = assignment.labels[i];
        if (label < 0 || static_cast<std::size_t>(label) >= k) {
            throw InvalidInputError("updateCentroids: label out of range");
        }
        auto& sum = sums[static_cast<std::size_t>(label)];
        for (std::size_t d = 0; d < dim; ++d) sum[d] += state.dataset[i][d];
        counts[static_cast<std::size_t>(label)] += 1;
    }
    std::vector<PointVec> updated = state.centroids;  // empty clusters stay put
    for (std::size_t j = 0; j < k; ++j) {
        if (counts[j] == 0) continue;
        switch (rule.tag) {
            case CentroidRule::Tag::EuclideanMean: {
                for (std::size_t d = 0; d < dim; ++d) {
                    sums[j][d] /= static_cast<double>(counts[j]);
                }
                updated[j] = std::move(sums[j]);
                break;
            }
            case CentroidRule::Tag::SphericalProjectedMean: {
                const double len = vecNorm(sums[j]);
                if (len == 0.0) {
                    throw DegenerateClusterError(
                        "updateCentroids: cluster " + std::to_string(j) +
                        " sums to the zero vector; no spherical direction exists");
                }
                const double scale = rule.radius / len;
                for (std::size_t d = 0; d < dim; ++d) sums[j][d] *= scale;
                updated[j] = std::move(sums[j]);
                break;
            }
            case CentroidRule::Tag::UnnormalizedSum:
                updated[j] = std::move(sums[j]);
                break;
        }
    }
    return updated;
}

KnnResult runKnn(ClusteringState state, const CentroidRule& rule, const StopRule& stop,
                 const std::vector<int>* truth) {
    validateState(state);
    if (stop.maxIterations < 1) {
        throw InvalidInputError("runKnn: maxIterations must be >= 1");
    }
    if (truth != nullptr && truth->size() != state.dataset.size()) {
        throw InvalidInputError("runKnn: truth label count mismatch");
    }

    using Clock = std::chrono::steady_clock;
    KnnResult result;
    std::optional<Assignment> previous;
    double previousObjective = 0.0;
    int completed = 0;

    while (true) {
        const auto started = Clock::now();
        const std::uint64_t iterSalt = hashAll(std::uint64_t{0}, completed + 1);
        AssignmentDetail detail = assignDetailed(state, iterSalt);

        const bool unchanged = previous && detail.assignment == *previous;
        if (unchanged && !result.naturalEndpointIteration) {
            result.naturalEndpointIteration = completed;
        }
        if (stop.tag == StopRule::Tag::DissimilarityIncrease && completed > 0 &&
            detail.objective > previousObjective * (1.0 + kIncreaseEps)) {
            // Return the previous iteration's state: roll back its centroid
            // update, whose effect was the increase just observed.
            state.centroids = result.trace.back().centroids;
            break;
        }
        if (unchanged && stop.tag != StopRule::Tag::MaxIterations) {
            // Fixed point: further iterations change nothing.
            break;
        }

        std::vector<PointVec> updated = updateCentroids(state, detail.assignment, rule);
        ++completed;
        const double elapsedMs =
            std::chrono::duration<double, std::milli>(Clock::now() - started).count();
        result.trace.push_back({state.centroids, detail.assignment,
                                accuracyAgainst(detail.assignment, truth),
                                detail.objective, elapsedMs});
        state.centroids = std::move(updated);
        previous = std::move(detail.assignment);
        previousObjective = detail.objective;
        if (completed >= stop.maxIterations) break;
    }

    result.iterations = completed;
    result.finalAssignment = *previous;
    result.state = std::move(state);
    return result;
}

std::vector<PointVec> projectPoints(const std::vector<Point2>& points, double r) {
    std::vector<PointVec> out;
    out.reserve(points.size());
    for (Point2 p : points) {
        const Point3 s = isp(p, r);
        out.push_back({s.x, s.y, s.z});
    }
    return out;
}

std::vector<PointVec> toPointVecs(const std::vector<Point2>& points) {
    std::vector<PointVec> out;
    out.reserve(points.size());
    for (Point2 p : points) out.push_back({p.x, p.y});
    return out;
}

KnnResult run2DecKnn(const std::vector<Point2>& points,
                     const std::vector<Point2>& initialCentroids, const StopRule& stop,
                     const std::vector<int>* truth) {
    ClusteringState state{toPointVecs(points), toPointVecs(initialCentroids),
                          DissimilarityKind::euclidean(), Dataspace::plane2d()};
    return runKnn(std::move(state), CentroidRule::euclideanMean(), stop, truth);
}

KnnResult run3DscKnn(const std::vector<Point2>& points,
                     const std::vector<Point2>& initialCentroids, double r,
                     const StopRule& stop, const std::vector<int>* truth) {
    ClusteringState state{projectPoints(points, r), projectPoints(initialCentroids, r),
                          DissimilarityKind::euclidean(), Dataspace::space3d()};
    return runKnn(std::move(state), CentroidRule::euclideanMean(), stop, truth);
}

KnnResult run2DscKnn(const std::vector<Point2>& points,
                     const std::vector<Point2>& initialCentroids, double r,
                     const StopRule& stop, const std::vector<int>* truth) {
    ClusteringState state{projectPoints(points, r), projectPoints(initialCentroids, r),
                          DissimilarityKind::euclidean(), Dataspace::sphere(r)};
    return runKnn(std::move(state), CentroidRule::sphericalProjectedMean(r), stop, truth);
}

KnnResult runSqKnn(const std::vector<Point2>& points,
                   const std::vector<Point2>& initialCentroids, double r,
                   const StopRule& stop, const std::optional<ShotConfig>& shotMode,
                   const std::vector<int>* truth) {
    const DissimilarityKind kind =
        shotMode ? DissimilarityKind::quantumShots(shotMode->shots, shotMode->seed)
                 : DissimilarityKind::quantumExact();
    ClusteringState state{projectPoints(points, r), projectPoints(initialCentroids, r),
                          kind, Dataspace::space3d()};
    return runKnn(std::move(state), CentroidRule::unnormalizedSum(), stop, truth);
}

}  // namespace stereoknn
