#pragma once

#include <optional>
#include <vector>

#include "stereoknn/dissimilarity.hpp"
#include "stereoknn/geometry.hpp"
#include "stereoknn/quantum.hpp"

namespace stereoknn {

using PointVec = std::vector<double>;

/// Space the clustering state lives in. Sphere(r) additionally requires every
/// dataset point to have norm r (within 1e-9 relative).
struct Dataspace {
    enum class Tag { Plane2D, Space3D, Sphere };

    Tag tag = Tag::Plane2D;
    double radius = 0.0;  // Sphere only

    static Dataspace plane2d() { return {Tag::Plane2D, 0.0}; }
    static Dataspace space3d() { return {Tag::Space3D, 0.0}; }
    static Dataspace sphere(double r) { return {Tag::Sphere, r}; }
};

/// The 4-tuple driving one clustering run: dataset, ordered centroid list,
/// dissimilarity selector, and dataspace tag.
struct ClusteringState {
    std::vector<PointVec> dataset;
    std::vector<PointVec> centroids;
    DissimilarityKind dissimilarity;
    Dataspace dataspace;
};

/// One cluster index per dataset point.
struct Assignment {
    std::vector<int> labels;

    bool operator==(const Assignment&) const = default;
};

/// Centroid update rule: the representative minimizer for each cluster.
struct CentroidRule {
    enum class Tag { EuclideanMean, SphericalProjectedMean, UnnormalizedSum };

    Tag tag = Tag::EuclideanMean;
    double radius = 0.0;  // SphericalProjectedMean only

    static CentroidRule euclideanMean() { return {Tag::EuclideanMean, 0.0}; }
    static CentroidRule sphericalProjectedMean(double r);
    static CentroidRule unnormalizedSum() { return {Tag::UnnormalizedSum, 0.0}; }
};

/// Stopping rule. maxIterations is always a hard cap:
///   NaturalEndpoint       stop once the assignment repeats;
///   MaxIterations         run exactly maxIterations iterations;
///   DissimilarityIncrease stop (reverting one iteration) when the summed
///                         per-cluster mean dissimilarity strictly increases.
struct StopRule {
    enum class Tag { NaturalEndpoint, MaxIterations, DissimilarityIncrease };

    Tag tag = Tag::NaturalEndpoint;
    int maxIterations = 50;

    static StopRule naturalEndpoint(int cap = 50) { return {Tag::NaturalEndpoint, cap}; }
    static StopRule fixedIterations(int n) { return {Tag::MaxIterations, n}; }
    static StopRule dissimilarityIncrease(int cap = 50) {
        return {Tag::DissimilarityIncrease, cap};
    }
};

/// Snapshot of one executed iteration. `centroids` are the centroids the
/// assignment was computed against (i.e. entering the iteration);
/// `meanClusterDissimilarity` is the sum over clusters of the mean
/// dissimilarity between members and their centroid.
struct IterationRecord {
    std::vector<PointVec> centroids;
    Assignment assignment;
    std::optional<double> accuracy;  // fraction of labels matching `truth`
    double meanClusterDissimilarity = 0.0;
    double wallMs = 0.0;
};

struct KnnResult {
    ClusteringState state;  // final centroids live here
    Assignment finalAssignment;
    std::vector<IterationRecord> trace;
    int iterations = 0;
    std::optional<int> naturalEndpointIteration;
};

/// Checks the ClusteringState invariants; throws InvalidInputError.
void validateState(const ClusteringState& state);

/// Assigns every point to the centroid minimizing the dissimilarity, lowest
/// index winning ties. seedSalt individualizes shot-sampled evaluations; the
/// per-pair stream is derived from (salt, point index, centroid index), so
/// any evaluation order produces identical draws.
Assignment assignClusters(const ClusteringState& state, std::uint64_t seedSalt = 0);

/// Applies the centroid rule per cluster. Empty clusters keep their previous
/// centroid. SphericalProjectedMean throws DegenerateClusterError when the
/// member sum is the zero vector.
std::vector<PointVec> updateCentroids(const ClusteringState& state,
                                      const Assignment& assignment,
                                      const CentroidRule& rule);

/// Alternates cluster and centroid updates until the stop rule fires. One
/// iteration = one cluster update followed by one centroid update. The
/// natural endpoint at iteration i means the cluster update after iteration
/// i's centroid update reproduces iteration i's assignment; the detection
/// pass itself is not counted or traced. `truth` (cluster indices, one per
/// point) enables the per-iteration accuracy field of the trace.
KnnResult runKnn(ClusteringState state, const CentroidRule& rule, const StopRule& stop,
                 const std::vector<int>* truth = nullptr);

/// Plain k-means on the 2D plane: Euclidean dissimilarity, mean update.
KnnResult run2DecKnn(const std::vector<Point2>& points,
                     const std::vector<Point2>& initialCentroids, const StopRule& stop,
                     const std::vector<int>* truth = nullptr);

/// Projects data and centroids through isp(., r), then runs plain k-means in
/// R^3; centroids may leave the sphere.
KnnResult run3DscKnn(const std::vector<Point2>& points,
                     const std::vector<Point2>& initialCentroids, double r,
                     const StopRule& stop, const std::vector<int>* truth = nullptr);

/// Projects through isp(., r) and clusters on the sphere surface: Euclidean
/// dissimilarity (equivalent to cosine there) with the spherical centroid
/// update, so centroids stay on S^2(r).
KnnResult run2DscKnn(const std::vector<Point2>& points,
                     const std::vector<Point2>& initialCentroids, double r,
                     const StopRule& stop, const std::vector<int>* truth = nullptr);

/// Projects through isp(., r) and clusters with the quantum dissimilarity
/// (exact, or shot-sampled when `shotMode` is set) and the unnormalized-sum
/// centroid update. In exact mode the per-iteration assignments coincide
/// with run2DscKnn's.
KnnResult runSqKnn(const std::vector<Point2>& points,
                   const std::vector<Point2>& initialCentroids, double r,
                   const StopRule& stop,
                   const std::optional<ShotConfig>& shotMode = std::nullopt,
                   const std::vector<int>* truth = nullptr);

/// Elementwise isp onto S^2(r), as 3-vectors.
std::vector<PointVec> projectPoints(const std::vector<Point2>& points, double r);

/// Planar points as 2-vectors.
std::vector<PointVec> toPointVecs(const std::vector<Point2>& points);

}  // namespace stereoknn
