#pragma once

#include <cmath>
#include <vector>

#include "stereoknn/errors.hpp"

namespace stereoknn {

/// Received I/Q symbol: in-phase and quadrature amplitudes.
struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Projected point or Bloch vector.
struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Polar angle theta in [0, pi] from the +z axis, azimuth phi in (-pi, pi].
struct SphereAngles {
    double theta = 0.0;
    double phi = 0.0;
};

/// Axis-aligned ellipsoid semi-axes; c carries the projection pole.
struct EllipsoidSpec {
    double a = 1.0;
    double b = 1.0;
    double c = 1.0;
};

inline double normSq(Point2 p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double normSq(Point3 v) { return v.x * v.x + v.y * v.y + v.z * v.z; }
inline double norm(Point3 v) { return std::sqrt(normSq(v)); }
inline double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }

inline Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Point3 operator*(double s, Point3 v) { return {s * v.x, s * v.y, s * v.z}; }
inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

inline Point3 cross(Point3 a, Point3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Inverse stereographic projection of a planar point onto the radius-r
/// sphere, projecting from the north pole (0, 0, r). The image lies on
/// S^2(r) \ {N}; the pole itself is never produced.
Point3 isp(Point2 p, double r);

/// Polar/azimuthal angles of isp(p, r) without forming the 3D point:
/// theta = 2*atan(r/|p|), phi = atan2(p_y, p_x). At p = 0 the projection
/// degenerates to the south pole; by convention theta = pi, phi = 0.
SphereAngles ispAngles(Point2 p, double r);

/// Inverse stereographic projection of a d-dimensional point onto S^d(r) in
/// d+1 dimensions. The pole-axis coordinate comes first, so for d = 2 the
/// result is (s_z, s_x, s_y) relative to isp().
std::vector<double> ispGeneralDim(const std::vector<double>& p, double r);

/// Projection onto an axis-aligned ellipsoid from its pole (0, 0, c).
Point3 ellipsoidalProject(Point2 p, const EllipsoidSpec& e);

/// Polar/azimuthal angles of the ellipsoidal projection about the origin.
/// Reduces to ispAngles when a = b = c.
SphereAngles ellipsoidalAngles(Point2 p, const EllipsoidSpec& e);

/// Polar/azimuthal angles of a nonzero 3D direction.
SphereAngles anglesOf(Point3 v);

/// Unit vector with the given polar/azimuthal angles.
Point3 unitVectorOf(SphereAngles angles);

/// Forward stereographic projection (sphere to plane), the inverse of isp.
/// The north pole has no planar preimage.
Point2 stereoForward(Point3 s, double r);

}  // namespace stereoknn
