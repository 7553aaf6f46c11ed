#include "stereoknn/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <string>

namespace stereoknn {

namespace {

void requireFinite(Point2 p, const char* who) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw InvalidInputError(std::string(who) + ": non-finite input point");
    }
}

void requireRadius(double r, const char* who) {
    if (!std::isfinite(r) || !(r > 0.0)) {
        throw InvalidInputError(std::string(who) + ": radius must be positive and finite");
    }
}

void requireAxes(const EllipsoidSpec& e, const char* who) {
    if (!std::isfinite(e.a) || !std::isfinite(e.b) || !std::isfinite(e.c) ||
        !(e.a > 0.0) || !(e.b > 0.0) || !(e.c > 0.0)) {
        throw InvalidInputError(std::string(who) + ": semi-axes must be positive and finite");
    }
}

// atan2 kept inside (-pi, pi]: only y = -0.0 with x < 0 lands on -pi.
double azimuth(double y, double x) {
    if (y == 0.0 && x == 0.0) return 0.0;
    const double phi = std::atan2(y, x);
    return (phi == -std::numbers::pi) ? std::numbers::pi : phi;
}

}  // namespace

Point3 isp(Point2 p, double r) {
    requireFinite(p, "isp");
    requireRadius(r, "isp");
    const double denom = normSq(p) + r * r;
    const double scale = 2.0 * r * r / denom;
    return {p.x * scale, p.y * scale, r * (normSq(p) - r * r) / denom};
}

SphereAngles ispAngles(Point2 p, double r) {
    requireFinite(p, "ispAngles");
    requireRadius(r, "ispAngles");
    const double len = norm(p);
    if (len == 0.0) return {std::numbers::pi, 0.0};
    return {2.0 * std::atan(r / len), azimuth(p.y, p.x)};
}

std::vector<double> ispGeneralDim(const std::vector<double>& p, double r) {
    if (p.empty()) throw InvalidInputError("ispGeneralDim: empty input vector");
    requireRadius(r, "ispGeneralDim");
    double nsq = 0.0;
    for (double v : p) {
        if (!std::isfinite(v)) throw InvalidInputError("ispGeneralDim: non-finite component");
        nsq += v * v;
    }
    const double denom = nsq + r * r;
    std::vector<double> s(p.size() + 1);
    s[0] = r * (nsq - r * r) / denom;
    const double scale = 2.0 * r * r / denom;
    for (std::size_t i = 0; i < p.size(); ++i) s[i + 1] = p[i] * scale;
    return s;
}

Point3 ellipsoidalProject(Point2 p, const EllipsoidSpec& e) {
    requireFinite(p, "ellipsoidalProject");
    requireAxes(e, "ellipsoidalProject");
    const double q = p.x * p.x / (e.a * e.a) + p.y * p.y / (e.b * e.b);
    const double scale = 2.0 / (q + 1.0);
    return {p.x * scale, p.y * scale, e.c * (q - 1.0) / (q + 1.0)};
}

SphereAngles ellipsoidalAngles(Point2 p, const EllipsoidSpec& e) {
    requireFinite(p, "ellipsoidalAngles");
    requireAxes(e, "ellipsoidalAngles");
    const double len = norm(p);
    if (len == 0.0) return {std::numbers::pi, 0.0};
    const double q = p.x * p.x / (e.a * e.a) + p.y * p.y / (e.b * e.b);
    // tan(theta) = sqrt(sx^2+sy^2)/sz with the common 1/(q+1) factor dropped.
    return {std::atan2(2.0 * len, e.c * (q - 1.0)), azimuth(p.y, p.x)};
}

SphereAngles anglesOf(Point3 v) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z)) {
        throw InvalidInputError("anglesOf: non-finite input vector");
    }
    const double len = norm(v);
    if (len == 0.0) throw DegenerateDirectionError("anglesOf: zero vector has no direction");
    const double cosTheta = std::clamp(v.z / len, -1.0, 1.0);
    return {std::acos(cosTheta), azimuth(v.y, v.x)};
}

Point3 unitVectorOf(SphereAngles angles) {
    const double st = std::sin(angles.theta);
    return {st * std::cos(angles.phi), st * std::sin(angles.phi), std::cos(angles.theta)};
}

Point2 stereoForward(Point3 s, double r) {
    requireRadius(r, "stereoForward");
    const double denom = r - s.z;
    if (!(denom > 0.0)) {
        throw DegenerateDirectionError("stereoForward: point at or beyond the north pole");
    }
    const double scale = r / denom;
    return {s.x * scale, s.y * scale};
}

}  // namespace stereoknn
