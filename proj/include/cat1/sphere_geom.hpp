#pragma once

// Spherical geometry of the B3 simplex and of short closed edge paths.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace cat1::sphere {

inline constexpr double pi = std::numbers::pi;

// Edge s1 joins hat-s2 and hat-s3, s2 joins hat-s1 and hat-s3, s3 joins hat-s1 and hat-s2.
inline const double alpha = std::acos(std::sqrt(2.0) / std::sqrt(3.0));
inline const double beta = std::acos(1.0 / std::sqrt(3.0));
inline const double delta = pi / 4.0;

// Angle of the simplex at the vertex of the given type (1, 2 or 3).
inline double vertex_angle_of_type(int type) {
    switch (type) {
        case 1: return pi / 4.0;
        case 2: return pi / 2.0;
        case 3: return pi / 3.0;
        default: throw std::invalid_argument("vertex type must be 1, 2 or 3");
    }
}

// Metric length of an edge of type s_k (k = 1, 2, 3).
inline double edge_length_of_type(int k) {
    switch (k) {
        case 1: return alpha;
        case 2: return beta;
        case 3: return delta;
        default: throw std::invalid_argument("edge type must be 1, 2 or 3");
    }
}

// Edge type between two vertex types: the remaining index.
inline int edge_type_between(int a, int b) {
    if (a == b || a < 1 || a > 3 || b < 1 || b > 3)
        throw std::invalid_argument("edge endpoints must carry two distinct types");
    return 6 - a - b;
}

class DegenerateTriangle : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Side opposite the angle A, by the spherical law of cosines for angles.
inline double side_from_angles(double A, double B, double C) {
    if (A + B + C <= pi) throw DegenerateTriangle("angle sum must exceed pi");
    const double c = (std::cos(A) + std::cos(B) * std::cos(C)) / (std::sin(B) * std::sin(C));
    return std::acos(std::clamp(c, -1.0, 1.0));
}

// Angle opposite the side a, by the law of cosines for sides.
inline double angle_from_sides(double a, double b, double c) {
    const double x = (std::cos(a) - std::cos(b) * std::cos(c)) / (std::sin(b) * std::sin(c));
    return std::acos(std::clamp(x, -1.0, 1.0));
}

inline double triangle_area(double A, double B, double C) {
    if (A + B + C <= pi) throw DegenerateTriangle("angle sum must exceed pi");
    return A + B + C - pi;
}

inline double simplex_area() { return triangle_area(vertex_angle_of_type(1), vertex_angle_of_type(2), vertex_angle_of_type(3)); }

struct ShortTriple {
    int n_alpha = 0;
    int n_beta = 0;
    int n_delta = 0;

    friend auto operator<=>(const ShortTriple&, const ShortTriple&) = default;
    std::string str() const {
        return "(" + std::to_string(n_alpha) + "," + std::to_string(n_beta) + "," +
               std::to_string(n_delta) + ")";
    }
};

inline double weighted_length(const ShortTriple& t) {
    return t.n_alpha * alpha + t.n_beta * beta + t.n_delta * delta;
}

// Exact test of  a*alpha + b*beta + c*delta < pi.
// With m = min(a, b) the sum equals m*pi/2 + c*pi/4 + |a - b| * (alpha or beta).
// If a == b the comparison is rational; otherwise alpha/pi is irrational so the
// floating comparison cannot hit equality, and the gap is far above rounding.
inline bool is_short(const ShortTriple& t) {
    if (t.n_alpha < 0 || t.n_beta < 0 || t.n_delta < 0)
        throw std::invalid_argument("edge counts must be nonnegative");
    if (t.n_alpha == t.n_beta) return 2 * t.n_alpha + t.n_delta < 4;
    return weighted_length(t) < pi;
}

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Vec3 normalized(const Vec3& a) {
    const double n = std::sqrt(dot(a, a));
    if (n == 0.0) throw std::invalid_argument("zero vector");
    return {a[0] / n, a[1] / n, a[2] / n};
}

inline double spherical_distance(const Vec3& a, const Vec3& b) {
    return std::acos(std::clamp(dot(normalized(a), normalized(b)), -1.0, 1.0));
}

inline void require_unit(const Vec3& p) {
    if (std::abs(dot(p, p) - 1.0) > 1e-9) throw std::invalid_argument("point is not on the unit sphere");
}

inline double geodesic_distance(const Vec3& p, const Vec3& q) {
    require_unit(p);
    require_unit(q);
    return std::acos(std::clamp(dot(p, q), -1.0, 1.0));
}

inline double path_length(const std::vector<Vec3>& points) {
    if (points.size() < 2) throw std::invalid_argument("a path needs at least two points");
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) sum += geodesic_distance(points[i], points[i + 1]);
    return sum;
}

// Interior angle at p of the spherical triangle (p, q, r).
inline double angle_at(const Vec3& p0, const Vec3& q0, const Vec3& r0) {
    const Vec3 p = normalized(p0), q = normalized(q0), r = normalized(r0);
    const double pq = dot(p, q), pr = dot(p, r);
    const Vec3 tq{q[0] - pq * p[0], q[1] - pq * p[1], q[2] - pq * p[2]};
    const Vec3 tr{r[0] - pr * p[0], r[1] - pr * p[1], r[2] - pr * p[2]};
    const double c = dot(tq, tr) / std::sqrt(dot(tq, tq) * dot(tr, tr));
    return std::acos(std::clamp(c, -1.0, 1.0));
}

// Euclidean reflection across the plane through the origin with the given normal.
inline Vec3 reflect(const Vec3& v, const Vec3& normal) {
    const Vec3 n = normalized(normal);
    const double d = 2.0 * dot(v, n);
    return {v[0] - d * n[0], v[1] - d * n[1], v[2] - d * n[2]};
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Realization of the fundamental simplex on the unit sphere, indexed by type - 1.
inline std::array<Vec3, 3> fundamental_simplex() {
    const Vec3 v2{0.0, 0.0, 1.0};
    const Vec3 v1{std::sin(delta), 0.0, std::cos(delta)};
    const Vec3 v3{0.0, std::sin(alpha), std::cos(alpha)};
    return {v1, v2, v3};
}

}  // namespace cat1::sphere
