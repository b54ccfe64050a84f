#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cat1/sphere_geom.hpp"

using namespace cat1::sphere;

TEST(SphereGeom, ConstantsAsPrinted) {
    EXPECT_NEAR(alpha, 0.615, 5e-4);
    EXPECT_NEAR(beta, 0.955, 5e-4);
    EXPECT_NEAR(delta, 0.785, 5e-4);
    EXPECT_NEAR(alpha + beta, pi / 2, 1e-12);
}

TEST(SphereGeom, EdgeTypes) {
    EXPECT_EQ(edge_type_between(2, 3), 1);
    EXPECT_EQ(edge_type_between(1, 3), 2);
    EXPECT_EQ(edge_type_between(1, 2), 3);
    EXPECT_EQ(edge_type_between(3, 1), 2);
    EXPECT_THROW(edge_type_between(2, 2), std::invalid_argument);
    EXPECT_DOUBLE_EQ(edge_length_of_type(1), alpha);
    EXPECT_DOUBLE_EQ(edge_length_of_type(2), beta);
    EXPECT_DOUBLE_EQ(edge_length_of_type(3), delta);
}

TEST(SphereGeom, LawOfCosinesRoundTrip) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.3, 2.5);
    int tried = 0;
    while (tried < 200) {
        const double A = u(rng), B = u(rng), C = u(rng);
        if (A + B + C <= pi + 0.05 || A + B > pi + C || B + C > pi + A || A + C > pi + B) continue;
        ++tried;
        const double a = side_from_angles(A, B, C), b = side_from_angles(B, C, A), c = side_from_angles(C, A, B);
        EXPECT_NEAR(angle_from_sides(a, b, c), A, 1e-9);
        EXPECT_NEAR(angle_from_sides(b, c, a), B, 1e-9);
    }
}

TEST(SphereGeom, EuclideanAnglesRejected) {
    EXPECT_THROW(side_from_angles(pi / 2, pi / 4, pi / 4), DegenerateTriangle);
    EXPECT_THROW(triangle_area(pi / 3, pi / 3, pi / 3), DegenerateTriangle);
}

TEST(SphereGeom, SimplexArea) {
    EXPECT_NEAR(simplex_area(), pi / 12, 1e-15);
    EXPECT_NEAR(triangle_area(pi / 2, pi / 2, pi / 2), pi / 2, 1e-15);
}

TEST(SphereGeom, FundamentalSimplexRealizesConstants) {
    const auto v = fundamental_simplex();
    for (const auto& p : v) EXPECT_NEAR(dot(p, p), 1.0, 1e-15);
    // side opposite hat-s_k has length of edge type s_k
    EXPECT_NEAR(geodesic_distance(v[1], v[2]), alpha, 1e-12);
    EXPECT_NEAR(geodesic_distance(v[0], v[2]), beta, 1e-12);
    EXPECT_NEAR(geodesic_distance(v[0], v[1]), delta, 1e-12);
    EXPECT_NEAR(angle_at(v[0], v[1], v[2]), pi / 4, 1e-12);
    EXPECT_NEAR(angle_at(v[1], v[0], v[2]), pi / 2, 1e-12);
    EXPECT_NEAR(angle_at(v[2], v[0], v[1]), pi / 3, 1e-12);
}

TEST(SphereGeom, GeodesicsAndPaths) {
    const Vec3 x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
    EXPECT_NEAR(geodesic_distance(x, y), pi / 2, 1e-15);
    EXPECT_NEAR(geodesic_distance(x, Vec3{-1, 0, 0}), pi, 1e-15);
    EXPECT_NEAR(path_length({x, y, z, x}), 3 * pi / 2, 1e-14);
    EXPECT_THROW(geodesic_distance(x, Vec3{2, 0, 0}), std::invalid_argument);
    EXPECT_THROW(path_length({x}), std::invalid_argument);
}

TEST(SphereGeom, ShortTripleExactBoundary) {
    // 2 alpha + 2 beta = pi exactly
    EXPECT_FALSE(is_short({2, 2, 0}));
    EXPECT_TRUE(is_short({1, 1, 1}));
    EXPECT_FALSE(is_short({0, 0, 4}));
    EXPECT_TRUE(is_short({5, 0, 0}));
    EXPECT_FALSE(is_short({6, 0, 0}));
    EXPECT_THROW(is_short({-1, 0, 0}), std::invalid_argument);
}

TEST(SphereGeom, SideFromAnglesExamples) {
    EXPECT_NEAR(side_from_angles(pi / 2, pi / 2, pi / 2), pi / 2, 1e-12);
    EXPECT_NEAR(side_from_angles(pi / 3, pi / 2, pi / 4), delta, 1e-12);
    EXPECT_NEAR(side_from_angles(pi / 4, pi / 2, pi / 3), alpha, 1e-12);
    EXPECT_NEAR(side_from_angles(pi / 2, pi / 3, pi / 4), beta, 1e-12);
}

TEST(SphereGeom, TriangleInequality) {
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    auto point = [&] { return normalized(Vec3{g(rng), g(rng), g(rng)}); };
    for (int i = 0; i < 10000; ++i) {
        const Vec3 p = point(), q = point(), r = point();
        const double pq = geodesic_distance(p, q);
        EXPECT_NEAR(pq, geodesic_distance(q, p), 1e-15);
        EXPECT_GE(pq, 0.0);
        EXPECT_LE(pq, pi);
        EXPECT_LE(pq, geodesic_distance(p, r) + geodesic_distance(r, q) + 1e-12);
    }
    const Vec3 p = point();
    EXPECT_NEAR(geodesic_distance(p, p), 0.0, 1e-7);
    EXPECT_NEAR(geodesic_distance(p, Vec3{-p[0], -p[1], -p[2]}), pi, 1e-7);
}

TEST(SphereGeom, EquatorialSquare) {
    EXPECT_NEAR(path_length({{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}, {1, 0, 0}}), 2 * pi, 1e-14);
}
