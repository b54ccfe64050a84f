#pragma once

// Developing galleries of a B3-typed complex into the Coxeter complex C(B3),
// lune boundaries in C(B3), and the shapes of three-quad galleries.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cat1/coxeter.hpp"
#include "cat1/sphere_geom.hpp"
#include "cat1/typed_complex.hpp"

namespace cat1::develop {

using complex::TypedComplex;
using coxeter::CoxeterComplex;
using coxeter::ElementIndex;

inline CoxeterComplex coxeter_complex_b3() { return coxeter::build_coxeter_complex(coxeter::CoxeterDiagram::type_b(3)); }

struct DevelopedGallery {
    std::vector<ElementIndex> chambers;            // target chamber for each source triangle
    std::vector<std::array<int, 3>> images;        // images[j][type-1] = vertex of C(B3)
    std::vector<std::string> warnings;
};

inline int shared_edge_type(const TypedComplex& k, const complex::Triangle& a, const complex::Triangle& b) {
    int common = 0, missing_type = 6;
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) ++common, missing_type -= k.type(x);
    if (common != 2) return 0;
    return missing_type;
}

// Consecutive triangles share an edge; crossing the edge opposite the type-k vertex
// multiplies the chamber by s_k on the right.
inline DevelopedGallery develop_gallery(const TypedComplex& k, const std::vector<int>& gallery, const CoxeterComplex& C,
                                        ElementIndex base = 0) {
    if (C.coordinates.empty()) throw std::invalid_argument("target must be the Coxeter complex of B3");
    if (gallery.empty()) throw std::invalid_argument("empty gallery");
    DevelopedGallery d;
    const auto& W = *C.group;
    ElementIndex g = base;
    for (std::size_t j = 0; j < gallery.size(); ++j) {
        const auto& t = k.triangles().at(gallery[j]);
        std::set<int> types{k.type(t[0]), k.type(t[1]), k.type(t[2])};
        if (types != std::set<int>{1, 2, 3})
            throw std::invalid_argument("type mismatch: triangle " + std::to_string(gallery[j]) + " is not B3-typed");
        if (j > 0) {
            const int kk = shared_edge_type(k, k.triangles()[gallery[j - 1]], t);
            if (kk == 0)
                throw std::invalid_argument("gallery triangles " + std::to_string(j - 1) + " and " +
                                            std::to_string(j) + " do not share an edge");
            g = W.times_gen(g, kk - 1);
        }
        d.chambers.push_back(g);
        const auto& ch = C.chambers[g];
        d.images.push_back({ch[0], ch[1], ch[2]});
    }
    std::map<int, std::set<int>> image_of;
    std::map<int, std::set<int>> preimage_of;
    for (std::size_t j = 0; j < gallery.size(); ++j)
        for (int x : k.triangles()[gallery[j]]) {
            const int img = d.images[j][k.type(x) - 1];
            image_of[x].insert(img);
            preimage_of[img].insert(x);
        }
    for (const auto& [img, pre] : preimage_of)
        if (pre.size() > 1) d.warnings.push_back("non-injective: several source vertices develop onto " + C.vertices[img].id);
    return d;
}

// Sum of the developed angles at the source vertex v over the gallery triangles containing it.
inline double developed_angle(const TypedComplex& k, const std::vector<int>& gallery, const DevelopedGallery& d,
                              const CoxeterComplex& C, int v) {
    double sum = 0.0;
    for (std::size_t j = 0; j < gallery.size(); ++j) {
        const auto& t = k.triangles()[gallery[j]];
        if (std::find(t.begin(), t.end(), v) == t.end()) continue;
        const auto& im = d.images[j];
        const int p = im[k.type(v) - 1];
        std::vector<int> others;
        for (int i = 0; i < 3; ++i)
            if (i != k.type(v) - 1) others.push_back(im[i]);
        sum += sphere::angle_at(C.coordinates[p], C.coordinates[others[0]], C.coordinates[others[1]]);
    }
    return sum;
}

// Adds a warning when some vertex collects more than a full turn.
inline void check_angle_budget(const TypedComplex& k, const std::vector<int>& gallery, DevelopedGallery& d,
                               const CoxeterComplex& C) {
    std::set<int> seen;
    for (int t : gallery)
        for (int v : k.triangles()[t]) {
            if (!seen.insert(v).second) continue;
            const double a = developed_angle(k, gallery, d, C, v);
            if (a > 2.0 * sphere::pi + 1e-9)
                d.warnings.push_back("non-injective: developed angle " + std::to_string(a) + " at " + k.id(v));
        }
}

inline int antipode(const CoxeterComplex& C, int v) {
    const auto& p = C.coordinates.at(v);
    for (std::size_t u = 0; u < C.vertices.size(); ++u) {
        const auto& q = C.coordinates[u];
        if (std::abs(p[0] + q[0]) < 1e-9 && std::abs(p[1] + q[1]) < 1e-9 && std::abs(p[2] + q[2]) < 1e-9)
            return static_cast<int>(u);
    }
    throw std::logic_error("vertex without antipode");
}

// Edge paths of length pi from a vertex of the given type to its antipode, each once
// up to reversal. Vertex ids of C(B3) order the endpoints.
inline std::vector<std::vector<int>> lune_boundaries(const CoxeterComplex& C, int terminal_type) {
    const auto k = coxeter::to_typed_complex(C);
    std::vector<std::vector<int>> out;
    std::set<std::vector<int>> seen;
    const double tol = 1e-9;
    for (int s = 0; s < static_cast<int>(C.vertices.size()); ++s) {
        if (C.vertices[s].type != terminal_type) continue;
        const int goal = antipode(C, s);
        std::vector<int> path{s};
        std::vector<char> used(C.vertices.size(), 0);
        used[s] = 1;
        std::function<void(double)> dfs = [&](double len) {
            const int u = path.back();
            if (u == goal) {
                if (std::abs(len - sphere::pi) < tol) {
                    std::vector<int> key = path;
                    if (C.vertices[key.back()].id < C.vertices[key.front()].id) std::reverse(key.begin(), key.end());
                    if (seen.insert(key).second) out.push_back(key);
                }
                return;
            }
            for (int w : k.neighbors(u)) {
                if (used[w]) continue;
                const double l = len + sphere::edge_length_of_type(sphere::edge_type_between(k.type(u), k.type(w)));
                if (l > sphere::pi + tol) continue;
                used[w] = 1;
                path.push_back(w);
                dfs(l);
                path.pop_back();
                used[w] = 0;
            }
        };
        dfs(0.0);
    }
    return out;
}

enum class QuadShape { Left, Middle, Right };

inline const char* quad_shape_name(QuadShape s) {
    switch (s) {
        case QuadShape::Left: return "left";
        case QuadShape::Middle: return "middle";
        case QuadShape::Right: return "right";
    }
    return "?";
}

// The quad of a hat-s2 vertex: the four corners of its star.
inline std::vector<int> quad_corners(const TypedComplex& k, int center) {
    if (k.type(center) != 2) throw std::invalid_argument("quad center must have type 2");
    std::vector<int> c = k.neighbors(center);
    if (c.size() != 4) throw std::invalid_argument("quad center " + k.id(center) + " does not have four neighbours");
    return c;
}

// Q1 Q2 Q3 consecutive along shared edges. Middle: Q2 meets Q1 and Q3 along opposite
// edges. Otherwise the two shared edges meet in a corner; a hat-s1 corner gives the
// left shape, where Q1 and Q3 share only that corner, and a hat-s3 corner gives the
// right shape, where the three quads close up around it and Q1, Q3 share an edge.
inline QuadShape classify_quad_gallery(const TypedComplex& k, const std::array<int, 3>& centers) {
    std::array<std::vector<int>, 3> q;
    for (int i = 0; i < 3; ++i) q[i] = quad_corners(k, centers[i]);
    auto meet = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
        return r;
    };
    const auto e12 = meet(q[0], q[1]), e23 = meet(q[1], q[2]), e13 = meet(q[0], q[2]);
    auto is_edge = [&](const std::vector<int>& e) { return e.size() == 2 && k.has_edge(e[0], e[1]); };
    if (!is_edge(e12) || !is_edge(e23)) throw std::invalid_argument("consecutive quads must share an edge");
    const auto pivot = meet(e12, e23);
    if (pivot.empty()) return QuadShape::Middle;
    if (pivot.size() != 1) throw std::invalid_argument("the three quads do not form a gallery");
    if (k.type(pivot[0]) == 1) {
        if (e13.size() != 1) throw std::invalid_argument("quads around a hat-s1 corner must share only it");
        return QuadShape::Left;
    }
    if (!is_edge(e13)) throw std::invalid_argument("quads around a hat-s3 corner must close up");
    return QuadShape::Right;
}

}  // namespace cat1::develop
