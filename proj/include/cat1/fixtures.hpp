#pragma once

// Small hand-built complexes: minimal cases and complexes that break exactly one of
// the link or filling conditions.

#include <string>
#include <vector>

#include "cat1/coxeter.hpp"
#include "cat1/typed_complex.hpp"

namespace cat1::fixtures {

using complex::TypedComplex;

inline void add_triangle(TypedComplex& k, const std::string& a, const std::string& b, const std::string& c) {
    k.add_triangle(k.index_of(a), k.index_of(b), k.index_of(c));
}

inline TypedComplex single_simplex() {
    TypedComplex k;
    k.add_vertex("a", 1);
    k.add_vertex("b", 2);
    k.add_vertex("c", 3);
    add_triangle(k, "a", "b", "c");
    return k;
}

// Three pairwise joined vertices spanning no triangle; not a valid B3 complex.
inline TypedComplex hollow_triangle() {
    TypedComplex k;
    k.add_vertex("a", 1);
    k.add_vertex("b", 2);
    k.add_vertex("c", 3);
    k.add_edge(0, 1);
    k.add_edge(1, 2);
    k.add_edge(0, 2);
    return k;
}

// Two copies of the simplex sharing their s2 edge (the hat-s1, hat-s3 pair).
inline TypedComplex two_simplices() {
    TypedComplex k;
    k.add_vertex("a", 1);
    k.add_vertex("c", 3);
    k.add_vertex("b1", 2);
    k.add_vertex("b2", 2);
    add_triangle(k, "a", "b1", "c");
    add_triangle(k, "a", "b2", "c");
    return k;
}

// The Coxeter complex of A2 x A1 typed so that hat-s1 links are 4-cycles: a sphere with
// poles p, q (hat-s3), equator e1 e2 e3 (hat-s2) and face centres f12 f23 f13 (hat-s1).
// Only the girth bound at hat-s1 vertices fails.
inline TypedComplex short_s1_link() {
    TypedComplex k;
    for (const char* v : {"p", "q"}) k.add_vertex(v, 3);
    for (const char* v : {"e1", "e2", "e3"}) k.add_vertex(v, 2);
    for (const char* v : {"f12", "f23", "f13"}) k.add_vertex(v, 1);
    const std::vector<std::vector<std::string>> faces{{"f12", "e1", "e2"}, {"f23", "e2", "e3"}, {"f13", "e1", "e3"}};
    for (const auto& f : faces) {
        add_triangle(k, f[0], "p", f[1]);
        add_triangle(k, f[0], f[1], "q");
        add_triangle(k, f[0], "q", f[2]);
        add_triangle(k, f[0], f[2], "p");
    }
    return k;
}

// A disk around a hat-s2 vertex whose link is an 8-cycle alternating hat-s1 and hat-s3.
// Only complete bipartiteness fails.
inline TypedComplex long_s2_link() {
    TypedComplex k;
    k.add_vertex("v", 2);
    for (int i = 1; i <= 4; ++i) {
        k.add_vertex("a" + std::to_string(i), 1);
        k.add_vertex("b" + std::to_string(i), 3);
    }
    for (int i = 1; i <= 4; ++i) {
        const std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
        const std::string a_next = "a" + std::to_string(i % 4 + 1);
        add_triangle(k, "v", a, b);
        add_triangle(k, "v", b, a_next);
    }
    return k;
}

// The Coxeter complex of B3 with the open star of one hat-s2 vertex removed. The square
// that vertex used to fill stays behind unfilled.
inline TypedComplex punctured_coxeter_b3(std::string* removed = nullptr) {
    const auto C = coxeter::build_coxeter_complex(coxeter::CoxeterDiagram::type_b(3));
    const TypedComplex full = coxeter::to_typed_complex(C);
    int gone = -1;
    for (int v = 0; v < static_cast<int>(full.vertex_count()) && gone < 0; ++v)
        if (full.type(v) == 2) gone = v;
    if (removed) *removed = full.id(gone);
    TypedComplex k;
    for (int v = 0; v < static_cast<int>(full.vertex_count()); ++v)
        if (v != gone) k.add_vertex(full.id(v), full.type(v));
    for (const auto& t : full.triangles()) {
        if (t[0] == gone || t[1] == gone || t[2] == gone) continue;
        add_triangle(k, full.id(t[0]), full.id(t[1]), full.id(t[2]));
    }
    return k;
}

}  // namespace cat1::fixtures
