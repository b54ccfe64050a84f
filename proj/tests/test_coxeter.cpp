#include <gtest/gtest.h>

#include <array>
#include <map>
#include <queue>
#include <set>

#include "cat1/coxeter.hpp"
#include "cat1/sphere_geom.hpp"

using namespace cat1;
using coxeter::CoxeterDiagram;
using coxeter::ParabolicHandle;

namespace {

// Signed permutations of {1, 2, 3}: s1 = (1 2), s2 = (2 3), s3 negates the third entry.
using Signed = std::array<int, 3>;

Signed act(const Signed& x, int s) {
    Signed y = x;
    if (s == 0) std::swap(y[0], y[1]);
    if (s == 1) std::swap(y[1], y[2]);
    if (s == 2) y[2] = -y[2];
    return y;
}

// Lengths by breadth-first search on right multiplication.
std::map<Signed, int> signed_lengths() {
    std::map<Signed, int> len{{Signed{1, 2, 3}, 0}};
    std::queue<Signed> q;
    q.push({1, 2, 3});
    while (!q.empty()) {
        const auto x = q.front();
        q.pop();
        for (int s = 0; s < 3; ++s) {
            const auto y = act(x, s);
            if (len.emplace(y, len[x] + 1).second) q.push(y);
        }
    }
    return len;
}

Signed signed_of(const std::vector<int>& word) {
    Signed x{1, 2, 3};
    for (int s : word) x = act(x, s);
    return x;
}

}  // namespace

TEST(Coxeter, GroupOrders) {
    EXPECT_EQ(coxeter::enumerate_group(CoxeterDiagram::type_b(3))->size(), 48u);
    EXPECT_EQ(coxeter::enumerate_group(CoxeterDiagram::type_a(5))->size(), 720u);
    EXPECT_EQ(coxeter::enumerate_group(CoxeterDiagram::type_a(1))->size(), 2u);
    EXPECT_EQ(coxeter::enumerate_group(CoxeterDiagram::type_b(2))->size(), 8u);
}

TEST(Coxeter, CapExceeded) {
    EXPECT_THROW(coxeter::enumerate_group(CoxeterDiagram::type_a(5), 100), coxeter::CapExceeded);
}

TEST(Coxeter, Diagrams) {
    const auto b = CoxeterDiagram::type_b(3);
    EXPECT_EQ(b.label(0, 1), 3);
    EXPECT_EQ(b.label(1, 2), 4);
    EXPECT_EQ(b.label(0, 2), 2);
    const auto a = CoxeterDiagram::type_a(5, "t");
    EXPECT_EQ(a.generator_name(0), "t1");
    EXPECT_EQ(a.label(3, 4), 3);
    EXPECT_EQ(a.label(0, 4), 2);
    EXPECT_THROW(CoxeterDiagram::parse("F4"), std::invalid_argument);
    EXPECT_THROW(CoxeterDiagram::from_matrix(2, {1, 5, 5, 1}, "I2(5)"), std::invalid_argument);
}

TEST(Coxeter, Relations) {
    for (const auto& d : {CoxeterDiagram::type_b(3), CoxeterDiagram::type_a(5), CoxeterDiagram::type_a(2)}) {
        const auto W = coxeter::enumerate_group(d);
        for (int s = 0; s < d.rank; ++s)
            for (int t = 0; t < d.rank; ++t) {
                coxeter::ElementIndex x = W->identity();
                for (int k = 0; k < d.label(s, t); ++k) x = W->times_gen(W->times_gen(x, s), t);
                EXPECT_EQ(x, W->identity());
            }
    }
}

TEST(Coxeter, SignedPermutationOracle) {
    const auto W = coxeter::enumerate_group(CoxeterDiagram::type_b(3));
    const auto oracle = signed_lengths();
    ASSERT_EQ(oracle.size(), W->size());
    std::set<Signed> images;
    for (coxeter::ElementIndex w = 0; w < W->size(); ++w) {
        const auto x = signed_of(W->word(w));
        images.insert(x);
        EXPECT_EQ(W->length(w), oracle.at(x)) << W->word_string(w);
        EXPECT_EQ(static_cast<int>(W->word(w).size()), W->length(w));
        for (coxeter::ElementIndex v = 0; v < W->size(); v += 7) {
            auto wv = W->word(w);
            const auto& vw = W->word(v);
            wv.insert(wv.end(), vw.begin(), vw.end());
            EXPECT_EQ(signed_of(W->word(W->product(w, v))), signed_of(wv));
        }
    }
    EXPECT_EQ(images.size(), 48u);
    EXPECT_EQ(W->length(W->longest()), 9);
}

TEST(Coxeter, CosetRepresentatives) {
    const auto W = coxeter::enumerate_group(CoxeterDiagram::type_b(3));
    const int order[3] = {8, 4, 6};
    for (int i = 0; i < 3; ++i) {
        const auto P = ParabolicHandle::maximal(3, i);
        EXPECT_EQ(W->min_coset_rep(W->identity(), P), W->identity());
        std::map<coxeter::ElementIndex, int> size;
        for (coxeter::ElementIndex w = 0; w < W->size(); ++w) {
            const auto r = W->min_coset_rep(w, P);
            EXPECT_EQ(W->min_coset_rep(r, P), r);
            EXPECT_LE(W->length(r), W->length(w));
            ++size[r];
        }
        EXPECT_EQ(size.size(), 48u / order[i]);
        for (const auto& [r, n] : size) EXPECT_EQ(n, order[i]);
    }
    EXPECT_EQ(W->min_coset_rep(W->generator(1), ParabolicHandle::maximal(3, 0)), W->identity());
}

TEST(Coxeter, WeakOrder) {
    const auto W = coxeter::enumerate_group(CoxeterDiagram::type_b(3));
    const auto s1 = W->generator(0), s2 = W->generator(1), s3 = W->generator(2);
    const auto s2s1 = W->from_word({1, 0});
    EXPECT_FALSE(W->prefix_leq(s1, s2s1));
    EXPECT_TRUE(W->prefix_leq(s2, s2s1));
    for (coxeter::ElementIndex g = 0; g < W->size(); ++g) {
        EXPECT_TRUE(W->prefix_leq(W->identity(), g));
        EXPECT_TRUE(W->prefix_leq(g, g));
        EXPECT_EQ(W->join(g, g), g);
        EXPECT_EQ(W->meet(g, g), g);
        EXPECT_EQ(W->join(g, W->identity()), g);
    }
    EXPECT_EQ(W->meet(s1, s2), W->identity());
    const auto j = W->join(s2, s3);
    EXPECT_EQ(W->length(j), 4);
    // oracle: the unique minimal common upper bound by scanning the group
    std::vector<coxeter::ElementIndex> ub;
    for (coxeter::ElementIndex g = 0; g < W->size(); ++g)
        if (W->prefix_leq(s2, g) && W->prefix_leq(s3, g)) ub.push_back(g);
    for (auto g : ub) EXPECT_TRUE(W->prefix_leq(j, g));
    // prefix order agrees with the length identity
    for (coxeter::ElementIndex a = 0; a < W->size(); ++a)
        for (coxeter::ElementIndex b = 0; b < W->size(); ++b)
            EXPECT_EQ(W->prefix_leq(a, b), W->length(a) + W->length(W->product(W->inverse(a), b)) == W->length(b));
}

TEST(Coxeter, ComplexOfB3) {
    const auto C = coxeter::build_coxeter_complex(CoxeterDiagram::type_b(3));
    const auto K = coxeter::to_typed_complex(C);
    EXPECT_EQ(K.vertex_count(), 26u);
    EXPECT_EQ(K.edges().size(), 72u);
    EXPECT_EQ(K.triangle_count(), 48u);
    for (auto [a, b] : K.edges()) EXPECT_EQ(K.edge_multiplicity(a, b), 2);
    const double angle[3] = {sphere::pi / 4, sphere::pi / 2, sphere::pi / 3};
    for (const auto& t : K.triangles())
        for (int i = 0; i < 3; ++i) {
            const auto& p = C.coordinates;
            const int v = t[i], a = t[(i + 1) % 3], b = t[(i + 2) % 3];
            EXPECT_NEAR(sphere::angle_at(p[v], p[a], p[b]), angle[K.type(v) - 1], 1e-9);
            EXPECT_NEAR(sphere::geodesic_distance(p[a], p[b]),
                        sphere::edge_length_of_type(sphere::edge_type_between(K.type(a), K.type(b))), 1e-9);
        }
    EXPECT_EQ(C.coordinates[K.index_of("T2:e")], (sphere::Vec3{0, 0, 1}));
}

TEST(Coxeter, ComplexOfA2IsHexagon) {
    const auto C = coxeter::build_coxeter_complex(CoxeterDiagram::type_a(2));
    EXPECT_EQ(C.vertices.size(), 6u);
    EXPECT_EQ(C.chambers.size(), 6u);
    std::set<std::pair<int, int>> edges;
    for (const auto& ch : C.chambers) {
        EXPECT_NE(C.vertices[ch[0]].type, C.vertices[ch[1]].type);
        edges.insert({ch[0], ch[1]});
    }
    EXPECT_EQ(edges.size(), 6u);
    EXPECT_TRUE(C.coordinates.empty());
    EXPECT_THROW(coxeter::to_typed_complex(C), std::invalid_argument);
}
