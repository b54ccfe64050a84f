#include <gtest/gtest.h>

#include <set>

#include "cat1/coxeter.hpp"
#include "cat1/fixtures.hpp"
#include "cat1/typed_complex.hpp"

using namespace cat1;
using complex::EdgePath;
using complex::Graph;
using complex::TypedComplex;

namespace {

TypedComplex cb3() { return coxeter::to_typed_complex(coxeter::build_coxeter_complex(coxeter::CoxeterDiagram::type_b(3))); }

Graph cycle_graph(int n) {
    Graph g;
    g.adj.assign(n, {});
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

}  // namespace

TEST(TypedComplex, ParseAndWrite) {
    const auto k = complex::parse_complex_string("# comment\nt a b c\nv c s3\nv a 1\nv b s2 # trailing\n");
    EXPECT_EQ(k.vertex_count(), 3u);
    EXPECT_EQ(k.triangle_count(), 1u);
    EXPECT_EQ(k.type(k.index_of("c")), 3);
    const auto again = complex::parse_complex_string(complex::to_string(k));
    EXPECT_EQ(complex::to_string(again), complex::to_string(k));
}

TEST(TypedComplex, ParseErrors) {
    EXPECT_THROW(complex::parse_complex_string("v a 4\n"), complex::ParseError);
    EXPECT_THROW(complex::parse_complex_string("v a 1\nv a 2\n"), complex::ParseError);
    EXPECT_THROW(complex::parse_complex_string("v a 1\nt a b c\n"), complex::ParseError);
    EXPECT_THROW(complex::parse_complex_string("v a 1\nv b 2\nt a a b\n"), complex::ParseError);
    EXPECT_THROW(complex::parse_complex_string("x a\n"), complex::ParseError);
    EXPECT_THROW(complex::parse_complex_string("v a 1\nv b 2\nv c 3\nt a b c\nt c b a\n"), complex::ParseError);
}

TEST(TypedComplex, Validate) {
    EXPECT_TRUE(complex::validate(cb3()).ok());
    EXPECT_TRUE(complex::validate(fixtures::single_simplex()).ok());
    const auto bad_type = complex::parse_complex_string("v a 1\nv b 1\nv c 3\nt a b c\n");
    EXPECT_FALSE(complex::validate(bad_type).ok());
    const auto loose_edge = complex::parse_complex_string("v a 1\nv b 2\nv c 3\nv d 1\nt a b c\ne c d\n");
    const auto r = complex::validate(loose_edge);
    ASSERT_FALSE(r.ok());
    EXPECT_NE(r.problems.front().find("purity"), std::string::npos);
    EXPECT_FALSE(complex::validate(fixtures::hollow_triangle()).ok());
}

TEST(TypedComplex, LinksOfCoxeterComplex) {
    const auto k = cb3();
    const std::size_t want[4] = {0, 8, 4, 6};
    for (int v = 0; v < static_cast<int>(k.vertex_count()); ++v) {
        const auto L = complex::link(k, v);
        EXPECT_EQ(L.vertices.size(), want[k.type(v)]);
        EXPECT_TRUE(L.connected());
        EXPECT_EQ(complex::girth(L.graph), static_cast<int>(want[k.type(v)]));
        // oracle: direct incidence scan
        std::set<int> nb;
        for (const auto& t : k.triangles())
            for (int x : t)
                if (x == v)
                    for (int y : t)
                        if (y != v) nb.insert(y);
        EXPECT_EQ(std::vector<int>(nb.begin(), nb.end()), L.vertices);
    }
    const auto s = fixtures::single_simplex();
    const auto L = complex::link(s, 0);
    EXPECT_EQ(L.vertices.size(), 2u);
    EXPECT_EQ(L.graph.adj[0].size(), 1u);
}

TEST(TypedComplex, Girth) {
    EXPECT_EQ(complex::girth(cycle_graph(8)), 8);
    Graph tree;
    tree.adj.assign(4, {});
    tree.add_edge(0, 1), tree.add_edge(1, 2), tree.add_edge(1, 3);
    EXPECT_FALSE(complex::girth(tree).has_value());
    Graph k22;
    k22.adj.assign(4, {});
    for (int a : {0, 1})
        for (int b : {2, 3}) k22.add_edge(a, b);
    EXPECT_EQ(complex::girth(k22), 4);
}

TEST(TypedComplex, CompleteBipartite) {
    const auto k = cb3();
    for (int v = 0; v < static_cast<int>(k.vertex_count()); ++v) {
        if (k.type(v) != 2) continue;
        const auto r = complex::check_complete_bipartite(k, complex::link(k, v));
        EXPECT_TRUE(r.complete);
        EXPECT_EQ(r.side1, 2u);
        EXPECT_EQ(r.side3, 2u);
        EXPECT_TRUE(r.has_four_cycle());
    }
    // K_{2,2} minus an edge: a path a1 b1 a2 b2 around a type-2 centre
    const auto p = complex::parse_complex_string(
        "v v 2\nv a1 1\nv a2 1\nv b1 3\nv b2 3\nt v a1 b1\nt v b1 a2\nt v a2 b2\n");
    const auto r = complex::check_complete_bipartite(p, complex::link(p, p.index_of("v")));
    EXPECT_FALSE(r.complete);
    ASSERT_EQ(r.missing.size(), 1u);
    EXPECT_EQ(p.id(r.missing[0].first), "a1");
    EXPECT_EQ(p.id(r.missing[0].second), "b2");
    const auto s = fixtures::single_simplex();
    const auto e = complex::check_complete_bipartite(s, complex::link(s, s.index_of("b")));
    EXPECT_TRUE(e.complete);
    EXPECT_FALSE(e.has_four_cycle());
}

TEST(TypedComplex, Flag) {
    EXPECT_TRUE(complex::is_flag(cb3()));
    EXPECT_TRUE(complex::is_flag(fixtures::single_simplex()));
    EXPECT_FALSE(complex::is_flag(fixtures::hollow_triangle()));
}

TEST(TypedComplex, EmbeddedCycles) {
    const auto k = cb3();
    const auto sq = complex::find_cycles(k, {3, 1, 3, 1});
    EXPECT_FALSE(sq.cycles.empty());
    EXPECT_FALSE(sq.truncated);
    std::set<std::vector<int>> seen;
    for (const auto& c : sq.cycles) {
        EXPECT_EQ(c.vertices.size(), 4u);
        EXPECT_EQ(std::set<int>(c.vertices.begin(), c.vertices.end()).size(), 4u);
        auto key = c.vertices;
        std::sort(key.begin(), key.end());
        EXPECT_TRUE(seen.insert(key).second) << "cycle reported twice";
        EXPECT_NEAR(complex::path_metric_length(k, c), 4 * sphere::beta, 1e-12);
    }
    // every type-2 vertex's link is one such square, and those are all of them
    EXPECT_EQ(sq.cycles.size(), 12u);
    EXPECT_TRUE(complex::find_cycles(fixtures::single_simplex(), {3, 1, 3, 1}).cycles.empty());
    EXPECT_THROW(complex::find_cycles(k, {3, 3, 1, 1}), std::invalid_argument);
    const auto ten = complex::find_cycles(k, {3, 2, 3, 2, 3, 2, 3, 2, 3, 2});
    EXPECT_EQ(ten.cycles.size(), 0u);
    complex::CycleSearchOptions lim;
    lim.limit = 3;
    const auto few = complex::find_cycles(k, {3, 1, 3, 1}, lim);
    EXPECT_EQ(few.cycles.size(), 3u);
    EXPECT_TRUE(few.truncated);
}

TEST(TypedComplex, PathMetricLength) {
    const auto k = cb3();
    EXPECT_EQ(complex::path_metric_length(k, EdgePath{{}, false}), 0.0);
    const int a = k.index_of("T1:e"), b = k.index_of("T2:e"), c = k.index_of("T3:e");
    EXPECT_NEAR(complex::path_metric_length(k, EdgePath{{a, b, c}, true}), sphere::alpha + sphere::beta + sphere::delta,
                1e-15);
    EXPECT_NEAR(10 * sphere::alpha, 6.155, 1e-3);
    EXPECT_LT(10 * sphere::alpha, 2 * sphere::pi);
}

TEST(TypedComplex, SameTypeEdgesNeverInS2Links) {
    const auto k = cb3();
    for (int v = 0; v < static_cast<int>(k.vertex_count()); ++v) {
        if (k.type(v) != 2) continue;
        EXPECT_TRUE(complex::check_complete_bipartite(k, complex::link(k, v)).same_side.empty());
    }
}
