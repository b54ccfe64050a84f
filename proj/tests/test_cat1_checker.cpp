#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cat1/cat1_checker.hpp"
#include "cat1/coxeter.hpp"
#include "cat1/fixtures.hpp"
#include "cat1/typed_complex.hpp"

using namespace cat1;
using checker::Status;
using complex::EdgePath;
using complex::TypedComplex;

namespace {

TypedComplex cb3() { return coxeter::to_typed_complex(coxeter::build_coxeter_complex(coxeter::CoxeterDiagram::type_b(3))); }

TypedComplex load(const std::string& name) {
    std::ifstream in(std::string(CAT1_FIXTURES) + "/" + name);
    return complex::parse_complex(in);
}

std::vector<Status> statuses(const checker::CheckReport& r) {
    std::vector<Status> s;
    for (const auto& c : r.conditions) s.push_back(c.status);
    return s;
}

}  // namespace

TEST(Checker, TablesAgainstBruteForce) {
    const auto t1 = checker::enumerate_short_triples();
    // oracle: scan a box with the floating sum and the exact boundary cases
    std::vector<sphere::ShortTriple> scan;
    for (int a = 0; a < 10; ++a)
        for (int b = 0; b < 10; ++b)
            for (int d = 0; d < 10; ++d) {
                if (a + b + d < 2) continue;
                const double s = a * sphere::alpha + b * sphere::beta + d * sphere::delta;
                if (s < sphere::pi - 1e-9) scan.push_back({a, b, d});
            }
    EXPECT_EQ(t1, scan);
    EXPECT_EQ(t1.size(), 23u);
    EXPECT_TRUE(std::is_sorted(t1.begin(), t1.end()));
    auto has = [](const auto& v, sphere::ShortTriple t) { return std::find(v.begin(), v.end(), t) != v.end(); };
    EXPECT_TRUE(has(t1, {5, 0, 0}));
    EXPECT_TRUE(has(t1, {0, 3, 0}));
    EXPECT_TRUE(has(t1, {3, 1, 0}));
    EXPECT_FALSE(has(t1, {0, 0, 4}));
    EXPECT_FALSE(has(t1, {2, 2, 0}));
    const auto t2 = checker::reduce_triples(t1);
    EXPECT_EQ(t2.size(), 15u);
    EXPECT_FALSE(has(t2, {1, 0, 2}));
    EXPECT_TRUE(has(t2, {3, 0, 0}));
    for (const auto& t : t2) EXPECT_FALSE(t.n_beta == 0 && t.n_alpha > 0 && t.n_delta > 0);
}

TEST(Checker, CoxeterComplexPasses) {
    const auto r = checker::check_cat1_criteria(cb3());
    ASSERT_EQ(r.conditions.size(), 6u);
    for (const auto& c : r.conditions) {
        EXPECT_EQ(c.status, Status::Pass) << c.name;
        EXPECT_TRUE(c.witnesses.empty());
    }
    EXPECT_EQ(r.condition(5).checked, 92u);
    EXPECT_EQ(r.condition(6).checked, 0u);
}

TEST(Checker, SingleSimplex) {
    const auto r = checker::check_cat1_criteria(fixtures::single_simplex());
    EXPECT_EQ(statuses(r), (std::vector<Status>{Status::Pass, Status::Pass, Status::Fail, Status::Pass,
                                                 Status::Pass, Status::Pass}));
    EXPECT_EQ(r.condition(3).witnesses.front().kind, "no_four_cycle");
    EXPECT_EQ(r.verdict(), Status::Fail);
}

TEST(Checker, TwoSimplicesFailCondition3) {
    const auto r = checker::check_cat1_criteria(fixtures::two_simplices());
    EXPECT_EQ(r.condition(3).status, Status::Fail);
}

TEST(Checker, InvalidInputRejected) {
    EXPECT_THROW(checker::check_cat1_criteria(fixtures::hollow_triangle()), checker::InvalidComplex);
}

TEST(Checker, FixturesOnDiskMatchBuilders) {
    auto same = [](const TypedComplex& a, const TypedComplex& b) { return complex::to_string(a) == complex::to_string(b); };
    EXPECT_TRUE(same(load("bad_girth.cplx"), fixtures::short_s1_link()));
    EXPECT_TRUE(same(load("bad_bipartite.cplx"), fixtures::long_s2_link()));
    EXPECT_TRUE(same(load("bad_filling.cplx"), fixtures::punctured_coxeter_b3()));
    EXPECT_TRUE(same(load("one_simplex.cplx"), fixtures::single_simplex()));
    EXPECT_TRUE(same(load("cb3.cplx"), cb3()));
}

TEST(Checker, NegativeFixturesIsolateOneCondition) {
    const std::vector<std::pair<std::string, int>> cases{
        {"bad_girth.cplx", 2}, {"bad_bipartite.cplx", 3}, {"bad_filling.cplx", 5}};
    for (const auto& [file, bad] : cases) {
        const auto r = checker::check_cat1_criteria(load(file));
        for (const auto& c : r.conditions) EXPECT_EQ(c.status, c.id == bad ? Status::Fail : Status::Pass) << file << " " << c.id;
        EXPECT_FALSE(r.condition(bad).witnesses.empty());
    }
}

TEST(Checker, InducedModeOnCoxeterComplex) {
    checker::CheckOptions o;
    o.induced = true;
    const auto r = checker::check_cat1_criteria(cb3(), o);
    EXPECT_EQ(r.verdict(), Status::Pass);
}

TEST(Checker, Deterministic) {
    auto render = [](const checker::CheckReport& r) {
        std::ostringstream s;
        for (const auto& c : r.conditions) {
            s << c.id << checker::status_name(c.status) << c.checked;
            for (const auto& w : c.witnesses) {
                s << w.kind;
                for (const auto& v : w.vertices) s << " " << v;
            }
        }
        return s.str();
    };
    const auto k = load("bad_filling.cplx");
    EXPECT_EQ(render(checker::check_cat1_criteria(k)), render(checker::check_cat1_criteria(k)));
}

TEST(Checker, NormalizeEdgePath) {
    const auto k = cb3();
    // hexagon around a type-3 vertex of C(B3): alternating hat-s1 and hat-s2 neighbours
    const int c = k.index_of("T3:e");
    const auto L = complex::link(k, c);
    std::vector<int> ring{L.vertices[0]};
    for (int prev = -1, cur = 0; ring.size() < L.vertices.size();) {
        const int next = L.graph.adj[cur][0] != prev ? L.graph.adj[cur][0] : L.graph.adj[cur][1];
        prev = cur, cur = next;
        ring.push_back(L.vertices[cur]);
    }
    const EdgePath hex{ring, true};
    // its hat-s2 vertices see two hat-s1 neighbours, so nothing changes
    EXPECT_EQ(checker::normalize_edge_path(k, hex), hex);
    // c - y2 - y3 - y2' around a hat-s1 vertex: both hat-s2 corners are cut
    const int c1 = k.index_of("T1:e");
    const auto L1 = complex::link(k, c1);
    int y3 = -1;
    for (int x : L1.vertices)
        if (k.type(x) == 3) y3 = x;
    std::vector<int> y2;
    for (int x : L1.vertices)
        if (k.type(x) == 2 && k.has_edge(x, y3)) y2.push_back(x);
    ASSERT_EQ(y2.size(), 2u);
    const EdgePath quad{{c1, y2[0], y3, y2[1]}, true};
    const auto n = checker::normalize_edge_path(k, quad);
    EXPECT_EQ(n.vertices, (std::vector<int>{c1, y3}));
    const double before = complex::path_metric_length(k, quad), after = complex::path_metric_length(k, n);
    EXPECT_NEAR(before, 2 * (sphere::alpha + sphere::delta), 1e-12);
    EXPECT_NEAR(after, 2 * sphere::beta, 1e-12);
    EXPECT_LT(after, before);
    EXPECT_EQ(checker::normalize_edge_path(k, n), n);
    EXPECT_LT(sphere::beta, sphere::alpha + sphere::delta);
}

TEST(Checker, BypassMove) {
    const auto k = cb3();
    // a hat-s1, hat-s2, hat-s1 segment inside the star of a hat-s2 vertex
    const int m = k.index_of("T2:e");
    std::vector<int> ones;
    for (int x : k.neighbors(m))
        if (k.type(x) == 1) ones.push_back(x);
    ASSERT_EQ(ones.size(), 2u);
    const EdgePath p{{ones[0], m, ones[1]}, false};
    const auto q = checker::bypass_move(k, p, 1);
    EXPECT_EQ(k.type(q.vertices[1]), 3);
    EXPECT_NEAR(complex::path_metric_length(k, p), 2 * sphere::delta, 1e-12);
    EXPECT_NEAR(complex::path_metric_length(k, q), 2 * sphere::beta, 1e-12);
    const auto back = checker::bypass_move(k, q, 1);
    EXPECT_EQ(k.type(back.vertices[1]), 2);
    // the two middle vertices together with the ends form a filled square
    EXPECT_TRUE(k.has_edge(back.vertices[1], q.vertices[1]));
    EXPECT_THROW(checker::bypass_move(k, p, 0), std::invalid_argument);
}
