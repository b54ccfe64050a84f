#pragma once

// The reproduction suite: eleven checks over the geometry, the groups, the Artin
// complexes and the checker. Shared by the acceptance test and `cat1 verify-paper`.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cat1/artin_complex.hpp"
#include "cat1/cat1_checker.hpp"
#include "cat1/coxeter.hpp"
#include "cat1/development.hpp"
#include "cat1/fixtures.hpp"
#include "cat1/garside.hpp"
#include "cat1/sphere_geom.hpp"
#include "cat1/typed_complex.hpp"

namespace cat1::verify {

struct Config {
    std::uint64_t seed = 0;
    int radius_b3 = 3;       // ball radius for the link and cycle conditions
    int extra_b3 = 2;        // enlargement used for fillings and joins
    int radius_a5 = 2;       // A5 ball for sigma and the image lemma
    int radius_image = 2;    // B3 ball whose psi-images are tested
    int search_radius = 3;   // bounded coset searches
    int join_sets = 100;
    int samples = 1000;
};

struct Criterion {
    int id = 0;
    std::string name;
    bool pass = true;
    bool inconclusive = false;  // nothing failed, but something could not be decided
    double seconds = 0.0;
    std::vector<std::pair<std::string, std::string>> facts;
    std::vector<std::string> failures;

    void fact(const std::string& k, const std::string& v) { facts.emplace_back(k, v); }
    void fact(const std::string& k, std::size_t v) { facts.emplace_back(k, std::to_string(v)); }
    void fact_real(const std::string& k, double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        facts.emplace_back(k, buf);
    }
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
    void undecided(const std::string& what) {
        inconclusive = true;
        failures.push_back("inconclusive: " + what);
    }
    const char* status() const { return !pass ? "fail" : inconclusive ? "inconclusive" : "pass"; }
    void within(double got, double want, double tol, const std::string& what) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: %.15g vs %.15g (tol %g)", what.c_str(), got, want, tol);
        require(std::abs(got - want) <= tol, buf);
    }
};

namespace detail {

template <class F>
Criterion timed(int id, std::string name, double budget_seconds, F&& body) {
    Criterion c;
    c.id = id;
    c.name = std::move(name);
    const auto t0 = std::chrono::steady_clock::now();
    body(c);
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_seconds > 0)
        c.require(c.seconds < budget_seconds,
                  "runtime " + std::to_string(c.seconds) + " s over budget " + std::to_string(budget_seconds) + " s");
    return c;
}

inline std::string fixed3(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

using sphere::ShortTriple;

// The short triples and their reduced list, row by row.
inline std::vector<ShortTriple> expected_short_triples() {
    std::vector<ShortTriple> t;
    for (int i : {2, 3, 4, 5}) t.push_back({i, 0, 0});
    for (int i : {2, 3}) t.push_back({0, i, 0});
    for (int i : {2, 3}) t.push_back({0, 0, i});
    for (int i : {1, 2}) t.push_back({0, 1, i});
    t.push_back({0, 2, 1});
    for (int i : {1, 2, 3}) t.push_back({1, 0, i});
    for (int i : {0, 1}) t.push_back({1, 1, i});
    t.push_back({1, 2, 0});
    for (int i : {1, 2}) t.push_back({2, 0, i});
    for (int i : {0, 1}) t.push_back({2, 1, i});
    t.push_back({3, 0, 1});
    t.push_back({3, 1, 0});
    std::sort(t.begin(), t.end());
    return t;
}

inline std::vector<ShortTriple> expected_reduced_triples() {
    std::vector<ShortTriple> t;
    for (int i : {3, 4, 5}) t.push_back({i, 0, 0});
    for (int i : {2, 3}) t.push_back({0, i, 0});
    t.push_back({0, 0, 3});
    for (int i : {1, 2}) t.push_back({0, 1, i});
    t.push_back({0, 2, 1});
    for (int i : {0, 1}) t.push_back({1, 1, i});
    t.push_back({1, 2, 0});
    for (int i : {0, 1}) t.push_back({2, 1, i});
    t.push_back({3, 1, 0});
    std::sort(t.begin(), t.end());
    return t;
}

// Classes of positive words of each length under the braid relations, by union-find.
struct RewritingClosure {
    std::vector<std::vector<int>> words;
    std::vector<int> parent;

    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
};

inline RewritingClosure rewriting_closure(const coxeter::CoxeterDiagram& d, int length) {
    RewritingClosure rc;
    const int n = d.rank;
    std::size_t total = 1;
    for (int i = 0; i < length; ++i) total *= static_cast<std::size_t>(n);
    rc.words.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<int> w(length);
        std::size_t c = code;
        for (int i = length - 1; i >= 0; --i) w[i] = static_cast<int>(c % n), c /= n;
        rc.words.push_back(std::move(w));
    }
    rc.parent.resize(total);
    std::iota(rc.parent.begin(), rc.parent.end(), 0);
    auto encode = [&](const std::vector<int>& w) {
        std::size_t c = 0;
        for (int x : w) c = c * n + x;
        return static_cast<int>(c);
    };
    for (std::size_t idx = 0; idx < total; ++idx) {
        const auto& w = rc.words[idx];
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
                if (s == t) continue;
                const int m = d.label(s, t);
                for (int p = 0; p + m <= length; ++p) {
                    bool match = true;
                    for (int k = 0; k < m && match; ++k) match = w[p + k] == (k % 2 ? t : s);
                    if (!match) continue;
                    auto v = w;
                    for (int k = 0; k < m; ++k) v[p + k] = k % 2 ? s : t;
                    const int a = rc.find(static_cast<int>(idx)), b = rc.find(encode(v));
                    if (a != b) rc.parent[a] = b;
                }
            }
    }
    return rc;
}

inline std::vector<garside::Word> random_words(const garside::ArtinGroup& G, std::mt19937_64& rng, int count,
                                               int max_len) {
    std::vector<garside::Word> out;
    std::uniform_int_distribution<int> len(0, max_len), gen(0, G.rank() - 1), sign(0, 1);
    for (int i = 0; i < count; ++i) {
        garside::Word w;
        const int L = len(rng);
        for (int j = 0; j < L; ++j) w.push_back({gen(rng), sign(rng) ? 1 : -1});
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------- 1, 2, 3

inline Criterion constants() {
    return detail::timed(1, "simplex constants", 1e-3, [](Criterion& c) {
        using namespace sphere;
        c.require(detail::fixed3(alpha) == "0.615", "alpha prints as " + detail::fixed3(alpha));
        c.require(detail::fixed3(beta) == "0.955", "beta prints as " + detail::fixed3(beta));
        c.require(detail::fixed3(delta) == "0.785", "delta prints as " + detail::fixed3(delta));
        c.within(alpha + beta, pi / 2, 1e-12, "alpha + beta");
        c.within(std::acos(1.0 / std::sqrt(2.0)), pi / 4, 1e-12, "delta");
        const double A = vertex_angle_of_type(1), B = vertex_angle_of_type(2), C = vertex_angle_of_type(3);
        const double a = side_from_angles(A, B, C), b = side_from_angles(B, C, A), d = side_from_angles(C, A, B);
        c.within(a, alpha, 1e-12, "side opposite hat-s1");
        c.within(b, beta, 1e-12, "side opposite hat-s2");
        c.within(d, delta, 1e-12, "side opposite hat-s3");
        c.within(angle_from_sides(a, b, d), A, 1e-12, "angle at hat-s1 from sides");
        c.within(angle_from_sides(b, d, a), B, 1e-12, "angle at hat-s2 from sides");
        c.within(angle_from_sides(d, a, b), C, 1e-12, "angle at hat-s3 from sides");
        c.fact("alpha", detail::fixed3(alpha));
        c.fact("beta", detail::fixed3(beta));
        c.fact("delta", detail::fixed3(delta));
    });
}

inline Criterion tables() {
    return detail::timed(2, "short triple tables", 1e-2, [](Criterion& c) {
        const auto t1 = checker::enumerate_short_triples();
        const auto t2 = checker::reduce_triples(t1);
        c.fact("short_triples", t1.size());
        c.fact("reduced_triples", t2.size());
        c.require(t1.size() == 23, "short triple list has " + std::to_string(t1.size()) + " rows");
        c.require(t2.size() == 15, "reduced list has " + std::to_string(t2.size()) + " rows");
        c.require(t1 == detail::expected_short_triples(), "short triples differ from the expected list");
        c.require(t2 == detail::expected_reduced_triples(), "reduced triples differ from the expected list");
    });
}

inline Criterion coxeter_complex_b3() {
    return detail::timed(3, "Coxeter complex of B3", 1.0, [](Criterion& c) {
        const auto C = coxeter::build_coxeter_complex(coxeter::CoxeterDiagram::type_b(3));
        const auto K = coxeter::to_typed_complex(C);
        std::map<int, int> by_type;
        for (const auto& v : K.vertices()) ++by_type[v.type];
        const std::size_t E = K.edges().size(), F = K.triangle_count();
        const long chi = static_cast<long>(K.vertex_count()) - static_cast<long>(E) + static_cast<long>(F);
        c.fact("group_order", C.group->size());
        c.fact("vertices", K.vertex_count());
        c.fact("edges", E);
        c.fact("triangles", F);
        c.require(C.group->size() == 48, "|W| = " + std::to_string(C.group->size()));
        c.require(by_type[1] == 6 && by_type[2] == 12 && by_type[3] == 8, "vertex counts by type");
        c.require(E == 72 && F == 48 && chi == 2, "E, F or Euler characteristic");
        const int cycle_len[4] = {0, 8, 4, 6};
        for (int v = 0; v < static_cast<int>(K.vertex_count()); ++v) {
            const auto L = complex::link(K, v);
            bool cycle = L.connected() && L.vertices.size() == static_cast<std::size_t>(cycle_len[K.type(v)]);
            for (const auto& nb : L.graph.adj) cycle = cycle && nb.size() == 2;
            c.require(cycle, "link of " + K.id(v) + " is not a cycle of length " + std::to_string(cycle_len[K.type(v)]));
        }
        double worst = 0.0, area = 0.0;
        for (const auto& [a, b] : K.edges()) {
            const double len = sphere::geodesic_distance(C.coordinates[a], C.coordinates[b]);
            const double want = sphere::edge_length_of_type(sphere::edge_type_between(K.type(a), K.type(b)));
            worst = std::max(worst, std::abs(len - want));
        }
        for (const auto& t : K.triangles()) {
            const auto& p = C.coordinates;
            area += sphere::angle_at(p[t[0]], p[t[1]], p[t[2]]) + sphere::angle_at(p[t[1]], p[t[2]], p[t[0]]) +
                    sphere::angle_at(p[t[2]], p[t[0]], p[t[1]]) - sphere::pi;
        }
        c.fact_real("max_edge_error", worst);
        c.require(worst <= 1e-9, "edge lengths off by " + std::to_string(worst));
        c.within(48 * sphere::simplex_area(), 4 * sphere::pi, 1e-9, "48 simplex areas");
        c.within(area, 4 * sphere::pi, 1e-9, "sum of realized triangle areas");
    });
}

// ---------------------------------------------------------------- 4, 5

inline Criterion garside_oracle() {
    return detail::timed(4, "normal forms against rewriting", 120.0, [](Criterion& c) {
        const garside::ArtinGroup B(garside::diagram_b3());
        std::size_t words = 0, discrepancies = 0;
        for (int L = 0; L <= 6; ++L) {
            auto rc = detail::rewriting_closure(B.diagram(), L);
            std::unordered_map<int, garside::Positive> nf_of_class;
            std::unordered_map<garside::Positive, int, garside::PositiveHash> class_of_nf;
            for (std::size_t i = 0; i < rc.words.size(); ++i) {
                ++words;
                const auto nf = B.positive_from_generators(rc.words[i]);
                const int cls = rc.find(static_cast<int>(i));
                auto [it, fresh] = nf_of_class.emplace(cls, nf);
                if (!fresh && !(it->second == nf)) ++discrepancies;
                auto [jt, fresh2] = class_of_nf.emplace(nf, cls);
                if (!fresh2 && jt->second != cls) ++discrepancies;
                // support is a class invariant
                if (B.support(nf) != B.support(B.positive_from_generators(rc.words[rc.find(static_cast<int>(i))])))
                    ++discrepancies;
            }
        }
        c.fact("words", words);
        c.fact("discrepancies", discrepancies);
        c.require(discrepancies == 0, std::to_string(discrepancies) + " normal form discrepancies");

        // Parabolic membership by fraction support against explicit parabolic balls.
        std::size_t checked = 0, mismatches = 0;
        std::vector<garside::Positive> pos{garside::Positive{}};
        std::unordered_set<garside::Positive, garside::PositiveHash> seen{garside::Positive{}};
        for (std::size_t h = 0; h < pos.size(); ++h) {
            if (B.length(pos[h]) >= 2) continue;
            for (int s = 0; s < 3; ++s) {
                auto p = pos[h];
                B.right_multiply(p, B.generator_simple(s));
                if (seen.insert(p).second) pos.push_back(p);
            }
        }
        for (int drop = 0; drop < 3; ++drop) {
            const auto P = coxeter::ParabolicHandle::maximal(3, drop);
            const auto ball = artin::parabolic_ball(B, P, 4);
            const std::unordered_set<garside::GroupElement, garside::GroupElementHash> inside(ball.begin(), ball.end());
            for (const auto& a : pos)
                for (const auto& b : pos) {
                    const auto g = B.reduce(a, b);
                    ++checked;
                    if (B.in_parabolic(g, P) != (inside.count(g) > 0)) ++mismatches;
                }
        }
        c.fact("membership_checked", checked);
        c.fact("membership_mismatches", mismatches);
        c.require(mismatches == 0, std::to_string(mismatches) + " parabolic membership mismatches");
    });
}

inline Criterion phi_homomorphism() {
    return detail::timed(5, "phi is a homomorphism and separates a ball", 300.0, [](Criterion& c) {
        const garside::ArtinGroup B(garside::diagram_b3()), A(garside::diagram_a5());
        const auto phi = garside::make_phi(B, A);
        const std::vector<std::pair<std::string, std::string>> rel{
            {"s1 s2 s1", "s2 s1 s2"}, {"s2 s3 s2 s3", "s3 s2 s3 s2"}, {"s1 s3", "s3 s1"}};
        for (const auto& [l, r] : rel) {
            const bool ok = phi.apply(B.parse(l)) == phi.apply(B.parse(r));
            c.require(ok, "relation " + l + " = " + r + " not preserved");
        }
        const auto rep = garside::phi_injectivity_sample(B, A, 3);
        c.fact("sample", rep.sample_size);
        c.fact("collisions", rep.collisions);
        c.require(rep.collisions == 0, std::to_string(rep.collisions) + " collisions");
    });
}

// ---------------------------------------------------------------- 6, 7

inline Criterion sigma_involution(const Config& cfg) {
    return detail::timed(6, "sigma is an order-reversing involution", 0, [&](Criterion& c) {
        const garside::ArtinGroup B(garside::diagram_b3()), A(garside::diagram_a5());
        const int shift = artin::ArtinBall::default_shift(cfg.radius_a5);
        const artin::B3ToA5 m(B, A, shift);
        const auto& sigma = m.sigma_map();
        std::mt19937_64 rng(cfg.seed);
        std::size_t bad_elems = 0;
        for (const auto& w : detail::random_words(A, rng, cfg.samples, 8)) {
            const auto g = A.from_word(w);
            if (!(sigma.apply(sigma.apply(g)) == g)) ++bad_elems;
        }
        c.fact("elements", static_cast<std::size_t>(cfg.samples));
        c.require(bad_elems == 0, std::to_string(bad_elems) + " elements not fixed by sigma twice");

        const artin::ArtinBall ball(A, cfg.radius_a5, shift);
        std::size_t bad_vertices = 0;
        for (std::size_t v = 0; v < ball.vertex_count(); ++v) {
            const auto& bv = ball.vertex(static_cast<int>(v));
            const auto cv = m.make(bv.rep, bv.type());
            const auto back = m.sigma(m.sigma(cv));
            if (!(back.key == cv.key) || !(cv.key == bv.key)) ++bad_vertices;
        }
        c.fact("ball_vertices", ball.vertex_count());
        c.require(bad_vertices == 0, std::to_string(bad_vertices) + " vertices not fixed by sigma twice");

        std::set<std::pair<int, int>> pairs;
        std::size_t reversed = 0, violations = 0;
        for (int ch = 0; ch < static_cast<int>(ball.chamber_count()); ++ch)
            for (int i = 1; i <= 5; ++i)
                for (int j = i + 1; j <= 5; ++j) {
                    const int v = ball.chamber_vertex(ch, i), w = ball.chamber_vertex(ch, j);
                    if (!pairs.insert({v, w}).second) continue;
                    const auto x = ball.chamber(ch);
                    const auto sv = m.sigma(m.make(x, i)), sw = m.sigma(m.make(x, j));
                    if (m.leq_witnessed(sw, sv, sigma.apply(x))) ++reversed;
                    else ++violations;
                }
        c.fact("comparable_pairs", pairs.size());
        c.fact("reversed", reversed);
        c.require(violations == 0, std::to_string(violations) + " comparable pairs not reversed");
    });
}

inline Criterion image_lemma(const Config& cfg) {
    return detail::timed(7, "image of psi characterised by v <= sigma(v)", 0, [&](Criterion& c) {
        const garside::ArtinGroup B(garside::diagram_b3()), A(garside::diagram_a5());
        const int shift = 2 * ((3 * cfg.radius_image + cfg.radius_a5 + 10) / 2);
        const artin::B3ToA5 m(B, A, shift);
        const artin::ArtinBall b3(B, cfg.radius_image);
        std::unordered_set<artin::CosetKey, artin::CosetKeyHash> images;
        std::size_t forward = 0, forward_fail = 0;
        for (std::size_t v = 0; v < b3.vertex_count(); ++v) {
            const auto& bv = b3.vertex(static_cast<int>(v));
            ++forward;
            if (!artin::lessiffimage_forward(m, bv.rep, bv.type())) ++forward_fail;
            images.insert(m.psi(bv.rep, bv.type()).key);
        }
        c.fact("forward_checked", forward);
        c.fact("forward_failures", forward_fail);
        c.require(forward_fail == 0, std::to_string(forward_fail) + " images not below their sigma");
        c.require(images.size() == b3.vertex_count(), "psi is not injective on the ball vertices");

        const artin::ArtinBall a5(A, cfg.radius_a5);
        std::size_t consistent = 0, inconclusive = 0, violation = 0, certified = 0;
        for (std::size_t v = 0; v < a5.vertex_count(); ++v) {
            const auto& av = a5.vertex(static_cast<int>(v));
            const auto r = artin::lessiffimage_reverse(m, av.rep, av.type(), images, cfg.search_radius);
            if (r.preimage) ++certified;
            switch (r.verdict) {
                case artin::Verdict::Consistent: ++consistent; break;
                case artin::Verdict::Inconclusive: ++inconclusive; break;
                case artin::Verdict::Violation: ++violation; break;
            }
        }
        c.fact("reverse_checked", a5.vertex_count());
        c.fact("reverse_consistent", consistent);
        c.fact("reverse_inconclusive", inconclusive);
        c.fact("reverse_certified_preimages", certified);
        c.fact("reverse_violations", violation);
        c.require(violation == 0, std::to_string(violation) + " definite counterexamples");
    });
}

// ---------------------------------------------------------------- 8

namespace detail {

inline bool pairwise_upper_bounded(const artin::ArtinBall& B, const std::vector<int>& S) {
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j) {
            bool found = false;
            for (int ch : B.chambers_of(S[i])) {
                for (int t = 1; t <= 3 && !found; ++t) {
                    const int u = B.chamber_vertex(ch, t);
                    found = artin::leq_in_ball(B, S[i], u) && artin::leq_in_ball(B, S[j], u);
                }
                if (found) break;
            }
            if (!found) return false;
        }
    return true;
}

}  // namespace detail

inline Criterion joins(const Config& cfg) {
    return detail::timed(8, "pairwise bounded sets have joins", 0, [&](Criterion& c) {
        const garside::ArtinGroup B(garside::diagram_b3());
        const artin::ArtinBall ball(B, cfg.radius_b3 + cfg.extra_b3);
        std::vector<int> to_ball;
        const auto K = ball.typed_complex(-1, &to_ball);
        std::vector<char> inner(K.vertex_count(), 0);
        for (std::size_t v = 0; v < K.vertex_count(); ++v)
            inner[v] = ball.vertex(to_ball[v]).min_length <= cfg.radius_b3 - 1;

        // Candidate sets: opposite corners of squares, alternate corners of hexagons,
        // and vertex pairs sharing a chamber.
        std::vector<std::vector<int>> pool;
        complex::CycleSearchOptions so;
        so.allowed = inner;
        so.limit = 5000;
        for (const auto& cyc : complex::find_cycles(K, {3, 1, 3, 1}, so).cycles) {
            const auto& v = cyc.vertices;
            pool.push_back({to_ball[v[1]], to_ball[v[3]]});
            pool.push_back({to_ball[v[0]], to_ball[v[2]]});
        }
        for (const auto& cyc : complex::find_cycles(K, {3, 1, 3, 1, 3, 1}, so).cycles) {
            const auto& v = cyc.vertices;
            pool.push_back({to_ball[v[1]], to_ball[v[3]], to_ball[v[5]]});
        }
        for (int ch = 0; ch < static_cast<int>(ball.chamber_count()); ++ch) {
            if (ball.chamber_length(ch) > cfg.radius_b3 - 1) continue;
            pool.push_back({ball.chamber_vertex(ch, 1), ball.chamber_vertex(ch, 3)});
        }
        std::mt19937_64 rng(cfg.seed);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::size_t found = 0, not_found = 0, ambiguous = 0, harvested = 0;
        for (const auto& S : pool) {
            if (harvested >= static_cast<std::size_t>(cfg.join_sets)) break;
            if (!detail::pairwise_upper_bounded(ball, S)) continue;
            ++harvested;
            const auto r = artin::join_in_ball(ball, S);
            switch (r.status) {
                case artin::JoinStatus::Found: ++found; break;
                case artin::JoinStatus::NotFound: ++not_found; break;
                case artin::JoinStatus::Ambiguous: {
                    ++ambiguous;
                    std::string ids;
                    for (int u : r.minimal_upper_bounds) ids += " " + ball.vertex(u).id;
                    c.failures.push_back("incomparable minimal upper bounds:" + ids);
                    break;
                }
            }
        }
        c.fact("pool", pool.size());
        c.fact("sets", harvested);
        c.fact("found", found);
        c.fact("inconclusive", not_found);
        c.fact("ambiguous", ambiguous);
        if (harvested < static_cast<std::size_t>(cfg.join_sets))
            c.undecided("only " + std::to_string(harvested) + " sets harvested");
        c.require(ambiguous == 0, std::to_string(ambiguous) + " sets with two minimal upper bounds");
    });
}

// ---------------------------------------------------------------- 9

inline Criterion ball_conditions(const Config& cfg) {
    return detail::timed(9, "conditions on a ball of D(B3)", 600.0, [&](Criterion& c) {
        const garside::ArtinGroup B(garside::diagram_b3());
        const auto r = artin::check_ball_conditions(B, cfg.radius_b3, cfg.extra_b3, cfg.search_radius);
        c.fact("radius", static_cast<std::size_t>(r.radius));
        c.fact("enlarged_radius", static_cast<std::size_t>(r.radius + r.extra));
        c.fact("chambers", r.chambers);
        c.fact("vertices", r.vertices);
        c.fact("interior", r.interior);
        c.fact("triangle_oracle_calls", r.oracle_calls);
        for (const auto& cond : r.report.conditions) {
            c.fact("condition" + std::to_string(cond.id), std::string(checker::status_name(cond.status)) + " (" +
                                                               std::to_string(cond.checked) + " checked)");
            std::string why = "condition " + std::to_string(cond.id) + " " + checker::status_name(cond.status);
            if (!cond.witnesses.empty()) {
                why += ":";
                for (const auto& v : cond.witnesses.front().vertices) why += " " + v;
            }
            if (cond.status == checker::Status::Inconclusive) c.undecided(why);
            else c.require(cond.status == checker::Status::Pass, why);
        }
        if (r.interior == 0) c.undecided("no interior vertices");
    });
}

// ---------------------------------------------------------------- 10

inline Criterion development() {
    return detail::timed(10, "development and lunes", 0, [](Criterion& c) {
        const auto C = develop::coxeter_complex_b3();
        // Four chambers around the hat-s2 vertex of a D(B3) ball, in link order.
        const garside::ArtinGroup B(garside::diagram_b3());
        const artin::ArtinBall ball(B, 2);
        const auto K = ball.typed_complex();
        const int v = K.index_of(ball.vertex(ball.chamber_vertex(0, 2)).id);
        const auto L = complex::link(K, v);
        std::vector<int> ring;
        {
            int prev = -1, cur = 0;
            for (int step = 0; step < 4; ++step) {
                ring.push_back(L.vertices[cur]);
                int next = -1;
                for (int w : L.graph.adj[cur])
                    if (w != prev) {
                        next = w;
                        break;
                    }
                prev = cur, cur = next;
            }
        }
        // A 4-cycle through vertex 0 of the link: take the first two neighbours of 0 and a
        // second common neighbour of theirs.
        std::vector<int> quad;
        {
            const auto& adj = L.graph.adj;
            const int a = adj[0][0], b = adj[0][1];
            int d = -1;
            for (int x : adj[a])
                if (x != 0 && std::find(adj[b].begin(), adj[b].end(), x) != adj[b].end()) d = x;
            c.require(d >= 0, "no 4-cycle in the hat-s2 link");
            if (d < 0) return;
            quad = {L.vertices[0], L.vertices[a], L.vertices[d], L.vertices[b]};
        }
        auto tri_index = [&](int x, int y) {
            for (int t : K.triangles_at(v)) {
                const auto& tr = K.triangles()[t];
                if (std::find(tr.begin(), tr.end(), x) != tr.end() && std::find(tr.begin(), tr.end(), y) != tr.end())
                    return t;
            }
            return -1;
        };
        std::vector<int> gallery;
        for (int i = 0; i < 4; ++i) gallery.push_back(tri_index(quad[i], quad[(i + 1) % 4]));
        gallery.push_back(gallery.front());
        auto d = develop::develop_gallery(K, gallery, C);
        c.require(d.chambers.front() == d.chambers.back(), "closed gallery does not return to its chamber");
        std::vector<int> four(gallery.begin(), gallery.end() - 1);
        auto d4 = develop::develop_gallery(K, four, C);
        const double angle = develop::developed_angle(K, four, d4, C, v);
        c.fact_real("angle", angle);
        c.within(angle, 2 * sphere::pi, 1e-9, "developed angle around hat-s2");

        const auto lunes = develop::lune_boundaries(C, 1);
        const auto Kc = coxeter::to_typed_complex(C);
        bool alpha_beta = false, four_delta = false, all_pi = true;
        for (const auto& p : lunes) {
            complex::EdgePath e{p, false};
            const double len = complex::path_metric_length(Kc, e);
            all_pi = all_pi && std::abs(len - sphere::pi) <= 1e-9;
            std::vector<int> types;
            for (int x : p) types.push_back(Kc.type(x));
            if (types == std::vector<int>{1, 3, 2, 3, 1}) alpha_beta = true;
            if (types == std::vector<int>{1, 2, 1, 2, 1}) four_delta = true;
        }
        c.fact("lune_paths", lunes.size());
        c.require(all_pi, "a lune boundary path is not of length pi");
        c.require(alpha_beta, "no path hat-s1 hat-s3 hat-s2 hat-s3 hat-s1 of length 2(alpha+beta)");
        c.require(four_delta, "no path hat-s1 hat-s2 hat-s1 hat-s2 hat-s1 of length 4 delta");
        c.within(2 * (sphere::alpha + sphere::beta), sphere::pi, 1e-9, "2(alpha+beta)");
        c.within(4 * sphere::delta, sphere::pi, 1e-9, "4 delta");
        std::size_t preserved = 0;
        for (int u = 0; u < static_cast<int>(C.vertices.size()); ++u)
            preserved += C.vertices[develop::antipode(C, u)].type == C.vertices[u].type;
        c.fact("antipodes_preserving_type", preserved);
        c.require(preserved == C.vertices.size(), "antipodal map changes some vertex type");
    });
}

// ---------------------------------------------------------------- 11

inline Criterion negative_fixtures() {
    return detail::timed(11, "negative fixtures", 0, [](Criterion& c) {
        auto isolate = [&](const std::string& name, const complex::TypedComplex& k, int bad,
                           const std::function<bool(const checker::Witness&)>& witness_ok) {
            const auto rep = checker::check_cat1_criteria(k);
            for (const auto& cond : rep.conditions) {
                const bool should_fail = cond.id == bad;
                const auto want = should_fail ? checker::Status::Fail : checker::Status::Pass;
                c.require(cond.status == want, name + ": condition " + std::to_string(cond.id) + " is " +
                                                  checker::status_name(cond.status));
                if (should_fail) {
                    bool ok = !cond.witnesses.empty();
                    for (const auto& w : cond.witnesses) ok = ok && witness_ok(w);
                    c.require(ok, name + ": wrong witness");
                }
            }
            c.fact(name, "condition " + std::to_string(bad));
        };

        const auto girth = fixtures::short_s1_link();
        isolate("short_s1_link", girth, 2, [&](const checker::Witness& w) {
            if (w.kind != "short_link_cycle" || w.vertices.size() != 5) return false;
            const int f = girth.index_of(w.vertices[0]);
            if (girth.type(f) != 1) return false;
            for (std::size_t i = 1; i < 5; ++i) {
                const int a = girth.index_of(w.vertices[i]), b = girth.index_of(w.vertices[i % 4 + 1]);
                if (!girth.has_triangle(f, a, b)) return false;
            }
            return true;
        });

        const auto disk = fixtures::long_s2_link();
        isolate("long_s2_link", disk, 3, [&](const checker::Witness& w) {
            if (w.kind != "missing_cross_edge" || w.vertices.size() != 3) return false;
            const int v = disk.index_of(w.vertices[0]), a = disk.index_of(w.vertices[1]), b = disk.index_of(w.vertices[2]);
            return disk.type(v) == 2 && disk.type(a) + disk.type(b) == 4 && disk.type(a) != 2 && disk.has_edge(v, a) &&
                   disk.has_edge(v, b) && !disk.has_triangle(v, a, b);
        });

        std::string removed;
        const auto punct = fixtures::punctured_coxeter_b3(&removed);
        const auto full = coxeter::to_typed_complex(develop::coxeter_complex_b3());
        std::set<std::string> hole;
        for (int u : full.neighbors(full.index_of(removed))) hole.insert(full.id(u));
        bool square_seen = false;
        isolate("punctured_coxeter_b3", punct, 5, [&](const checker::Witness& w) {
            if (w.kind == "unfilled_square") {
                const std::set<std::string> got(w.vertices.begin(), w.vertices.end());
                square_seen = square_seen || got == hole;
                return got == hole;
            }
            // larger unfilled cycles must pass through the hole
            for (const auto& x : w.vertices)
                if (hole.count(x)) return true;
            return false;
        });
        c.require(square_seen, "punctured_coxeter_b3: the square around the hole is not reported");
    });
}

inline std::vector<Criterion> run_all(const Config& cfg = {}) {
    std::vector<Criterion> out;
    out.push_back(constants());
    out.push_back(tables());
    out.push_back(coxeter_complex_b3());
    out.push_back(garside_oracle());
    out.push_back(phi_homomorphism());
    out.push_back(sigma_involution(cfg));
    out.push_back(image_lemma(cfg));
    out.push_back(joins(cfg));
    out.push_back(ball_conditions(cfg));
    out.push_back(development());
    out.push_back(negative_fixtures());
    return out;
}

}  // namespace cat1::verify
