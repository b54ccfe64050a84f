#pragma once

// Combinatorial CAT(1) criterion for B3-typed complexes: the tables of short edge
// triples, the six conditions, and the path rewriting used to reduce the tables.

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cat1/sphere_geom.hpp"
#include "cat1/typed_complex.hpp"

namespace cat1::checker {

using complex::EdgePath;
using complex::TypedComplex;
using sphere::ShortTriple;

// ---------------------------------------------------------------- tables

// Triples with n_alpha + n_beta + n_delta >= 2 and weighted length < pi.
inline std::vector<ShortTriple> enumerate_short_triples(int bound = 8) {
    std::vector<ShortTriple> out;
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; b <= bound; ++b)
            for (int c = 0; c <= bound; ++c) {
                ShortTriple t{a, b, c};
                if (a + b + c >= 2 && sphere::is_short(t)) out.push_back(t);
            }
    return out;
}

// Removes (i,0,j) with i,j > 0, then (2,0,0) and (0,0,2), which cannot close up
// in a complex satisfying the link conditions.
inline std::vector<ShortTriple> reduce_triples(const std::vector<ShortTriple>& in) {
    std::vector<ShortTriple> out;
    for (const auto& t : in) {
        if (t.n_beta == 0 && t.n_alpha > 0 && t.n_delta > 0) continue;
        if (t == ShortTriple{2, 0, 0} || t == ShortTriple{0, 0, 2}) continue;
        out.push_back(t);
    }
    return out;
}

// ---------------------------------------------------------------- reports

enum class Status { Pass, Fail, Inconclusive };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct Witness {
    std::string kind;
    std::vector<std::string> vertices;
    std::string detail;
};

struct ConditionResult {
    int id = 0;
    std::string name;
    Status status = Status::Pass;
    std::size_t checked = 0;
    std::vector<Witness> witnesses;
    std::size_t witness_total = 0;
};

struct CheckReport {
    std::vector<ConditionResult> conditions;
    Status verdict() const {
        bool inc = false;
        for (const auto& c : conditions) {
            if (c.status == Status::Fail) return Status::Fail;
            if (c.status == Status::Inconclusive) inc = true;
        }
        return inc ? Status::Inconclusive : Status::Pass;
    }
    const ConditionResult& condition(int id) const {
        for (const auto& c : conditions)
            if (c.id == id) return c;
        throw std::out_of_range("no such condition");
    }
};

enum class Tri { Yes, No, Unknown };

struct CheckOptions {
    // Fillings of short cycles must be injective and the cycles chordless.
    bool induced = false;
    std::size_t cycle_limit = 10000;
    std::size_t witness_limit = 16;
    // Vertices whose links and cycles are examined; empty means all.
    std::vector<char> interior;
    // The complex is a truncation: failures that could be caused by missing
    // simplices are reported as inconclusive.
    bool truncated = false;
    // Decides whether the triangle (center, a, b) exists when it is absent from the complex.
    std::function<Tri(int center, int a, int b)> triangle_oracle;
};

class InvalidComplex : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> ids(const TypedComplex& k, const std::vector<int>& v) {
    std::vector<std::string> out;
    for (int x : v) out.push_back(k.id(x));
    return out;
}

inline void add_witness(ConditionResult& r, const CheckOptions& o, Witness w) {
    ++r.witness_total;
    if (r.witnesses.size() < o.witness_limit) r.witnesses.push_back(std::move(w));
}

inline bool examined(const CheckOptions& o, int v) { return o.interior.empty() || o.interior[v]; }

inline bool triangle(const TypedComplex& k, int a, int b, int c) { return k.has_triangle(a, b, c); }

// Type-t vertices adjacent to every vertex of `to`.
inline std::vector<int> common_neighbors(const TypedComplex& k, const std::vector<int>& to, int t) {
    std::vector<int> out;
    for (int x : k.neighbors(to[0])) {
        if (k.type(x) != t) continue;
        bool ok = true;
        for (std::size_t i = 1; i < to.size() && ok; ++i) ok = k.has_edge(x, to[i]);
        if (ok) out.push_back(x);
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------- conditions 1-4

inline ConditionResult check_condition1(const TypedComplex& k, const CheckOptions& o = {}) {
    ConditionResult r{1, "links nonempty and connected"};
    for (int v = 0; v < static_cast<int>(k.vertex_count()); ++v) {
        if (!detail::examined(o, v)) continue;
        ++r.checked;
        const auto L = complex::link(k, v);
        if (L.connected()) continue;
        detail::add_witness(r, o, {L.vertices.empty() ? "empty_link" : "disconnected_link", {k.id(v)},
                                   std::to_string(L.vertices.size()) + " link vertices"});
        if (r.status != Status::Fail) r.status = o.truncated ? Status::Inconclusive : Status::Fail;
    }
    return r;
}

inline ConditionResult check_girth_condition(const TypedComplex& k, int type, int bound, int id,
                                             const CheckOptions& o) {
    ConditionResult r{id, "girth of hat-s" + std::to_string(type) + " links >= " + std::to_string(bound)};
    for (int v = 0; v < static_cast<int>(k.vertex_count()); ++v) {
        if (k.type(v) != type || !detail::examined(o, v)) continue;
        ++r.checked;
        const auto L = complex::link(k, v);
        const auto cyc = complex::shortest_cycle(L.graph);
        if (!cyc || static_cast<int>(cyc->size()) >= bound) continue;
        std::vector<int> verts;
        for (int x : *cyc) verts.push_back(L.vertices[x]);
        auto names = detail::ids(k, verts);
        names.insert(names.begin(), k.id(v));
        detail::add_witness(r, o, {"short_link_cycle", names,
                                   "link of " + k.id(v) + " has a cycle of length " + std::to_string(cyc->size())});
        r.status = Status::Fail;
    }
    return r;
}

inline ConditionResult check_condition2(const TypedComplex& k, const CheckOptions& o = {}) {
    return check_girth_condition(k, 1, 8, 2, o);
}
inline ConditionResult check_condition4(const TypedComplex& k, const CheckOptions& o = {}) {
    return check_girth_condition(k, 3, 6, 4, o);
}

inline ConditionResult check_condition3(const TypedComplex& k, const CheckOptions& o = {}) {
    ConditionResult r{3, "hat-s2 links complete bipartite with a 4-cycle"};
    auto worsen = [&](Status s) {
        if (r.status == Status::Fail) return;
        if (s == Status::Fail || r.status == Status::Pass) r.status = s;
    };
    for (int v = 0; v < static_cast<int>(k.vertex_count()); ++v) {
        if (k.type(v) != 2 || !detail::examined(o, v)) continue;
        ++r.checked;
        const auto L = complex::link(k, v);
        const auto bc = complex::check_complete_bipartite(k, L);
        for (auto [a, b] : bc.same_side) {
            detail::add_witness(r, o, {"same_type_link_edge", {k.id(v), k.id(a), k.id(b)}, ""});
            worsen(Status::Fail);
        }
        for (auto [a, b] : bc.missing) {
            Tri t = o.triangle_oracle ? o.triangle_oracle(v, a, b) : Tri::No;
            if (t == Tri::Yes) continue;
            detail::add_witness(r, o, {t == Tri::No ? "missing_cross_edge" : "unresolved_cross_edge",
                                       {k.id(v), k.id(a), k.id(b)}, ""});
            worsen(t == Tri::No ? Status::Fail : Status::Inconclusive);
        }
        if (bc.side1 < 2 || bc.side3 < 2) {
            detail::add_witness(r, o, {"no_four_cycle", {k.id(v)},
                                       "sides " + std::to_string(bc.side1) + " and " + std::to_string(bc.side3)});
            worsen(o.truncated ? Status::Inconclusive : Status::Fail);
        }
    }
    return r;
}

// ---------------------------------------------------------------- short cycles

enum class ShortCycle { Square, Hexagon, Octagon };

// Type patterns of the three short cycles, written in the order used by the fillings.
inline std::vector<int> short_cycle_pattern(ShortCycle c) {
    switch (c) {
        case ShortCycle::Square: return {3, 1, 3, 1};
        case ShortCycle::Hexagon: return {3, 1, 3, 1, 3, 1};
        case ShortCycle::Octagon: return {3, 2, 3, 1, 3, 2, 3, 2};
    }
    return {};
}

inline std::vector<int> ten_cycle_pattern() { return {3, 2, 3, 2, 3, 2, 3, 2, 3, 2}; }

struct Filling {
    std::vector<int> extra;  // interior vertices of the filling disk
};

// Filling of the square x0 y0 x1 y1 by a hat-s2 vertex adjacent to all four.
inline std::optional<Filling> fill_square(const TypedComplex& k, const std::vector<int>& c) {
    for (int z : detail::common_neighbors(k, c, 2)) {
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) ok = k.has_triangle(z, c[i], c[(i + 1) % 4]);
        if (ok) return Filling{{z}};
    }
    return std::nullopt;
}

// Hexagon X0 Y0 X1 Y1 X2 Y2: a hat-s3 center C adjacent to the Y's and, for each X,
// a hat-s2 vertex spanning triangles with X, C and the two neighbours of X.
inline std::optional<Filling> fill_hexagon(const TypedComplex& k, const std::vector<int>& c, bool injective) {
    const std::vector<int> ys{c[1], c[3], c[5]};
    for (int C : detail::common_neighbors(k, ys, 3)) {
        const bool on_cycle = C == c[0] || C == c[2] || C == c[4];
        if (injective && on_cycle) continue;
        std::vector<int> ns;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            const int X = c[2 * i], Yp = c[(2 * i + 5) % 6], Yn = c[2 * i + 1];
            if (X == C) continue;  // degenerate corner: the chord X-Y splits off squares
            std::optional<int> found;
            for (int N : k.neighbors(X)) {
                if (k.type(N) != 2) continue;
                if (!k.has_triangle(N, X, Yp) || !k.has_triangle(N, X, Yn)) continue;
                if (!k.has_triangle(N, C, Yp) || !k.has_triangle(N, C, Yn)) continue;
                if (injective && std::find(ns.begin(), ns.end(), N) != ns.end()) continue;
                found = N;
                break;
            }
            if (!found) ok = false;
            else ns.push_back(*found);
        }
        if (ok) {
            ns.insert(ns.begin(), C);
            return Filling{ns};
        }
    }
    return std::nullopt;
}

// Octagon s31 s21 s32 s1 s33 s22 s34 s23: a hat-s1 vertex c coning off the cycle
// except at s1, where an extra hat-s2 vertex n closes the disk.
inline std::optional<Filling> fill_octagon(const TypedComplex& k, const std::vector<int>& c, bool injective) {
    const int s31 = c[0], s21 = c[1], s32 = c[2], s1 = c[3], s33 = c[4], s22 = c[5], s34 = c[6], s23 = c[7];
    for (int cc : detail::common_neighbors(k, {s31, s21, s32, s33, s22, s34, s23}, 1)) {
        if (injective && cc == s1) continue;
        if (!k.has_triangle(cc, s31, s21) || !k.has_triangle(cc, s21, s32) || !k.has_triangle(cc, s33, s22) ||
            !k.has_triangle(cc, s22, s34) || !k.has_triangle(cc, s34, s23) || !k.has_triangle(cc, s23, s31))
            continue;
        for (int n : detail::common_neighbors(k, {s32, s33, s1, cc}, 2)) {
            if (injective && (n == s21 || n == s22 || n == s23)) continue;
            if (k.has_triangle(n, s32, s1) && k.has_triangle(n, s1, s33) && k.has_triangle(cc, s32, n) &&
                k.has_triangle(cc, n, s33))
                return Filling{{cc, n}};
        }
    }
    return std::nullopt;
}

inline std::optional<Filling> fill_short_cycle(const TypedComplex& k, ShortCycle kind, const std::vector<int>& c,
                                               bool injective) {
    switch (kind) {
        case ShortCycle::Square: return fill_square(k, c);
        case ShortCycle::Hexagon: return fill_hexagon(k, c, injective);
        case ShortCycle::Octagon: return fill_octagon(k, c, injective);
    }
    return std::nullopt;
}

inline const char* short_cycle_name(ShortCycle c) {
    switch (c) {
        case ShortCycle::Square: return "square";
        case ShortCycle::Hexagon: return "hexagon";
        case ShortCycle::Octagon: return "octagon";
    }
    return "?";
}

inline complex::CycleSearchOptions cycle_options(const CheckOptions& o) {
    complex::CycleSearchOptions so;
    so.limit = o.cycle_limit;
    so.induced = o.induced;
    so.allowed = o.interior;
    return so;
}

inline ConditionResult check_condition5(const TypedComplex& k, const CheckOptions& o = {}) {
    ConditionResult r{5, "short cycles bound the standard disks"};
    for (ShortCycle kind : {ShortCycle::Square, ShortCycle::Hexagon, ShortCycle::Octagon}) {
        const auto found = complex::find_cycles(k, short_cycle_pattern(kind), cycle_options(o));
        if (found.truncated && r.status == Status::Pass) {
            r.status = Status::Inconclusive;
            detail::add_witness(r, o, {"search_truncated", {}, short_cycle_name(kind)});
        }
        for (const auto& cyc : found.cycles) {
            ++r.checked;
            if (fill_short_cycle(k, kind, cyc.vertices, o.induced)) continue;
            const double len = complex::path_metric_length(k, cyc);
            detail::add_witness(r, o, {std::string("unfilled_") + short_cycle_name(kind), detail::ids(k, cyc.vertices),
                                       "length " + std::to_string(len)});
            if (o.truncated) {
                if (r.status == Status::Pass) r.status = Status::Inconclusive;
            } else {
                r.status = Status::Fail;
            }
        }
    }
    return r;
}

inline ConditionResult check_condition6(const TypedComplex& k, const CheckOptions& o = {}) {
    ConditionResult r{6, "no embedded 10-cycle alternating hat-s3 and hat-s2"};
    const auto found = complex::find_cycles(k, ten_cycle_pattern(), cycle_options(o));
    r.checked = found.cycles.size();
    for (const auto& cyc : found.cycles) {
        detail::add_witness(r, o, {"ten_cycle", detail::ids(k, cyc.vertices),
                                   "length " + std::to_string(complex::path_metric_length(k, cyc))});
        r.status = Status::Fail;
    }
    if (found.truncated) detail::add_witness(r, o, {"search_truncated", {}, "ten_cycle"});
    return r;
}

inline CheckReport check_cat1_criteria(const TypedComplex& k, const CheckOptions& o = {}) {
    const auto v = complex::validate(k);
    if (!v.ok()) throw InvalidComplex("invalid complex: " + v.problems.front());
    CheckReport rep;
    rep.conditions.push_back(check_condition1(k, o));
    rep.conditions.push_back(check_condition2(k, o));
    rep.conditions.push_back(check_condition3(k, o));
    rep.conditions.push_back(check_condition4(k, o));
    rep.conditions.push_back(check_condition5(k, o));
    rep.conditions.push_back(check_condition6(k, o));
    return rep;
}

// ---------------------------------------------------------------- path rewriting

class ConditionFailure : public std::runtime_error {
public:
    ConditionFailure(int condition, const std::string& what) : std::runtime_error(what), condition_(condition) {}
    int condition() const { return condition_; }

private:
    int condition_;
};

inline int edge_type(const TypedComplex& k, int a, int b) { return sphere::edge_type_between(k.type(a), k.type(b)); }

// Replaces every consecutive pair of an s1-edge and an s3-edge meeting at a hat-s2 vertex
// by the s2-edge across their triangle. The result uses only s2-edges and pairs of
// equal-type edges through hat-s2 vertices.
inline EdgePath normalize_edge_path(const TypedComplex& k, const EdgePath& p) {
    if (!p.closed) throw std::invalid_argument("normalization expects a closed edge path");
    std::vector<int> v = p.vertices;
    for (bool changed = true; changed && v.size() >= 3;) {
        changed = false;
        const std::size_t n = v.size();
        for (std::size_t i = 0; i < n; ++i) {
            const int a = v[(i + n - 1) % n], m = v[i], b = v[(i + 1) % n];
            if (!k.has_edge(a, m) || !k.has_edge(m, b))
                throw std::invalid_argument("not an edge path through " + k.id(m));
            if (k.type(m) != 2 || k.type(a) == k.type(b)) continue;
            if (!k.has_triangle(a, m, b))
                throw ConditionFailure(3, "no triangle across " + k.id(a) + " " + k.id(m) + " " + k.id(b));
            v.erase(v.begin() + static_cast<long>(i));
            changed = true;
            break;
        }
    }
    return {v, true};
}

// At position i the path runs u - m - w with u, w of one type x. The middle vertex is
// replaced by a vertex of the third type spanning triangles with u, m and with w, m.
inline EdgePath bypass_move(const TypedComplex& k, const EdgePath& p, std::size_t i) {
    const auto& v = p.vertices;
    const std::size_t n = v.size();
    if (n < 3 || i >= n || (!p.closed && (i == 0 || i + 1 == n)))
        throw std::invalid_argument("bypass position must be an inner vertex");
    const int u = v[(i + n - 1) % n], m = v[i], w = v[(i + 1) % n];
    if (k.type(u) != k.type(w) || k.type(u) == k.type(m))
        throw std::invalid_argument("bypass needs a segment x - y - x with two endpoint types equal");
    const int third = 6 - k.type(u) - k.type(m);
    for (int c : k.neighbors(m)) {
        if (k.type(c) != third) continue;
        if (k.has_triangle(u, m, c) && k.has_triangle(w, m, c)) {
            EdgePath out = p;
            out.vertices[i] = c;
            return out;
        }
    }
    if (k.type(m) == 2) throw ConditionFailure(3, "no bypass vertex at " + k.id(m));
    throw std::invalid_argument("no bypass vertex at " + k.id(m));
}

}  // namespace cat1::checker
