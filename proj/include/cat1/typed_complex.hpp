#pragma once

// B3-typed simplicial 2-complexes: storage, text format, links and cycle search.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cat1/sphere_geom.hpp"

namespace cat1::complex {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct Vertex {
    std::string id;
    int type = 0;
};

using Triangle = std::array<int, 3>;

// Closed paths list each vertex once; the closing edge is implicit.
struct EdgePath {
    std::vector<int> vertices;
    bool closed = false;
    friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

class TypedComplex {
public:
    int add_vertex(const std::string& id, int type) {
        if (index_.count(id)) throw std::invalid_argument("duplicate vertex id '" + id + "'");
        if (type < 1) throw std::invalid_argument("vertex type must be positive");
        index_.emplace(id, static_cast<int>(vertices_.size()));
        vertices_.push_back({id, type});
        adj_.emplace_back();
        tris_at_.emplace_back();
        return static_cast<int>(vertices_.size()) - 1;
    }

    // Returns false when the triangle was already present.
    bool add_triangle(int a, int b, int c) {
        check_index(a), check_index(b), check_index(c);
        if (a == b || b == c || a == c) throw std::invalid_argument("degenerate triangle");
        Triangle t{a, b, c};
        std::sort(t.begin(), t.end());
        if (!tri_set_.insert(tri_key(t)).second) return false;
        const int ti = static_cast<int>(triangles_.size());
        triangles_.push_back(t);
        for (int v : t) tris_at_[v].push_back(ti);
        link_edge(t[0], t[1]), link_edge(t[0], t[2]), link_edge(t[1], t[2]);
        return true;
    }

    // Standalone edge; it is still an error for validation if it lies in no triangle.
    void add_edge(int a, int b) {
        check_index(a), check_index(b);
        if (a == b) throw std::invalid_argument("degenerate edge");
        link_edge(a, b);
        explicit_edges_.insert(edge_key(a, b));
    }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t triangle_count() const { return triangles_.size(); }
    const Vertex& vertex(int v) const { return vertices_.at(v); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }
    int type(int v) const { return vertices_[v].type; }
    const std::string& id(int v) const { return vertices_[v].id; }

    std::optional<int> find(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    int index_of(const std::string& id) const {
        auto f = find(id);
        if (!f) throw std::out_of_range("unknown vertex id '" + id + "'");
        return *f;
    }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<int>& triangles_at(int v) const { return tris_at_[v]; }

    bool has_edge(int a, int b) const { return edge_set_.count(edge_key(a, b)) > 0; }
    bool has_triangle(int a, int b, int c) const {
        Triangle t{a, b, c};
        std::sort(t.begin(), t.end());
        return tri_set_.count(tri_key(t)) > 0;
    }

    // Every edge once, as (smaller index, larger index), in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < static_cast<int>(adj_.size()); ++a)
            for (int b : adj_[a])
                if (a < b) out.emplace_back(a, b);
        return out;
    }

    bool is_explicit_edge(int a, int b) const { return explicit_edges_.count(edge_key(a, b)) > 0; }

    // Number of triangles containing the edge ab.
    int edge_multiplicity(int a, int b) const {
        int n = 0;
        for (int t : tris_at_[a]) {
            const auto& tr = triangles_[t];
            if (tr[0] == b || tr[1] == b || tr[2] == b) ++n;
        }
        return n;
    }

private:
    static std::uint64_t edge_key(int a, int b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    }
    static std::uint64_t tri_key(const Triangle& t) {
        return (static_cast<std::uint64_t>(t[0]) << 42) | (static_cast<std::uint64_t>(t[1]) << 21) |
               static_cast<std::uint64_t>(t[2]);
    }
    void check_index(int v) const {
        if (v < 0 || v >= static_cast<int>(vertices_.size()))
            throw std::out_of_range("vertex index out of range");
        if (vertices_.size() >= (1u << 21)) throw std::length_error("too many vertices");
    }
    void link_edge(int a, int b) {
        if (!edge_set_.insert(edge_key(a, b)).second) return;
        adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
        adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
    }

    std::vector<Vertex> vertices_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> tris_at_;
    std::vector<Triangle> triangles_;
    std::unordered_set<std::uint64_t> tri_set_;
    std::unordered_set<std::uint64_t> edge_set_;
    std::unordered_set<std::uint64_t> explicit_edges_;
};

// ---------------------------------------------------------------- text format

inline int parse_type_token(const std::string& tok) {
    std::string s = tok;
    if (s.size() > 1 && (s[0] == 's' || s[0] == 'S')) s = s.substr(1);
    if (s.size() != 1 || s[0] < '1' || s[0] > '3')
        throw std::invalid_argument("vertex type must be one of 1, 2, 3, s1, s2, s3 (got '" + tok + "')");
    return s[0] - '0';
}

// Lines: "v <id> <type>", "e <id> <id>", "t <id> <id> <id>"; '#' starts a comment.
// Records may appear in any order.
inline TypedComplex parse_complex(std::istream& in) {
    struct Pending {
        int line;
        std::vector<std::string> ids;
    };
    std::vector<std::pair<int, Vertex>> verts;
    std::vector<Pending> edges, tris;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const std::string& kind = tok[0];
        if (kind == "v") {
            if (tok.size() != 3) throw ParseError(lineno, "expected 'v <id> <type>'");
            try {
                verts.push_back({lineno, {tok[1], parse_type_token(tok[2])}});
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, e.what());
            }
        } else if (kind == "e") {
            if (tok.size() != 3) throw ParseError(lineno, "expected 'e <id> <id>'");
            edges.push_back({lineno, {tok[1], tok[2]}});
        } else if (kind == "t") {
            if (tok.size() != 4) throw ParseError(lineno, "expected 't <id> <id> <id>'");
            tris.push_back({lineno, {tok[1], tok[2], tok[3]}});
        } else {
            throw ParseError(lineno, "unknown record '" + kind + "'");
        }
    }
    TypedComplex k;
    for (const auto& [line, v] : verts) {
        if (k.find(v.id)) throw ParseError(line, "duplicate vertex id '" + v.id + "'");
        k.add_vertex(v.id, v.type);
    }
    auto resolve = [&](const Pending& p) {
        std::vector<int> out;
        for (const auto& id : p.ids) {
            auto f = k.find(id);
            if (!f) throw ParseError(p.line, "unknown vertex id '" + id + "'");
            if (std::find(out.begin(), out.end(), *f) != out.end())
                throw ParseError(p.line, "repeated vertex '" + id + "'");
            out.push_back(*f);
        }
        return out;
    };
    for (const auto& p : tris) {
        auto ix = resolve(p);
        if (!k.add_triangle(ix[0], ix[1], ix[2])) throw ParseError(p.line, "duplicate triangle");
    }
    for (const auto& p : edges) {
        auto ix = resolve(p);
        k.add_edge(ix[0], ix[1]);
    }
    return k;
}

inline TypedComplex parse_complex_string(const std::string& text) {
    std::istringstream in(text);
    return parse_complex(in);
}

inline void write_complex(std::ostream& out, const TypedComplex& k) {
    out << "# typed complex: " << k.vertex_count() << " vertices, " << k.triangle_count()
        << " triangles\n";
    for (const auto& v : k.vertices()) out << "v " << v.id << " s" << v.type << "\n";
    for (auto [a, b] : k.edges())
        if (k.is_explicit_edge(a, b) && k.edge_multiplicity(a, b) == 0)
            out << "e " << k.id(a) << " " << k.id(b) << "\n";
    for (const auto& t : k.triangles())
        out << "t " << k.id(t[0]) << " " << k.id(t[1]) << " " << k.id(t[2]) << "\n";
}

inline std::string to_string(const TypedComplex& k) {
    std::ostringstream s;
    write_complex(s, k);
    return s.str();
}

// ---------------------------------------------------------------- validation

struct ValidationResult {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

inline ValidationResult validate(const TypedComplex& k) {
    ValidationResult r;
    for (int v = 0; v < static_cast<int>(k.vertex_count()); ++v) {
        if (k.type(v) > 3) r.problems.push_back("vertex " + k.id(v) + " has a type outside 1..3");
        if (k.triangles_at(v).empty()) r.problems.push_back("purity: vertex " + k.id(v) + " lies in no triangle");
    }
    for (const auto& t : k.triangles())
        if (k.type(t[0]) == k.type(t[1]) || k.type(t[0]) == k.type(t[2]) || k.type(t[1]) == k.type(t[2]))
            r.problems.push_back("typing: triangle " + k.id(t[0]) + " " + k.id(t[1]) + " " + k.id(t[2]) +
                                 " repeats a vertex type");
    for (auto [a, b] : k.edges()) {
        if (k.type(a) == k.type(b))
            r.problems.push_back("typing: edge " + k.id(a) + " " + k.id(b) + " joins two vertices of one type");
        if (k.edge_multiplicity(a, b) == 0)
            r.problems.push_back("purity: edge " + k.id(a) + " " + k.id(b) + " lies in no triangle");
    }
    return r;
}

// ---------------------------------------------------------------- graphs and links

struct Graph {
    std::vector<std::vector<int>> adj;
    std::size_t size() const { return adj.size(); }
    void add_edge(int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
};

// A shortest cycle as a vertex list, or nothing for a forest.
inline std::optional<std::vector<int>> shortest_cycle(const Graph& g) {
    const int n = static_cast<int>(g.size());
    int best = -1;
    std::vector<int> best_cycle;
    std::vector<int> dist(n), par(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        par[s] = -1;
        std::queue<int> q;
        q.push(s);
        int found_u = -1, found_w = -1, found_len = -1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            const int cap = found_len > 0 ? found_len : best;
            if (cap >= 0 && 2 * dist[u] + 1 >= cap) break;
            for (int w : g.adj[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    par[w] = u;
                    q.push(w);
                } else if (w != par[u] && u != par[w]) {
                    const int len = dist[u] + dist[w] + 1;
                    if (found_len < 0 || len < found_len) found_u = u, found_w = w, found_len = len;
                }
            }
        }
        if (found_len > 0 && (best < 0 || found_len < best)) {
            std::vector<int> a, b;
            for (int x = found_u; x != -1; x = par[x]) a.push_back(x);
            for (int x = found_w; x != -1; x = par[x]) b.push_back(x);
            // Paths share only the root when the cycle is globally shortest; trim otherwise.
            while (a.size() > 1 && b.size() > 1 && a[a.size() - 2] == b[b.size() - 2]) a.pop_back(), b.pop_back();
            std::vector<int> cyc(a.rbegin(), a.rend());
            for (std::size_t i = 0; i + 1 < b.size(); ++i) cyc.push_back(b[i]);
            if (static_cast<int>(cyc.size()) == found_len) {
                best = found_len;
                best_cycle = std::move(cyc);
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best_cycle;
}

// Girth; nothing means infinite.
inline std::optional<int> girth(const Graph& g) {
    auto c = shortest_cycle(g);
    if (!c) return std::nullopt;
    return static_cast<int>(c->size());
}

struct LinkGraph {
    int center = -1;
    std::vector<int> vertices;  // complex indices, sorted
    Graph graph;                // on local indices into `vertices`

    int local(int complex_vertex) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), complex_vertex);
        if (it == vertices.end() || *it != complex_vertex) return -1;
        return static_cast<int>(it - vertices.begin());
    }
    bool connected() const {
        if (vertices.empty()) return false;
        std::vector<char> seen(vertices.size(), 0);
        std::vector<int> st{0};
        seen[0] = 1;
        std::size_t cnt = 1;
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            for (int w : graph.adj[u])
                if (!seen[w]) seen[w] = 1, ++cnt, st.push_back(w);
        }
        return cnt == vertices.size();
    }
};

inline LinkGraph link(const TypedComplex& k, int v) {
    LinkGraph L;
    L.center = v;
    L.vertices = k.neighbors(v);
    L.graph.adj.assign(L.vertices.size(), {});
    for (int t : k.triangles_at(v)) {
        std::array<int, 2> o{};
        int j = 0;
        for (int x : k.triangles()[t])
            if (x != v) o[j++] = x;
        L.graph.add_edge(L.local(o[0]), L.local(o[1]));
    }
    return L;
}

struct BipartiteCheck {
    bool complete = false;
    std::size_t side1 = 0, side3 = 0;
    std::vector<std::pair<int, int>> missing;     // (type-1 vertex, type-3 vertex), complex indices
    std::vector<std::pair<int, int>> same_side;   // link edges inside one side
    bool has_four_cycle() const { return complete && side1 >= 2 && side3 >= 2; }
};

// Completeness of the link of a type-2 vertex with respect to the type partition {1}, {3}.
inline BipartiteCheck check_complete_bipartite(const TypedComplex& k, const LinkGraph& L) {
    BipartiteCheck r;
    std::vector<int> s1, s3;
    for (int x : L.vertices) {
        if (k.type(x) == 1) s1.push_back(x);
        else if (k.type(x) == 3) s3.push_back(x);
        else throw std::invalid_argument("typing corruption: link vertex " + k.id(x) + " has the center's type");
    }
    r.side1 = s1.size(), r.side3 = s3.size();
    for (std::size_t u = 0; u < L.vertices.size(); ++u)
        for (int w : L.graph.adj[u])
            if (static_cast<int>(u) < w && k.type(L.vertices[u]) == k.type(L.vertices[w]))
                r.same_side.emplace_back(L.vertices[u], L.vertices[w]);
    for (int a : s1)
        for (int b : s3) {
            const int la = L.local(a), lb = L.local(b);
            const auto& nb = L.graph.adj[la];
            if (std::find(nb.begin(), nb.end(), lb) == nb.end()) r.missing.emplace_back(a, b);
        }
    r.complete = r.missing.empty() && r.same_side.empty();
    return r;
}

// First empty triangle, i.e. three pairwise adjacent vertices spanning no 2-simplex.
inline std::optional<Triangle> find_empty_triangle(const TypedComplex& k) {
    for (int a = 0; a < static_cast<int>(k.vertex_count()); ++a)
        for (int b : k.neighbors(a)) {
            if (b <= a) continue;
            for (int c : k.neighbors(b)) {
                if (c <= b || !k.has_edge(a, c)) continue;
                if (!k.has_triangle(a, b, c)) return Triangle{a, b, c};
            }
        }
    return std::nullopt;
}

inline bool is_flag(const TypedComplex& k) { return !find_empty_triangle(k).has_value(); }

// ---------------------------------------------------------------- cycles

struct CycleSearchOptions {
    std::size_t limit = 10000;
    bool induced = false;
    // Optional vertex mask; when nonempty, only vertices with allowed[v] != 0 are used.
    std::vector<char> allowed;
};

struct CycleSearchResult {
    std::vector<EdgePath> cycles;
    bool truncated = false;
};

// All embedded closed edge paths whose cyclic type sequence matches `pattern`
// up to rotation and reflection, each reported once.
inline CycleSearchResult find_cycles(const TypedComplex& k, const std::vector<int>& pattern,
                                     const CycleSearchOptions& opt = {}) {
    const int L = static_cast<int>(pattern.size());
    if (L < 3) throw std::invalid_argument("pattern must have length at least 3");
    for (int i = 0; i < L; ++i)
        if (pattern[i] == pattern[(i + 1) % L])
            throw std::invalid_argument("pattern repeats a type on consecutive positions");

    // Dihedral symmetries g of the pattern: pattern[g(i)] == pattern[i]; g(i) = (r + e*i) mod L.
    std::vector<std::pair<int, int>> sym;
    for (int e : {1, -1})
        for (int r = 0; r < L; ++r) {
            bool ok = true;
            for (int i = 0; i < L && ok; ++i) ok = pattern[((r + e * i) % L + L) % L] == pattern[i];
            if (ok) sym.emplace_back(r, e);
        }
    std::vector<char> orbit0(L, 0);
    for (auto [r, e] : sym) orbit0[r] = 1;

    const int n = static_cast<int>(k.vertex_count());
    auto allowed = [&](int v) { return opt.allowed.empty() || opt.allowed[v]; };

    CycleSearchResult res;
    std::vector<int> seq(L), dist(n, -1), touched;
    std::vector<char> used(n, 0);
    const int radius = L / 2;

    std::function<void(int)> extend = [&](int pos) {
        if (res.truncated) return;
        if (pos == L) {
            if (!k.has_edge(seq[L - 1], seq[0])) return;
            // Keep only the lexicographically least member of the symmetry orbit.
            for (auto [r, e] : sym) {
                for (int i = 0; i < L; ++i) {
                    const int a = seq[((r + e * i) % L + L) % L], b = seq[i];
                    if (a < b) return;
                    if (a > b) break;
                }
            }
            if (res.cycles.size() >= opt.limit) {
                res.truncated = true;
                return;
            }
            res.cycles.push_back({seq, true});
            return;
        }
        const int prev = seq[pos - 1];
        for (int w : k.neighbors(prev)) {
            if (k.type(w) != pattern[pos] || used[w] || !allowed(w)) continue;
            if (orbit0[pos] && w < seq[0]) continue;
            if (dist[w] < 0 || dist[w] > L - pos) continue;
            if (opt.induced) {
                bool chord = false;
                for (int i = 0; i < pos - 1 && !chord; ++i) {
                    if (i == 0 && pos == L - 1) continue;
                    chord = k.has_edge(seq[i], w);
                }
                if (chord) continue;
            }
            used[w] = 1;
            seq[pos] = w;
            extend(pos + 1);
            used[w] = 0;
            if (res.truncated) return;
        }
    };

    for (int s = 0; s < n && !res.truncated; ++s) {
        if (k.type(s) != pattern[0] || !allowed(s)) continue;
        // Distances from s inside the allowed subgraph, up to half the pattern length.
        for (int t : touched) dist[t] = -1;
        touched.clear();
        std::queue<int> q;
        dist[s] = 0;
        touched.push_back(s);
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (dist[u] == radius) continue;
            for (int w : k.neighbors(u))
                if (dist[w] < 0 && allowed(w)) dist[w] = dist[u] + 1, touched.push_back(w), q.push(w);
        }
        seq[0] = s;
        used[s] = 1;
        extend(1);
        used[s] = 0;
    }
    return res;
}

inline double path_metric_length(const TypedComplex& k, const EdgePath& p) {
    const auto& v = p.vertices;
    double len = 0.0;
    const std::size_t m = p.closed ? v.size() : (v.empty() ? 0 : v.size() - 1);
    for (std::size_t i = 0; i < m; ++i) {
        const int a = v[i], b = v[(i + 1) % v.size()];
        if (!k.has_edge(a, b)) throw std::invalid_argument("path uses a non-edge " + k.id(a) + " " + k.id(b));
        len += sphere::edge_length_of_type(sphere::edge_type_between(k.type(a), k.type(b)));
    }
    return len;
}

inline std::string describe(const TypedComplex& k, const EdgePath& p) {
    std::string s;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (i) s += " ";
        s += k.id(p.vertices[i]);
    }
    if (p.closed && !p.vertices.empty()) s += " (closed)";
    return s;
}

}  // namespace cat1::complex
