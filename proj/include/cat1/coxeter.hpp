#pragma once

// Finite Coxeter groups with labels in {2, 3, 4}: exact reflection representation,
// enumerated multiplication tables, weak-order lattice, and Coxeter complexes.

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <map>
#include <memory>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cat1/sphere_geom.hpp"
#include "cat1/typed_complex.hpp"

namespace cat1::coxeter {

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// a + b*sqrt(2) with integer coefficients.
struct ZSqrt2 {
    std::int64_t a = 0, b = 0;
    friend ZSqrt2 operator+(ZSqrt2 x, ZSqrt2 y) { return {x.a + y.a, x.b + y.b}; }
    friend ZSqrt2 operator-(ZSqrt2 x, ZSqrt2 y) { return {x.a - y.a, x.b - y.b}; }
    friend ZSqrt2 operator*(ZSqrt2 x, ZSqrt2 y) { return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a}; }
    friend bool operator==(ZSqrt2, ZSqrt2) = default;
    double value() const { return static_cast<double>(a) + static_cast<double>(b) * std::sqrt(2.0); }
};

struct CoxeterDiagram {
    int rank = 0;
    std::vector<int> m;  // rank*rank, m[i*rank+j]; 1 on the diagonal
    std::string name;
    std::string letter = "s";  // generator prefix used in words

    int label(int i, int j) const { return m[i * rank + j]; }

    static CoxeterDiagram from_matrix(int rank, std::vector<int> m, std::string name, std::string letter = "s") {
        if (rank < 1 || static_cast<int>(m.size()) != rank * rank)
            throw std::invalid_argument("Coxeter matrix has the wrong size");
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                const int v = m[i * rank + j];
                if (i == j && v != 1) throw std::invalid_argument("Coxeter matrix needs 1 on the diagonal");
                if (i != j && (v != m[j * rank + i] || v < 2))
                    throw std::invalid_argument("Coxeter matrix must be symmetric with labels >= 2");
                if (i != j && v > 4)
                    throw std::invalid_argument("only labels 2, 3 and 4 are supported (got " + std::to_string(v) + ")");
            }
        return {rank, std::move(m), std::move(name), std::move(letter)};
    }

    static CoxeterDiagram type_a(int n, std::string letter = "s") {
        std::vector<int> m(n * n, 2);
        for (int i = 0; i < n; ++i) m[i * n + i] = 1;
        for (int i = 0; i + 1 < n; ++i) m[i * n + i + 1] = m[(i + 1) * n + i] = 3;
        return from_matrix(n, m, "A" + std::to_string(n), letter);
    }

    // The label 4 sits on the last edge: s_{n-1} s_n.
    static CoxeterDiagram type_b(int n, std::string letter = "s") {
        if (n < 2) throw std::invalid_argument("B_n needs n >= 2");
        auto d = type_a(n, letter);
        d.m[(n - 2) * n + n - 1] = d.m[(n - 1) * n + n - 2] = 4;
        d.name = "B" + std::to_string(n);
        return d;
    }

    // "A<n>" or "B<n>".
    static CoxeterDiagram parse(const std::string& s) {
        if (s.size() < 2 || (s[0] != 'A' && s[0] != 'B'))
            throw std::invalid_argument("unsupported Coxeter type '" + s + "' (expected A<n> or B<n>)");
        int n = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("bad rank in '" + s + "'");
            n = n * 10 + (s[i] - '0');
            if (n > 12) throw std::invalid_argument("rank too large in '" + s + "'");
        }
        if (n < 1) throw std::invalid_argument("rank must be positive");
        return s[0] == 'A' ? type_a(n) : type_b(n);
    }

    std::string generator_name(int i) const { return letter + std::to_string(i + 1); }
};

using Matrix = std::vector<ZSqrt2>;  // row-major rank x rank

// Twice the bilinear form B(e_s, e_t) = -cos(pi/m).
inline ZSqrt2 two_b(int m) {
    switch (m) {
        case 1: return {2, 0};
        case 2: return {0, 0};
        case 3: return {-1, 0};
        case 4: return {0, -1};
        default: throw std::invalid_argument("unsupported label");
    }
}

// Matrix of the reflection s: e_t -> e_t - 2B(e_s, e_t) e_s, acting on column vectors.
inline Matrix generator_matrix(const CoxeterDiagram& d, int s) {
    const int n = d.rank;
    Matrix g(n * n);
    for (int i = 0; i < n; ++i) g[i * n + i] = {1, 0};
    for (int t = 0; t < n; ++t) g[s * n + t] = g[s * n + t] - two_b(d.label(s, t));
    return g;
}

inline Matrix multiply(const Matrix& x, const Matrix& y, int n) {
    Matrix z(n * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const ZSqrt2 a = x[i * n + k];
            if (a.a == 0 && a.b == 0) continue;
            for (int j = 0; j < n; ++j) z[i * n + j] = z[i * n + j] + a * y[k * n + j];
        }
    return z;
}

struct MatrixHash {
    std::size_t operator()(const Matrix& m) const {
        std::size_t h = 1469598103934665603ull;
        for (auto e : m) {
            h ^= static_cast<std::size_t>(e.a * 1315423911ll + e.b);
            h *= 1099511628211ull;
        }
        return h;
    }
};

using ElementIndex = std::uint32_t;

// Bitmask of generators.
struct ParabolicHandle {
    std::uint32_t mask = 0;
    bool contains(int s) const { return (mask >> s) & 1u; }
    static ParabolicHandle of(std::initializer_list<int> gens) {
        ParabolicHandle p;
        for (int s : gens) p.mask |= 1u << s;
        return p;
    }
    // All generators except s_i (0-based i): the stabilizer of the type-(i+1) vertex.
    static ParabolicHandle maximal(int rank, int i) {
        return {((1u << rank) - 1u) & ~(1u << i)};
    }
    friend bool operator==(ParabolicHandle, ParabolicHandle) = default;
};

class CoxeterGroup {
public:
    CoxeterGroup(CoxeterDiagram d, std::size_t cap) : diagram_(std::move(d)) { enumerate(cap); }

    const CoxeterDiagram& diagram() const { return diagram_; }
    int rank() const { return diagram_.rank; }
    std::size_t size() const { return length_.size(); }
    ElementIndex identity() const { return 0; }
    ElementIndex longest() const { return longest_; }

    ElementIndex times_gen(ElementIndex w, int s) const { return right_[w * rank() + s]; }
    ElementIndex gen_times(int s, ElementIndex w) const { return left_[w * rank() + s]; }
    ElementIndex product(ElementIndex x, ElementIndex y) const {
        for (int s : word_[y]) x = times_gen(x, s);
        return x;
    }
    ElementIndex inverse(ElementIndex w) const { return inverse_[w]; }
    int length(ElementIndex w) const { return length_[w]; }
    std::uint32_t left_descent(ElementIndex w) const { return ldes_[w]; }
    std::uint32_t right_descent(ElementIndex w) const { return rdes_[w]; }
    const std::vector<int>& word(ElementIndex w) const { return word_[w]; }
    const Matrix& matrix(ElementIndex w) const { return matrices_[w]; }
    ElementIndex generator(int s) const { return times_gen(0, s); }

    std::optional<ElementIndex> index_of(const Matrix& m) const {
        auto it = index_.find(m);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    ElementIndex from_word(const std::vector<int>& w) const {
        ElementIndex x = 0;
        for (int s : w) x = times_gen(x, s);
        return x;
    }

    std::string word_string(ElementIndex w) const {
        if (word_[w].empty()) return "e";
        std::string s;
        for (int g : word_[w]) s += diagram_.generator_name(g);
        return s;
    }

    // Weak (prefix) order: x <= y iff l(x) + l(x^-1 y) = l(y).
    bool prefix_leq(ElementIndex x, ElementIndex y) const {
        return length(x) + length(product(inverse(x), y)) == length(y);
    }

    ElementIndex meet(ElementIndex x, ElementIndex y) const {
        ensure_lattice();
        return meet_[x * size() + y];
    }
    ElementIndex join(ElementIndex x, ElementIndex y) const {
        ensure_lattice();
        return join_[x * size() + y];
    }

    // Minimal-length representative of the coset w W_P.
    ElementIndex min_coset_rep(ElementIndex w, ParabolicHandle p) const {
        for (;;) {
            const std::uint32_t d = rdes_[w] & p.mask;
            if (!d) return w;
            w = times_gen(w, __builtin_ctz(d));
        }
    }

    // Longest element of W_P.
    ElementIndex parabolic_longest(ParabolicHandle p) const {
        ElementIndex w = 0;
        for (;;) {
            const std::uint32_t up = p.mask & ~rdes_[w];
            if (!up) return w;
            w = times_gen(w, __builtin_ctz(up));
        }
    }

    std::uint32_t support(ElementIndex w) const {
        std::uint32_t s = 0;
        for (int g : word_[w]) s |= 1u << g;
        return s;
    }

private:
    void enumerate(std::size_t cap) {
        const int n = rank();
        std::vector<Matrix> gens;
        for (int s = 0; s < n; ++s) gens.push_back(generator_matrix(diagram_, s));
        Matrix id(n * n);
        for (int i = 0; i < n; ++i) id[i * n + i] = {1, 0};
        matrices_.push_back(id);
        index_.emplace(id, 0);
        length_.push_back(0);
        word_.push_back({});
        for (std::size_t head = 0; head < matrices_.size(); ++head) {
            for (int s = 0; s < n; ++s) {
                Matrix m = multiply(matrices_[head], gens[s], n);
                if (index_.count(m)) continue;
                if (matrices_.size() >= cap)
                    throw CapExceeded("group " + diagram_.name + " exceeds the enumeration cap of " +
                                      std::to_string(cap) + " elements");
                index_.emplace(m, static_cast<ElementIndex>(matrices_.size()));
                matrices_.push_back(std::move(m));
                length_.push_back(length_[head] + 1);
                auto w = word_[head];
                w.push_back(s);
                word_.push_back(std::move(w));
            }
        }
        const std::size_t N = matrices_.size();
        right_.resize(N * n);
        left_.resize(N * n);
        for (std::size_t w = 0; w < N; ++w)
            for (int s = 0; s < n; ++s) {
                right_[w * n + s] = index_.at(multiply(matrices_[w], gens[s], n));
                left_[w * n + s] = index_.at(multiply(gens[s], matrices_[w], n));
            }
        inverse_.resize(N);
        ldes_.assign(N, 0);
        rdes_.assign(N, 0);
        longest_ = 0;
        for (std::size_t w = 0; w < N; ++w) {
            ElementIndex x = 0;
            for (auto it = word_[w].rbegin(); it != word_[w].rend(); ++it) x = times_gen(x, *it);
            inverse_[w] = x;
            for (int s = 0; s < n; ++s) {
                if (length_[right_[w * n + s]] < length_[w]) rdes_[w] |= 1u << s;
                if (length_[left_[w * n + s]] < length_[w]) ldes_[w] |= 1u << s;
            }
            if (length_[w] > length_[longest_]) longest_ = static_cast<ElementIndex>(w);
        }
    }

    void ensure_lattice() const {
        if (!meet_.empty()) return;
        const std::size_t N = size();
        std::vector<ElementIndex> meet(N * N), join(N * N);
        for (ElementIndex x = 0; x < N; ++x)
            for (ElementIndex y = x; y < N; ++y) {
                // Greedy extension of a common prefix reaches the meet; mx = m^-1 x.
                ElementIndex m = 0, mx = x, my = y;
                for (std::uint32_t c; (c = ldes_[mx] & ldes_[my]) != 0;) {
                    const int s = __builtin_ctz(c);
                    m = times_gen(m, s);
                    mx = gen_times(s, mx);
                    my = gen_times(s, my);
                }
                meet[x * N + y] = meet[y * N + x] = m;
            }
        const ElementIndex w0 = longest_;
        for (ElementIndex x = 0; x < N; ++x)
            for (ElementIndex y = 0; y < N; ++y) {
                // x -> x w0 reverses the weak order.
                const ElementIndex a = product(x, w0), b = product(y, w0);
                join[x * N + y] = product(meet[a * N + b], w0);
            }
        meet_ = std::move(meet);
        join_ = std::move(join);
    }

    CoxeterDiagram diagram_;
    std::vector<Matrix> matrices_;
    std::unordered_map<Matrix, ElementIndex, MatrixHash> index_;
    std::vector<int> length_;
    std::vector<std::vector<int>> word_;
    std::vector<ElementIndex> right_, left_, inverse_;
    std::vector<std::uint32_t> ldes_, rdes_;
    ElementIndex longest_ = 0;
    mutable std::vector<ElementIndex> meet_, join_;
};

inline std::shared_ptr<const CoxeterGroup> enumerate_group(const CoxeterDiagram& d, std::size_t cap = 10000) {
    return std::make_shared<const CoxeterGroup>(d, cap);
}

// Handle to an element of an enumerated group.
struct CoxeterElement {
    const CoxeterGroup* group = nullptr;
    ElementIndex index = 0;

    const Matrix& matrix() const { return group->matrix(index); }
    int length() const { return group->length(index); }
    std::uint32_t left_descent() const { return group->left_descent(index); }
    std::uint32_t right_descent() const { return group->right_descent(index); }
    CoxeterElement operator*(const CoxeterElement& o) const { return {group, group->product(index, o.index)}; }
    CoxeterElement inverse() const { return {group, group->inverse(index)}; }
    friend bool operator==(const CoxeterElement& a, const CoxeterElement& b) {
        return a.group == b.group && a.index == b.index;
    }
};

inline CoxeterElement min_coset_rep(const CoxeterElement& g, ParabolicHandle p) {
    return {g.group, g.group->min_coset_rep(g.index, p)};
}

// ---------------------------------------------------------------- Coxeter complex

struct CoxeterComplex {
    std::shared_ptr<const CoxeterGroup> group;
    struct CVertex {
        int type = 0;  // 1-based
        ElementIndex rep = 0;  // minimal coset representative
        std::string id;
    };
    std::vector<CVertex> vertices;
    std::vector<std::vector<int>> chambers;  // chambers[w][type-1] = vertex index; indexed by element
    std::vector<sphere::Vec3> coordinates;   // rank 3 with label set of B3 only

    std::string vertex_id(int type, ElementIndex rep) const {
        return "T" + std::to_string(type) + ":" + group->word_string(rep);
    }
};

// Vertex of type i is the coset w W_{hat s_i}; chambers are group elements.
inline CoxeterComplex build_coxeter_complex(const CoxeterDiagram& d, std::size_t cap = 10000) {
    CoxeterComplex C;
    C.group = enumerate_group(d, cap);
    const auto& W = *C.group;
    const int n = W.rank();
    std::vector<std::unordered_map<ElementIndex, int>> by_rep(n);
    C.chambers.assign(W.size(), std::vector<int>(n));
    for (ElementIndex w = 0; w < W.size(); ++w)
        for (int i = 0; i < n; ++i) {
            const ElementIndex r = W.min_coset_rep(w, ParabolicHandle::maximal(n, i));
            auto [it, fresh] = by_rep[i].emplace(r, static_cast<int>(C.vertices.size()));
            if (fresh) C.vertices.push_back({i + 1, r, C.vertex_id(i + 1, r)});
            C.chambers[w][i] = it->second;
        }
    const bool b3 = n == 3 && d.label(0, 1) == 3 && d.label(1, 2) == 4 && d.label(0, 2) == 2;
    if (b3) {
        const auto base = sphere::fundamental_simplex();
        // s_k fixes the two fundamental vertices of types other than k.
        std::array<sphere::Vec3, 3> normals;
        for (int k = 0; k < 3; ++k) {
            const int a = (k + 1) % 3, b = (k + 2) % 3;
            normals[k] = sphere::cross(base[a], base[b]);
        }
        C.coordinates.resize(C.vertices.size());
        for (std::size_t v = 0; v < C.vertices.size(); ++v) {
            sphere::Vec3 p = base[C.vertices[v].type - 1];
            const auto& word = W.word(C.vertices[v].rep);
            for (auto it = word.rbegin(); it != word.rend(); ++it) p = sphere::reflect(p, normals[*it]);
            C.coordinates[v] = p;
        }
    }
    return C;
}

inline complex::TypedComplex to_typed_complex(const CoxeterComplex& C) {
    if (C.group->rank() != 3) throw std::invalid_argument("only rank-3 Coxeter complexes are 2-dimensional");
    complex::TypedComplex k;
    for (const auto& v : C.vertices) k.add_vertex(v.id, v.type);
    for (const auto& ch : C.chambers) k.add_triangle(ch[0], ch[1], ch[2]);
    return k;
}

}  // namespace cat1::coxeter
