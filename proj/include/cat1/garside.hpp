#pragma once

// Spherical-type Artin groups through their Garside structure: left-greedy normal
// forms of positive elements with Coxeter group elements as simples, reduced right
// fractions for group elements, gcds, parabolic membership, and the maps phi, sigma.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cat1/coxeter.hpp"

namespace cat1::garside {

using coxeter::CoxeterDiagram;
using coxeter::CoxeterGroup;
using coxeter::ElementIndex;
using coxeter::ParabolicHandle;

using Simple = ElementIndex;

// Left normal form x1 x2 ... xr, no identity factors.
struct Positive {
    std::vector<Simple> f;
    bool empty() const { return f.empty(); }
    friend bool operator==(const Positive&, const Positive&) = default;
};

// num * den^-1 with trivial right gcd; equal elements have equal fractions.
struct GroupElement {
    Positive num, den;
    bool is_identity() const { return num.empty() && den.empty(); }
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& g) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        auto mix = [&](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
        for (auto x : g.num.f) mix(x);
        mix(0xffffffffull);
        for (auto x : g.den.f) mix(x);
        return h;
    }
};

struct PositiveHash {
    std::size_t operator()(const Positive& p) const { return GroupElementHash{}(GroupElement{p, {}}); }
};

// A letter of a word: generator index (0-based) and exponent +1 or -1.
struct Letter {
    int gen = 0;
    int exp = 1;
};
using Word = std::vector<Letter>;

class ArtinGroup {
public:
    explicit ArtinGroup(const CoxeterDiagram& d) : W_(coxeter::enumerate_group(d)) {
        W_->join(0, 0);  // builds the lattice tables
        delta_ = W_->longest();
    }

    const CoxeterGroup& coxeter() const { return *W_; }
    const CoxeterDiagram& diagram() const { return W_->diagram(); }
    int rank() const { return W_->rank(); }
    Simple delta() const { return delta_; }
    Simple generator_simple(int s) const { return W_->generator(s); }

    // ------------------------------------------------------------ positive monoid

    // Makes (x, y) left-weighted by moving letters of y into x. Returns false if unchanged.
    bool normalize_pair(Simple& x, Simple& y) const {
        bool changed = false;
        for (std::uint32_t c; (c = W_->left_descent(y) & ~W_->right_descent(x)) != 0;) {
            const int s = __builtin_ctz(c);
            x = W_->times_gen(x, s);
            y = W_->gen_times(s, y);
            changed = true;
        }
        return changed;
    }

    void right_multiply(Positive& p, Simple y) const {
        if (y == 0) return;
        p.f.push_back(y);
        for (std::size_t i = p.f.size() - 1; i > 0; --i)
            if (!normalize_pair(p.f[i - 1], p.f[i])) break;
        while (!p.f.empty() && p.f.back() == 0) p.f.pop_back();
    }

    Positive normal_form(const std::vector<Simple>& seq) const {
        Positive p;
        for (Simple s : seq) right_multiply(p, s);
        return p;
    }

    Positive positive_from_generators(const std::vector<int>& gens) const {
        Positive p;
        for (int s : gens) right_multiply(p, W_->generator(s));
        return p;
    }

    Positive multiply(const Positive& a, const Positive& b) const {
        Positive p = a;
        for (Simple s : b.f) right_multiply(p, s);
        return p;
    }

    Positive delta_power(int n) const { return Positive{std::vector<Simple>(static_cast<std::size_t>(n), delta_)}; }

    int length(const Positive& p) const {
        int l = 0;
        for (Simple s : p.f) l += W_->length(s);
        return l;
    }

    std::vector<int> letters(const Positive& p) const {
        std::vector<int> w;
        for (Simple s : p.f) w.insert(w.end(), W_->word(s).begin(), W_->word(s).end());
        return w;
    }

    std::uint32_t support(const Positive& p) const {
        std::uint32_t m = 0;
        for (Simple s : p.f) m |= W_->support(s);
        return m;
    }

    // Reverse of the positive element: the anti-automorphism fixing every generator.
    Positive reverse(const Positive& p) const {
        Positive r;
        for (auto it = p.f.rbegin(); it != p.f.rend(); ++it) right_multiply(r, W_->inverse(*it));
        return r;
    }

    // d^-1 p for a simple d left-dividing p.
    Positive left_divide(const Positive& p, Simple d) const {
        if (d == 0) return p;
        if (p.f.empty() || !W_->prefix_leq(d, p.f[0])) throw std::logic_error("left_divide: not a divisor");
        Positive r;
        right_multiply(r, W_->product(W_->inverse(d), p.f[0]));
        for (std::size_t i = 1; i < p.f.size(); ++i) right_multiply(r, p.f[i]);
        return r;
    }

    Positive left_divide(const Positive& p, const Positive& d) const {
        Positive r = p;
        for (Simple s : d.f) r = left_divide(r, s);
        return r;
    }

    Positive right_divide(const Positive& p, const Positive& d) const {
        return reverse(left_divide(reverse(p), reverse(d)));
    }

    bool left_divides(const Positive& d, const Positive& p) const {
        return lgcd(d, p) == d;
    }

    Positive lgcd(Positive a, Positive b) const {
        Positive g;
        while (!a.empty() && !b.empty()) {
            const Simple d = W_->meet(a.f[0], b.f[0]);
            if (d == 0) break;
            right_multiply(g, d);
            a = left_divide(a, d);
            b = left_divide(b, d);
        }
        return g;
    }

    Positive rgcd(const Positive& a, const Positive& b) const {
        return reverse(lgcd(reverse(a), reverse(b)));
    }

    // x^-1 y = y' x'^-1 with x y' = y x' the least common right multiple.
    std::pair<Positive, Positive> complement(const Positive& x, const Positive& y) const {
        std::vector<Simple> ys = y.f;
        std::vector<Simple> xs_out;
        for (Simple s : x.f) {
            std::vector<Simple> next;
            for (std::size_t i = 0; i < ys.size(); ++i) {
                const Simple t = ys[i];
                const Simple j = W_->join(s, t);
                const Simple t2 = W_->product(W_->inverse(s), j);
                s = W_->product(W_->inverse(t), j);
                if (t2 != 0) next.push_back(t2);
                if (s == 0) {
                    next.insert(next.end(), ys.begin() + static_cast<long>(i) + 1, ys.end());
                    break;
                }
            }
            ys = std::move(next);
            if (s != 0) xs_out.push_back(s);
        }
        return {normal_form(ys), normal_form(xs_out)};
    }

    // ------------------------------------------------------------ group

    GroupElement reduce(const Positive& num, const Positive& den) const {
        Positive a = reverse(num), b = reverse(den);
        while (!a.empty() && !b.empty()) {
            const Simple d = W_->meet(a.f[0], b.f[0]);
            if (d == 0) break;
            a = left_divide(a, d);
            b = left_divide(b, d);
        }
        return {reverse(a), reverse(b)};
    }

    GroupElement multiply(const GroupElement& g, const GroupElement& h) const {
        if (g.den.empty()) return reduce(multiply(g.num, h.num), h.den);
        if (h.num.empty()) return reduce(g.num, multiply(h.den, g.den));
        auto [c2, b2] = complement(g.den, h.num);
        return reduce(multiply(g.num, c2), multiply(h.den, b2));
    }

    GroupElement inverse(const GroupElement& g) const { return {g.den, g.num}; }

    GroupElement from_positive(const Positive& p) const { return {p, {}}; }

    GroupElement generator(int s, int exp = 1) const {
        Positive p;
        for (int k = 0; k < std::abs(exp); ++k) p = multiply(p, Positive{{W_->generator(s)}});
        return exp > 0 ? GroupElement{p, {}} : GroupElement{{}, p};
    }

    GroupElement from_word(const Word& w) const {
        GroupElement g;
        for (const auto& l : w) {
            if (l.gen < 0 || l.gen >= rank()) throw std::invalid_argument("generator out of range");
            for (int k = 0; k < std::abs(l.exp); ++k) g = multiply(g, generator(l.gen, l.exp > 0 ? 1 : -1));
        }
        return g;
    }

    // Words such as "s1 s2 s3^-1", "s1s2", "t3^2" or "e". Both 's' and the diagram letter are accepted.
    Word parse_word(const std::string& text) const {
        Word w;
        std::size_t i = 0;
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("cannot parse word '" + text + "': " + why);
        };
        while (i < text.size()) {
            const char c = text[i];
            if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
                ++i;
                continue;
            }
            if (c == 'e' && (i + 1 == text.size() || !std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
                ++i;
                continue;
            }
            if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected character");
            ++i;
            int n = 0, digits = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) n = n * 10 + (text[i++] - '0'), ++digits;
            if (!digits) fail("generator needs an index");
            if (n < 1 || n > rank()) fail("index " + std::to_string(n) + " out of range");
            int e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                int sign = 1;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) sign = text[i++] == '-' ? -1 : 1;
                int m = 0, md = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) m = m * 10 + (text[i++] - '0'), ++md;
                if (!md) fail("exponent needs digits");
                e = sign * m;
            }
            if (e != 0) w.push_back({n - 1, e});
        }
        return w;
    }

    GroupElement parse(const std::string& text) const { return from_word(parse_word(text)); }

    std::string positive_string(const Positive& p) const {
        if (p.empty()) return "e";
        std::string s;
        for (std::size_t i = 0; i < p.f.size(); ++i) {
            if (i) s += ".";
            s += W_->word_string(p.f[i]);
        }
        return s;
    }

    std::string to_string(const GroupElement& g) const {
        if (g.den.empty()) return positive_string(g.num);
        return positive_string(g.num) + " / " + positive_string(g.den);
    }

    // A word representing g: letters of the numerator followed by inverted denominator letters.
    Word word_of(const GroupElement& g) const {
        Word w;
        for (int s : letters(g.num)) w.push_back({s, 1});
        auto d = letters(g.den);
        for (auto it = d.rbegin(); it != d.rend(); ++it) w.push_back({*it, -1});
        return w;
    }

    // Membership in the standard parabolic subgroup generated by the mask.
    bool in_parabolic(const GroupElement& g, ParabolicHandle p) const {
        return ((support(g.num) | support(g.den)) & ~p.mask) == 0;
    }

    // Same coset g1 A_P = g2 A_P.
    bool same_coset(const GroupElement& g1, const GroupElement& g2, ParabolicHandle p) const {
        return in_parabolic(multiply(inverse(g1), g2), p);
    }

    Simple parabolic_delta(ParabolicHandle p) const { return W_->parabolic_longest(p); }

    // Strips from x every right divisor lying in the positive parabolic monoid.
    Positive parabolic_reduced(const Positive& x, ParabolicHandle p) const {
        const Simple dl = W_->parabolic_longest(p);
        Positive r = reverse(x);
        while (!r.empty()) {
            const Simple d = W_->meet(r.f[0], dl);
            if (d == 0) break;
            r = left_divide(r, d);
        }
        return reverse(r);
    }

    // Random word with letters drawn uniformly from generators and their inverses.
    Word random_word(std::mt19937_64& rng, int length) const {
        std::uniform_int_distribution<int> gen(0, rank() - 1), sgn(0, 1);
        Word w;
        for (int i = 0; i < length; ++i) w.push_back({gen(rng), sgn(rng) ? 1 : -1});
        return w;
    }

private:
    std::shared_ptr<const CoxeterGroup> W_;
    Simple delta_ = 0;
};

// Homomorphism between Artin groups sending each generator to a positive word.
class PositiveHomomorphism {
public:
    PositiveHomomorphism(const ArtinGroup& src, const ArtinGroup& dst, std::vector<std::vector<int>> images)
        : src_(&src), dst_(&dst), images_(std::move(images)) {
        if (static_cast<int>(images_.size()) != src.rank()) throw std::invalid_argument("one image per generator");
    }

    Positive apply(const Positive& p) const {
        Positive out;
        for (int s : src_->letters(p))
            for (int t : images_[s]) dst_->right_multiply(out, dst_->generator_simple(t));
        return out;
    }

    GroupElement apply(const GroupElement& g) const { return dst_->reduce(apply(g.num), apply(g.den)); }

    // A positive q with apply(q) == p, by depth-first peeling of generator images off the
    // left of p. Gives up after `budget` division steps.
    std::optional<Positive> preimage(const Positive& p, std::size_t budget = 100000) const {
        std::vector<Positive> img(images_.size());
        for (std::size_t s = 0; s < images_.size(); ++s)
            for (int t : images_[s]) dst_->right_multiply(img[s], dst_->generator_simple(t));
        std::vector<int> word;
        std::size_t steps = 0;
        std::function<bool(const Positive&)> dfs = [&](const Positive& rest) {
            if (rest.empty()) return true;
            for (std::size_t s = 0; s < img.size(); ++s) {
                if (++steps > budget) return false;
                if (!dst_->left_divides(img[s], rest)) continue;
                word.push_back(static_cast<int>(s));
                if (dfs(dst_->left_divide(rest, img[s]))) return true;
                word.pop_back();
            }
            return false;
        };
        if (!dfs(p)) return std::nullopt;
        return src_->positive_from_generators(word);
    }

    // A preimage of a reduced fraction, checked by mapping it forward.
    std::optional<GroupElement> preimage(const GroupElement& g, std::size_t budget = 100000) const {
        auto a = preimage(g.num, budget);
        if (!a) return std::nullopt;
        auto b = preimage(g.den, budget);
        if (!b) return std::nullopt;
        GroupElement x = src_->reduce(*a, *b);
        if (!(apply(x) == g)) return std::nullopt;
        return x;
    }

private:
    const ArtinGroup* src_;
    const ArtinGroup* dst_;
    std::vector<std::vector<int>> images_;
};

// Diagram automorphism given by a permutation of generators; acts factor by factor.
class DiagramAutomorphism {
public:
    DiagramAutomorphism(const ArtinGroup& g, std::vector<int> perm) : g_(&g), perm_(std::move(perm)) {
        const auto& W = g.coxeter();
        table_.resize(W.size());
        for (ElementIndex w = 0; w < W.size(); ++w) {
            std::vector<int> word;
            for (int s : W.word(w)) word.push_back(perm_[s]);
            table_[w] = W.from_word(word);
        }
    }
    Simple apply(Simple s) const { return table_[s]; }
    Positive apply(const Positive& p) const {
        Positive r;
        for (Simple s : p.f) r.f.push_back(table_[s]);
        return r;
    }
    GroupElement apply(const GroupElement& g) const { return {apply(g.num), apply(g.den)}; }
    int apply_generator(int s) const { return perm_[s]; }

private:
    const ArtinGroup* g_;
    std::vector<int> perm_;
    std::vector<Simple> table_;
};

// A(B3) with generators s1 s2 s3, 4 on s2 s3; A(A5) with generators t1..t5.
inline CoxeterDiagram diagram_b3() { return CoxeterDiagram::type_b(3, "s"); }
inline CoxeterDiagram diagram_a5() { return CoxeterDiagram::type_a(5, "t"); }

// phi: s1 -> t1 t5, s2 -> t2 t4, s3 -> t3.
inline PositiveHomomorphism make_phi(const ArtinGroup& b3, const ArtinGroup& a5) {
    return PositiveHomomorphism(b3, a5, {{0, 4}, {1, 3}, {2}});
}

// sigma: t_i -> t_{6-i}.
inline DiagramAutomorphism make_sigma(const ArtinGroup& a5) { return DiagramAutomorphism(a5, {4, 3, 2, 1, 0}); }

struct InjectivityReport {
    std::size_t sample_size = 0;
    std::size_t collisions = 0;
    std::vector<std::pair<GroupElement, GroupElement>> examples;
};

// All reduced fractions a b^-1 with a, b positive of length <= max_len; checks that
// phi separates them.
inline InjectivityReport phi_injectivity_sample(const ArtinGroup& b3, const ArtinGroup& a5, int max_len = 3) {
    const auto phi = make_phi(b3, a5);
    std::vector<Positive> pos{Positive{}};
    std::unordered_set<Positive, PositiveHash> seen{Positive{}};
    for (std::size_t head = 0; head < pos.size(); ++head) {
        if (b3.length(pos[head]) >= max_len) continue;
        for (int s = 0; s < b3.rank(); ++s) {
            Positive p = pos[head];
            b3.right_multiply(p, b3.generator_simple(s));
            if (seen.insert(p).second) pos.push_back(p);
        }
    }
    std::unordered_set<GroupElement, GroupElementHash> elems;
    for (const auto& a : pos)
        for (const auto& b : pos) elems.insert(b3.reduce(a, b));
    InjectivityReport rep;
    rep.sample_size = elems.size();
    std::unordered_map<GroupElement, GroupElement, GroupElementHash> images;
    for (const auto& g : elems) {
        auto [it, fresh] = images.emplace(phi.apply(g), g);
        if (!fresh) {
            ++rep.collisions;
            if (rep.examples.size() < 8) rep.examples.emplace_back(it->second, g);
        }
    }
    return rep;
}

}  // namespace cat1::garside
