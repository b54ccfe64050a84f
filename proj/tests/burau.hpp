#pragma once

// Unreduced Burau matrices over Z/p at a fixed t: an independent model of braid groups.

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "cat1/garside.hpp"

namespace burau {

using cat1::garside::Word;

constexpr std::uint64_t P = 1000000007ull;
constexpr std::uint64_t T = 5;

inline std::uint64_t power(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (b %= P; e; e >>= 1, b = b * b % P)
        if (e & 1) r = r * b % P;
    return r;
}

using Mat = std::vector<std::uint64_t>;

struct Burau {
    int n;
    Mat id() const {
        Mat m(n * n, 0);
        for (int i = 0; i < n; ++i) m[i * n + i] = 1;
        return m;
    }
    Mat mul(const Mat& a, const Mat& b) const {
        Mat c(n * n, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (a[i * n + k])
                    for (int j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + a[i * n + k] * b[k * n + j]) % P;
        return c;
    }
    // sigma_i (0-based) to the power +-1
    Mat sigma(int i, int e) const {
        Mat m = id();
        if (e > 0) {
            m[i * n + i] = (1 + P - T) % P;
            m[i * n + i + 1] = T;
            m[(i + 1) * n + i] = 1;
            m[(i + 1) * n + i + 1] = 0;
        } else {
            const std::uint64_t u = power(T, P - 2);
            m[i * n + i] = 0;
            m[i * n + i + 1] = 1;
            m[(i + 1) * n + i] = u;
            m[(i + 1) * n + i + 1] = (1 + P - u) % P;
        }
        return m;
    }
};

// A(B3) inside the 4-strand braid group: s1 -> sigma_3, s2 -> sigma_2, s3 -> sigma_1^2.
inline Mat burau_b3(const Word& w) {
    const Burau B{4};
    Mat m = B.id();
    for (const auto& l : w) {
        const int e = l.exp > 0 ? 1 : -1;
        for (int k = 0; k < std::abs(l.exp); ++k) {
            if (l.gen == 0) m = B.mul(m, B.sigma(2, e));
            if (l.gen == 1) m = B.mul(m, B.sigma(1, e));
            if (l.gen == 2) m = B.mul(B.mul(m, B.sigma(0, e)), B.sigma(0, e));
        }
    }
    return m;
}

// A(A5) is the 6-strand braid group.
inline Mat burau_a5(const Word& w) {
    const Burau B{6};
    Mat m = B.id();
    for (const auto& l : w)
        for (int k = 0; k < std::abs(l.exp); ++k) m = B.mul(m, B.sigma(l.gen, l.exp > 0 ? 1 : -1));
    return m;
}

}  // namespace burau
