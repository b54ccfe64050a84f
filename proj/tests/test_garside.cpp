#include <gtest/gtest.h>

#include <random>

#include "burau.hpp"
#include "cat1/garside.hpp"

using namespace cat1;
using garside::ArtinGroup;
using garside::GroupElement;
using garside::Word;
using namespace burau;

namespace {

struct Groups : ::testing::Test {
    ArtinGroup b3{garside::diagram_b3()};
    ArtinGroup a5{garside::diagram_a5()};
};

}  // namespace

TEST_F(Groups, SimpleCounts) {
    EXPECT_EQ(b3.coxeter().size(), 48u);
    EXPECT_EQ(a5.coxeter().size(), 720u);
}

TEST_F(Groups, NormalFormExamples) {
    EXPECT_TRUE(b3.positive_from_generators({}).empty());
    const auto d23 = b3.positive_from_generators({1, 2, 1, 2});
    ASSERT_EQ(d23.f.size(), 1u);
    EXPECT_EQ(b3.length(d23), 4);
    EXPECT_EQ(d23, b3.positive_from_generators({2, 1, 2, 1}));
    EXPECT_EQ(b3.support(d23), 0b110u);
    EXPECT_EQ(b3.positive_from_generators({0, 0}).f.size(), 2u);
    EXPECT_EQ(b3.support(garside::Positive{}), 0u);
    EXPECT_THROW(b3.parse("s4"), std::invalid_argument);
}

TEST_F(Groups, GreedyCondition) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> gen(0, 2);
    const auto& W = b3.coxeter();
    for (int i = 0; i < 500; ++i) {
        std::vector<int> w(12);
        for (auto& x : w) x = gen(rng);
        const auto p = b3.positive_from_generators(w);
        EXPECT_EQ(b3.length(p), 12);
        for (std::size_t j = 0; j + 1 < p.f.size(); ++j)
            EXPECT_EQ(W.left_descent(p.f[j + 1]) & ~W.right_descent(p.f[j]), 0u);
    }
}

TEST_F(Groups, BurauAgreesWithNormalForms) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 300; ++i) {
        const auto w = b3.random_word(rng, 14);
        EXPECT_EQ(burau_b3(w), burau_b3(b3.word_of(b3.from_word(w))));
        const auto v = a5.random_word(rng, 14);
        EXPECT_EQ(burau_a5(v), burau_a5(a5.word_of(a5.from_word(v))));
    }
}

TEST_F(Groups, DistinctNormalFormsAreDistinctBraids) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const auto w = b3.random_word(rng, 6), v = b3.random_word(rng, 6);
        const auto g = b3.from_word(w), h = b3.from_word(v);
        if (burau_b3(w) != burau_b3(v)) EXPECT_FALSE(g == h);
        if (g == h) EXPECT_EQ(burau_b3(w), burau_b3(v));
    }
}

TEST_F(Groups, GroupAxioms) {
    std::mt19937_64 rng(6);
    const auto s1 = b3.generator(0), s2 = b3.generator(1);
    EXPECT_EQ(b3.multiply(b3.multiply(s1, s2), b3.inverse(s2)), s1);
    for (int i = 0; i < 1000; ++i) {
        const auto a = b3.from_word(b3.random_word(rng, 5));
        const auto b = b3.from_word(b3.random_word(rng, 5));
        const auto c = b3.from_word(b3.random_word(rng, 5));
        EXPECT_EQ(b3.multiply(b3.multiply(a, b), c), b3.multiply(a, b3.multiply(b, c)));
        EXPECT_TRUE(b3.multiply(a, b3.inverse(a)).is_identity());
    }
}

TEST_F(Groups, FractionReductionConfluent) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> gen(0, 2);
    auto pos = [&](int n) {
        std::vector<int> w(n);
        for (auto& x : w) x = gen(rng);
        return b3.positive_from_generators(w);
    };
    for (int i = 0; i < 300; ++i) {
        const auto a = pos(4), b = pos(4), c = pos(3);
        EXPECT_EQ(b3.reduce(b3.multiply(a, c), b3.multiply(b, c)), b3.reduce(a, b));
        const auto r = b3.reduce(a, b);
        EXPECT_TRUE(b3.rgcd(r.num, r.den).empty());
    }
}

TEST_F(Groups, ParabolicMembership) {
    using coxeter::ParabolicHandle;
    const auto hat1 = ParabolicHandle::maximal(3, 0);
    EXPECT_TRUE(b3.in_parabolic(b3.parse("s2 s3^-1"), hat1));
    EXPECT_FALSE(b3.in_parabolic(b3.parse("s1"), hat1));
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> gen(1, 2), sgn(0, 1);
    for (int i = 0; i < 1000; ++i) {
        Word w;
        for (int j = 0; j < 8; ++j) w.push_back({gen(rng), sgn(rng) ? 1 : -1});
        EXPECT_TRUE(b3.in_parabolic(b3.from_word(w), hat1));
    }
}

TEST_F(Groups, Phi) {
    const auto phi = garside::make_phi(b3, a5);
    EXPECT_EQ(phi.apply(b3.generator(0)), a5.parse("t1 t5"));
    EXPECT_EQ(phi.apply(b3.generator(1)), a5.parse("t2 t4"));
    EXPECT_EQ(phi.apply(b3.generator(2)), a5.parse("t3"));
    EXPECT_TRUE(phi.apply(GroupElement{}).is_identity());
    EXPECT_EQ(phi.apply(b3.parse("s2 s3 s2 s3")), phi.apply(b3.parse("s3 s2 s3 s2")));
    EXPECT_EQ(phi.apply(b3.parse("s1 s2 s1")), phi.apply(b3.parse("s2 s1 s2")));
    EXPECT_EQ(phi.apply(b3.parse("s1 s3")), phi.apply(b3.parse("s3 s1")));
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        const auto g = b3.from_word(b3.random_word(rng, 6)), h = b3.from_word(b3.random_word(rng, 6));
        EXPECT_EQ(phi.apply(b3.multiply(g, h)), a5.multiply(phi.apply(g), phi.apply(h)));
        const auto pre = phi.preimage(phi.apply(g));
        ASSERT_TRUE(pre.has_value());
        EXPECT_EQ(*pre, g);
    }
    const auto rep = garside::phi_injectivity_sample(b3, a5, 3);
    EXPECT_EQ(rep.collisions, 0u);
    EXPECT_EQ(rep.sample_size, 609u);
}

TEST_F(Groups, Sigma) {
    const auto sigma = garside::make_sigma(a5);
    const auto phi = garside::make_phi(b3, a5);
    EXPECT_EQ(sigma.apply(a5.generator(1)), a5.generator(3));
    EXPECT_EQ(sigma.apply(a5.generator(2)), a5.generator(2));
    for (int s = 0; s < 3; ++s) EXPECT_EQ(sigma.apply(phi.apply(b3.generator(s))), phi.apply(b3.generator(s)));
    std::mt19937_64 rng(10);
    for (int i = 0; i < 1000; ++i) {
        const auto g = a5.from_word(a5.random_word(rng, 8)), h = a5.from_word(a5.random_word(rng, 4));
        EXPECT_EQ(sigma.apply(sigma.apply(g)), g);
        EXPECT_EQ(sigma.apply(a5.multiply(g, h)), a5.multiply(sigma.apply(g), sigma.apply(h)));
    }
}
