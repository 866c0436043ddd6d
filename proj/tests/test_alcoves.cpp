#include <gtest/gtest.h>

#include <map>
#include <random>

#include "hs/alcoves.hpp"
#include "hs/errors.hpp"

using namespace hs;

TEST(Alcoves, DotActionExamples) {
    auto sl2 = RootDatum::SL(2);
    AffineWeyl aw(sl2);
    EXPECT_EQ(dot_act_p(aw, aw.identity(), {7}, 5), (Vec{7}));
    EXPECT_EQ(dot_act_p(aw, {sl2.simple(0), {-1}}, {0}, 5), (Vec{3}));
    EXPECT_EQ(dot_act_p(aw, {sl2.simple(0), {-2}}, {0}, 5), (Vec{8}));
    EXPECT_THROW(dot_act_p(aw, aw.identity(), {0}, 1), InputError);
}

TEST(Alcoves, DotActionIsGroupAction) {
    for (auto& d : {RootDatum::SL(3), RootDatum::GL(3), RootDatum::from_cartan({{2, -1}, {-2, 2}})}) {
        AffineWeyl aw(d);
        std::mt19937 rng(3);
        std::uniform_int_distribution<int> c(-3, 3);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(d.weyl_order()) - 1);
        for (int t = 0; t < 200; ++t) {
            Vec a(d.dim()), b(d.dim()), lam(d.dim());
            for (auto& x : a) x = c(rng);
            for (auto& x : b) x = c(rng);
            for (auto& x : lam) x = c(rng) * 3;
            ExtAffineElement u{{pick(rng)}, a}, w{{pick(rng)}, b};
            EXPECT_EQ(dot_act_p(aw, aw.mul(u, w), lam, 7), dot_act_p(aw, u, dot_act_p(aw, w, lam, 7), 7));
        }
    }
}

TEST(Alcoves, OffsetsMatchInteriorPoint) {
    // w ._p (interior point of C_p) lies in the open alcove with the computed offsets.
    for (auto& d : {RootDatum::SL(2), RootDatum::SL(3), RootDatum::GL(3)}) {
        AffineWeyl aw(d);
        Int p = 7;
        Vec interior = d.zero();  // 0 + rho is interior for p > h
        for (auto v : d.elements()) {
            for (int k = -2; k <= 2; ++k) {
                Vec nu(d.dim(), 0);
                nu[0] = k;
                ExtAffineElement w{v, nu};
                Vec x = vadd(dot_act_p(aw, w, interior, p), d.rho());
                Vec off = alcove_offsets(aw, w, p);
                for (std::size_t j = 0; j < d.positive_roots().size(); ++j) {
                    Int a = dot(x, d.positive_roots()[j].coroot);
                    EXPECT_LT(off[j] * p, a);
                    EXPECT_LT(a, (off[j] + 1) * p);
                }
            }
        }
        EXPECT_EQ(alcove_offsets(aw, aw.identity(), p), Vec(d.positive_roots().size(), 0));
    }
}

TEST(Alcoves, AlcoveOfExamples) {
    auto sl2 = RootDatum::SL(2);
    AffineWeyl aw(sl2);
    EXPECT_EQ(alcove_of(aw, {2}, 5).offsets, (Vec{0}));
    EXPECT_EQ(alcove_of(aw, {4}, 5).offsets, (Vec{1}));
    EXPECT_EQ(alcove_of(aw, {-1}, 5).offsets, (Vec{0}));
    EXPECT_EQ(alcove_of(aw, {2}, 5).element, aw.identity());
}

TEST(Alcoves, LowerClosureExamples) {
    auto sl2 = RootDatum::SL(2);
    AffineWeyl aw(sl2);
    EXPECT_TRUE(lower_closure_contains(aw, aw.identity(), {0}, 5));
    EXPECT_TRUE(lower_closure_contains(aw, {sl2.simple(0), {-2}}, {4}, 5));
    EXPECT_FALSE(lower_closure_contains(aw, aw.identity(), {4}, 5));
}

TEST(Alcoves, LowerClosuresTile) {
    // Every alcove is w ._p C_p for w in W times the root lattice; count the ones containing mu.
    std::mt19937 rng(11);
    for (auto& d : {RootDatum::SL(2), RootDatum::SL(3), RootDatum::GL(3), RootDatum::SL(4)}) {
        AffineWeyl aw(d);
        for (Int p : {5, 7}) {
            std::map<Vec, int> count;
            int r = d.rank();
            int K = r >= 3 ? 4 : 6;
            Vec c(r, -K);
            while (true) {
                Vec nu = d.zero();
                for (int i = 0; i < r; ++i) nu = vadd(nu, vscale(c[i], d.simple_root(i)));
                for (auto v : d.elements()) ++count[alcove_offsets(aw, {v, nu}, p)];
                int i = 0;
                while (i < r && c[i] == K) c[i++] = -K;
                if (i == r) break;
                ++c[i];
            }
            std::uniform_int_distribution<int> coord(-6, 6);
            for (int t = 0; t < 500 / 8; ++t) {
                Vec mu(d.dim());
                for (auto& x : mu) x = coord(rng);
                auto it = count.find(point_offsets(d, mu, p));
                ASSERT_NE(it, count.end()) << d.key() << vec_str(mu);
                EXPECT_EQ(it->second, 1) << d.key() << vec_str(mu);
                auto pos = alcove_of(aw, mu, p);
                EXPECT_TRUE(lower_closure_contains(aw, pos.element, mu, p));
            }
        }
    }
}

TEST(Alcoves, BlockLabelExamples) {
    auto sl2 = RootDatum::SL(2);
    AffineWeyl aw(sl2);
    auto find = [](const BlockLabelResult& r, const Vec& lam) -> const BlockLabel* {
        for (auto& b : r.labels)
            if (b.lam == lam) return &b;
        return nullptr;
    };
    auto r0 = block_labels(aw, {0}, 5);
    ASSERT_NE(find(r0, {0}), nullptr);
    EXPECT_TRUE(find(r0, {0})->exact);
    auto r4 = block_labels(aw, {4}, 5);
    ASSERT_NE(find(r4, {-2}), nullptr);
    auto r3 = block_labels(aw, {3}, 5);
    ASSERT_NE(find(r3, {-1}), nullptr);
    EXPECT_TRUE(find(r3, {-1})->exact);
    EXPECT_FALSE(r3.box_exhausted);
    EXPECT_THROW(block_labels(aw, {-1}, 5), InputError);
}

TEST(Alcoves, BlockLabelsSmallBoxExhausted) {
    auto sl2 = RootDatum::SL(2);
    AffineWeyl aw(sl2);
    auto r = block_labels(aw, {40}, 5, 1);
    EXPECT_TRUE(r.box_exhausted);
    EXPECT_TRUE(r.labels.empty());
    EXPECT_FALSE(block_labels(aw, {40}, 5).box_exhausted);
}

TEST(Alcoves, BlockLabelsNonemptyWithDefaultBox) {
    for (auto& d : {RootDatum::GL(2), RootDatum::GL(3), RootDatum::SL(3)}) {
        AffineWeyl aw(d);
        for (int t = 0; t < 12; ++t) {
            Vec mu = d.zero();
            // dominant weights along the simple-coroot-dual directions
            for (int i = 0; i < d.dim(); ++i) mu[i] = d.kind() == RootDatum::Kind::GL ? (d.dim() - i) * (t % 4) : (t + i) % 5;
            if (!d.is_dominant(mu)) continue;
            for (Int p : {3, 5}) {
                auto r = block_labels(aw, mu, p);
                EXPECT_FALSE(r.box_exhausted) << d.key() << vec_str(mu);
                for (auto& b : r.labels) EXPECT_TRUE(lower_closure_contains(aw, b.w, mu, p));
            }
        }
    }
}
