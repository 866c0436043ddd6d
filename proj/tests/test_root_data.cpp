#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "hs/errors.hpp"
#include "hs/root_data.hpp"

using namespace hs;

namespace {

std::vector<RootDatum> samples() {
    return {RootDatum::GL(2), RootDatum::GL(3), RootDatum::SL(2), RootDatum::SL(3), RootDatum::GL(4),
            RootDatum::from_cartan({{2, -1}, {-2, 2}}), RootDatum::from_cartan({{2, -1}, {-3, 2}}),
            RootDatum::from_cartan({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}})};
}

// Minimal length of v with v(lam) dominant, by brute force.
int exhaustive_delta(const RootDatum& d, const Vec& lam, Vec* dom) {
    int best = -1;
    for (auto v : d.elements()) {
        Vec x = d.act(v, lam);
        if (!d.is_dominant(x)) continue;
        if (best < 0 || d.length(v) < best) {
            best = d.length(v);
            if (dom) *dom = x;
        }
    }
    return best;
}

}  // namespace

TEST(RootData, Pairing) {
    auto gl2 = RootDatum::GL(2);
    EXPECT_EQ(gl2.pairing(gl2.simple_coroot(0), {3, 0}), 3);
    EXPECT_EQ(gl2.pairing(gl2.simple_coroot(0), {1, 1}), 0);
    auto gl3 = RootDatum::GL(3);
    EXPECT_EQ(gl3.pairing(gl3.simple_coroot(0), {1, 3, 2}), -2);
    EXPECT_THROW(gl3.pairing(gl3.simple_coroot(0), {1, 3}), InputError);
}

TEST(RootData, CartanReproduced) {
    for (auto& d : samples())
        for (int s = 0; s < d.rank(); ++s)
            for (int t = 0; t < d.rank(); ++t) EXPECT_EQ(d.pairing(d.simple_coroot(s), d.simple_root(t)), d.cartan()[s][t]);
}

TEST(RootData, DominantDataExamples) {
    auto gl2 = RootDatum::GL(2);
    auto a = gl2.dominant_data({3, 0});
    EXPECT_EQ(a.dom, (Vec{3, 0}));
    EXPECT_EQ(a.v, gl2.identity());
    EXPECT_EQ(a.delta, 0);
    auto b = gl2.dominant_data({0, 3});
    EXPECT_EQ(b.dom, (Vec{3, 0}));
    EXPECT_EQ(b.v, gl2.simple(0));
    EXPECT_EQ(b.delta, 1);
    auto gl3 = RootDatum::GL(3);
    auto c = gl3.dominant_data({1, 3, 2});
    EXPECT_EQ(c.dom, (Vec{3, 2, 1}));
    EXPECT_EQ(gl3.length(c.v), 2);
    EXPECT_EQ(c.delta, 2);
    EXPECT_EQ(gl3.act(c.v, {1, 3, 2}), c.dom);
}

TEST(RootData, WeylAct) {
    auto gl2 = RootDatum::GL(2);
    EXPECT_EQ(gl2.act(gl2.simple(0), {3, 0}), (Vec{0, 3}));
    EXPECT_EQ(gl2.act(gl2.identity(), {5, -1}), (Vec{5, -1}));
    auto gl3 = RootDatum::GL(3);
    EXPECT_EQ(gl3.act(gl3.longest_element(), {3, 2, 1}), (Vec{1, 2, 3}));
}

TEST(RootData, RootsAndLongestElement) {
    auto gl2 = RootDatum::GL(2);
    ASSERT_EQ(gl2.positive_roots().size(), 1u);
    EXPECT_EQ(gl2.positive_roots()[0].root, (Vec{1, -1}));
    EXPECT_EQ(gl2.longest_element(), gl2.simple(0));
    EXPECT_EQ(RootDatum::GL(3).positive_roots().size(), 3u);
    EXPECT_EQ(RootDatum::SL(3).length(RootDatum::SL(3).longest_element()), 3);
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(RootDatum::GL(n).positive_roots().size(), static_cast<std::size_t>(n * (n - 1) / 2));
    EXPECT_EQ(RootDatum::from_cartan({{2, -1}, {-3, 2}}).positive_roots().size(), 6u);
    EXPECT_EQ(RootDatum::from_cartan({{2, -1}, {-3, 2}}).weyl_order(), 12u);
    EXPECT_EQ(RootDatum::GL(4).weyl_order(), 24u);
}

TEST(RootData, NonFiniteTypeRejected) {
    EXPECT_THROW(RootDatum::from_cartan({{2, -3}, {-3, 2}}), InputError);
    EXPECT_THROW(RootDatum::from_cartan({{2, -2}, {-2, 2}}), InputError);
    EXPECT_THROW(RootDatum::from_cartan({{2, 1}, {1, 2}}), InputError);
}

TEST(RootData, WordsMatchMatricesAndLengths) {
    for (auto& d : samples()) {
        for (auto v : d.elements()) {
            EXPECT_EQ(d.from_word(d.word(v)), v);
            int inv = 0;
            for (std::size_t j = 0; j < d.positive_roots().size(); ++j) inv += d.sends_negative(v, static_cast<int>(j));
            EXPECT_EQ(inv, d.length(v));
            EXPECT_EQ(d.mul(v, d.inverse(v)), d.identity());
        }
    }
}

TEST(RootData, DeltaMatchesExhaustiveMinimum) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-6, 6);
    for (auto& d : samples()) {
        if (d.rank() > 3) continue;
        int lw0 = d.length(d.longest_element());
        for (int trial = 0; trial < 60; ++trial) {
            Vec lam(d.dim());
            for (auto& x : lam) x = coord(rng);
            auto dd = d.dominant_data(lam);
            Vec dom;
            int ex = exhaustive_delta(d, lam, &dom);
            EXPECT_EQ(dd.delta, ex) << vec_str(lam);
            EXPECT_EQ(dd.dom, dom);
            EXPECT_EQ(d.length(dd.v), dd.delta);
            EXPECT_EQ(d.act(dd.v, lam), dd.dom);
            EXPECT_TRUE(d.is_dominant(dd.dom));
            EXPECT_EQ(d.dominant_data(dd.dom).dom, dd.dom);
            EXPECT_EQ(dd.delta == 0, d.is_dominant(lam));
            EXPECT_LE(dd.delta, lw0);
        }
    }
}

TEST(RootData, DeltaStar) {
    auto sl2 = RootDatum::SL(2);
    EXPECT_EQ(sl2.delta_star({0}), 0);
    EXPECT_EQ(sl2.delta_star({1}), 1);
    EXPECT_EQ(sl2.delta_star({-1}), 0);
}

TEST(RootData, ConfigParsing) {
    std::istringstream a("# comment\ntype = GL\nrank = 3\n");
    auto d = RootDatum::parse_config(a);
    EXPECT_EQ(d.kind(), RootDatum::Kind::GL);
    EXPECT_EQ(d.dim(), 3);
    std::istringstream b("type = custom\ncartan = 2 -1\ncartan = -2 2\n");
    auto e = RootDatum::parse_config(b);
    EXPECT_EQ(e.positive_roots().size(), 4u);
    std::istringstream c("type = E9\n");
    EXPECT_THROW(RootDatum::parse_config(c), InputError);
    std::istringstream f("type = custom\ncartan = 2 -3\ncartan = -3 2\n");
    EXPECT_THROW(RootDatum::parse_config(f), InputError);
    auto g = RootDatum::load_config(std::string(HS_DATA_DIR) + "/gl3.cfg");
    EXPECT_EQ(g.key(), "GL3");
}
