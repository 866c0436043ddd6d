#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hs/cells_typeA.hpp"
#include "hs/errors.hpp"

using namespace hs;

namespace {

// Row insertion Robinson-Schensted shape.
Partition rs_shape(const std::vector<Int>& perm) {
    std::vector<std::vector<Int>> rows;
    for (Int x : perm) {
        Int cur = x;
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({cur});
                break;
            }
            auto it = std::upper_bound(rows[r].begin(), rows[r].end(), cur);
            if (it == rows[r].end()) {
                rows[r].push_back(cur);
                break;
            }
            std::swap(cur, *it);
        }
    }
    Partition p;
    for (auto& r : rows) p.push_back(static_cast<int>(r.size()));
    return p;
}

AffinePermutation omega_gen(int n) {
    Vec w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 2;
    return make_affine_permutation(w);
}

std::vector<AffinePermutation> windows(int n, int spread) {
    std::vector<AffinePermutation> out;
    std::vector<Int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        // shifts in [-spread, spread] per entry, keeping sum of shifts zero or one
        Vec shift(n, -spread);
        while (true) {
            Vec w(n);
            for (int i = 0; i < n; ++i) w[i] = perm[i] + n * shift[i];
            out.push_back(make_affine_permutation(w));
            int i = 0;
            while (i < n && shift[i] == spread) shift[i++] = -spread;
            if (i == n) break;
            ++shift[i];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

TEST(CellsTypeA, AffinePermutationExamples) {
    auto gl3 = RootDatum::GL(3);
    AffineWeyl aw(gl3);
    EXPECT_EQ(to_affine_permutation(aw, aw.identity()).window, (Vec{1, 2, 3}));
    EXPECT_EQ(to_affine_permutation(aw, aw.simple(1)).window, (Vec{2, 1, 3}));
    auto gl2 = RootDatum::GL(2);
    AffineWeyl a2(gl2);
    auto t = to_affine_permutation(a2, a2.translation({1, 0}));
    Int s = 0;
    for (int i = 0; i < 2; ++i) s += t.window[i] - (i + 1);
    EXPECT_EQ(s, 2);  // sum of displacements is n times the degree
    EXPECT_EQ(s / 2, 1);
    EXPECT_THROW(make_affine_permutation({1, 3}), InputError);
    EXPECT_THROW(to_affine_permutation(AffineWeyl(RootDatum::SL(2)), {RootDatum::SL(2).identity(), {0}}), InputError);
}

TEST(CellsTypeA, Homomorphism) {
    for (int n : {2, 3, 4}) {
        auto d = RootDatum::GL(n);
        AffineWeyl aw(d);
        std::mt19937 rng(n);
        std::uniform_int_distribution<int> c(-2, 2);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(d.weyl_order()) - 1);
        for (int t = 0; t < 100; ++t) {
            Vec a(n), b(n);
            for (auto& x : a) x = c(rng);
            for (auto& x : b) x = c(rng);
            ExtAffineElement u{{pick(rng)}, a}, w{{pick(rng)}, b};
            EXPECT_EQ(to_affine_permutation(aw, aw.mul(u, w)), compose(to_affine_permutation(aw, u), to_affine_permutation(aw, w)));
            EXPECT_EQ(to_affine_permutation(aw, aw.inverse(u)), inverse(to_affine_permutation(aw, u)));
        }
    }
}

TEST(CellsTypeA, ShapeExamples) {
    EXPECT_EQ(ambc_shape(make_affine_permutation({1, 2, 3})), (Partition{3}));
    EXPECT_EQ(ambc_shape(make_affine_permutation({2, 1, 3})), (Partition{2, 1}));
    for (int n = 2; n <= 3; ++n) {
        auto d = RootDatum::GL(n);
        AffineWeyl aw(d);
        for (int k = 2; k <= 4; ++k) {
            Vec lam(n, 0);
            lam[0] = k;
            lam[n - 1] = -k;
            auto w = to_affine_permutation(aw, aw.mul(aw.finite(d.longest_element()), aw.translation(lam)));
            EXPECT_EQ(ambc_shape(w), Partition(n, 1)) << n << " " << k;
        }
    }
}

TEST(CellsTypeA, FiniteShapeMatchesRobinsonSchensted) {
    for (int n = 1; n <= 4; ++n) {
        std::vector<Int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            EXPECT_EQ(ambc_shape(make_affine_permutation(perm)), rs_shape(perm)) << vec_str(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::mt19937 rng(5);
    for (int t = 0; t < 60; ++t) {
        std::vector<Int> perm(5);
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(ambc_shape(make_affine_permutation(perm)), rs_shape(perm)) << vec_str(perm);
    }
}

TEST(CellsTypeA, InverseInvariance) {
    for (int n = 2; n <= 4; ++n) {
        int spread = n == 4 ? 1 : 2;
        for (auto& w : windows(n, spread)) EXPECT_EQ(ambc_shape(w), ambc_shape(inverse(w))) << vec_str(w.window);
    }
}

TEST(CellsTypeA, OmegaStability) {
    for (int n = 2; n <= 3; ++n) {
        auto om = omega_gen(n);
        auto omi = inverse(om);
        for (auto& w : windows(n, 2)) {
            auto s = ambc_shape(w);
            EXPECT_EQ(ambc_shape(compose(om, w)), s);
            EXPECT_EQ(ambc_shape(compose(w, om)), s);
            EXPECT_EQ(ambc_shape(compose(omi, w)), s);
            EXPECT_EQ(ambc_shape(compose(w, omi)), s);
        }
    }
}

TEST(CellsTypeA, OrbitOfWeight) {
    auto gl2 = RootDatum::GL(2);
    AffineWeyl aw(gl2);
    auto cal = calibrate_orbits(aw);
    EXPECT_FALSE(cal.transposed());
    EXPECT_EQ(orbit_of_weight(aw, {0, 0}, cal), (Partition{2}));
    EXPECT_EQ(orbit_of_weight(aw, {-8, 0}, cal), (Partition{1, 1}));
    EXPECT_EQ(orbit_of_weight(aw, {-1, 0}, cal), (Partition{2}));
    for (int n = 3; n <= 4; ++n) {
        auto d = RootDatum::GL(n);
        AffineWeyl a(d);
        auto c = calibrate_orbits(a);
        EXPECT_FALSE(c.transposed());
        EXPECT_EQ(orbit_of_weight(a, d.zero(), c), (Partition{n}));
    }
}
