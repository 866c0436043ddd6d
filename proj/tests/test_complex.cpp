#include <gtest/gtest.h>

#include "hs/complex.hpp"
#include "hs/errors.hpp"

using namespace hs;

namespace {

AlgebraPtr load(const char* name) { return QuiverAlgebra::load(std::string(HS_DATA_DIR) + "/" + name); }

// Graded module maps e_v A<m> -> e_w A<n>, found by brute force over all degree-preserving
// linear maps that commute with the right action of every basis path.
int module_hom_dim(const QuiverAlgebra& A, int v, Int m, int w, Int n) {
    std::vector<int> src, tgt;
    for (int b = 0; b < A.dim(); ++b) {
        if (A.basis(b).src == v) src.push_back(b);
        if (A.basis(b).src == w) tgt.push_back(b);
    }
    // unknowns phi[i][j]: coefficient of tgt[j] in the image of src[i]; allowed when degrees match
    std::vector<std::pair<int, int>> unknowns;
    for (std::size_t i = 0; i < src.size(); ++i)
        for (std::size_t j = 0; j < tgt.size(); ++j)
            if (A.basis(src[i]).degree - m == A.basis(tgt[j]).degree - n) unknowns.push_back({static_cast<int>(i), static_cast<int>(j)});
    std::vector<QVec> eqs;
    for (std::size_t i = 0; i < src.size(); ++i)
        for (int b = 0; b < A.dim(); ++b) {
            // phi(src_i * b) - phi(src_i) * b = 0, coordinatewise over tgt
            AElt lhs = A.mul({{src[i], 1}}, {{b, 1}});
            std::vector<QVec> rows(tgt.size(), QVec(unknowns.size(), 0));
            for (std::size_t u = 0; u < unknowns.size(); ++u) {
                auto [ii, jj] = unknowns[u];
                auto it = lhs.find(src[ii]);
                if (it != lhs.end()) rows[jj][u] += it->second;
                if (static_cast<std::size_t>(ii) == i) {
                    AElt img = A.mul({{tgt[jj], 1}}, {{b, 1}});
                    for (auto& [k, c] : img)
                        for (std::size_t t = 0; t < tgt.size(); ++t)
                            if (tgt[t] == k) rows[t][u] -= c;
                }
            }
            for (auto& r : rows) eqs.push_back(r);
        }
    if (unknowns.empty()) return 0;
    return static_cast<int>(unknowns.size()) - field_rank(A.field(), eqs);
}

ChainMap arrow_map(AlgebraPtr A) {
    // P_2<-1> -> P_1 given by the arrow
    ProjComplex X = stalk(A, A->vertex_index("2"), 0, -1), Y = stalk(A, A->vertex_index("1"));
    ChainMap f = zero_map(X, Y);
    int a = A->paths(A->vertex_index("1"), A->vertex_index("2"), 1).at(0);
    f.comp[0].at(0, 0) = {{a, 1}};
    return f;
}

}  // namespace

TEST(Quiver, Parse) {
    auto one = load("one_vertex.alg");
    EXPECT_EQ(one->dim(), 1);
    auto a2 = load("a2.alg");
    EXPECT_EQ(a2->dim(), 3);
    EXPECT_EQ(a2->heredity_order(), (std::vector<int>{0, 1}));
    auto dn = load("dual_numbers.alg");
    EXPECT_EQ(dn->dim(), 2);
    int x = dn->paths(0, 0, 2).at(0);
    EXPECT_TRUE(dn->mul({{x, 1}}, {{x, 1}}).empty());
    EXPECT_THROW(QuiverAlgebra::parse("[vertices]\n1\n[arrows]\nx 1 1 1\n"), InputError);
    EXPECT_THROW(QuiverAlgebra::parse("[vertices]\n1 2\n[arrows]\na 1 3 0\n"), InputError);
    EXPECT_THROW(QuiverAlgebra::parse("[vertices]\n1 2\n[arrows]\na 1 2 1\nb 1 2 2\n[relations]\n1 a -1 b\n"), InputError);
    EXPECT_THROW(QuiverAlgebra::parse("[field]\nF_4\n[vertices]\n1\n"), InputError);
    EXPECT_THROW(QuiverAlgebra::parse("[vertices]\n1 2\n[heredity_order]\n1\n"), InputError);
    auto fp = QuiverAlgebra::parse("[field]\nF_3\n[vertices]\n1\n[arrows]\nx 1 1 1\n[relations]\n1 x.x.x\n");
    EXPECT_EQ(fp->dim(), 3);
    EXPECT_EQ(fp->field().characteristic(), 3);
}

TEST(Quiver, CommutativeSquare) {
    auto A = QuiverAlgebra::parse("[vertices]\n1 2 3 4\n[arrows]\na 1 2 1\nb 2 4 1\nc 1 3 1\nd 3 4 1\n[relations]\n1 a.b -1 c.d\n");
    EXPECT_EQ(A->dim(), 4 + 4 + 1);
    EXPECT_EQ(A->paths(0, 3, 2).size(), 1u);
}

TEST(HomSpace, OneVertex) {
    auto A = load("one_vertex.alg");
    auto P = stalk(A, 0);
    EXPECT_EQ(HomSpace(P, P, 0, 0).dim(), 1u);
    EXPECT_EQ(HomSpace(P, P, 1, 0).dim(), 0u);
    EXPECT_EQ(hom_dim(P, P, 0, 1), 0u);
    HomSpace h(P, P);
    auto c = h.coords(identity_map(P));
    ASSERT_EQ(c.size(), 1u);
    EXPECT_NE(c[0], 0);
}

TEST(HomSpace, A2MatchesModuleHoms) {
    auto A = load("a2.alg");
    for (int v = 0; v < 2; ++v)
        for (int w = 0; w < 2; ++w)
            for (Int k = -2; k <= 2; ++k) {
                std::size_t h = HomSpace(stalk(A, v), stalk(A, w), 0, k).dim();
                EXPECT_EQ(static_cast<int>(h), module_hom_dim(*A, v, 0, w, k)) << v << w << k;
                EXPECT_EQ(h, hom_dim(stalk(A, v), stalk(A, w), 0, k));
            }
    EXPECT_EQ(hom_dim(stalk(A, 0), stalk(A, 1)), 0u);
    EXPECT_EQ(hom_dim(stalk(A, 1), stalk(A, 0), 0, 1), 1u);
}

TEST(HomSpace, DualNumbersMatchModuleHoms) {
    auto A = load("dual_numbers.alg");
    for (Int k = -3; k <= 3; ++k) EXPECT_EQ(static_cast<int>(hom_dim(stalk(A, 0), stalk(A, 0), 0, k)), module_hom_dim(*A, 0, 0, 0, k));
}

TEST(Cone, Basics) {
    auto A = load("a2.alg");
    auto P1 = stalk(A, 0);
    auto c = cone(identity_map(P1));
    c.C.validate();
    EXPECT_TRUE(minimal_model(c.C).is_zero());
    auto X = stalk(A, 1, 0, -1), Y = stalk(A, 0, 1);
    auto z = cone(zero_map(X, Y));
    EXPECT_TRUE(same_complex(z.C, direct_sum(Y, shift(X, 1))));
    auto s1 = cone(arrow_map(A)).C;
    s1.validate();
    EXPECT_TRUE(same_complex(minimal_model(s1), s1));
    // the cone resolves the simple at 1: only Hom(P_1, -) in degree 0 survives
    for (Int i = -2; i <= 2; ++i)
        for (Int k = -2; k <= 2; ++k) {
            EXPECT_EQ(hom_dim(stalk(A, 0), s1, i, k), (i == 0 && k == 0) ? 1u : 0u);
            EXPECT_EQ(hom_dim(stalk(A, 1), s1, i, k), 0u);
        }
    EXPECT_TRUE(cone(arrow_map(A)).incl.is_chain_map());
    EXPECT_TRUE(cone(arrow_map(A)).proj.is_chain_map());
}

TEST(MinimalModel, RedundantPresentation) {
    auto A = load("a2.alg");
    auto P1 = stalk(A, 0), P2 = stalk(A, 1);
    auto X = direct_sum(direct_sum(P1, cone(identity_map(shift(P2, 2))).C), cone(identity_map(P1)).C);
    X.validate();
    EXPECT_EQ(X.terms.size(), 4u);
    auto mm = minimal_model_with_maps(X);
    EXPECT_TRUE(same_complex(mm.M, P1));
    EXPECT_TRUE(mm.to_min.is_chain_map());
    EXPECT_TRUE(mm.from_min.is_chain_map());
    HomSpace mm_end(mm.M, mm.M);
    EXPECT_TRUE(mm_end.is_null_homotopic(map_add(compose(mm.to_min, mm.from_min), map_scale(identity_map(mm.M), -1))));
    HomSpace x_end(X, X);
    EXPECT_TRUE(x_end.is_null_homotopic(map_add(compose(mm.from_min, mm.to_min), map_scale(identity_map(X), -1))));
    EXPECT_TRUE(same_complex(minimal_model(P1), P1));
}

TEST(MinimalModel, PreservesHomDims) {
    auto A = load("a2.alg");
    auto s1 = cone(arrow_map(A)).C;
    std::vector<ProjComplex> objs = {stalk(A, 0), stalk(A, 1, 1, 2), s1, shift(twist(s1, 1), -1)};
    std::vector<ProjComplex> fat;
    for (auto& o : objs) fat.push_back(direct_sum(o, cone(identity_map(shift(stalk(A, 0, 0, 1), 1))).C));
    for (std::size_t a = 0; a < objs.size(); ++a)
        for (std::size_t b = 0; b < objs.size(); ++b)
            for (Int i = -2; i <= 2; ++i)
                for (Int k = -1; k <= 2; ++k) {
                    auto mf = minimal_model(fat[a]), mg = minimal_model(fat[b]);
                    EXPECT_EQ(hom_dim(fat[a], fat[b], i, k), hom_dim(mf, mg, i, k));
                    EXPECT_EQ(hom_dim(fat[a], fat[b], i, k), hom_dim(objs[a], objs[b], i, k));
                }
}

TEST(HomSpace, CompositionBilinear) {
    auto A = load("dual_numbers.alg");
    auto P = stalk(A, 0);
    int x = A->paths(0, 0, 2).at(0);
    ChainMap m = zero_map(P, twist(P, 2));
    m.comp[0].at(0, 0) = {{x, 1}};
    auto X = cone(m).C;  // P -> P<2>
    X.validate();
    HomSpace h(X, X);
    auto cs = h.cocycles();
    ASSERT_FALSE(cs.empty());
    for (auto& f : cs)
        for (auto& g : cs) {
            auto lhs = compose(map_add(f, g), f);
            auto rhs = map_add(compose(f, f), compose(g, f));
            for (std::size_t j = 0; j < lhs.comp.size(); ++j) EXPECT_EQ(lhs.comp[j], rhs.comp[j]);
            EXPECT_TRUE(lhs.is_chain_map());
        }
}

TEST(Complex, ValidateRejects) {
    auto A = load("a2.alg");
    ProjComplex X = direct_sum(stalk(A, 1, -1, 0), stalk(A, 0, 0, 0));
    X.d[0].at(0, 0) = A->unit(0);
    EXPECT_THROW(X.validate(), InputError);
    auto other = load("a2.alg");
    EXPECT_THROW(hom_dim(stalk(A, 0), stalk(other, 0)), InputError);
}
