#include "toric/lattice.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace toric;

namespace {

IMat mat(std::vector<std::vector<long>> r) {
    std::vector<IVec> rows;
    for (auto& x : r) {
        IVec v;
        for (long y : x) v.emplace_back(y);
        rows.push_back(v);
    }
    return IMat::from_rows(rows);
}

IMat random_mat(std::mt19937& g, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> d(-20, 20);
    IMat m(r, c);
    for (auto& x : m.a) x = d(g);
    return m;
}

IMat random_unimodular(std::mt19937& g, std::size_t n) {
    IMat A = IMat::identity(n);
    std::uniform_int_distribution<int> d(-2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int step = 0; step < 8; ++step) {
        std::size_t i = pick(g), j = pick(g);
        if (i == j) continue;
        int f = d(g);
        for (std::size_t k = 0; k < n; ++k) A(i, k) += f * A(j, k);
    }
    if (pick(g) == 0)
        for (std::size_t k = 0; k < n; ++k) A(0, k) = -A(0, k);
    return A;
}

std::vector<IVec> apply(const IMat& A, const std::vector<IVec>& pts, const IVec& t) {
    std::vector<IVec> out;
    for (const auto& p : pts) {
        IVec q = t;
        for (std::size_t i = 0; i < A.rows; ++i)
            for (std::size_t j = 0; j < A.cols; ++j) q[i] += A(i, j) * p[j];
        out.push_back(q);
    }
    return out;
}

}  // namespace

TEST(Hermite, IdentityIsFixed) {
    auto r = hermite_normal_form(IMat::identity(2));
    EXPECT_EQ(r.H, IMat::identity(2));
    EXPECT_EQ(r.U, IMat::identity(2));
}

TEST(Hermite, TwoByTwoExample) {
    IMat M = mat({{2, 4}, {1, 3}});
    auto r = hermite_normal_form(M);
    EXPECT_EQ(r.U * M, r.H);
    EXPECT_EQ(abs(determinant(r.U)), 1);
    EXPECT_EQ(r.H, mat({{1, 1}, {0, 2}}));
    EXPECT_TRUE(is_hermite_normal_form(r.H));
}

TEST(Hermite, ZeroMatrix) {
    IMat Z(3, 2);
    auto r = hermite_normal_form(Z);
    EXPECT_EQ(r.H, Z);
    EXPECT_EQ(r.U, IMat::identity(3));
}

TEST(Hermite, RandomReconstruction) {
    std::mt19937 g(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + trial % 6, c = 1 + (trial / 6) % 6;
        IMat M = random_mat(g, r, c);
        auto h = hermite_normal_form(M);
        ASSERT_EQ(h.U * M, h.H);
        ASSERT_EQ(abs(determinant(h.U)), 1);
        ASSERT_TRUE(is_hermite_normal_form(h.H));
    }
}

TEST(Smith, Examples) {
    auto r = smith_normal_form(IMat::identity(3));
    EXPECT_EQ(r.S, IMat::identity(3));
    auto d = smith_normal_form(mat({{2, 0}, {0, 3}}));
    EXPECT_EQ(d.S, mat({{1, 0}, {0, 6}}));
    auto z = smith_normal_form(mat({{0}}));
    EXPECT_EQ(z.S, mat({{0}}));
}

TEST(Smith, RandomReconstructionAndDivisibility) {
    std::mt19937 g(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + trial % 6, c = 1 + (trial / 5) % 6;
        IMat M = random_mat(g, r, c);
        auto s = smith_normal_form(M);
        ASSERT_EQ(s.U * M * s.V, s.S);
        ASSERT_EQ(abs(determinant(s.U)), 1);
        ASSERT_EQ(abs(determinant(s.V)), 1);
        std::size_t n = std::min(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) ASSERT_EQ(s.S(i, j), 0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            ASSERT_GE(s.S(i, i), 0);
            if (s.S(i, i) == 0)
                ASSERT_EQ(s.S(i + 1, i + 1), 0);
            else
                ASSERT_EQ(s.S(i + 1, i + 1) % s.S(i, i), 0);
        }
    }
}

TEST(Determinant, MatchesCofactorOn3x3) {
    std::mt19937 g(3);
    for (int trial = 0; trial < 30; ++trial) {
        IMat M = random_mat(g, 3, 3);
        Int cof = M(0, 0) * (M(1, 1) * M(2, 2) - M(1, 2) * M(2, 1)) -
                  M(0, 1) * (M(1, 0) * M(2, 2) - M(1, 2) * M(2, 0)) +
                  M(0, 2) * (M(1, 0) * M(2, 1) - M(1, 1) * M(2, 0));
        EXPECT_EQ(determinant(M), cof);
    }
}

TEST(Cone, Smoothness) {
    EXPECT_TRUE(is_smooth_cone(make_cone({ivec({1, 0}), ivec({0, 1})})));
    EXPECT_FALSE(is_smooth_cone(make_cone({ivec({1, 0}), ivec({1, 2})})));
    EXPECT_FALSE(is_smooth_cone(make_cone({ivec({1, 1}), ivec({-1, 1})})));
    EXPECT_TRUE(is_smooth_cone(make_cone({ivec({1, 0, 0}), ivec({1, 1, 0})})));
    EXPECT_FALSE(is_smooth_cone(make_cone({ivec({2, 1, 0}), ivec({0, 1, 2})})));
}

TEST(Cone, NonSimplicialIsError) {
    auto c = make_cone({ivec({1, 0}), ivec({0, 1}), ivec({1, 1})});
    try {
        is_smooth_cone(c);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "NonSimplicial");
    }
}

TEST(Cone, SmoothnessInvariantUnderBasisChangeAndPermutation) {
    std::mt19937 g(5);
    std::vector<std::vector<IVec>> cones = {
        {ivec({1, 0, 0}), ivec({0, 1, 0}), ivec({0, 0, 1})},
        {ivec({1, 0, 0}), ivec({1, 2, 0}), ivec({0, 0, 1})},
        {ivec({1, 1, 0}), ivec({0, 1, 1}), ivec({1, 0, 1})},
        {ivec({1, 0, 0}), ivec({0, 1, 0})}};
    for (const auto& gens : cones) {
        bool ref = is_smooth_cone(make_cone(gens));
        for (int t = 0; t < 10; ++t) {
            IMat A = random_unimodular(g, 3);
            auto img = apply(A, gens, ivec({0, 0, 0}));
            std::shuffle(img.begin(), img.end(), g);
            EXPECT_EQ(is_smooth_cone(make_cone(img)), ref);
        }
    }
}

TEST(Unimodular, ReflexiveAndReflection) {
    std::vector<IVec> P = {ivec({1, 0}), ivec({0, 1}), ivec({1, 1}), ivec({-1, -1})};
    EXPECT_TRUE(unimodular_equivalent(P, P));
    std::vector<IVec> R;
    for (auto& p : P) R.push_back(neg(p));
    EXPECT_TRUE(unimodular_equivalent(P, R));
}

TEST(Unimodular, DistinguishesNonEquivalent) {
    std::vector<IVec> S = {ivec({0, 0}), ivec({1, 0}), ivec({0, 1})};
    std::vector<IVec> T = {ivec({0, 0}), ivec({2, 0}), ivec({0, 1})};
    EXPECT_FALSE(unimodular_equivalent(S, T));
    std::vector<IVec> U = {ivec({0, 0}), ivec({1, 0}), ivec({1, 2})};
    EXPECT_TRUE(unimodular_equivalent(T, U));
}

TEST(Unimodular, DimensionMismatch) {
    std::vector<IVec> S = {ivec({0, 0}), ivec({1, 0}), ivec({0, 1})};
    std::vector<IVec> T = {ivec({0, 0, 0}), ivec({1, 0, 0}), ivec({0, 1, 0}), ivec({0, 0, 1})};
    EXPECT_THROW(unimodular_equivalent(S, T), Error);
}

TEST(Unimodular, EquivalenceRelationOnRandomPolytopes) {
    std::mt19937 g(17);
    std::vector<std::vector<IVec>> base = {
        {ivec({0, 0}), ivec({1, 0}), ivec({0, 1})},
        {ivec({0, 0}), ivec({2, 0}), ivec({0, 1})},
        {ivec({1, 0}), ivec({0, 1}), ivec({-1, 0}), ivec({0, -1})},
        {ivec({1, 0}), ivec({0, 1}), ivec({1, 1}), ivec({-1, -1})},
        {ivec({0, 0}), ivec({3, 0}), ivec({0, 1}), ivec({1, 1})}};
    std::uniform_int_distribution<int> tr(-3, 3);
    for (std::size_t a = 0; a < base.size(); ++a) {
        IMat A = random_unimodular(g, 2);
        auto Pa = apply(A, base[a], ivec({tr(g), tr(g)}));
        IMat B = random_unimodular(g, 2);
        auto Pb = apply(B, Pa, ivec({tr(g), tr(g)}));
        EXPECT_TRUE(unimodular_equivalent(base[a], base[a]));
        EXPECT_TRUE(unimodular_equivalent(base[a], Pa));
        EXPECT_TRUE(unimodular_equivalent(Pa, base[a]));
        EXPECT_TRUE(unimodular_equivalent(Pa, Pb));
        EXPECT_TRUE(unimodular_equivalent(base[a], Pb));
        for (std::size_t b = 0; b < base.size(); ++b) {
            bool expect = (a == b);
            EXPECT_EQ(unimodular_equivalent(base[a], base[b]), expect) << a << " " << b;
            IMat M;
            IVec t;
            EXPECT_EQ(find_unimodular_map(base[a], base[b], M, t), expect);
        }
    }
}

TEST(Unimodular, ExplicitMapIsUnimodular) {
    std::vector<IVec> P = {ivec({0, 0}), ivec({2, 0}), ivec({0, 1})};
    std::vector<IVec> Q = {ivec({5, 5}), ivec({7, 7}), ivec({5, 6})};
    IMat A;
    IVec t;
    ASSERT_TRUE(find_unimodular_map(P, Q, A, t));
    EXPECT_EQ(abs(determinant(A)), 1);
    auto img = apply(A, P, t);
    std::sort(img.begin(), img.end());
    std::sort(Q.begin(), Q.end());
    EXPECT_EQ(img, Q);
}
