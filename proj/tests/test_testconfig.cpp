#include "toric/testconfig.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace toric;

namespace {

QVec qv(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

ToricDivisor divisor(std::initializer_list<Rat> xs) { return ToricDivisor{std::vector<Rat>(xs)}; }

ToricTestConfiguration normal_cone_p1(const Rat& r) {
    auto X = projective_line_fan();
    return degeneration_to_normal_cone(X, divisor({1, 0}), {0}, r);
}

// rays (x, x') with lambda the first coordinate
ToricTestConfiguration normal_cone_first_coordinate() {
    auto F = fan_from_cyclic_rays({ivec({1, 0}), ivec({-1, 0}), ivec({0, 1}), ivec({0, -1}), ivec({1, 1})});
    ToricDivisor L{std::vector<Rat>(F.rays.size())};
    std::map<IVec, Rat> a{{ivec({1, 0}), 0}, {ivec({-1, 0}), 1}, {ivec({0, 1}), 0}, {ivec({0, -1}), 1},
                          {ivec({1, 1}), Rat(-1, 2)}};
    for (std::size_t i = 0; i < F.rays.size(); ++i) L.coeffs[i] = a.at(F.rays[i]);
    return make_test_configuration(F, ivec({1, 0}), L);
}

ToricTestConfiguration hirzebruch_product() {
    auto F = fan_from_cyclic_rays({ivec({-1, -1}), ivec({1, 0}), ivec({0, 1}), ivec({1, 1})});
    return make_test_configuration(F, ivec({1, -1}), scale(Rat(-1, 3), canonical_divisor(F)));
}

// is D - E = div(m) + j * (fiber class) for some rational m, j
bool equivalent_modulo_base(const ToricTestConfiguration& tc, const ToricDivisor& D, const ToricDivisor& E) {
    auto Fc = fiber_class(tc);
    std::size_t d = tc.total_fan.dim;
    QMat M;
    for (std::size_t i = 0; i < tc.total_fan.rays.size(); ++i) {
        QVec row = to_q(tc.total_fan.rays[i]);
        row.push_back(Fc.coeffs[i]);
        row.push_back(D.coeffs[i] - E.coeffs[i]);
        M.push_back(row);
    }
    QMat A;
    for (const auto& row : M) A.emplace_back(row.begin(), row.begin() + d + 1);
    return rank(A) == rank(M);
}

// linear isomorphism of complete smooth fans, brute force over images of one cone
bool fans_isomorphic(const Fan& F, const Fan& G) {
    if (F.rays.size() != G.rays.size() || F.max_cones.size() != G.max_cones.size() || F.dim != G.dim) return false;
    auto src = F.cone_rays(F.max_cones.front());
    QMat S = inverse(to_q(src));
    std::set<ConeIdx> gcones(G.max_cones.begin(), G.max_cones.end());
    for (const auto& c : G.max_cones) {
        auto tgt = G.cone_rays(c);
        std::sort(tgt.begin(), tgt.end());
        do {
            // A with A * src_i = tgt_i, i.e. A = T^t S^t in row-vector form
            std::size_t n = F.dim;
            QMat A(n, QVec(n, Rat(0)));
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t i = 0; i < n; ++i) A[r][k] += Rat(tgt[i][r]) * S[k][i];
            auto apply = [&](const IVec& x) {
                QVec y(n, Rat(0));
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t k = 0; k < n; ++k) y[r] += A[r][k] * Rat(x[k]);
                return y;
            };
            bool ok = true;
            std::vector<std::size_t> img(F.rays.size());
            for (std::size_t i = 0; i < F.rays.size() && ok; ++i) {
                auto y = apply(F.rays[i]);
                if (!is_integral(y)) {
                    ok = false;
                    break;
                }
                auto j = G.ray_index(to_int(y));
                if (!j) ok = false;
                else img[i] = *j;
            }
            for (std::size_t ci = 0; ci < F.max_cones.size() && ok; ++ci) {
                ConeIdx d;
                for (auto i : F.max_cones[ci]) d.push_back(img[i]);
                std::sort(d.begin(), d.end());
                if (!gcones.count(d)) ok = false;
            }
            if (ok) return true;
        } while (std::next_permutation(tgt.begin(), tgt.end()));
    }
    return false;
}

Fan blowup_p2() {
    auto P2 = projective_space_fan(2);
    return star_subdivide(P2, {0, 1});
}

// random regular dim-2 test configuration over P^1 x P^1
ToricTestConfiguration random_tc(std::mt19937& rng) {
    static const Rat rs[] = {Rat(1, 4), Rat(1, 3), Rat(1, 2)};
    while (true) {
        long deg = std::uniform_int_distribution<long>(1, 2)(rng);
        Rat r = rs[std::uniform_int_distribution<int>(0, 2)(rng)];
        std::size_t pt = std::uniform_int_distribution<std::size_t>(0, 1)(rng);
        ToricTestConfiguration tc;
        try {
            tc = degeneration_to_normal_cone(projective_line_fan(), divisor({Rat(deg), 0}), {pt}, r);
        } catch (const Error&) {
            continue;
        }
        int extra = std::uniform_int_distribution<int>(0, 3)(rng);
        bool ok = true;
        for (int s = 0; s < extra && ok; ++s) {
            std::vector<ConeIdx> over0;
            for (const auto& c : tc.total_fan.max_cones)
                if (side_of(tc, fixed_point(tc.total_fan, c)) == FixedPointSide::OverZero) over0.push_back(c);
            auto c = over0[std::uniform_int_distribution<std::size_t>(0, over0.size() - 1)(rng)];
            auto F = star_subdivide(tc.total_fan, c);
            auto p = fixed_point(tc.total_fan, c);
            Rat aE = 0;
            for (std::size_t i = 0; i < c.size(); ++i)
                aE += tc.polarisation.coeffs[c[i]] * Rat(dot(p.dual_basis[i], F.rays.back()));
            auto L = tc.polarisation;
            L.coeffs.push_back(aE - rs[std::uniform_int_distribution<int>(0, 2)(rng)] / 4);
            auto next = make_test_configuration(F, tc.lambda(), L);
            if (!is_relatively_ample(next)) ok = false;
            else tc = next;
        }
        if (ok) return tc;
    }
}

}  // namespace

TEST(Degeneration, ProjectiveLineHalfAnticanonical) {
    auto tc = normal_cone_p1(Rat(1, 2));
    EXPECT_EQ(tc.total_fan.rays.size(), 5u);
    EXPECT_TRUE(tc.total_fan.is_smooth());
    auto mK = scale(Rat(-1, 2), canonical_divisor(tc.total_fan));
    EXPECT_TRUE(equivalent_modulo_base(tc, tc.polarisation, mK));
    auto other = normal_cone_p1(Rat(1, 3));
    EXPECT_FALSE(equivalent_modulo_base(other, other.polarisation, scale(Rat(-1, 2), canonical_divisor(other.total_fan))));
    auto Bl = star_subdivide(product_fan(projective_line_fan(), projective_line_fan()), {0, 2});
    EXPECT_TRUE(fans_isomorphic(tc.total_fan, Bl));
}

TEST(Degeneration, BlownUpPlaneAlongExceptionalCurve) {
    auto X = blowup_p2();
    auto mK = scale(-1, canonical_divisor(X));
    std::size_t e = *X.ray_index(ivec({1, 1}));
    auto tc = degeneration_to_normal_cone(X, mK, {e}, 1);
    auto P = convex_hull({ivec({1, 0, 0}), ivec({0, 1, 0}), ivec({0, -1, 0}), ivec({-1, 0, 0}), ivec({0, 0, 1}),
                          ivec({1, 1, 0}), ivec({1, 0, -1})});
    EXPECT_TRUE(fans_isomorphic(tc.total_fan, face_fan(P)));
    EXPECT_TRUE(equivalent_modulo_base(tc, tc.polarisation, scale(-1, canonical_divisor(tc.total_fan))));
}

TEST(Degeneration, ZeroIsProduct) {
    auto tc = normal_cone_p1(0);
    EXPECT_TRUE(fans_isomorphic(tc.total_fan, product_fan(projective_line_fan(), projective_line_fan())));
    EXPECT_EQ(df_intersection(tc), 0);
}

TEST(Degeneration, RejectsInadmissible) {
    EXPECT_THROW(normal_cone_p1(-1), Error);
    EXPECT_THROW(normal_cone_p1(3), Error);
}

TEST(SlopeConstant, Examples) {
    auto P1 = projective_line_fan();
    EXPECT_EQ(slope_constant(P1, divisor({1, 0})), 2);
    EXPECT_EQ(slope_constant(P1, scale(Rat(-1, 2), canonical_divisor(P1))), 2);
    auto X = blowup_p2();
    EXPECT_EQ(slope_constant(X, scale(-1, canonical_divisor(X))), 1);
    try {
        slope_constant(P1, divisor({0, 0}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "DegenerateVolume");
    }
}

TEST(DonaldsonFutaki, NormalConeQuarter) {
    for (const auto& tc : {normal_cone_p1(Rat(1, 2)), normal_cone_first_coordinate()}) {
        EXPECT_EQ(df_intersection(tc), Rat(1, 4));
        EXPECT_EQ(df_localised(tc), Rat(1, 4));
        EXPECT_EQ(df_donaldson_polytope(tc), Rat(1, 4));
    }
}

TEST(DonaldsonFutaki, NormalConeSelfIntersectionSeven) {
    auto tc = normal_cone_p1(Rat(1, 2));
    auto mK = scale(-1, canonical_divisor(tc.total_fan));
    EXPECT_EQ(intersection_number(tc.total_fan, {mK, mK}), 7);
}

TEST(DonaldsonFutaki, HirzebruchProductZero) {
    auto tc = hirzebruch_product();
    EXPECT_EQ(df_intersection(tc), 0);
    EXPECT_EQ(df_localised(tc), 0);
    EXPECT_EQ(df_donaldson_polytope(tc), 0);
    EXPECT_EQ(slope_constant(tc.fiber_fan, tc.fiber_polarisation), 3);
}

TEST(DonaldsonFutaki, TrivialConfigurationZero) {
    auto X = blowup_p2();
    auto tc = degeneration_to_normal_cone(X, scale(-1, canonical_divisor(X)), {0}, 0);
    for (const auto& v : generic_vectors_for(tc, 3)) EXPECT_EQ(df_localised(tc, v), 0);
    EXPECT_EQ(df_intersection(tc), 0);
    EXPECT_EQ(df_donaldson_polytope(tc), 0);
}

TEST(DonaldsonFutaki, ThreeRoutesAgreeOnRandomConfigurations) {
    std::mt19937 rng(2024);
    for (int t = 0; t < 20; ++t) {
        auto tc = random_tc(rng);
        auto r = df_report(tc);
        ASSERT_TRUE(r.polytope_defined);
        EXPECT_EQ(r.value_intersection, r.value_localised) << t;
        EXPECT_EQ(r.value_intersection, r.value_polytope) << t;
    }
}

TEST(DonaldsonFutaki, ThreeRoutesAgreeInDimensionThree) {
    auto X = blowup_p2();
    auto mK = scale(-1, canonical_divisor(X));
    auto tc = degeneration_to_normal_cone(X, mK, {*X.ray_index(ivec({1, 1}))}, 1);
    auto r = df_report(tc);
    EXPECT_EQ(r.value_intersection, r.value_localised);
    EXPECT_EQ(r.value_intersection, r.value_polytope);
    auto tc2 = degeneration_to_normal_cone(X, mK, X.max_cones.front(), Rat(1, 2));
    auto r2 = df_report(tc2);
    EXPECT_EQ(r2.value_intersection, r2.value_localised);
    EXPECT_EQ(r2.value_intersection, r2.value_polytope);
}

TEST(DonaldsonFutaki, Scaling) {
    std::mt19937 rng(77);
    for (int t = 0; t < 5; ++t) {
        auto tc = random_tc(rng);
        Rat base = df_intersection(tc);
        for (long k : {2, 3, 5}) EXPECT_EQ(df_intersection(scale_polarisation(tc, k)), Rat(k) * base);
    }
    auto X = blowup_p2();
    auto tc = degeneration_to_normal_cone(X, scale(-1, canonical_divisor(X)), {*X.ray_index(ivec({1, 1}))}, 1);
    Rat base = df_intersection(tc);
    for (long k : {2, 3, 5}) EXPECT_EQ(df_intersection(scale_polarisation(tc, k)), Rat(k * k) * base);
}

TEST(DonaldsonFutaki, LocalisedIndependentOfV) {
    std::mt19937 rng(5);
    for (int t = 0; t < 6; ++t) {
        auto tc = random_tc(rng);
        auto vs = generic_vectors_for(tc, 3);
        std::set<QVec> distinct(vs.begin(), vs.end());
        EXPECT_EQ(distinct.size(), 3u);
        Rat want = df_intersection(tc);
        for (const auto& v : vs) EXPECT_EQ(df_localised(tc, v), want);
    }
}

TEST(DonaldsonFutaki, BaseTwistInvariance) {
    std::mt19937 rng(8);
    for (int t = 0; t < 5; ++t) {
        auto tc = random_tc(rng);
        auto tw = tc;
        tw.polarisation = tc.polarisation + scale(3, fiber_class(tc));
        EXPECT_EQ(df_intersection(tw), df_intersection(tc));
        EXPECT_EQ(df_donaldson_polytope(tw), df_donaldson_polytope(tc));
    }
}

TEST(TwistedDF, ReducesToLocalised) {
    std::mt19937 rng(13);
    for (int t = 0; t < 5; ++t) {
        auto tc = random_tc(rng);
        ComplexDivisorClass zero{std::vector<CRat>(tc.total_fan.rays.size())};
        for (const auto& v : generic_vectors_for(tc, 2))
            EXPECT_EQ(df_twisted(tc, complexify(tc.polarisation), zero, v), CRat(df_localised(tc, v)));
    }
}

TEST(TwistedDF, ConjugationSymmetry) {
    auto tc = normal_cone_p1(Rat(1, 2));
    ComplexDivisorClass eta, xi;
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-3, 3);
    for (std::size_t i = 0; i < tc.total_fan.rays.size(); ++i) {
        eta.coeffs.emplace_back(tc.polarisation.coeffs[i], Rat(d(rng), 5));
        xi.coeffs.emplace_back(Rat(d(rng), 7), Rat(d(rng), 2));
    }
    auto conj_cls = [](ComplexDivisorClass c) {
        for (auto& x : c.coeffs) x = conj(x);
        return c;
    };
    auto v = generic_vectors_for(tc, 1).front();
    EXPECT_EQ(df_twisted(tc, conj_cls(eta), conj_cls(xi), v), conj(df_twisted(tc, eta, xi, v)));
}

TEST(TwistedDF, AffineInXiWithFrozenSlope) {
    auto X = blowup_p2();
    auto tc = degeneration_to_normal_cone(X, scale(-1, canonical_divisor(X)), {*X.ray_index(ivec({1, 1}))}, 1);
    std::size_t m = tc.total_fan.rays.size();
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> d(-4, 4);
    ComplexDivisorClass x1, x2, mix;
    CRat s(Rat(2, 3), Rat(1, 4));
    for (std::size_t i = 0; i < m; ++i) {
        x1.coeffs.emplace_back(Rat(d(rng)), Rat(d(rng), 3));
        x2.coeffs.emplace_back(Rat(d(rng), 2), Rat(d(rng)));
        mix.coeffs.push_back(s * x1.coeffs[i] + (CRat(1) - s) * x2.coeffs[i]);
    }
    auto eta = complexify(tc.polarisation);
    CRat c(Rat(5, 7), Rat(-1, 3));
    auto v = generic_vectors_for(tc, 1).front();
    auto f = [&](const ComplexDivisorClass& x) { return df_twisted(tc, eta, x, v, c); };
    EXPECT_EQ(f(mix), s * f(x1) + (CRat(1) - s) * f(x2));
}

TEST(TwistedDF, DegenerateVolume) {
    auto tc = normal_cone_p1(Rat(1, 2));
    ComplexDivisorClass zero{std::vector<CRat>(tc.total_fan.rays.size())};
    auto v = generic_vectors_for(tc, 1).front();
    try {
        df_twisted(tc, zero, zero, v);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "DegenerateVolume");
    }
}

TEST(DonaldsonPolytope, RejectsNonNef) {
    auto tc = normal_cone_p1(Rat(1, 2));
    auto bad = tc;
    for (std::size_t i = 0; i < tc.fiber_ray_source.size(); ++i) bad.fiber_polarisation.coeffs[i] = i == 0 ? -2 : 1;
    try {
        df_donaldson_polytope(bad);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "NotNef");
    }
}
