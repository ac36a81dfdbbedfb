#include "toric/lg_mirror.hpp"

#include <gtest/gtest.h>

using namespace toric;

namespace {

ToricTestConfiguration normal_cone(const Rat& r) {
    auto F = fan_from_cyclic_rays({ivec({1, 0}), ivec({-1, 0}), ivec({0, 1}), ivec({0, -1}), ivec({1, 1})});
    ToricDivisor L{std::vector<Rat>(F.rays.size())};
    std::map<IVec, Rat> a{{ivec({1, 0}), 0}, {ivec({-1, 0}), 1}, {ivec({0, 1}), 0}, {ivec({0, -1}), 1}, {ivec({1, 1}), -r}};
    for (std::size_t i = 0; i < F.rays.size(); ++i) L.coeffs[i] = a.at(F.rays[i]);
    return make_test_configuration(F, ivec({1, 0}), L);
}

ToricTestConfiguration hirzebruch(const Rat& r) {
    auto F = fan_from_cyclic_rays({ivec({-1, -1}), ivec({1, 0}), ivec({0, 1}), ivec({1, 1})});
    ToricDivisor L{std::vector<Rat>(F.rays.size())};
    std::map<IVec, Rat> a{{ivec({-1, -1}), 1}, {ivec({1, 0}), 0}, {ivec({0, 1}), 0}, {ivec({1, 1}), -r}};
    for (std::size_t i = 0; i < F.rays.size(); ++i) L.coeffs[i] = a.at(F.rays[i]);
    return make_test_configuration(F, ivec({1, -1}), L);
}

Section sec(std::initializer_list<std::pair<IVec, Coeff>> xs) {
    Section s;
    for (const auto& [b, c] : xs) s[b] = c;
    return s;
}

Rat shoelace2(const LatticePolytope& P) {
    auto cyc = polygon_cyclic_vertices(P);
    Rat s = 0;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const auto& a = cyc[i];
        const auto& b = cyc[(i + 1) % cyc.size()];
        s += Rat(a[0] * b[1] - a[1] * b[0]);
    }
    return s;
}

}  // namespace

TEST(BuildPotential, NormalCone) {
    for (const Rat& r : {Rat(1, 2), Rat(1, 3), Rat(2, 3)}) {
        auto W = build_potential(normal_cone(r), 4);
        EXPECT_EQ(W.terms, sec({{ivec({1, 0}), {1, 0}},
                                {ivec({-1, 0}), {1, -1}},
                                {ivec({0, -1}), {1, -1}},
                                {ivec({0, 1}), {1, 0}},
                                {ivec({1, 1}), {1, r}}}));
        EXPECT_EQ(W.k, 4);
        EXPECT_EQ(W.dim, 2u);
    }
}

TEST(BuildPotential, Hirzebruch) {
    Rat r(1, 3);
    auto W = build_potential(hirzebruch(r), 2);
    EXPECT_EQ(W.terms, sec({{ivec({-1, -1}), {1, -1}}, {ivec({1, 0}), {1, 0}}, {ivec({0, 1}), {1, 0}}, {ivec({1, 1}), {1, r}}}));
}

TEST(BuildPotential, TrivialConfiguration) {
    auto X = projective_line_fan();
    auto tc = degeneration_to_normal_cone(X, ToricDivisor{{0, 1}}, {0}, 0);
    auto W = build_potential(tc, 3);
    EXPECT_EQ(W.terms, sec({{ivec({1, 0}), {1, 0}}, {ivec({-1, 0}), {1, -1}}, {ivec({0, 1}), {1, 0}}, {ivec({0, -1}), {1, 0}}}));
}

TEST(BuildPotential, RepresentativeChangeIsTorusRescaling) {
    auto tc = normal_cone(Rat(1, 2));
    QVec m{Rat(2, 3), Rat(-1, 5)};
    auto shifted = potential_from_divisor(tc.total_fan, shift_by_character(tc.total_fan, tc.polarisation, m), 5);
    EXPECT_EQ(shifted.terms, rescale_torus(build_potential(tc, 5), m).terms);
}

TEST(DeformationSplit, NormalConeFiberIsProjectiveLinePotential) {
    auto tc = normal_cone(Rat(1, 2));
    auto W = build_potential(tc, 1);
    auto s = deformation_split(W, tc.lambda());
    // the fiber variable is the second coordinate here
    EXPECT_EQ(s.fiber.terms, sec({{ivec({0, 1}), {1, 0}}, {ivec({0, -1}), {1, -1}}}));
    Section sum = s.fiber.terms;
    sum.insert(s.rest.terms.begin(), s.rest.terms.end());
    EXPECT_EQ(sum, W.terms);
    EXPECT_EQ(s.fiber.terms.size() + s.rest.terms.size(), W.terms.size());
}

TEST(DeformationSplit, ThreefoldPresentation) {
    auto X = star_subdivide(projective_space_fan(2), {0, 1});
    auto tc = degeneration_to_normal_cone(X, scale(-1, canonical_divisor(X)), {*X.ray_index(ivec({1, 1}))}, 1);
    auto W = potential_from_divisor(tc.total_fan, scale(-1, canonical_divisor(tc.total_fan)), 1);
    auto s = deformation_split(W, tc.lambda());
    std::set<IVec> fib, rest;
    for (const auto& [b, c] : s.fiber.terms) fib.insert(b);
    for (const auto& [b, c] : s.rest.terms) rest.insert(b);
    EXPECT_EQ(fib, (std::set<IVec>{ivec({1, 0, 0}), ivec({0, 1, 0}), ivec({1, 1, 0}), ivec({-1, -1, 0})}));
    EXPECT_EQ(rest, (std::set<IVec>{ivec({0, 0, -1}), ivec({0, 0, 1}), ivec({1, 1, 1})}));
    for (const auto& [b, c] : W.terms) EXPECT_EQ(c, (Coeff{1, -1}));
}

TEST(DeformationSplit, AllFiberwise) {
    LGPotential W;
    W.dim = 2;
    W.terms = sec({{ivec({1, 0}), {1, 0}}, {ivec({-1, 0}), {1, 2}}});
    auto s = deformation_split(W, ivec({0, 1}));
    EXPECT_TRUE(s.rest.terms.empty());
    EXPECT_EQ(s.fiber.terms, W.terms);
}

TEST(JacobiLeading, NormalConeTheta) {
    auto tc = normal_cone(Rat(1, 2));
    auto W = build_potential(tc, 2);
    auto mc = mirror_classes(tc, W);
    EXPECT_EQ(mc.r, Rat(1, 2));
    Section half;
    for (const auto& [b, c] : W.terms) half[b] = Coeff{c.mult / 2, c.log};
    EXPECT_EQ(mc.theta, half);
    EXPECT_TRUE(mc.weak_fano);
    EXPECT_FALSE(mc.multiplicity_above_one);
}

TEST(JacobiLeading, NormalConePsi) {
    auto tc = normal_cone(Rat(1, 2));
    auto mc = mirror_classes(tc, build_potential(tc, 2));
    EXPECT_EQ(mc.psi, sec({{ivec({1, 0}), {1, 0}}, {ivec({-1, 0}), {1, -1}}, {ivec({1, 1}), {1, Rat(1, 2)}}}));
}

TEST(JacobiLeading, HirzebruchPsi) {
    auto tc = hirzebruch(Rat(1, 3));
    auto W = build_potential(tc, 2);
    auto mc = mirror_classes(tc, W);
    EXPECT_EQ(mc.r, Rat(1, 3));
    EXPECT_EQ(mc.psi, sec({{ivec({1, 0}), {1, 0}}, {ivec({0, 1}), {1, 0}}}));
    Section third;
    for (const auto& [b, c] : W.terms) third[b] = Coeff{c.mult / 3, c.log};
    EXPECT_EQ(mc.theta, third);
}

TEST(JacobiLeading, PsiIsSumOverNonFiberRays) {
    for (const auto& tc : {normal_cone(Rat(1, 2)), hirzebruch(Rat(1, 3))}) {
        auto W = build_potential(tc, 1);
        Section want;
        for (const auto& [b, c] : W.terms)
            if (dot(tc.lambda(), b) != 0) want[b] = c;
        EXPECT_EQ(mirror_classes(tc, W).psi, want);
    }
}

TEST(JacobiLeading, ThetaScalingForAnticanonicalMultiples) {
    auto F = fan_from_cyclic_rays({ivec({1, 0}), ivec({1, 1}), ivec({0, 1}), ivec({-1, 0}), ivec({-1, -1}), ivec({0, -1})});
    for (const Rat& r : {Rat(1, 2), Rat(2, 7), Rat(3)}) {
        auto L = shift_by_character(F, scale(-r, canonical_divisor(F)), QVec{Rat(1, 3), Rat(-2)});
        auto rr = anticanonical_multiple(F, L);
        ASSERT_TRUE(rr);
        EXPECT_EQ(*rr, r);
        auto W = potential_from_divisor(F, L, 1);
        auto th = divisor_to_jacobi_leading(F, scale(-*rr, canonical_divisor(F)), W);
        for (const auto& [b, c] : W.terms) EXPECT_EQ(th.at(b), (Coeff{r * c.mult, c.log}));
    }
    auto L = canonical_divisor(F);
    L.coeffs[0] += 1;
    EXPECT_FALSE(anticanonical_multiple(F, L));
}

TEST(NewtonPolytope, Examples) {
    auto Wn = build_potential(normal_cone(Rat(1, 2)), 1);
    auto P = newton_polytope(Wn);
    EXPECT_EQ(P.vertices.size(), 5u);
    EXPECT_EQ(normalized_volume(P), 5);
    EXPECT_EQ(Rat(normalized_volume(P)), shoelace2(P));
    auto Ph = newton_polytope(build_potential(hirzebruch(Rat(1, 3)), 1));
    EXPECT_EQ(normalized_volume(Ph), 4);
    EXPECT_EQ(Rat(normalized_volume(Ph)), shoelace2(Ph));
    LGPotential one;
    one.dim = 2;
    one.terms = sec({{ivec({2, 1}), {1, 0}}});
    auto pt = newton_polytope(one);
    EXPECT_EQ(pt.dim, 0u);
    EXPECT_EQ(normalized_volume(pt), 0);
}
