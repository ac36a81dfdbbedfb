#include "toric/polytope.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace toric;

namespace {

std::vector<IVec> pts(std::vector<std::vector<long>> r) {
    std::vector<IVec> out;
    for (auto& x : r) {
        IVec v;
        for (long y : x) v.emplace_back(y);
        out.push_back(v);
    }
    return out;
}

std::vector<IVec> sorted(std::vector<IVec> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// twice the area by the shoelace formula over a cyclic vertex order
Int shoelace2(const std::vector<IVec>& cyc) {
    Int s = 0;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const auto& a = cyc[i];
        const auto& b = cyc[(i + 1) % cyc.size()];
        s += a[0] * b[1] - a[1] * b[0];
    }
    return abs(s);
}

const std::vector<IVec> kHexagon = pts({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});

}  // namespace

TEST(Hull, Square) {
    auto P = convex_hull(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    EXPECT_EQ(P.vertices.size(), 4u);
    EXPECT_EQ(P.dim, 2u);
    EXPECT_EQ(P.facets.size(), 4u);
}

TEST(Hull, InteriorPointsDropped) {
    auto P = convex_hull(pts({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {1, 0}}));
    EXPECT_EQ(P.vertices.size(), 4u);
}

TEST(Hull, ThreefoldPolytope) {
    auto P = convex_hull(pts({{1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {-1, 0, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, -1}}));
    EXPECT_EQ(P.vertices.size(), 7u);
    EXPECT_EQ(P.dim, 3u);
    // every vertex saturates at least dim facets
    for (const auto& v : P.vertices) EXPECT_GE(P.facets_at(v).size(), 3u);
}

TEST(Hull, Collinear) {
    auto P = convex_hull(pts({{0, 0}, {1, 0}, {2, 0}}));
    EXPECT_EQ(P.vertices.size(), 2u);
    EXPECT_EQ(P.dim, 1u);
    EXPECT_TRUE(P.contains(ivec({1, 0})));
    EXPECT_FALSE(P.contains(ivec({1, 1})));
}

TEST(Polar, ListedPolygon) {
    auto P = convex_hull(pts({{1, 0}, {0, 1}, {1, 1}, {-1, -1}}));
    auto D = polar_dual(P);
    EXPECT_EQ(sorted(D.lattice_vertices()), sorted(pts({{2, -1}, {-1, 2}, {-1, 0}, {0, -1}})));
    auto DD = polar_dual(D);
    EXPECT_EQ(sorted(DD.lattice_vertices()), sorted(P.lattice_vertices()));
}

TEST(Polar, SquareAndDiamond) {
    auto S = convex_hull(pts({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
    auto D = polar_dual(S);
    EXPECT_EQ(sorted(D.lattice_vertices()), sorted(pts({{1, 0}, {-1, 0}, {0, 1}, {0, -1}})));
    EXPECT_EQ(sorted(polar_dual(D).lattice_vertices()), sorted(S.lattice_vertices()));
}

TEST(Polar, OriginNotInterior) {
    auto T = convex_hull(pts({{0, 0}, {1, 0}, {0, 1}}));
    EXPECT_THROW(polar_dual(T), Error);
}

TEST(Polar, RationalDual) {
    auto T = convex_hull(pts({{2, 0}, {0, 2}, {-2, -2}}));
    auto D = polar_dual(T);
    EXPECT_FALSE(D.is_lattice());
    EXPECT_FALSE(is_reflexive(T));
}

TEST(Reflexive, Examples) {
    EXPECT_TRUE(is_reflexive(convex_hull(pts({{1, 0}, {0, 1}, {1, 1}, {-1, -1}}))));
    EXPECT_TRUE(is_reflexive(convex_hull(kHexagon)));
    EXPECT_TRUE(is_reflexive(
        convex_hull(pts({{1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {-1, 0, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, -1}}))));
}

TEST(Volume, Examples) {
    EXPECT_EQ(normalized_volume(convex_hull(pts({{0, 0}, {1, 0}, {0, 1}}))), 1);
    EXPECT_EQ(normalized_volume(convex_hull(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))), 1);
    auto nc = pts({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}});
    EXPECT_EQ(normalized_volume(convex_hull(nc)), 5);
    EXPECT_EQ(normalized_volume(convex_hull(pts({{1, 0}, {0, 1}, {1, 1}, {-1, -1}}))), 4);
}

TEST(Volume, ShoelaceOracleOnPolygons) {
    std::mt19937 g(23);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<IVec> ps;
        for (int i = 0; i < 6; ++i) ps.push_back(ivec({d(g), d(g)}));
        auto P = convex_hull(ps);
        if (!P.full_dimensional()) continue;
        // cyclic order around an interior rational point
        QVec c(2, Rat(0));
        for (const auto& v : P.vertices)
            for (int i = 0; i < 2; ++i) c[i] += v[i] / Rat(P.vertices.size());
        auto V = P.lattice_vertices();
        std::sort(V.begin(), V.end(), [&](const IVec& a, const IVec& b) {
            Rat ax = Rat(a[0]) - c[0], ay = Rat(a[1]) - c[1], bx = Rat(b[0]) - c[0], by = Rat(b[1]) - c[1];
            int ha = (ay < 0 || (ay == 0 && ax < 0)), hb = (by < 0 || (by == 0 && bx < 0));
            if (ha != hb) return ha < hb;
            return ax * by - ay * bx > 0;
        });
        EXPECT_EQ(normalized_volume(P), shoelace2(V));
    }
}

TEST(Volume, PickTheorem) {
    std::mt19937 g(29);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<IVec> ps;
        for (int i = 0; i < 5; ++i) ps.push_back(ivec({d(g), d(g)}));
        auto P = convex_hull(ps);
        if (!P.full_dimensional()) continue;
        auto L = lattice_points(P);
        Int interior = 0, boundary = 0;
        for (const auto& p : L) {
            bool on = false;
            for (const auto& f : P.facets)
                if (dot(to_q(p), f.normal) == -f.offset) on = true;
            (on ? boundary : interior) += 1;
        }
        EXPECT_EQ(normalized_volume(P), 2 * interior + boundary - 2);
    }
}

TEST(Volume, UnimodularInvariance3d) {
    auto P = pts({{1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {-1, 0, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, -1}});
    Int v = normalized_volume(convex_hull(P));
    std::mt19937 g(31);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        IMat A = IMat::identity(3);
        for (int s = 0; s < 6; ++s) {
            int i = trial % 3, j = (trial + 1 + s) % 3;
            if (i == j) continue;
            int f = d(g);
            for (int k = 0; k < 3; ++k) A(i, k) += f * A(j, k);
        }
        std::vector<IVec> img;
        for (const auto& p : P) {
            IVec q(3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) q[i] += A(i, j) * p[j];
            img.push_back(q);
        }
        EXPECT_EQ(normalized_volume(convex_hull(img)), v);
    }
}

TEST(LatticePoints, Examples) {
    EXPECT_EQ(lattice_points(convex_hull(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}))).size(), 4u);
    EXPECT_EQ(lattice_points(convex_hull(kHexagon)).size(), 7u);
    auto seg = lattice_points(convex_hull(pts({{0, 0}, {3, 0}})));
    EXPECT_EQ(seg.size(), 4u);
    EXPECT_TRUE(std::is_sorted(seg.begin(), seg.end()));
}

TEST(Delzant, NormalConeExponents) {
    auto C = delzant_container(pts({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}}));
    EXPECT_EQ(sorted(C.lattice_vertices()), sorted(kHexagon));
}

TEST(Delzant, HirzebruchExponents) {
    auto C = delzant_container(pts({{-1, -1}, {1, 0}, {0, 1}, {1, 1}}));
    EXPECT_EQ(sorted(C.lattice_vertices()), sorted(kHexagon));
}

TEST(Delzant, SinglePoint) {
    auto C = delzant_container(pts({{0, 0}}));
    EXPECT_EQ(normalized_volume(C), 1);
    EXPECT_TRUE(C.contains(ivec({0, 0})));
}

TEST(Delzant, OutputIsSmoothAndContainsInputs) {
    std::mt19937 g(37);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<IVec> ps;
        for (int i = 0; i < 4; ++i) ps.push_back(ivec({d(g), d(g)}));
        auto C = delzant_container(ps);
        EXPECT_TRUE(is_delzant(C));
        for (const auto& p : ps) EXPECT_TRUE(C.contains(p));
    }
}

TEST(PolarProperties, InvolutionAndInclusionReversalOnRandomReflexive) {
    std::vector<std::vector<IVec>> reflexive = {
        pts({{1, 0}, {0, 1}, {-1, -1}}),
        pts({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}),
        pts({{1, 0}, {0, 1}, {-1, 0}, {-1, -1}}),
        kHexagon,
        pts({{1, 0}, {0, 1}, {1, 1}, {-1, -1}}),
        pts({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}),
        pts({{2, -1}, {-1, 2}, {-1, -1}}),
        pts({{1, 0}, {-1, 2}, {-1, -1}})};
    std::mt19937 g(41);
    std::uniform_int_distribution<int> d(-2, 2);
    for (const auto& R : reflexive) {
        for (int t = 0; t < 3; ++t) {
            IMat A = IMat::identity(2);
            A(0, 1) = d(g);
            A(1, 0) = t == 1 ? d(g) : 0;
            if (abs(determinant(A)) != 1) A = IMat::identity(2);
            std::vector<IVec> img;
            for (const auto& p : R) img.push_back(ivec({0, 0}));
            for (std::size_t i = 0; i < R.size(); ++i)
                for (int r = 0; r < 2; ++r)
                    for (int c = 0; c < 2; ++c) img[i][r] += A(r, c) * R[i][c];
            auto P = convex_hull(img);
            ASSERT_TRUE(is_reflexive(P));
            auto D = polar_dual(P);
            EXPECT_TRUE(D.is_lattice());
            EXPECT_EQ(sorted(polar_dual(D).lattice_vertices()), sorted(P.lattice_vertices()));
            // P inside 2P, so (2P) dual sits inside D
            auto dilated = img;
            for (auto& v : dilated) v = scale(Int(2), v);
            auto Q = convex_hull(dilated);
            auto Qd = polar_dual(Q);
            for (const auto& v : Qd.vertices) EXPECT_TRUE(D.contains(v));
        }
    }
}

TEST(Edge, RestrictionFiltersMonomials) {
    auto H = convex_hull(kHexagon);
    Section s;
    s[ivec({1, 0})] = {Rat(1), Rat(0)};
    s[ivec({-1, 0})] = {Rat(1), Rat(-1)};
    s[ivec({0, -1})] = {Rat(1), Rat(-1)};
    auto r = edge_lattice_restriction(H, s, ivec({-1, 0}), ivec({-1, -1}));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r.begin()->first, 0);
    EXPECT_EQ(r.begin()->second.log, Rat(-1));
    auto full = edge_lattice_restriction(H, s, ivec({0, -1}), ivec({1, 0}));
    EXPECT_EQ(full.size(), 2u);
    auto none = edge_lattice_restriction(H, s, ivec({0, 1}), ivec({1, 1}));
    EXPECT_TRUE(none.empty());
    EXPECT_THROW(edge_lattice_restriction(H, s, ivec({1, 0}), ivec({-1, 0})), Error);
}

TEST(Cyclic, HexagonOrder) {
    auto V = polygon_cyclic_vertices(convex_hull(kHexagon));
    EXPECT_EQ(V, kHexagon);
}
