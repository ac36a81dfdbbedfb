#include "toric/boundary.hpp"

#include <algorithm>

namespace toric {

namespace {

Rat qdot(const QVec& m, const IVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < b.size(); ++i) s += m[i] * Rat(b[i]);
    return s;
}

std::optional<IVec> integral(const QVec& v) {
    IVec out;
    for (const auto& x : v) {
        if (denominator(x) != 1) return std::nullopt;
        out.push_back(numerator(x));
    }
    return out;
}

std::vector<IVec> exponents(const LGPotential& W) {
    std::vector<IVec> e;
    for (const auto& [b, c] : W.terms)
        if (c.mult != 0) e.push_back(b);
    return e;
}

// the divisor on G with the same coefficient for every ray already in F
ToricDivisor transfer(const Fan& F, const ToricDivisor& D, const Fan& G, const IVec& extra, const Rat& a_extra) {
    ToricDivisor out{std::vector<Rat>(G.rays.size())};
    for (std::size_t i = 0; i < G.rays.size(); ++i) {
        auto j = F.ray_index(G.rays[i]);
        out.coeffs[i] = j ? D.coeffs[*j] : (G.rays[i] == extra ? a_extra : Rat(0));
    }
    return out;
}

std::optional<EdgeLimit> edge_for(const Fan& ambient, const Fan& original, const LatticePolytope& P, const QVec& v,
                                  const ConeIdx& cone) {
    std::vector<IVec> normals;
    for (const auto& b : ambient.cone_rays(cone))
        if (original.ray_index(b)) normals.push_back(b);
    std::vector<QVec> others;
    for (const auto& w : P.vertices) {
        if (w == v) continue;
        bool on = std::all_of(normals.begin(), normals.end(), [&](const IVec& b) { return qdot(w, b) == qdot(v, b); });
        if (on) others.push_back(w);
    }
    if (others.size() != 1 || !is_edge(P, v, others[0])) return std::nullopt;
    auto a = integral(v), b = integral(others[0]);
    if (!a || !b) return std::nullopt;
    return EdgeLimit{*a, *b};
}

std::vector<IVec> positively_ordered(const Fan& F, const FixedPoint& p) {
    auto g = F.cone_rays(p.cone);
    auto M = IMat::from_rows(g);
    if (determinant(M) < 0) std::swap(g[0], g[1]);
    return g;
}

}  // namespace

Coeff vertex_coefficient(const Section& s, const Fan& F, const ToricDivisor& D, const FixedPoint& p) {
    auto v = integral(cone_vertex(F, D, p.cone));
    if (!v) return Coeff{0, 0};
    auto it = s.find(*v);
    return it == s.end() ? Coeff{0, 0} : it->second;
}

Compactification build_compactification(const LGPotential& W, std::size_t budget) {
    auto ex = exponents(W);
    if (ex.empty() || !convex_hull(ex).full_dimensional())
        throw Error("NotFullDimensional", "potential exponents do not span");
    Compactification c;
    c.container = delzant_container(ex);
    c.container_fan = normal_fan(c.container);
    auto D0 = divisor_of_polytope(c.container_fan, c.container);
    for (const auto& p : fixed_points(c.container_fan))
        if (vertex_coefficient(W.terms, c.container_fan, D0, p).mult == 0) c.base_points.push_back(p);

    Fan F = c.container_fan;
    ToricDivisor D = D0;
    std::size_t used = 0;
    while (true) {
        std::optional<FixedPoint> bad;
        for (const auto& p : fixed_points(F))
            if (vertex_coefficient(W.terms, F, D, p).mult == 0) {
                bad = p;
                break;
            }
        if (!bad) break;
        if (used++ == budget) throw Error("SubdivisionBudgetExceeded", "base locus not separated");
        QVec v = cone_vertex(F, D, bad->cone);
        IVec s(F.dim, Int(0));
        for (auto i : bad->cone) s = add(s, F.rays[i]);
        IVec nr = primitive(s);
        Fan G = star_subdivide(F, bad->cone);
        D = transfer(F, D, G, nr, -(qdot(v, nr) + 1));
        F = G;
        c.subdivided_at.push_back(v);
    }
    c.ambient_fan = F;
    c.cut = D;

    auto Dc = divisor_of_polytope(F, c.container);
    for (const auto& p : fixed_points(F)) {
        if (vertex_coefficient(W.terms, F, Dc, p).mult != 0) continue;
        auto e = edge_for(F, c.container_fan, c.container, cone_vertex(F, Dc, p.cone), p.cone);
        if (e) c.edges[p.cone] = *e;
    }
    return c;
}

Rat connection_residue(const LGPotential& W, const IVec& b) {
    std::optional<Rat> best;
    for (const auto& m : exponents(W)) {
        Rat d(dot(m, b));
        if (!best || d < *best) best = d;
    }
    if (!best) throw Error("EmptyPotential", "no terms");
    return *best;
}

int omega0_sign(const std::vector<IVec>& generators) {
    auto M = IMat::from_rows(generators);
    Int d = determinant(M);
    if (abs(d) != 1) throw Error("NonSmoothCone", "generators are not a lattice basis");
    return d > 0 ? 1 : -1;
}

int omega0_sign(const Fan& F, const FixedPoint& p) { return -omega0_sign(positively_ordered(F, p)); }

ResidueReport residue_decomposition(const ToricTestConfiguration& tc, const Rat& k, const Compactification& comp,
                                    const Grouping& grouping) {
    auto W = build_potential(tc, k);
    auto mc = mirror_classes(tc, W);
    std::size_t n = tc.fiber_dim();
    Rat c = slope_constant(tc.fiber_fan, tc.fiber_polarisation);
    Rat a = Rat(static_cast<long>(n)) * c / Rat(static_cast<long>(n + 1));
    const Fan& F = comp.ambient_fan;
    auto Dc = divisor_of_polytope(F, comp.container);
    auto pts = fixed_points(F);

    std::vector<std::size_t> group_of(pts.size(), 0);
    std::size_t groups = 1;
    if (!grouping.empty()) {
        std::vector<int> seen(pts.size(), 0);
        for (std::size_t g = 0; g < grouping.size(); ++g)
            for (auto i : grouping[g]) {
                if (i >= pts.size()) throw Error("InvalidGrouping", "fixed point index out of range");
                ++seen[i];
                group_of[i] = g;
            }
        if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; }))
            throw Error("InvalidGrouping", "grouping is not a partition of the fixed points");
        groups = grouping.size();
    }

    ResidueReport rep;
    rep.group_totals.assign(groups, Rat(0));
    for (std::size_t r = 0; r < F.rays.size(); ++r) {
        Rat res = connection_residue(W, F.rays[r]);
        if (denominator(res) == 1 && res <= 0) rep.nonpositive_integer_residues.push_back(F.rays[r]);
    }
    Rat sign = (n + 1) % 2 == 0 ? Rat(1) : Rat(-1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        ResiduePoint row;
        row.cone = p.cone;
        row.vertex = cone_vertex(F, Dc, p.cone);
        std::optional<EdgeLimit> e;
        if (auto it = comp.edges.find(p.cone); it != comp.edges.end()) e = it->second;
        row.theta = exact_value(ratio_at_fixed_point(mc.theta, W.terms, F, comp.container, p, e));
        row.psi = exact_value(ratio_at_fixed_point(mc.psi, W.terms, F, comp.container, p, e));
        row.omega0 = omega0_sign(F, p);
        row.connection = 1;
        for (const auto& b : F.cone_rays(p.cone)) row.connection *= connection_residue(W, b);
        row.f = row.connection * Rat(row.omega0 * row.omega0);
        Rat th_n = 1;
        for (std::size_t j = 0; j < n; ++j) th_n *= row.theta;
        row.term = sign * th_n * (a * row.theta - 1 + row.psi) * row.f;
        row.group = group_of[i];
        rep.group_totals[row.group] += row.term;
        rep.total += row.term;
        rep.points.push_back(row);
    }
    rep.df = df_intersection(tc);
    rep.boundary_remainder = rep.df - rep.total;
    return rep;
}

ResidueReport residue_decomposition(const ToricTestConfiguration& tc, const Rat& k, const Grouping& grouping) {
    return residue_decomposition(tc, k, build_compactification(build_potential(tc, k)), grouping);
}

VanishingReport vanishing_check(const ToricTestConfiguration& tc, const std::vector<Rat>& ks, const Rat& tolerance) {
    VanishingReport out;
    out.df = df_intersection(tc);
    for (const auto& k : ks) {
        auto W = build_potential(tc, k);
        auto mc = mirror_classes(tc, W);
        for (const auto& [b, c] : W.terms) {
            auto it = mc.theta.find(b);
            bool ok = it != mc.theta.end() && it->second.mult == mc.r * c.mult && it->second.log == c.log;
            if (!ok) throw Error("HypothesisFailed", "theta is not r W termwise", ErrorKind::HypothesisFailed);
        }
        if (mc.theta.size() != W.terms.size())
            throw Error("HypothesisFailed", "theta is not r W termwise", ErrorKind::HypothesisFailed);
        auto rep = residue_decomposition(tc, k);
        out.ks.push_back(k);
        out.residuals.push_back(abs(rep.boundary_remainder));
    }
    out.non_increasing = true;
    for (std::size_t i = 1; i < out.residuals.size(); ++i)
        if (out.residuals[i] > out.residuals[i - 1]) out.non_increasing = false;
    out.holds = out.non_increasing && !out.residuals.empty() && out.residuals.back() <= tolerance;
    return out;
}

}  // namespace toric
