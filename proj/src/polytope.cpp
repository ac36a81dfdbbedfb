#include "toric/polytope.hpp"

#include <algorithm>
#include <functional>

namespace toric {

namespace {

std::vector<QVec> dedupe(std::vector<QVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

QVec qsub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// affine hull data: pivot coordinates on which projection is injective
struct AffineChart {
    std::size_t dim;
    std::vector<std::size_t> coords;
};

AffineChart chart_of(const std::vector<QVec>& pts) {
    QMat diffs;
    for (const auto& p : pts) diffs.push_back(qsub(p, pts[0]));
    // column pivots of the row space: rref of the transpose would give points, use the rows directly
    QMat m = diffs;
    std::vector<std::size_t> piv;
    std::size_t rows = m.size(), cols = pts[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return {piv.size(), piv};
}

QVec project(const QVec& p, const std::vector<std::size_t>& coords) {
    QVec r;
    for (auto c : coords) r.push_back(p[c]);
    return r;
}

void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            f(idx);
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= m; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

// full-dimensional hull by facet search over n-subsets
std::vector<Facet> full_dim_facets(const std::vector<QVec>& pts) {
    std::size_t n = pts[0].size();
    std::vector<Facet> out;
    auto add = [&](const IVec& normal) {
        Rat mn = dot(pts[0], normal);
        Rat mx = mn;
        for (const auto& p : pts) {
            Rat v = dot(p, normal);
            mn = std::min(mn, v);
            mx = std::max(mx, v);
        }
        for (int s : {1, -1}) {
            IVec nn = s == 1 ? normal : neg(normal);
            Rat lo = s == 1 ? mn : -mx;
            // all points satisfy <p,nn> >= lo; need n affinely independent points on the plane
            std::vector<QVec> on;
            for (const auto& p : pts)
                if (dot(p, nn) == lo) on.push_back(p);
            if (on.size() < n) continue;
            QMat d;
            for (const auto& p : on) d.push_back(qsub(p, on[0]));
            if (rank(d) != n - 1) continue;
            bool dup = std::any_of(out.begin(), out.end(), [&](const Facet& f) { return f.normal == nn; });
            if (!dup) out.push_back({nn, -lo});
        }
    };
    if (n == 1) {
        add(ivec({1}));
        return out;
    }
    for_each_subset(pts.size(), n, [&](const std::vector<std::size_t>& idx) {
        QMat d;
        for (std::size_t k = 1; k < idx.size(); ++k) d.push_back(qsub(pts[idx[k]], pts[idx[0]]));
        auto ns = nullspace(d);
        if (ns.size() != 1) return;
        add(primitive_of(ns[0]));
    });
    std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
    return out;
}

std::vector<QVec> vertices_from_facets(const std::vector<QVec>& pts, const std::vector<Facet>& facets) {
    std::vector<QVec> out;
    std::size_t n = pts[0].size();
    for (const auto& p : pts) {
        std::vector<IVec> normals;
        for (const auto& f : facets)
            if (dot(p, f.normal) == -f.offset) normals.push_back(f.normal);
        if (!normals.empty() && rank(normals) == n) out.push_back(p);
    }
    return out;
}

}  // namespace

bool LatticePolytope::is_lattice() const {
    return std::all_of(vertices.begin(), vertices.end(), [](const QVec& v) { return is_integral(v); });
}

std::vector<IVec> LatticePolytope::lattice_vertices() const {
    std::vector<IVec> out;
    for (const auto& v : vertices) out.push_back(to_int(v));
    return out;
}

bool LatticePolytope::contains(const QVec& p) const {
    if (full_dimensional()) {
        for (const auto& f : facets)
            if (dot(p, f.normal) < -f.offset) return false;
        return true;
    }
    std::vector<QVec> pts = vertices;
    pts.push_back(p);
    if (chart_of(pts).dim != dim) return false;
    if (dim == 0) return p == vertices[0];
    auto ch = chart_of(vertices);
    std::vector<QVec> proj;
    for (const auto& v : vertices) proj.push_back(project(v, ch.coords));
    auto sub_hull = convex_hull_q(proj);
    return sub_hull.contains(project(p, ch.coords));
}

std::vector<std::size_t> LatticePolytope::facets_at(const QVec& v) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < facets.size(); ++i)
        if (dot(v, facets[i].normal) == -facets[i].offset) out.push_back(i);
    return out;
}

LatticePolytope convex_hull_q(const std::vector<QVec>& input) {
    if (input.empty()) throw Error("EmptyInput", "convex hull of an empty point set");
    auto pts = dedupe(input);
    LatticePolytope P;
    P.ambient = pts[0].size();
    auto ch = chart_of(pts);
    P.dim = ch.dim;
    if (P.dim == 0) {
        P.vertices = {pts[0]};
        return P;
    }
    if (P.dim == P.ambient) {
        P.facets = full_dim_facets(pts);
        P.vertices = vertices_from_facets(pts, P.facets);
        return P;
    }
    std::vector<QVec> proj;
    for (const auto& p : pts) proj.push_back(project(p, ch.coords));
    auto sub = convex_hull_q(proj);
    for (const auto& p : pts)
        if (std::find(sub.vertices.begin(), sub.vertices.end(), project(p, ch.coords)) != sub.vertices.end())
            P.vertices.push_back(p);
    return P;
}

LatticePolytope convex_hull(const std::vector<IVec>& points) {
    std::vector<QVec> q;
    for (const auto& p : points) q.push_back(to_q(p));
    return convex_hull_q(q);
}

namespace {
void require_origin_interior(const LatticePolytope& P) {
    if (!P.full_dimensional()) throw Error("OriginNotInterior", "polytope is not full-dimensional");
    for (const auto& f : P.facets)
        if (f.offset <= 0) throw Error("OriginNotInterior", "origin is not strictly interior");
}
}  // namespace

LatticePolytope polar_dual(const LatticePolytope& P) {
    require_origin_interior(P);
    std::vector<QVec> pts;
    for (const auto& f : P.facets) {
        QVec v = to_q(f.normal);
        for (auto& x : v) x /= f.offset;
        pts.push_back(v);
    }
    return convex_hull_q(pts);
}

bool is_reflexive(const LatticePolytope& P) {
    require_origin_interior(P);
    if (!P.is_lattice()) return false;
    return std::all_of(P.facets.begin(), P.facets.end(), [](const Facet& f) { return f.offset == 1; });
}

std::vector<std::vector<QVec>> triangulate(const LatticePolytope& P) {
    std::vector<std::vector<QVec>> out;
    const auto& V = P.vertices;
    if (V.size() == P.dim + 1) {
        out.push_back(V);
        return out;
    }
    // work in a chart where the polytope is full-dimensional
    auto ch = chart_of(V);
    std::vector<QVec> proj;
    for (const auto& v : V) proj.push_back(project(v, ch.coords));
    auto Q = convex_hull_q(proj);
    const QVec& v0 = V[0];
    QVec pv0 = project(v0, ch.coords);
    for (const auto& f : Q.facets) {
        if (dot(pv0, f.normal) == -f.offset) continue;
        std::vector<QVec> face;
        for (std::size_t i = 0; i < V.size(); ++i)
            if (dot(proj[i], f.normal) == -f.offset) face.push_back(V[i]);
        auto F = convex_hull_q(face);
        for (auto& s : triangulate(F)) {
            s.insert(s.begin(), v0);
            out.push_back(std::move(s));
        }
    }
    return out;
}

Int normalized_volume(const LatticePolytope& P) {
    if (!P.full_dimensional()) return 0;
    Rat total = 0;
    std::size_t n = P.ambient;
    for (const auto& s : triangulate(P)) {
        QMat d;
        for (std::size_t k = 1; k < s.size(); ++k) d.push_back(qsub(s[k], s[0]));
        // rational determinant via elimination
        Rat det = 1;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && d[p][c] == 0) ++p;
            if (p == n) {
                det = 0;
                break;
            }
            if (p != c) {
                std::swap(d[p], d[c]);
                det = -det;
            }
            det *= d[c][c];
            for (std::size_t i = c + 1; i < n; ++i) {
                Rat f = d[i][c] / d[c][c];
                for (std::size_t j = c; j < n; ++j) d[i][j] -= f * d[c][j];
            }
        }
        total += abs(det);
    }
    if (denominator(total) != 1) throw Error("NotLattice", "normalized volume is fractional");
    return numerator(total);
}

std::vector<IVec> lattice_points(const LatticePolytope& P) {
    std::size_t n = P.ambient;
    IVec lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat mn = P.vertices[0][i], mx = mn;
        for (const auto& v : P.vertices) {
            mn = std::min(mn, v[i]);
            mx = std::max(mx, v[i]);
        }
        Int fl = numerator(mn) / denominator(mn);
        if (Rat(fl) > mn) fl -= 1;
        Int ce = numerator(mx) / denominator(mx);
        if (Rat(ce) < mx) ce += 1;
        lo[i] = fl;
        hi[i] = ce;
    }
    std::vector<IVec> out;
    IVec cur = lo;
    while (true) {
        if (P.contains(cur)) out.push_back(cur);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (cur[i] < hi[i]) {
                cur[i] += 1;
                for (std::size_t j = i + 1; j < n; ++j) cur[j] = lo[j];
                break;
            }
            if (i == 0) return out;
        }
        if (n == 0) return out;
    }
}

bool is_delzant(const LatticePolytope& P) {
    if (!P.full_dimensional() || !P.is_lattice()) return false;
    for (const auto& v : P.vertices) {
        auto idx = P.facets_at(v);
        if (idx.size() != P.ambient) return false;
        std::vector<IVec> normals;
        for (auto i : idx) normals.push_back(P.facets[i].normal);
        if (abs(determinant(IMat::from_rows(normals))) != 1) return false;
    }
    return true;
}

DelzantChoice delzant_container_report(const std::vector<IVec>& points) {
    if (points.empty()) throw Error("EmptyInput", "no exponents");
    std::size_t n = points[0].size();
    std::vector<DelzantChoice> cands;
    auto H = convex_hull(points);
    if (is_delzant(H)) cands.push_back({H, "hull"});
    if (n == 2) {
        std::vector<std::pair<std::string, std::vector<IVec>>> templates = {
            {"hexagon", {ivec({1, 0}), ivec({1, 1}), ivec({0, 1}), ivec({-1, 0}), ivec({-1, -1}), ivec({0, -1})}},
            {"square", {ivec({1, 1}), ivec({-1, 1}), ivec({-1, -1}), ivec({1, -1})}},
            {"triangle", {ivec({-1, -1}), ivec({2, -1}), ivec({-1, 2})}}};
        for (const auto& [name, T] : templates)
            for (int s = 1; s <= 4; ++s) {
                std::vector<IVec> pts = points;
                for (const auto& t : T) pts.push_back(scale(Int(s), t));
                auto C = convex_hull(pts);
                if (is_delzant(C)) {
                    cands.push_back({C, name + (s > 1 ? "x" + std::to_string(s) : "")});
                    break;
                }
            }
    }
    IVec shift(n);
    for (std::size_t i = 0; i < n; ++i) {
        shift[i] = points[0][i];
        for (const auto& p : points) shift[i] = std::min(shift[i], p[i]);
    }
    Int s = 1;
    for (const auto& p : points) {
        Int t = 0;
        for (std::size_t i = 0; i < n; ++i) t += p[i] - shift[i];
        s = std::max(s, t);
    }
    std::vector<IVec> simplex = {shift};
    for (std::size_t i = 0; i < n; ++i) {
        IVec e = shift;
        e[i] += s;
        simplex.push_back(e);
    }
    cands.push_back({convex_hull(simplex), "simplex"});
    std::size_t best = 0;
    Int bv = normalized_volume(cands[0].polytope);
    for (std::size_t i = 1; i < cands.size(); ++i) {
        Int v = normalized_volume(cands[i].polytope);
        if (v < bv) {
            bv = v;
            best = i;
        }
    }
    return cands[best];
}

LatticePolytope delzant_container(const std::vector<IVec>& points) {
    return delzant_container_report(points).polytope;
}

bool is_edge(const LatticePolytope& P, const QVec& a, const QVec& b) {
    if (a == b) return false;
    auto has = [&](const QVec& v) { return std::find(P.vertices.begin(), P.vertices.end(), v) != P.vertices.end(); };
    if (!has(a) || !has(b)) return false;
    if (!P.full_dimensional()) return P.dim == 1;
    std::vector<IVec> normals;
    for (const auto& f : P.facets)
        if (dot(a, f.normal) == -f.offset && dot(b, f.normal) == -f.offset) normals.push_back(f.normal);
    return !normals.empty() ? rank(normals) == P.ambient - 1 : P.ambient == 1;
}

std::map<Int, Coeff> edge_lattice_restriction(const LatticePolytope& P, const Section& s, const IVec& a,
                                              const IVec& b) {
    if (!is_edge(P, to_q(a), to_q(b))) throw Error("NotAnEdge", to_string(a) + "-" + to_string(b));
    IVec dir = sub(b, a);
    IVec prim = primitive(dir);
    Int len = gcd_of(dir);
    std::map<Int, Coeff> out;
    for (const auto& [m, c] : s) {
        IVec d = sub(m, a);
        // d must be t * prim with 0 <= t <= len
        Int t = 0;
        std::size_t j = 0;
        while (j < prim.size() && prim[j] == 0) ++j;
        t = d[j] / prim[j];
        if (scale(t, prim) == d && t >= 0 && t <= len) out[t] = c;
    }
    return out;
}

std::vector<IVec> polygon_cyclic_vertices(const LatticePolytope& P) {
    if (P.ambient != 2 || !P.full_dimensional()) throw Error("NotAPolygon", "expected a full-dimensional polygon");
    for (const auto& f : P.facets)
        if (f.offset <= 0) throw Error("OriginNotInterior", "cyclic order is taken around the origin");
    auto V = P.lattice_vertices();
    auto half = [](const IVec& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; };
    std::sort(V.begin(), V.end(), [&](const IVec& u, const IVec& w) {
        int hu = half(u), hw = half(w);
        if (hu != hw) return hu < hw;
        return u[0] * w[1] - u[1] * w[0] > 0;
    });
    return V;
}

}  // namespace toric
