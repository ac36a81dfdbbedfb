#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

namespace {

IVec wall_normal(const std::vector<IVec>& wall, std::size_t n) {
    if (n == 1) return ivec({1});
    QMat m = to_q(wall);
    auto ns = nullspace(m);
    if (ns.size() != 1) throw Error("DegenerateWall", "wall does not span a hyperplane");
    return primitive_of(ns[0]);
}

// deterministic points avoiding every wall hyperplane
std::vector<QVec> generic_points(const std::vector<IVec>& normals, std::size_t n) {
    std::vector<QVec> out;
    static const long primes[] = {1009, 2003, 3001, 4001, 5003, 6007, 7001, 8009, 9001, 10007};
    for (long shift = 0; out.size() < 4 && shift < 200; ++shift) {
        for (int sgn = 0; sgn < 4 && out.size() < 4; ++sgn) {
            QVec x(n);
            for (std::size_t i = 0; i < n; ++i) {
                long v = primes[(i + shift) % 10] + 17 * (long)i * shift;
                if ((sgn >> (i % 2)) & 1) v = -v;
                if (i == 0 && (sgn & 2)) v = -v;
                x[i] = Rat(v) / Rat(1 + (long)i * 13 + shift);
            }
            bool ok = std::all_of(normals.begin(), normals.end(), [&](const IVec& u) { return dot(x, u) != 0; });
            if (ok) out.push_back(x);
        }
    }
    return out;
}

}  // namespace

std::vector<IVec> Fan::cone_rays(const ConeIdx& c) const {
    std::vector<IVec> out;
    for (auto i : c) out.push_back(rays[i]);
    return out;
}

std::optional<std::size_t> Fan::ray_index(const IVec& r) const {
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (rays[i] == r) return i;
    return std::nullopt;
}

std::optional<std::size_t> Fan::cone_index(const ConeIdx& c) const {
    ConeIdx s = c;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < max_cones.size(); ++i)
        if (max_cones[i] == s) return i;
    return std::nullopt;
}

bool Fan::is_simplicial() const {
    return std::all_of(max_cones.begin(), max_cones.end(),
                       [&](const ConeIdx& c) { return rank(cone_rays(c)) == c.size(); });
}

bool Fan::is_smooth() const {
    if (!is_simplicial()) return false;
    return std::all_of(max_cones.begin(), max_cones.end(),
                       [&](const ConeIdx& c) { return is_smooth_cone(make_cone(cone_rays(c))); });
}

std::vector<std::pair<ConeIdx, std::vector<std::size_t>>> Fan::walls() const {
    std::map<ConeIdx, std::vector<std::size_t>> w;
    for (std::size_t ci = 0; ci < max_cones.size(); ++ci) {
        const auto& c = max_cones[ci];
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
            ConeIdx f;
            for (std::size_t j = 0; j < c.size(); ++j)
                if (j != drop) f.push_back(c[j]);
            w[f].push_back(ci);
        }
    }
    return {w.begin(), w.end()};
}

bool cone_contains(const std::vector<IVec>& gens, const QVec& x) {
    std::size_t n = x.size();
    // lower-dimensional cones have measure zero; only generic points are queried
    if (gens.size() != n || rank(gens) != n) return false;
    QMat G(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) G[i][j] = gens[j][i];
    QMat Gi = inverse(G);
    for (std::size_t i = 0; i < n; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < n; ++j) s += Gi[i][j] * x[j];
        if (s < 0) return false;
    }
    return true;
}

std::size_t Fan::containing_count(const QVec& x) const {
    std::size_t c = 0;
    for (const auto& mc : max_cones)
        if (cone_contains(cone_rays(mc), x)) ++c;
    return c;
}

bool Fan::is_complete() const {
    if (max_cones.empty()) return false;
    for (const auto& c : max_cones)
        if (c.size() != dim || rank(cone_rays(c)) != dim) return false;
    std::vector<IVec> normals;
    for (const auto& [w, cs] : walls()) {
        if (cs.size() != 2) return false;
        IVec u = wall_normal(cone_rays(w), dim);
        normals.push_back(u);
        int s[2];
        for (int k = 0; k < 2; ++k) {
            const auto& c = max_cones[cs[k]];
            std::size_t other = *std::find_if(c.begin(), c.end(), [&](std::size_t r) {
                return std::find(w.begin(), w.end(), r) == w.end();
            });
            s[k] = dot(rays[other], u) > 0 ? 1 : -1;
        }
        if (s[0] == s[1]) return false;
    }
    auto pts = generic_points(normals, dim);
    return !pts.empty() && containing_count(pts[0]) == 1;
}

Fan make_fan(std::vector<IVec> rays, std::vector<ConeIdx> cones) {
    Fan F;
    if (rays.empty()) throw Error("EmptyFan", "fan needs rays");
    F.dim = rays[0].size();
    for (auto& r : rays) {
        if (r.size() != F.dim) throw Error("DimensionMismatch", "ray length");
        if (is_zero(r)) throw Error("ZeroRay", "ray is zero");
        r = primitive(r);
    }
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = i + 1; j < rays.size(); ++j)
            if (rays[i] == rays[j]) throw Error("DuplicateRay", to_string(rays[i]));
    for (auto& c : cones) {
        std::sort(c.begin(), c.end());
        for (auto i : c)
            if (i >= rays.size()) throw Error("BadConeIndex", "cone references a missing ray");
    }
    F.rays = std::move(rays);
    F.max_cones = std::move(cones);
    if (!F.is_simplicial()) return F;
    std::vector<IVec> normals;
    for (const auto& [w, cs] : F.walls()) {
        if (cs.size() > 2) throw Error("FanOverlap", "wall shared by more than two cones");
        if (w.size() + 1 != F.dim) continue;
        IVec u = wall_normal(F.cone_rays(w), F.dim);
        normals.push_back(u);
        if (cs.size() == 2) {
            int s[2];
            for (int k = 0; k < 2; ++k) {
                const auto& c = F.max_cones[cs[k]];
                std::size_t other = *std::find_if(c.begin(), c.end(), [&](std::size_t r) {
                    return std::find(w.begin(), w.end(), r) == w.end();
                });
                s[k] = dot(F.rays[other], u) > 0 ? 1 : -1;
            }
            if (s[0] == s[1]) throw Error("FanOverlap", "two cones on the same side of a wall");
        }
    }
    for (const auto& x : generic_points(normals, F.dim))
        if (F.containing_count(x) > 1) throw Error("FanOverlap", "cones overlap");
    return F;
}

std::vector<IVec> cyclic_order(std::vector<IVec> rays) {
    auto half = [](const IVec& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; };
    std::sort(rays.begin(), rays.end(), [&](const IVec& u, const IVec& w) {
        int hu = half(u), hw = half(w);
        if (hu != hw) return hu < hw;
        return u[0] * w[1] - u[1] * w[0] > 0;
    });
    return rays;
}

Fan fan_from_cyclic_rays(const std::vector<IVec>& rays) {
    auto r = cyclic_order(rays);
    std::vector<ConeIdx> cones;
    for (std::size_t i = 0; i < r.size(); ++i) cones.push_back({i, (i + 1) % r.size()});
    return make_fan(r, cones);
}

Fan face_fan(const LatticePolytope& P) {
    if (!P.full_dimensional()) throw Error("OriginNotInterior", "polytope is not full-dimensional");
    for (const auto& f : P.facets)
        if (f.offset <= 0) throw Error("OriginNotInterior", "origin is not strictly interior");
    std::vector<IVec> rays;
    for (const auto& v : P.vertices) rays.push_back(primitive_of(v));
    std::vector<ConeIdx> cones;
    for (const auto& f : P.facets) {
        ConeIdx c;
        for (std::size_t i = 0; i < P.vertices.size(); ++i)
            if (dot(P.vertices[i], f.normal) == -f.offset) c.push_back(i);
        cones.push_back(c);
    }
    return make_fan(rays, cones);
}

Fan normal_fan(const LatticePolytope& P) {
    if (!P.full_dimensional()) throw Error("NotFullDimensional", "normal fan needs a full-dimensional polytope");
    std::vector<IVec> rays;
    for (const auto& f : P.facets) rays.push_back(f.normal);
    std::vector<ConeIdx> cones;
    for (const auto& v : P.vertices) cones.push_back(P.facets_at(v));
    return make_fan(rays, cones);
}

Fan product_fan(const Fan& A, const Fan& B) {
    std::vector<IVec> rays;
    for (const auto& r : A.rays) {
        IVec v = r;
        v.resize(A.dim + B.dim, Int(0));
        rays.push_back(v);
    }
    for (const auto& r : B.rays) {
        IVec v(A.dim, Int(0));
        v.insert(v.end(), r.begin(), r.end());
        rays.push_back(v);
    }
    std::vector<ConeIdx> cones;
    for (const auto& a : A.max_cones)
        for (const auto& b : B.max_cones) {
            ConeIdx c = a;
            for (auto j : b) c.push_back(A.rays.size() + j);
            cones.push_back(c);
        }
    return make_fan(rays, cones);
}

Fan projective_line_fan() { return make_fan({ivec({1}), ivec({-1})}, {{0}, {1}}); }

Fan projective_space_fan(std::size_t n) {
    std::vector<IVec> rays;
    IVec last(n, Int(-1));
    for (std::size_t i = 0; i < n; ++i) {
        IVec e(n, Int(0));
        e[i] = 1;
        rays.push_back(e);
    }
    rays.push_back(last);
    std::vector<ConeIdx> cones;
    for (std::size_t skip = 0; skip <= n; ++skip) {
        ConeIdx c;
        for (std::size_t i = 0; i <= n; ++i)
            if (i != skip) c.push_back(i);
        cones.push_back(c);
    }
    return make_fan(rays, cones);
}

Fan star_subdivide(const Fan& F, const ConeIdx& sigma0) {
    ConeIdx sigma = sigma0;
    std::sort(sigma.begin(), sigma.end());
    bool found = false;
    for (const auto& c : F.max_cones)
        if (std::includes(c.begin(), c.end(), sigma.begin(), sigma.end())) found = true;
    if (!found || sigma.empty()) throw Error("ConeNotInFan", "cone is not a face of the fan");
    if (sigma.size() == 1) return F;
    IVec s(F.dim, Int(0));
    for (auto i : sigma) s = add(s, F.rays[i]);
    IVec nr = primitive(s);
    std::vector<IVec> rays = F.rays;
    rays.push_back(nr);
    std::size_t ni = rays.size() - 1;
    std::vector<ConeIdx> cones;
    for (const auto& c : F.max_cones) {
        if (!std::includes(c.begin(), c.end(), sigma.begin(), sigma.end())) {
            cones.push_back(c);
            continue;
        }
        for (auto rho : sigma) {
            ConeIdx d;
            for (auto j : c)
                if (j != rho) d.push_back(j);
            d.push_back(ni);
            cones.push_back(d);
        }
    }
    return make_fan(rays, cones);
}

FanProjection classify_projection(const Fan& F, const IVec& lambda) {
    if (is_zero(lambda)) throw Error("NotAFibration", "lambda is zero");
    FanProjection P;
    P.base = projective_line_fan();
    P.functional = lambda;
    bool any = false;
    for (const auto& r : F.rays) {
        Int p = dot(lambda, r);
        if (p != 0) any = true;
        P.ray_classification.push_back(
            {p == 0 ? RayKind::Fiber : (p > 0 ? RayKind::OverZero : RayKind::OverInfinity), abs(p)});
    }
    if (!any) throw Error("NotAFibration", "lambda is orthogonal to every ray");
    for (const auto& c : F.max_cones) {
        bool pos = false, negv = false;
        for (auto i : c) {
            Int p = dot(lambda, F.rays[i]);
            pos |= p > 0;
            negv |= p < 0;
        }
        if (pos && negv) throw Error("NotAFibration", "a cone maps onto the whole line");
    }
    return P;
}

std::vector<ConeIdx> fiber_cones(const Fan& F, const IVec& lambda) {
    std::set<ConeIdx> faces;
    for (const auto& c : F.max_cones) {
        ConeIdx f;
        for (auto i : c)
            if (dot(lambda, F.rays[i]) == 0) f.push_back(i);
        if (!f.empty()) faces.insert(f);
    }
    std::vector<ConeIdx> out;
    for (const auto& f : faces) {
        bool maximal = std::none_of(faces.begin(), faces.end(), [&](const ConeIdx& g) {
            return g != f && std::includes(g.begin(), g.end(), f.begin(), f.end());
        });
        if (maximal) out.push_back(f);
    }
    return out;
}

namespace {

IVec infinity_ray(const IVec& lambda) {
    // primitive e with <lambda, e> = -1 and smallest norm, lex tie-break
    std::size_t n = lambda.size();
    IVec best;
    Int bestn = -1;
    long R = 3;
    IVec cur(n, Int(-R));
    while (true) {
        if (dot(lambda, cur) == -1) {
            Int nn = dot(cur, cur);
            if (bestn < 0 || nn < bestn || (nn == bestn && cur < best)) {
                best = cur;
                bestn = nn;
            }
        }
        std::size_t i = n;
        bool done = true;
        while (i > 0) {
            --i;
            if (cur[i] < R) {
                cur[i] += 1;
                for (std::size_t j = i + 1; j < n; ++j) cur[j] = -R;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    if (bestn < 0) throw Error("NonCompactifiableGroup", "lambda is not primitive");
    return best;
}

}  // namespace

std::vector<SplitPiece> subfan_split(const Fan& F, const std::vector<std::vector<std::size_t>>& grouping) {
    std::vector<SplitPiece> out;
    std::set<std::size_t> seen;
    for (const auto& g : grouping)
        for (auto c : g) {
            if (c >= F.max_cones.size() || !seen.insert(c).second)
                throw Error("BadGrouping", "grouping must partition the max cones");
        }
    if (seen.size() != F.max_cones.size()) throw Error("BadGrouping", "grouping must cover every max cone");
    std::size_t n = F.dim;
    for (std::size_t gi = 0; gi < grouping.size(); ++gi) {
        const auto& g = grouping[gi];
        auto fail = [&](const std::string& why) {
            throw Error("NonCompactifiableGroup", "group " + std::to_string(gi) + ": " + why);
        };
        if (g.size() == F.max_cones.size() && F.is_complete()) {
            SplitPiece p;
            p.fan = F;
            p.source_cones = g;
            for (std::size_t i = 0; i < F.rays.size(); ++i) p.ray_from_input.push_back(i);
            p.central_cones = F.max_cones;
            out.push_back(p);
            continue;
        }
        std::set<std::size_t> gr;
        for (auto c : g)
            for (auto r : F.max_cones[c]) gr.insert(r);
        std::vector<std::size_t> grays(gr.begin(), gr.end());
        // boundary walls of the group
        std::map<ConeIdx, int> wc;
        for (auto c : g) {
            const auto& mc = F.max_cones[c];
            for (std::size_t d = 0; d < mc.size(); ++d) {
                ConeIdx w;
                for (std::size_t j = 0; j < mc.size(); ++j)
                    if (j != d) w.push_back(mc[j]);
                wc[w]++;
            }
        }
        std::vector<ConeIdx> boundary;
        for (const auto& [w, k] : wc)
            if (k == 1) boundary.push_back(w);
        if (boundary.empty()) fail("group has no boundary");
        IVec lambda = wall_normal(F.cone_rays(boundary[0]), n);
        Int mn = 0, mx = 0;
        for (auto r : grays) {
            Int p = dot(lambda, F.rays[r]);
            mn = std::min(mn, p);
            mx = std::max(mx, p);
        }
        if (mn < 0 && mx > 0) fail("support is not a half-space");
        if (mx == 0) lambda = neg(lambda);
        for (const auto& w : boundary)
            for (auto r : w)
                if (dot(lambda, F.rays[r]) != 0) fail("boundary wall leaves the hyperplane");
        IVec einf = infinity_ray(lambda);
        SplitPiece p;
        p.lambda = lambda;
        p.source_cones = g;
        std::vector<IVec> rays;
        std::map<std::size_t, std::size_t> remap;
        for (auto r : grays) {
            remap[r] = rays.size();
            rays.push_back(F.rays[r]);
            p.ray_from_input.push_back(r);
        }
        rays.push_back(einf);
        p.ray_from_input.push_back(static_cast<std::size_t>(-1));
        std::vector<ConeIdx> cones;
        for (auto c : g) {
            ConeIdx d;
            for (auto r : F.max_cones[c]) d.push_back(remap[r]);
            std::sort(d.begin(), d.end());
            cones.push_back(d);
            p.central_cones.push_back(d);
        }
        for (const auto& w : boundary) {
            ConeIdx d;
            for (auto r : w) d.push_back(remap[r]);
            d.push_back(rays.size() - 1);
            cones.push_back(d);
        }
        try {
            p.fan = make_fan(rays, cones);
        } catch (const Error& e) {
            fail(e.what());
        }
        if (!p.fan.is_complete() || !p.fan.is_smooth()) fail("completion is not smooth and complete");
        out.push_back(std::move(p));
    }
    // generic fibres must agree
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i].lambda.empty() || out[0].lambda.empty()) continue;
        auto fr = [](const SplitPiece& p) {
            std::set<IVec> s;
            for (const auto& r : p.fan.rays)
                if (dot(p.lambda, r) == 0) s.insert(r);
            return s;
        };
        if (fr(out[i]) != fr(out[0]))
            throw Error("NonCompactifiableGroup", "group " + std::to_string(i) + ": fibre fan differs");
    }
    return out;
}

}  // namespace toric
