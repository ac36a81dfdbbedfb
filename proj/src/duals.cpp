#include "toric/duals.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

Cx cx(const Rat& q) { return Cx(from_rat(q)); }

Real sup_norm(const CxVec& F) {
    Real m = 0;
    for (const auto& x : F) m = std::max<Real>(m, abs(x));
    return m;
}

Cx root(const Cx& z, std::size_t n) {
    if (z.re == 0 && z.im == 0) return Cx(0);
    return exp(log(z) / Cx(static_cast<int>(n)));
}

std::vector<Rat> fractions(int max_den) {
    std::set<Rat> s;
    for (int q = 1; q <= max_den; ++q)
        for (int p = -q; p <= q; ++p) s.insert(Rat(p, q));
    return {s.begin(), s.end()};
}

std::vector<QVec> rational_grid(std::size_t dim, int max_den) {
    auto fr = fractions(max_den);
    std::vector<QVec> out;
    QVec cur(dim);
    std::vector<std::size_t> idx(dim, 0);
    while (true) {
        for (std::size_t i = 0; i < dim; ++i) cur[i] = fr[idx[i]];
        out.push_back(cur);
        std::size_t i = 0;
        while (i < dim && ++idx[i] == fr.size()) idx[i++] = 0;
        if (i == dim) break;
    }
    auto key = [](const QVec& v) {
        Int den = 1;
        Rat l1 = 0;
        for (const auto& x : v) {
            den = std::max(den, Int(denominator(x)));
            l1 += abs(x);
        }
        return std::make_pair(den, l1);
    };
    std::stable_sort(out.begin(), out.end(), [&](const QVec& a, const QVec& b) {
        auto ka = key(a), kb = key(b);
        if (ka != kb) return ka < kb;
        return a < b;
    });
    return out;
}

std::vector<std::size_t> rays_of_points(const Fan& F, std::size_t ray) {
    std::vector<std::size_t> nb;
    for (const auto& c : F.max_cones)
        if (std::find(c.begin(), c.end(), ray) != c.end())
            for (auto r : c)
                if (r != ray && std::find(nb.begin(), nb.end(), r) == nb.end()) nb.push_back(r);
    return nb;
}

std::size_t contains_ray(const ConeIdx& c, std::size_t r) { return std::find(c.begin(), c.end(), r) != c.end(); }

}  // namespace

Grouping cone_grouping(const Fan& F, const IVec& functional) {
    Grouping g(2);
    for (std::size_t c = 0; c < F.max_cones.size(); ++c) {
        bool pos = false, neg = false;
        for (auto r : F.max_cones[c]) {
            Int s = dot(functional, F.rays[r]);
            if (s > 0) pos = true;
            if (s < 0) neg = true;
        }
        if (pos && neg) throw Error("NotAFibration", "a max cone straddles the hyperplane of " + to_string(functional));
        g[neg ? 1 : 0].push_back(c);
    }
    if (g[0].empty() || g[1].empty()) throw Error("NotAFibration", "functional leaves one side empty");
    return g;
}

IVec fibration_functional(const Fan& F, const std::optional<IVec>& preferred) {
    std::vector<IVec> candidates;
    if (preferred) candidates.push_back(*preferred);
    if (F.dim == 2)
        for (const auto& r : cyclic_order(F.rays))
            if (F.ray_index(neg(r))) candidates.push_back(primitive(IVec{Int(-r[1]), r[0]}));
    for (const auto& mu : candidates) {
        try {
            cone_grouping(F, mu);
            return mu;
        } catch (const Error&) {
        }
    }
    throw Error("NoFibration", "no functional splits the fan into two half-space groups");
}

Grouping point_grouping(const Fan& F, const Grouping& cones) {
    auto pts = fixed_points(F);
    Grouping out(cones.size());
    for (std::size_t g = 0; g < cones.size(); ++g)
        for (auto c : cones[g]) {
            if (c >= F.max_cones.size()) throw Error("InvalidGrouping", "cone index out of range");
            for (std::size_t i = 0; i < pts.size(); ++i)
                if (pts[i].cone == F.max_cones[c]) out[g].push_back(i);
        }
    return out;
}

std::vector<DualTestConfiguration> build_duals(const Compactification& comp, const Grouping& cones) {
    const Fan& A = comp.ambient_fan;
    auto apts = fixed_points(A);
    auto pieces = subfan_split(A, cones);
    std::vector<DualTestConfiguration> out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        DualTestConfiguration d;
        d.id = i;
        d.piece = pieces[i];
        d.functional = d.piece.lambda;
        const Fan& F = d.piece.fan;
        for (std::size_t r = 0; r < F.rays.size(); ++r) {
            if (d.functional.empty()) continue;
            Int s = dot(d.functional, F.rays[r]);
            if (s > 0) d.central_rays.push_back(r);
            if (s == 0) d.fiber_rays.push_back(r);
        }
        for (const auto& c : d.piece.central_cones) {
            d.central.push_back(fixed_point(F, c));
            ConeIdx ac;
            for (auto r : c) ac.push_back(d.piece.ray_from_input[r]);
            std::sort(ac.begin(), ac.end());
            std::size_t k = npos;
            for (std::size_t j = 0; j < apts.size(); ++j)
                if (apts[j].cone == ac) k = j;
            d.ambient_point.push_back(k);
        }
        out.push_back(std::move(d));
    }
    return out;
}

RankInequalityReport rank_inequality_check(const DualTestConfiguration& dtc, std::size_t ray) {
    const Fan& F = dtc.fan();
    if (std::find(dtc.central_rays.begin(), dtc.central_rays.end(), ray) == dtc.central_rays.end())
        throw Error("NotCentral", "divisor must lie in the central fibre");
    RankInequalityReport r;
    long dim = static_cast<long>(F.dim);
    r.h11 = static_cast<long>(F.rays.size()) - dim;
    r.dim_d_perp = r.h11 - (static_cast<long>(rays_of_points(F, ray).size()) - (dim - 1));
    r.n_plus_1 = dim;
    r.z_count = static_cast<long>(dtc.central.size());
    for (const auto& p : dtc.central)
        if (contains_ray(p.cone, ray)) ++r.f_d;
    r.lhs = r.h11 + r.dim_d_perp + r.n_plus_1;
    r.rhs = 2 * r.z_count - r.f_d;
    r.holds = r.lhs > r.rhs;
    r.comparison = std::to_string(r.lhs) + (r.holds ? " > " : " <= ") + std::to_string(r.rhs);
    return r;
}

std::optional<std::size_t> psi_divisor(const DualTestConfiguration& dtc, const ResidueReport& rep) {
    std::optional<std::size_t> best;
    std::size_t best_count = 0;
    for (auto r : dtc.central_rays) {
        std::size_t count = 0;
        bool ok = true;
        for (std::size_t j = 0; j < dtc.central.size(); ++j) {
            if (!contains_ray(dtc.central[j].cone, r) || dtc.ambient_point[j] == npos) continue;
            if (rep.points.at(dtc.ambient_point[j]).psi != 1) ok = false;
            ++count;
        }
        if (ok && count > best_count) {
            best = r;
            best_count = count;
        }
    }
    return best;
}

std::vector<TargetRow> prescribed_targets(const DualTestConfiguration& dtc, const ResidueReport& rep, const QVec& v) {
    std::size_t n1 = dtc.fan().dim;
    std::vector<TargetRow> out;
    for (std::size_t j = 0; j < dtc.central.size(); ++j) {
        TargetRow t;
        t.point = j;
        t.det = 1;
        Rat sw = 0;
        for (const auto& u : dtc.central[j].dual_basis) {
            Rat w = dot(v, u);
            t.det *= w;
            sw += w;
        }
        t.t = sw - 1;
        t.d = root(cx(t.det), n1);
        t.distinguished = dtc.ambient_point[j] != npos;
        if (t.distinguished) {
            const auto& row = rep.points.at(dtc.ambient_point[j]);
            t.theta = row.theta;
            t.psi = row.psi;
            t.f = row.f;
            t.H = t.d * cx(t.f * t.theta);
            t.K = -cx(t.t) - t.d * cx(t.f * (1 - t.psi));
        }
        out.push_back(t);
    }
    return out;
}

namespace {

struct System {
    const DualTestConfiguration* dtc;
    std::size_t dim, R, q, n;
    std::vector<std::vector<Cx>> xi_basis;  // R x q
    std::vector<Cx> xi_base;
    std::vector<Cx> ref_det, ref_root;
    std::vector<Rat> theta, psi, f;
    std::vector<bool> dist;
    bool gauge;
    Cx c;

    std::vector<Cx> weights(const CxVec& v, std::size_t j) const {
        std::vector<Cx> w;
        for (const auto& u : dtc->central[j].dual_basis) {
            Cx s;
            for (std::size_t i = 0; i < dim; ++i) s += v[i] * Cx(Real(u[i].str()));
            w.push_back(s);
        }
        return w;
    }
    CxVec xi_of(const CxVec& z) const {
        CxVec xi = xi_base;
        for (std::size_t r = 0; r < R; ++r)
            for (std::size_t k = 0; k < q; ++k) xi[r] += xi_basis[r][k] * z[dim + R + k];
        return xi;
    }
    Cx ham(const CxVec& coeffs, const std::vector<Cx>& w, std::size_t j) const {
        Cx h;
        const auto& cone = dtc->central[j].cone;
        for (std::size_t i = 0; i < cone.size(); ++i) h = h - coeffs[cone[i]] * w[i];
        return h;
    }
    void targets(const std::vector<Cx>& w, std::size_t j, Cx& H, Cx& K) const {
        H = Cx(0);
        K = Cx(0);
        if (!dist[j]) return;
        Cx det(1), sw(0);
        for (const auto& x : w) {
            det = det * x;
            sw += x;
        }
        Cx d = ref_root[j] * root(det / ref_det[j], n + 1);
        H = d * cx(f[j] * theta[j]);
        K = -(sw - Cx(1)) - d * cx(f[j] * (1 - psi[j]));
    }
    CxVec residual(const CxVec& z) const {
        CxVec v(z.begin(), z.begin() + dim);
        CxVec eta(z.begin() + dim, z.begin() + dim + R);
        CxVec xi = xi_of(z);
        CxVec F;
        for (std::size_t j = 0; j < dtc->central.size(); ++j) {
            auto w = weights(v, j);
            Cx H, K;
            targets(w, j, H, K);
            F.push_back(ham(eta, w, j) - H);
            F.push_back(ham(xi, w, j) - K);
        }
        if (gauge) {
            Cx se, sx;
            for (auto r : dtc->fiber_rays) {
                se += eta[r];
                sx += xi[r];
            }
            F.push_back(Cx(static_cast<int>(dtc->fiber_rays.size())) - sx - c * se);
        }
        return F;
    }
};

CxMat jacobian(const System& S, const CxVec& z, const Real& h) {
    std::size_t m = S.residual(z).size();
    CxMat J(m, CxVec(z.size()));
    for (std::size_t k = 0; k < z.size(); ++k) {
        CxVec zp = z, zm = z;
        zp[k] += Cx(h);
        zm[k] = zm[k] - Cx(h);
        auto Fp = S.residual(zp), Fm = S.residual(zm);
        for (std::size_t i = 0; i < m; ++i) J[i][k] = (Fp[i] - Fm[i]) / Cx(Real(2 * h));
    }
    return J;
}

// minimum-norm damped step -J^H (J J^H + mu I)^{-1} F
CxVec step(const CxMat& J, const CxVec& F, const Real& mu) {
    std::size_t m = J.size(), nz = J[0].size();
    CxMat A(m, CxVec(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Cx s;
            for (std::size_t k = 0; k < nz; ++k) s += J[i][k] * conj(J[j][k]);
            A[i][j] = s;
        }
    for (std::size_t i = 0; i < m; ++i) A[i][i] += Cx(mu);
    auto y = solve(A, F);
    CxVec d(nz);
    for (std::size_t k = 0; k < nz; ++k) {
        Cx s;
        for (std::size_t i = 0; i < m; ++i) s += conj(J[i][k]) * y[i];
        d[k] = -s;
    }
    return d;
}

std::vector<std::vector<Cx>> d_perp_basis(const Fan& F, std::size_t ray) {
    auto nb = rays_of_points(F, ray);
    std::vector<std::vector<Cx>> cols;
    for (std::size_t r = 0; r < F.rays.size(); ++r) {
        if (r == ray || std::find(nb.begin(), nb.end(), r) != nb.end()) continue;
        std::vector<Cx> c(F.rays.size());
        c[r] = Cx(1);
        cols.push_back(c);
    }
    for (std::size_t j = 0; j < F.dim; ++j) {
        std::vector<Cx> c(F.rays.size());
        for (std::size_t r = 0; r < F.rays.size(); ++r) c[r] = Cx(Real(F.rays[r][j].str()));
        cols.push_back(c);
    }
    std::vector<std::vector<Cx>> out(F.rays.size(), std::vector<Cx>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k)
        for (std::size_t r = 0; r < F.rays.size(); ++r) out[r][k] = cols[k][r];
    return out;
}

}  // namespace

HamiltonianSolution solve_hamiltonians(const DualTestConfiguration& dtc, const ResidueReport& rep, const Rat& slope,
                                       std::size_t fiber_dim, const HamiltonianOptions& opts) {
    unsigned old = set_working_precision(opts.precision_bits);
    struct Restore {
        unsigned b;
        ~Restore() { set_working_precision(b); }
    } restore{old};

    const Fan& F = dtc.fan();
    System S;
    S.dtc = &dtc;
    S.dim = F.dim;
    S.R = F.rays.size();
    S.n = fiber_dim;
    S.c = cx(slope);
    S.gauge = opts.slope_gauge && fiber_dim == 1;
    std::optional<std::size_t> divisor = opts.divisor ? opts.divisor : psi_divisor(dtc, rep);
    if (!divisor && !dtc.central_rays.empty()) divisor = dtc.central_rays.front();
    S.xi_base.assign(S.R, Cx(0));
    if (opts.xi_divisor_constraint) {
        if (!divisor) throw Error("NoCentralDivisor", "dual has no central divisor");
        S.xi_base[*divisor] = Cx(1);
        S.xi_basis = d_perp_basis(F, *divisor);
        S.q = S.xi_basis.empty() ? 0 : S.xi_basis[0].size();
    } else {
        S.q = S.R;
        S.xi_basis.assign(S.R, std::vector<Cx>(S.R));
        for (std::size_t r = 0; r < S.R; ++r) S.xi_basis[r][r] = Cx(1);
    }
    for (std::size_t j = 0; j < dtc.central.size(); ++j) {
        bool d = dtc.ambient_point[j] != npos;
        S.dist.push_back(d);
        S.theta.push_back(d ? rep.points.at(dtc.ambient_point[j]).theta : Rat(0));
        S.psi.push_back(d ? rep.points.at(dtc.ambient_point[j]).psi : Rat(0));
        S.f.push_back(d ? rep.points.at(dtc.ambient_point[j]).f : Rat(0));
    }

    Real tol(opts.tolerance);
    Real h = pow(Real(10), -static_cast<long>(opts.precision_bits) * 3 / 40);
    Real tiny = pow(Real(10), -static_cast<long>(opts.precision_bits) / 5);
    std::optional<Real> best_res;
    std::size_t tried = 0;
    for (const auto& v0 : opts.starts.empty() ? rational_grid(S.dim, opts.max_denominator) : opts.starts) {
        if (tried == opts.max_grid) break;
        bool generic = true;
        S.ref_det.clear();
        S.ref_root.clear();
        for (const auto& p : dtc.central) {
            Rat det = 1;
            for (const auto& u : p.dual_basis) det *= dot(v0, u);
            if (det == 0) generic = false;
            S.ref_det.push_back(cx(det));
            S.ref_root.push_back(root(cx(det), S.n + 1));
        }
        if (!generic) continue;
        ++tried;
        CxVec z(S.dim + S.R + S.q);
        for (std::size_t i = 0; i < S.dim; ++i) z[i] = cx(v0[i]);
        auto Fz = S.residual(z);
        Real res = sup_norm(Fz);
        Real mu = tiny;
        for (std::size_t it = 0; it < opts.max_iterations && res > tiny; ++it) {
            auto J = jacobian(S, z, h);
            if (!opts.free_v || it < opts.max_iterations / 2)
                for (auto& row : J)
                    for (std::size_t i = 0; i < S.dim; ++i) row[i] = Cx(0);
            bool improved = false;
            for (int attempt = 0; attempt < 40 && !improved; ++attempt) {
                CxVec d;
                try {
                    d = step(J, Fz, mu);
                } catch (const Error&) {
                    mu *= 100;
                    continue;
                }
                CxVec zn = z;
                for (std::size_t k = 0; k < z.size(); ++k) zn[k] += d[k];
                auto Fn = S.residual(zn);
                Real rn = sup_norm(Fn);
                if (rn < res) {
                    z = zn;
                    Fz = Fn;
                    res = rn;
                    improved = true;
                    mu = std::max<Real>(tiny, Real(mu / 10));
                } else {
                    mu = mu * 10 + tiny;
                }
            }
            if (!improved) break;
        }
        if (!best_res || res < *best_res) best_res = res;
        if (res > tol) continue;
        bool degenerate = false;
        for (std::size_t j = 0; j < dtc.central.size(); ++j)
            for (const auto& w : S.weights(CxVec(z.begin(), z.begin() + S.dim), j))
                if (abs(w) < Real(opts.min_weight)) degenerate = true;
        if (degenerate) continue;

        HamiltonianSolution sol;
        sol.v.assign(z.begin(), z.begin() + S.dim);
        sol.eta.assign(z.begin() + S.dim, z.begin() + S.dim + S.R);
        sol.xi = S.xi_of(z);
        sol.residual = res;
        sol.divisor = divisor;
        sol.slope = S.c;
        sol.grid_points_tried = tried;
        sol.xi_divisor_constraint = opts.xi_divisor_constraint;
        sol.slope_gauge = S.gauge;
        for (std::size_t j = 0; j < dtc.central.size(); ++j) {
            auto w = S.weights(sol.v, j);
            Cx H, K;
            S.targets(w, j, H, K);
            sol.H.push_back(H);
            sol.K.push_back(K);
            sol.h_eta.push_back(S.ham(sol.eta, w, j));
            sol.h_xi.push_back(S.ham(sol.xi, w, j));
        }
        if (fiber_dim == 1) {
            Cx se, sx;
            for (auto r : dtc.fiber_rays) {
                se += sol.eta[r];
                sx += sol.xi[r];
            }
            if (abs(se) > tiny) sol.dual_slope = (Cx(static_cast<int>(dtc.fiber_rays.size())) - sx) / se;
        }
        return sol;
    }
    std::string best = best_res ? to_decimal(*best_res, 6) : std::string("none");
    throw Error("NoSolutionFound", "no grid start reached the tolerance; best residual " + best,
                ErrorKind::SolverIncomplete);
}

Cx formal_twisted_df(const DualTestConfiguration& dtc, const HamiltonianSolution& sol, const Cx& slope,
                     std::size_t fiber_dim) {
    Cx a = slope * Cx(Real(static_cast<long>(fiber_dim)) / Real(static_cast<long>(fiber_dim + 1)));
    Cx total;
    for (std::size_t j = 0; j < dtc.central.size(); ++j) {
        Cx det(1), sw(0);
        for (const auto& u : dtc.central[j].dual_basis) {
            Cx w;
            for (std::size_t i = 0; i < u.size(); ++i) w += sol.v[i] * Cx(Real(u[i].str()));
            det = det * w;
            sw += w;
        }
        Cx h = sol.h_eta[j];
        total += pow(-h, fiber_dim) * (-(a * h) - sw + Cx(1) - sol.h_xi[j]) / det;
    }
    return total;
}

Theorem1Report assemble_theorem1(const ToricTestConfiguration& tc, const Rat& k, const Compactification& comp,
                                 const Grouping& cones, const HamiltonianOptions& opts) {
    auto rep = residue_decomposition(tc, k, comp, point_grouping(comp.ambient_fan, cones));
    std::size_t n = tc.fiber_dim();
    Rat c = slope_constant(tc.fiber_fan, tc.fiber_polarisation);
    Theorem1Report out;
    out.k = k;
    out.df = rep.df;
    out.residue_total = rep.total;
    for (auto& d : build_duals(comp, cones)) {
        Theorem1Row row;
        row.id = d.id;
        std::vector<std::pair<bool, bool>> ladder{{opts.xi_divisor_constraint, opts.slope_gauge}};
        if (opts.xi_divisor_constraint) ladder.push_back({false, opts.slope_gauge});
        if (opts.slope_gauge) ladder.push_back({false, false});
        std::optional<HamiltonianSolution> sol;
        for (const auto& [xc, ga] : ladder) {
            auto o = opts;
            o.xi_divisor_constraint = xc;
            o.slope_gauge = ga;
            try {
                sol = solve_hamiltonians(d, rep, c, n, o);
                break;
            } catch (const Error& e) {
                if (e.code() != "NoSolutionFound" || (xc == ladder.back().first && ga == ladder.back().second)) throw;
                row.relaxations.push_back(e.what());
            }
        }
        if (!sol->divisor) sol->divisor = psi_divisor(d, rep);
        if (sol->divisor) row.rank = rank_inequality_check(d, *sol->divisor);
        row.df = formal_twisted_df(d, *sol, cx(c), n);
        row.solution = std::move(*sol);
        row.residue_group_total = rep.group_totals.at(d.id);
        out.duals_total += row.df;
        out.rows.push_back(std::move(row));
    }
    out.defect = cx(out.df) - out.duals_total;
    return out;
}

Theorem1Report assemble_theorem1(const ToricTestConfiguration& tc, const Rat& k, const HamiltonianOptions& opts) {
    auto comp = build_compactification(build_potential(tc, k));
    auto mu = fibration_functional(comp.ambient_fan, tc.basis.row(0));
    return assemble_theorem1(tc, k, comp, cone_grouping(comp.ambient_fan, mu), opts);
}

namespace {

// dimension of the space of ray values that are linear on every max cone
long cartier_rank(const Fan& F) {
    QMat constraints;
    for (const auto& c : F.max_cones) {
        QMat Mt(F.dim, QVec(c.size()));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < F.dim; ++j) Mt[j][i] = Rat(F.rays[c[i]][j]);
        for (const auto& y : nullspace(Mt)) {
            QVec row(F.rays.size());
            for (std::size_t i = 0; i < c.size(); ++i) row[c[i]] = y[i];
            constraints.push_back(row);
        }
    }
    long r = constraints.empty() ? 0 : static_cast<long>(rank(constraints));
    return static_cast<long>(F.rays.size()) - r;
}

}  // namespace

std::vector<OrbifoldDual> orbifold_duals() {
    const std::vector<IVec> ell{ivec({2, -1}), ivec({-1, 2}), ivec({-1, 0}), ivec({0, -1})};
    const std::vector<IVec> ell_t{ivec({2, -1}), ivec({-1, 2}), ivec({1, -1}), ivec({-1, 1})};
    auto layer = [](const std::vector<IVec>& pts, long z) {
        std::vector<IVec> out;
        for (const auto& p : pts) out.push_back(ivec({static_cast<long>(p[0]), static_cast<long>(p[1]), z}));
        return out;
    };
    auto build = [&](const std::string& name, long apex, const std::vector<IVec>& a, long za,
                     const std::vector<IVec>& b, long zb, std::set<IVec> drop) {
        std::vector<IVec> pts{ivec({0, 0, apex})};
        for (const auto& p : layer(a, za))
            if (!drop.count(p)) pts.push_back(p);
        for (const auto& p : layer(b, zb))
            if (!drop.count(p)) pts.push_back(p);
        OrbifoldDual d;
        d.name = name;
        d.polytope = convex_hull(pts);
        Fan F = face_fan(d.polytope);
        d.rays = F.rays.size();
        d.class_group_rank = static_cast<long>(d.rays) - 3;
        d.picard_rank = cartier_rank(F) - 3;
        long side = apex < 0 ? 1 : -1;
        for (const auto& c : F.max_cones) {
            bool central = false;
            for (auto r : c)
                if (side * F.rays[r][2] > 0) central = true;
            if (central) ++d.central_fixed_points;
        }
        return d;
    };
    return {build("Q1", -1, ell, 0, ell, 1, {ivec({2, -1, 1}), ivec({0, -1, 1})}),
            build("Q2", -1, ell, 0, ell, 1, {ivec({-1, 2, 1}), ivec({-1, 0, 1})}),
            build("Q3", 1, ell_t, -1, ell, 0, {ivec({2, -1, -1}), ivec({1, -1, -1})}),
            build("Q4", 1, ell_t, -1, ell, 0, {ivec({-1, 2, -1}), ivec({-1, 1, -1})})};
}

}  // namespace toric
