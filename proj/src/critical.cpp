#include "toric/critical.hpp"

#include <algorithm>

namespace toric {

namespace {

Cx coefficient_log(const Coeff& c, const Rat& k) {
    Real m = from_rat(c.mult);
    Cx out(boost::multiprecision::log(boost::multiprecision::abs(m)) + 2 * pi() * from_rat(k) * from_rat(c.log));
    if (m < 0) out.im = pi();
    return out;
}

Real halton(std::uint64_t i, unsigned base) {
    Real f = 1, r = 0;
    while (i > 0) {
        f /= base;
        r += f * static_cast<unsigned>(i % base);
        i /= base;
    }
    return r;
}

const unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

Cx dot_u(const IVec& b, const CxVec& u) {
    Cx s;
    for (std::size_t i = 0; i < b.size(); ++i) {
        long bi = b[i].convert_to<long>();
        s.re += bi * u[i].re;
        s.im += bi * u[i].im;
    }
    return s;
}

Real tolerance() {
    int d = static_cast<int>(working_precision() * 0.30103 * 0.4);
    return boost::multiprecision::pow(Real(10), -d);
}

// magnitude scale sum_b |term_b| * max|b_i| for relative residuals
Real residual_scale(const NumPotential& W, const CxVec& u) {
    Real s = 0;
    for (std::size_t t = 0; t < W.exps.size(); ++t) {
        Real m = boost::multiprecision::exp(W.kappa[t].re + dot_u(W.exps[t], u).re);
        Int mx = 0;
        for (const auto& x : W.exps[t]) mx = std::max(mx, Int(abs(x)));
        s += m * Real(mx.convert_to<long>());
    }
    return s;
}

Real vec_norm(const CxVec& v) {
    Real s = 0;
    for (const auto& x : v) s += norm(x);
    return boost::multiprecision::sqrt(s);
}

using RVec = std::vector<Real>;

// real parts where n+1 terms tie for the maximum of Re kappa_b + <b, rho>
std::vector<RVec> tropical_vertices(const NumPotential& W) {
    std::size_t n = W.dim, T = W.exps.size();
    std::vector<RVec> found;
    if (T < n + 1) return found;
    std::vector<bool> pick(T, false);
    std::fill(pick.begin(), pick.begin() + n + 1, true);
    do {
        CxMat A;
        CxVec rhs;
        for (std::size_t t = 0; t < T; ++t)
            if (pick[t]) {
                CxVec row;
                for (std::size_t i = 0; i < n; ++i) row.emplace_back(Real(W.exps[t][i].convert_to<long>()));
                row.emplace_back(Real(-1));
                A.push_back(row);
                rhs.emplace_back(-W.kappa[t].re);
            }
        if (abs(determinant(A)) == 0) continue;
        auto x = solve(A, rhs);
        RVec rho(n);
        for (std::size_t i = 0; i < n; ++i) rho[i] = x[i].re;
        Real top = x[n].re;
        bool ok = true;
        for (std::size_t t = 0; t < T && ok; ++t) {
            Real v = W.kappa[t].re;
            for (std::size_t i = 0; i < n; ++i) v += W.exps[t][i].convert_to<long>() * rho[i];
            if (v > top + Real(1e-12) * (1 + boost::multiprecision::abs(top))) ok = false;
        }
        if (!ok) continue;
        bool dup = std::any_of(found.begin(), found.end(), [&](const RVec& f) {
            for (std::size_t i = 0; i < n; ++i)
                if (boost::multiprecision::abs(f[i] - rho[i]) > Real(1e-12)) return false;
            return true;
        });
        if (!dup) found.push_back(rho);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(found.begin(), found.end());
    if (found.empty()) found.push_back(RVec(n, Real(0)));
    return found;
}

Real wrap_angle(const Real& a) {
    Real tp = 2 * pi();
    Real r = boost::multiprecision::fmod(a, tp);
    if (r < 0) r += tp;
    return r;
}

bool same_point(const CxVec& a, const CxVec& b, const Real& rad) {
    Real tp = 2 * pi();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (boost::multiprecision::abs(a[i].re - b[i].re) > rad) return false;
        Real d = boost::multiprecision::abs(a[i].im - b[i].im);
        if (std::min<Real>(d, Real(tp - d)) > rad) return false;
    }
    return true;
}

struct NewtonResult {
    CxVec u;
    Real residual;
    bool converged = false;
};

NewtonResult newton(const NumPotential& W, CxVec u, std::size_t max_it) {
    Real tol = tolerance();
    auto rel = [&](const CxVec& x) {
        Real s = residual_scale(W, x);
        return s == 0 ? Real(0) : vec_norm(log_gradient(W, x)) / s;
    };
    Real r = rel(u);
    for (std::size_t it = 0; it < max_it && r > tol; ++it) {
        CxVec step;
        try {
            CxVec g = log_gradient(W, u);
            for (auto& x : g) x = -x;
            step = solve(toric_hessian(W, u), g);
        } catch (const Error&) {
            break;
        }
        Real len = vec_norm(step);
        if (len > 2) for (auto& s : step) s = s * Cx(Real(2) / len);
        Real alpha = 1;
        bool moved = false;
        for (int h = 0; h < 40; ++h) {
            CxVec cand = u;
            for (std::size_t i = 0; i < u.size(); ++i) cand[i] = cand[i] + Cx(alpha) * step[i];
            Real rc = rel(cand);
            if (rc < r) {
                u = cand;
                r = rc;
                moved = true;
                break;
            }
            alpha /= 2;
        }
        if (!moved) break;
    }
    bool ok = r <= tol;
    for (int polish = 0; ok && polish < 3; ++polish) {
        try {
            CxVec g = log_gradient(W, u);
            for (auto& x : g) x = -x;
            auto step = solve(toric_hessian(W, u), g);
            CxVec cand = u;
            for (std::size_t i = 0; i < u.size(); ++i) cand[i] = cand[i] + step[i];
            Real rc = rel(cand);
            if (!(rc < r)) break;
            u = cand;
            r = rc;
        } catch (const Error&) {
            break;
        }
    }
    return {u, r, ok};
}

}  // namespace

NumPotential numeric_potential(const LGPotential& W) { return numeric_section(W.terms, W.k, W.dim); }

NumPotential numeric_section(const Section& g, const Rat& k, std::size_t dim) {
    NumPotential out;
    out.dim = dim;
    for (const auto& [b, c] : g) {
        if (c.mult == 0) continue;
        if (b.size() != dim) throw Error("DimensionMismatch", "exponent length");
        out.exps.push_back(b);
        out.kappa.push_back(coefficient_log(c, k));
    }
    return out;
}

Cx evaluate(const NumPotential& W, const CxVec& u) {
    Cx s;
    for (std::size_t t = 0; t < W.exps.size(); ++t) s += exp(W.kappa[t] + dot_u(W.exps[t], u));
    return s;
}

CxVec log_gradient(const NumPotential& W, const CxVec& u) {
    CxVec g(W.dim);
    for (std::size_t t = 0; t < W.exps.size(); ++t) {
        Cx m = exp(W.kappa[t] + dot_u(W.exps[t], u));
        for (std::size_t i = 0; i < W.dim; ++i) g[i] += Cx(Real(W.exps[t][i].convert_to<long>())) * m;
    }
    return g;
}

CxMat toric_hessian(const NumPotential& W, const CxVec& u) {
    CxMat H(W.dim, CxVec(W.dim));
    for (std::size_t t = 0; t < W.exps.size(); ++t) {
        Cx m = exp(W.kappa[t] + dot_u(W.exps[t], u));
        for (std::size_t i = 0; i < W.dim; ++i)
            for (std::size_t j = 0; j < W.dim; ++j)
                H[i][j] += Cx(Real((W.exps[t][i] * W.exps[t][j]).convert_to<long>())) * m;
    }
    return H;
}

long bkk_bound(const NumPotential& W) {
    if (W.exps.empty()) return 0;
    auto P = convex_hull(W.exps);
    if (!P.full_dimensional()) return 0;
    return normalized_volume(P).convert_to<long>();
}

long bkk_bound(const LGPotential& W) { return bkk_bound(numeric_potential(W)); }

CxMat fd_jacobian(const NumPotential& W, const CxVec& u, const Real& h) {
    CxMat J(W.dim, CxVec(W.dim));
    for (std::size_t j = 0; j < W.dim; ++j) {
        auto up = u, dn = u;
        up[j].re += h;
        dn[j].re -= h;
        auto gp = log_gradient(W, up), gm = log_gradient(W, dn);
        for (std::size_t i = 0; i < W.dim; ++i) J[i][j] = (gp[i] - gm[i]) / Cx(2 * h);
    }
    return J;
}

CriticalSearch find_critical_points(const NumPotential& W, const SolverOptions& opts) {
    unsigned old = set_working_precision(opts.precision_bits);
    CriticalSearch out;
    out.bkk = bkk_bound(W);
    std::size_t n = W.dim;
    if (out.bkk == 0) {
        out.complete = true;
        set_working_precision(old);
        return out;
    }
    auto centres = tropical_vertices(W);
    Real rad(opts.dedup_radius);
    std::uint64_t offset = opts.seed * 7919 + 1;
    for (std::size_t s = 0; s < opts.max_starts; ++s) {
        if (opts.stop_at_bkk && static_cast<long>(out.points.size()) >= out.bkk) break;
        const auto& c = centres[s % centres.size()];
        std::uint64_t h = offset + s / centres.size();
        CxVec u0(n);
        for (std::size_t i = 0; i < n; ++i) {
            Real jitter = s < centres.size() ? Real(0) : 2 * halton(h, kPrimes[2 * i]) - 1;
            u0[i] = Cx(c[i] + jitter, 2 * pi() * halton(h, kPrimes[2 * i + 1]));
        }
        ++out.starts_used;
        auto res = newton(W, u0, opts.max_iterations);
        if (!res.converged) continue;
        for (auto& x : res.u) x.im = wrap_angle(x.im);
        bool dup = std::any_of(out.points.begin(), out.points.end(),
                               [&](const CriticalPoint& p) { return same_point(p.log_coords, res.u, rad); });
        if (dup) continue;
        CriticalPoint p;
        p.log_coords = res.u;
        p.value = evaluate(W, res.u);
        auto H = toric_hessian(W, res.u);
        p.hessian_det = determinant(H);
        Real diag = 1;
        for (std::size_t i = 0; i < n; ++i) {
            Real s2 = 0;
            for (std::size_t t = 0; t < W.exps.size(); ++t) {
                Real m = boost::multiprecision::exp(W.kappa[t].re + dot_u(W.exps[t], res.u).re);
                long b = W.exps[t][i].convert_to<long>();
                s2 += m * b * b;
            }
            diag *= s2;
        }
        p.degenerate = diag == 0 || abs(p.hessian_det) / diag < Real(opts.degeneracy_threshold);
        p.residual = res.residual;
        out.points.push_back(p);
    }
    std::sort(out.points.begin(), out.points.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
        for (std::size_t i = 0; i < a.log_coords.size(); ++i) {
            if (a.log_coords[i].re != b.log_coords[i].re) return a.log_coords[i].re < b.log_coords[i].re;
            if (a.log_coords[i].im != b.log_coords[i].im) return a.log_coords[i].im < b.log_coords[i].im;
        }
        return false;
    });
    out.complete = static_cast<long>(out.points.size()) == out.bkk;
    set_working_precision(old);
    return out;
}

CriticalSearch find_critical_points(const LGPotential& W, const SolverOptions& opts) {
    unsigned old = set_working_precision(opts.precision_bits);
    auto N = numeric_potential(W);
    auto r = find_critical_points(N, opts);
    set_working_precision(old);
    return r;
}

CriticalSearch find_critical_points_strict(const LGPotential& W, const SolverOptions& opts) {
    auto r = find_critical_points(W, opts);
    if (!r.complete)
        throw Error("SolverIncomplete",
                    "found " + std::to_string(r.points.size()) + " of " + std::to_string(r.bkk) + " critical points",
                    ErrorKind::SolverIncomplete);
    return r;
}

StationaryPhaseReport check_stationary_phase(const NumPotential& W, const std::vector<CriticalPoint>& crit,
                                             std::optional<long> euler) {
    StationaryPhaseReport r;
    for (const auto& p : crit) {
        r.milnor_sum += p.multiplicity;
        if (p.degenerate) r.degenerate_points = true;
    }
    long sign = W.dim % 2 == 0 ? 1 : -1;
    if (euler) {
        r.euler_characteristic = *euler;
        r.euler_from_newton_polytope = false;
    } else {
        r.euler_characteristic = sign * bkk_bound(W);
    }
    r.holds = !r.degenerate_points && r.milnor_sum == sign * r.euler_characteristic;
    return r;
}

Cx grothendieck_residue(const NumPotential& g, const std::vector<CriticalPoint>& crit) {
    Cx total;
    for (const auto& p : crit) {
        if (p.degenerate) throw Error("DegenerateCriticalPoint", "residue needs nondegenerate critical points");
        total += evaluate(g, p.log_coords) / p.hessian_det;
    }
    return total;
}

Cx grothendieck_residue(const NumPotential& W, const NumPotential& g, const SolverOptions& opts) {
    unsigned old = set_working_precision(opts.precision_bits);
    auto s = find_critical_points(W, opts);
    if (!s.complete) {
        set_working_precision(old);
        throw Error("SolverIncomplete", "critical point search incomplete", ErrorKind::SolverIncomplete);
    }
    auto r = grothendieck_residue(g, s.points);
    set_working_precision(old);
    return r;
}

MirrorResidue df_mirror_residue(const ToricTestConfiguration& tc, const Rat& k, const SolverOptions& opts) {
    unsigned old = set_working_precision(opts.precision_bits);
    MirrorResidue out;
    auto W = build_potential(tc, k);
    out.classes = mirror_classes(tc, W);
    out.slope = slope_constant(tc.fiber_fan, tc.fiber_polarisation);
    std::size_t n = tc.fiber_dim();
    Rat a = Rat(static_cast<long>(n)) * out.slope / Rat(static_cast<long>(n + 1));
    auto NW = numeric_potential(W);
    out.search = find_critical_points(NW, opts);
    if (!out.search.complete) {
        set_working_precision(old);
        throw Error("SolverIncomplete", "critical point search incomplete", ErrorKind::SolverIncomplete);
    }
    auto th = numeric_section(out.classes.theta, k, W.dim);
    auto ps = numeric_section(out.classes.psi, k, W.dim);
    Cx ar(from_rat(a));
    for (const auto& p : out.search.points) {
        if (p.degenerate) {
            set_working_precision(old);
            throw Error("DegenerateCriticalPoint", "degenerate critical point");
        }
        Cx t = evaluate(th, p.log_coords);
        out.value += pow(t, n) * (ar * t - p.value + evaluate(ps, p.log_coords)) / p.hessian_det;
    }
    set_working_precision(old);
    return out;
}

}  // namespace toric
