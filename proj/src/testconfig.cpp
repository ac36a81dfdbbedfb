#include "toric/testconfig.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

Rat factorial(std::size_t n) {
    Rat f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= Rat(static_cast<long>(i));
    return f;
}

Rat qdet(QMat m) {
    std::size_t n = m.size();
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

Rat power(const Rat& x, std::size_t n) {
    Rat r = 1;
    for (std::size_t i = 0; i < n; ++i) r *= x;
    return r;
}

CRat power(const CRat& x, std::size_t n) {
    CRat r(1);
    for (std::size_t i = 0; i < n; ++i) r = r * x;
    return r;
}

// {x : <x, A_i> >= c_i}, vertices by brute force over n-subsets
std::vector<QVec> halfspace_vertices(const std::vector<QVec>& A, const std::vector<Rat>& c, std::size_t n) {
    std::vector<QVec> out;
    std::vector<std::size_t> idx(n);
    std::vector<bool> pick(A.size(), false);
    std::fill(pick.begin(), pick.begin() + std::min(n, A.size()), true);
    if (A.size() < n) return out;
    do {
        QMat M;
        QVec rhs;
        for (std::size_t i = 0; i < A.size(); ++i)
            if (pick[i]) {
                M.push_back(A[i]);
                rhs.push_back(c[i]);
            }
        if (rank(M) < n) continue;
        QMat Mi = inverse(M);
        QVec x(n, Rat(0));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < n; ++k) x[r] += Mi[r][k] * rhs[k];
        bool ok = true;
        for (std::size_t i = 0; i < A.size() && ok; ++i)
            if (dot(x, A[i]) < c[i]) ok = false;
        if (ok && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

struct Affine {
    QVec lin;
    Rat cst;
    Rat mult = 1;  // |<lambda, b>| of the ray
    bool operator<(const Affine& o) const { return std::tie(lin, cst) < std::tie(o.lin, o.cst); }
    Rat operator()(const QVec& m) const { return dot(m, lin) + cst; }
};

}  // namespace

QVec split_coordinates(const ToricTestConfiguration& tc, const IVec& b) {
    std::vector<IVec> rows;
    for (std::size_t i = 0; i < tc.basis.rows; ++i) rows.push_back(tc.basis.row(i));
    QMat Ui = inverse(to_q(rows));
    QVec c(b.size(), Rat(0));
    for (std::size_t j = 0; j < b.size(); ++j)
        for (std::size_t i = 0; i < b.size(); ++i) c[j] += Rat(b[i]) * Ui[i][j];
    return c;
}

ToricTestConfiguration make_test_configuration(const Fan& total, const IVec& lambda, const ToricDivisor& L) {
    if (L.coeffs.size() != total.rays.size()) throw Error("DimensionMismatch", "polarisation does not match fan");
    if (!total.is_smooth() || !total.is_complete())
        throw Error("NotRegular", "total space fan must be smooth and complete");
    ToricTestConfiguration tc;
    tc.total_fan = total;
    tc.projection = classify_projection(total, lambda);
    tc.polarisation = L;
    IMat col(lambda.size(), 1);
    for (std::size_t i = 0; i < lambda.size(); ++i) col(i, 0) = lambda[i];
    auto hnf = hermite_normal_form(col);
    if (hnf.H(0, 0) != 1) throw Error("NotPrimitive", "lambda must be primitive");
    tc.basis = hnf.U;

    std::vector<IVec> frays;
    std::vector<std::size_t> index(total.rays.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < total.rays.size(); ++i) {
        if (dot(lambda, total.rays[i]) != 0) continue;
        auto c = split_coordinates(tc, total.rays[i]);
        index[i] = frays.size();
        frays.push_back(to_int(QVec(c.begin() + 1, c.end())));
        tc.fiber_ray_source.push_back(i);
        tc.fiber_polarisation.coeffs.push_back(L.coeffs[i]);
    }
    std::vector<ConeIdx> fcones;
    for (const auto& c : fiber_cones(total, lambda)) {
        ConeIdx d;
        for (auto i : c) d.push_back(index[i]);
        std::sort(d.begin(), d.end());
        fcones.push_back(d);
    }
    if (frays.empty()) throw Error("NotAFibration", "no fiber rays");
    tc.fiber_fan = make_fan(frays, fcones);
    if (!tc.fiber_fan.is_complete()) throw Error("NotAFibration", "generic fiber is not complete");
    return tc;
}

bool is_nef(const Fan& F, const ToricDivisor& D) {
    for (const auto& [w, cones] : F.walls())
        if (intersection_with_curve(F, D, w) < 0) return false;
    return true;
}

bool is_ample(const Fan& F, const ToricDivisor& D) {
    for (const auto& [w, cones] : F.walls())
        if (intersection_with_curve(F, D, w) <= 0) return false;
    return true;
}

bool is_relatively_ample(const ToricTestConfiguration& tc) {
    const auto& F = tc.total_fan;
    for (const auto& [w, cones] : F.walls()) {
        bool vertical = std::any_of(w.begin(), w.end(), [&](std::size_t i) { return dot(tc.lambda(), F.rays[i]) != 0; });
        if (vertical && intersection_with_curve(F, tc.polarisation, w) <= 0) return false;
    }
    return true;
}

ToricTestConfiguration degeneration_to_normal_cone(const Fan& X, const ToricDivisor& L, const ConeIdx& center,
                                                   const Rat& r) {
    if (r < 0) throw Error("InvalidParameter", "r must be nonnegative");
    if (center.empty()) throw Error("InvalidParameter", "empty center");
    Fan T = product_fan(X, projective_line_fan());
    IVec lambda(X.dim + 1, Int(0));
    lambda[X.dim] = 1;
    ToricDivisor D = L;
    D.coeffs.push_back(0);
    D.coeffs.push_back(0);
    if (r == 0) return make_test_configuration(T, lambda, D);

    ConeIdx sigma = center;
    sigma.push_back(X.rays.size());
    std::sort(sigma.begin(), sigma.end());
    Fan B = star_subdivide(T, sigma);
    const IVec& bE = B.rays.back();
    ConeIdx host;
    for (const auto& c : T.max_cones)
        if (std::includes(c.begin(), c.end(), sigma.begin(), sigma.end())) host = c;
    auto p = fixed_point(T, host);
    Rat aE = 0;
    for (std::size_t i = 0; i < host.size(); ++i) aE += D.coeffs[host[i]] * Rat(dot(p.dual_basis[i], bE));
    D.coeffs.push_back(aE - r);
    auto tc = make_test_configuration(B, lambda, D);
    if (!is_relatively_ample(tc) || !is_ample(tc.fiber_fan, tc.fiber_polarisation))
        throw Error("InvalidParameter", "r is outside the admissible range");
    return tc;
}

Rat slope_constant(const Fan& X, const ToricDivisor& L) {
    std::vector<ToricDivisor> top(X.dim, L);
    Rat vol = intersection_number(X, top);
    if (vol == 0) throw Error("DegenerateVolume", "L^n vanishes");
    top[0] = scale(-1, canonical_divisor(X));
    return intersection_number(X, top) / vol;
}

ToricDivisor relative_canonical(const ToricTestConfiguration& tc) {
    ToricDivisor K = canonical_divisor(tc.total_fan);
    for (std::size_t i = 0; i < K.coeffs.size(); ++i) K.coeffs[i] += Rat(abs(dot(tc.lambda(), tc.total_fan.rays[i])));
    return K;
}

ToricDivisor fiber_class(const ToricTestConfiguration& tc) {
    ToricDivisor F{std::vector<Rat>(tc.total_fan.rays.size(), Rat(0))};
    for (std::size_t i = 0; i < F.coeffs.size(); ++i) {
        Int p = dot(tc.lambda(), tc.total_fan.rays[i]);
        if (p > 0) F.coeffs[i] = Rat(p);
    }
    return F;
}

FixedPointSide side_of(const ToricTestConfiguration& tc, const FixedPoint& p) {
    for (auto i : p.cone)
        if (dot(tc.lambda(), tc.total_fan.rays[i]) > 0) return FixedPointSide::OverZero;
    return FixedPointSide::OverInfinity;
}

Rat df_intersection(const ToricTestConfiguration& tc) {
    std::size_t n = tc.fiber_dim();
    Rat a = Rat(static_cast<long>(n)) * slope_constant(tc.fiber_fan, tc.fiber_polarisation) / Rat(static_cast<long>(n + 1));
    std::vector<ToricDivisor> top(n + 1, tc.polarisation);
    Rat vol = intersection_number(tc.total_fan, top);
    top[n] = relative_canonical(tc);
    return a * vol + intersection_number(tc.total_fan, top);
}

Rat df_localised(const ToricTestConfiguration& tc, const QVec& v) {
    std::size_t n = tc.fiber_dim();
    Rat lv = dot(v, tc.lambda());
    if (lv == 0) throw Error("InvalidParameter", "v must project to a nontrivial action on the base");
    Rat a = Rat(static_cast<long>(n)) * slope_constant(tc.fiber_fan, tc.fiber_polarisation) / Rat(static_cast<long>(n + 1));
    Rat total = 0;
    for (const auto& p : fixed_points(tc.total_fan)) {
        auto w = equivariant_weights(tc.total_fan, p, v);
        Rat e = 1, sw = 0;
        for (const auto& x : w) {
            e *= x;
            sw += x;
        }
        Rat H = hamiltonian_value(tc.total_fan, tc.polarisation, p, v);
        Rat eps = side_of(tc, p) == FixedPointSide::OverZero ? lv : -lv;
        total += power(H, n) * (a * H - sw + eps) / e;
    }
    return total;
}

std::vector<QVec> generic_vectors_for(const ToricTestConfiguration& tc, std::size_t count) {
    std::size_t n = tc.fiber_dim();
    std::vector<QVec> out;
    for (const auto& g0 : generic_vectors(n + 1, 4 * count + 8)) {
        QVec g(g0.begin() + 1, g0.end());
        QVec v = to_q(tc.basis.row(0));
        for (std::size_t j = 0; j < n; ++j) {
            auto k = tc.basis.row(j + 1);
            for (std::size_t i = 0; i <= n; ++i) v[i] += g[j] * Rat(k[i]);
        }
        if (!is_generic_for(tc.total_fan, v)) continue;
        out.push_back(v);
        if (out.size() == count) break;
    }
    if (out.size() < count) throw Error("ZeroWeight", "not enough generic vectors", ErrorKind::SolverIncomplete);
    return out;
}

Rat df_localised(const ToricTestConfiguration& tc) { return df_localised(tc, generic_vectors_for(tc, 1).front()); }

namespace {

ComplexDivisorClass restrict_to_fiber(const ToricTestConfiguration& tc, const ComplexDivisorClass& D) {
    if (D.coeffs.size() != tc.total_fan.rays.size()) throw Error("DimensionMismatch", "class does not match fan");
    ComplexDivisorClass out;
    for (auto i : tc.fiber_ray_source) out.coeffs.push_back(D.coeffs[i]);
    return out;
}

}  // namespace

CRat twisted_slope(const ToricTestConfiguration& tc, const ComplexDivisorClass& eta, const ComplexDivisorClass& xi) {
    std::size_t n = tc.fiber_dim();
    auto e = restrict_to_fiber(tc, eta);
    auto x = restrict_to_fiber(tc, xi);
    std::vector<ComplexDivisorClass> top(n, e);
    CRat vol = intersection_number(tc.fiber_fan, top);
    if (vol == CRat(0)) throw Error("DegenerateVolume", "(eta|)^n vanishes");
    auto mK = complexify(scale(-1, canonical_divisor(tc.fiber_fan)));
    for (std::size_t i = 0; i < mK.coeffs.size(); ++i) mK.coeffs[i] = mK.coeffs[i] - x.coeffs[i];
    top[0] = mK;
    return intersection_number(tc.fiber_fan, top) / vol;
}

CRat df_twisted(const ToricTestConfiguration& tc, const ComplexDivisorClass& eta, const ComplexDivisorClass& xi,
                const QVec& v, const std::optional<CRat>& slope_override) {
    std::size_t n = tc.fiber_dim();
    Rat lv = dot(v, tc.lambda());
    if (lv == 0) throw Error("InvalidParameter", "v must project to a nontrivial action on the base");
    CRat c = slope_override ? *slope_override : twisted_slope(tc, eta, xi);
    CRat a = c * CRat(Rat(static_cast<long>(n), static_cast<long>(n + 1)));
    CRat total;
    for (const auto& p : fixed_points(tc.total_fan)) {
        auto w = equivariant_weights(tc.total_fan, p, v);
        Rat e = 1, sw = 0;
        for (const auto& x : w) {
            e *= x;
            sw += x;
        }
        CRat H = hamiltonian_value(tc.total_fan, eta, p, v);
        CRat Hx = hamiltonian_value(tc.total_fan, xi, p, v);
        Rat eps = side_of(tc, p) == FixedPointSide::OverZero ? lv : -lv;
        total = total + power(H, n) * (a * H - CRat(sw) + CRat(eps) + Hx) / CRat(e);
    }
    return total;
}

DonaldsonData donaldson_polytope_data(const ToricTestConfiguration& tc) {
    std::size_t n = tc.fiber_dim();
    if (!is_nef(tc.fiber_fan, tc.fiber_polarisation)) throw Error("NotNef", "fiber polarisation is not nef");
    const auto& F = tc.total_fan;

    std::vector<QVec> A;
    std::vector<Rat> c;
    for (std::size_t i = 0; i < tc.fiber_fan.rays.size(); ++i) {
        A.push_back(to_q(tc.fiber_fan.rays[i]));
        c.push_back(-tc.fiber_polarisation.coeffs[i]);
    }
    auto Pv = halfspace_vertices(A, c, n);
    auto P = convex_hull_q(Pv);
    if (!P.full_dimensional()) throw Error("NotNef", "fiber polytope is degenerate");

    std::set<Affine> zero, inf;
    for (std::size_t i = 0; i < F.rays.size(); ++i) {
        Int l = dot(tc.lambda(), F.rays[i]);
        if (l == 0) continue;
        auto sc = split_coordinates(tc, F.rays[i]);
        Rat al = Rat(abs(l));
        Affine g{QVec(sc.begin() + 1, sc.end()), tc.polarisation.coeffs[i] / al, al};
        for (auto& x : g.lin) x /= al;
        (l > 0 ? zero : inf).insert(g);
    }

    DonaldsonData d{0, 0, 0, 0, 0, 0};
    Rat nf = factorial(n), nf1 = factorial(n - 1);
    for (const auto& g0 : zero)
        for (const auto& g1 : inf) {
            auto RA = A;
            auto Rc = c;
            for (const auto& h : zero)
                if (&h != &g0) {
                    QVec row(n);
                    for (std::size_t j = 0; j < n; ++j) row[j] = h.lin[j] - g0.lin[j];
                    RA.push_back(row);
                    Rc.push_back(g0.cst - h.cst);
                }
            for (const auto& h : inf)
                if (&h != &g1) {
                    QVec row(n);
                    for (std::size_t j = 0; j < n; ++j) row[j] = h.lin[j] - g1.lin[j];
                    RA.push_back(row);
                    Rc.push_back(g1.cst - h.cst);
                }
            auto Rv = halfspace_vertices(RA, Rc, n);
            if (Rv.size() < n + 1) continue;
            auto R = convex_hull_q(Rv);
            if (!R.full_dimensional()) continue;
            auto f = [&](const QVec& m) { return g0(m) + g1(m); };
            for (const auto& S : triangulate(R)) {
                QMat E;
                for (std::size_t k = 1; k <= n; ++k) {
                    QVec e(n);
                    for (std::size_t j = 0; j < n; ++j) e[j] = S[k][j] - S[0][j];
                    E.push_back(e);
                }
                Rat vol = abs(qdet(E)) / nf;
                QVec bc(n, Rat(0));
                for (const auto& s : S)
                    for (std::size_t j = 0; j < n; ++j) bc[j] += s[j] / Rat(static_cast<long>(n + 1));
                d.volume += vol;
                d.interior_integral += vol * f(bc);
                d.nonreduced_correction += vol * ((g0.mult - 1) / g0.mult + (g1.mult - 1) / g1.mult);
                for (std::size_t skip = 0; skip <= n; ++skip) {
                    std::vector<QVec> face;
                    for (std::size_t k = 0; k <= n; ++k)
                        if (k != skip) face.push_back(S[k]);
                    for (const auto& fc : P.facets) {
                        QVec nrm = to_q(fc.normal);
                        bool on = std::all_of(face.begin(), face.end(),
                                              [&](const QVec& x) { return dot(x, nrm) == -fc.offset; });
                        if (!on) continue;
                        Rat nn = dot(nrm, nrm);
                        QMat M;
                        for (std::size_t k = 1; k < n; ++k) {
                            QVec e(n);
                            for (std::size_t j = 0; j < n; ++j) e[j] = face[k][j] - face[0][j];
                            M.push_back(e);
                        }
                        QVec w(n);
                        for (std::size_t j = 0; j < n; ++j) w[j] = nrm[j] / nn;
                        M.push_back(w);
                        Rat meas = abs(qdet(M)) / nf1;
                        QVec fb(n, Rat(0));
                        for (const auto& x : face)
                            for (std::size_t j = 0; j < n; ++j) fb[j] += x[j] / Rat(static_cast<long>(n));
                        d.boundary_volume += meas;
                        d.boundary_integral += meas * f(fb);
                        break;
                    }
                }
            }
        }
    Rat aD = d.boundary_volume / d.volume;
    d.value = -nf * (d.boundary_integral - aD * d.interior_integral) + nf * d.nonreduced_correction;
    return d;
}

Rat df_donaldson_polytope(const ToricTestConfiguration& tc) { return donaldson_polytope_data(tc).value; }

DFReport df_report(const ToricTestConfiguration& tc) {
    DFReport r;
    r.slope = slope_constant(tc.fiber_fan, tc.fiber_polarisation);
    r.value_intersection = df_intersection(tc);
    r.value_localised = df_localised(tc);
    try {
        r.value_polytope = df_donaldson_polytope(tc);
    } catch (const Error& e) {
        if (e.code() != "NotNef") throw;
        r.polytope_defined = false;
    }
    return r;
}

ToricTestConfiguration scale_polarisation(const ToricTestConfiguration& tc, const Rat& k) {
    auto out = tc;
    out.polarisation = scale(k, tc.polarisation);
    out.fiber_polarisation = scale(k, tc.fiber_polarisation);
    return out;
}

}  // namespace toric
