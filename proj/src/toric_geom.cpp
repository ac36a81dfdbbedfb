#include "toric/toric_geom.hpp"

#include <algorithm>

namespace toric {

CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
CRat operator-(const CRat& a) { return {-a.re, -a.im}; }
CRat operator*(const CRat& a, const CRat& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
CRat operator/(const CRat& a, const CRat& b) {
    Rat n = b.re * b.re + b.im * b.im;
    if (n == 0) throw Error("DivisionByZero", "complex rational division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
CRat conj(const CRat& a) { return {a.re, -a.im}; }
std::string to_string(const CRat& z) {
    if (z.im == 0) return to_string(z.re);
    return to_string(z.re) + (z.im < 0 ? "-" : "+") + to_string(Rat(abs(z.im))) + "i";
}

ComplexDivisorClass complexify(const ToricDivisor& D) {
    ComplexDivisorClass out;
    for (const auto& a : D.coeffs) out.coeffs.emplace_back(a);
    return out;
}

FixedPoint fixed_point(const Fan& F, const ConeIdx& cone) {
    if (cone.size() != F.dim) throw Error("NotMaximal", "fixed points come from full-dimensional cones");
    auto B = to_q(F.cone_rays(cone));
    QMat U;
    try {
        U = inverse(B);
    } catch (const Error&) {
        throw Error("NonSimplicial", "cone rays are dependent");
    }
    FixedPoint p{cone, {}};
    for (std::size_t i = 0; i < F.dim; ++i) {
        QVec col(F.dim);
        for (std::size_t r = 0; r < F.dim; ++r) col[r] = U[r][i];
        if (!is_integral(col)) throw Error("NonSmooth", "cone is not unimodular");
        p.dual_basis.push_back(to_int(col));
    }
    return p;
}

std::vector<FixedPoint> fixed_points(const Fan& F) {
    std::vector<FixedPoint> out;
    for (const auto& c : F.max_cones) out.push_back(fixed_point(F, c));
    return out;
}

ToricDivisor canonical_divisor(const Fan& F) { return {std::vector<Rat>(F.rays.size(), Rat(-1))}; }

ToricDivisor scale(const Rat& s, const ToricDivisor& D) {
    ToricDivisor out = D;
    for (auto& a : out.coeffs) a *= s;
    return out;
}

ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b) {
    if (a.coeffs.size() != b.coeffs.size()) throw Error("DimensionMismatch", "divisor lengths differ");
    ToricDivisor out = a;
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

ToricDivisor shift_by_character(const Fan& F, const ToricDivisor& D, const QVec& m) {
    ToricDivisor out = D;
    for (std::size_t i = 0; i < F.rays.size(); ++i) out.coeffs[i] += dot(m, F.rays[i]);
    return out;
}

static void check_divisor(const Fan& F, std::size_t n) {
    if (n != F.rays.size()) throw Error("DimensionMismatch", "divisor does not match fan rays");
}

Rat hamiltonian_value(const Fan& F, const ToricDivisor& D, const FixedPoint& p, const QVec& v) {
    check_divisor(F, D.coeffs.size());
    Rat h = 0;
    for (std::size_t i = 0; i < p.cone.size(); ++i) h += D.coeffs[p.cone[i]] * dot(v, p.dual_basis[i]);
    return h;
}

CRat hamiltonian_value(const Fan& F, const ComplexDivisorClass& D, const FixedPoint& p, const QVec& v) {
    check_divisor(F, D.coeffs.size());
    CRat h;
    for (std::size_t i = 0; i < p.cone.size(); ++i) h = h + D.coeffs[p.cone[i]] * CRat(dot(v, p.dual_basis[i]));
    return h;
}

std::vector<Rat> equivariant_weights(const Fan& F, const FixedPoint& p, const QVec& v) {
    if (v.size() != F.dim) throw Error("DimensionMismatch", "v has wrong length");
    std::vector<Rat> w;
    for (const auto& u : p.dual_basis) {
        Rat x = dot(v, u);
        if (x == 0) throw Error("ZeroWeight", "v is orthogonal to a tangent weight at " + to_string(u));
        w.push_back(x);
    }
    return w;
}

Rat euler_class(const Fan& F, const FixedPoint& p, const QVec& v) {
    Rat e = 1;
    for (const auto& w : equivariant_weights(F, p, v)) e *= w;
    return e;
}

Rat equivariant_integrate(const Fan& F, const std::vector<ToricDivisor>& classes, const QVec& v) {
    if (classes.size() != F.dim) throw Error("DegreeMismatch", "need exactly dim classes");
    Rat total = 0;
    for (const auto& p : fixed_points(F)) {
        Rat e = euler_class(F, p, v);
        Rat num = 1;
        for (const auto& D : classes) num *= hamiltonian_value(F, D, p, v);
        total += num / e;
    }
    return total;
}

std::vector<QVec> generic_vectors(std::size_t n, std::size_t count) {
    static const long primes[] = {101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157};
    std::vector<QVec> out;
    for (std::size_t i = 0; i < count; ++i) {
        long p = primes[i % 12] + 2 * static_cast<long>(i / 12);
        QVec v(n);
        Int pw = 1;
        for (std::size_t j = 0; j < n; ++j) {
            v[j] = Rat(pw + static_cast<long>(j));
            pw *= p;
        }
        out.push_back(v);
    }
    return out;
}

bool is_generic_for(const Fan& F, const QVec& v) {
    for (const auto& p : fixed_points(F))
        for (const auto& u : p.dual_basis)
            if (dot(v, u) == 0) return false;
    return true;
}

Rat intersection_number(const Fan& F, const std::vector<ToricDivisor>& classes) {
    for (const auto& v : generic_vectors(F.dim, 24)) {
        if (!is_generic_for(F, v)) continue;
        return equivariant_integrate(F, classes, v);
    }
    throw Error("ZeroWeight", "no generic vector found", ErrorKind::SolverIncomplete);
}

CRat equivariant_integrate(const Fan& F, const std::vector<ComplexDivisorClass>& classes, const QVec& v) {
    if (classes.size() != F.dim) throw Error("DegreeMismatch", "need exactly dim classes");
    CRat total;
    for (const auto& p : fixed_points(F)) {
        Rat e = euler_class(F, p, v);
        CRat num(1);
        for (const auto& D : classes) num = num * hamiltonian_value(F, D, p, v);
        total = total + num / CRat(e);
    }
    return total;
}

CRat intersection_number(const Fan& F, const std::vector<ComplexDivisorClass>& classes) {
    for (const auto& v : generic_vectors(F.dim, 24))
        if (is_generic_for(F, v)) return equivariant_integrate(F, classes, v);
    throw Error("ZeroWeight", "no generic vector found", ErrorKind::SolverIncomplete);
}

Rat intersection_with_curve(const Fan& F, const ToricDivisor& D, const ConeIdx& wall) {
    check_divisor(F, D.coeffs.size());
    for (const auto& [w, cones] : F.walls()) {
        if (w != wall) continue;
        if (cones.size() != 2) throw Error("NotComplete", "wall is on the boundary of the fan");
        std::vector<std::size_t> idx;
        for (auto c : cones)
            for (auto r : F.max_cones[c])
                if (!std::binary_search(wall.begin(), wall.end(), r)) idx.push_back(r);
        for (auto r : wall) idx.push_back(r);
        // columns: b_rho, b_rho', wall rays
        QMat M(F.dim, QVec(idx.size()));
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t r = 0; r < F.dim; ++r) M[r][j] = Rat(F.rays[idx[j]][r]);
        auto ns = nullspace(M);
        if (ns.size() != 1 || ns[0][0] == 0) throw Error("NonSimplicial", "wall relation is degenerate");
        Rat s = 1 / ns[0][0];
        Rat total = 0;
        for (std::size_t j = 0; j < idx.size(); ++j) total += D.coeffs[idx[j]] * ns[0][j] * s;
        return total;
    }
    throw Error("NotAWall", "cone is not a wall of the fan");
}

ToricDivisor divisor_of_polytope(const Fan& F, const LatticePolytope& P) {
    if (P.ambient != F.dim) throw Error("DimensionMismatch", "polytope and fan dimensions differ");
    ToricDivisor D;
    for (const auto& b : F.rays) {
        Rat lo = dot(P.vertices.front(), b);
        for (const auto& m : P.vertices) lo = std::min(lo, dot(m, b));
        D.coeffs.push_back(-lo);
    }
    return D;
}

QVec cone_vertex(const Fan& F, const ToricDivisor& D, const ConeIdx& cone) {
    auto p = fixed_point(F, cone);
    QVec m(F.dim, Rat(0));
    for (std::size_t i = 0; i < cone.size(); ++i)
        for (std::size_t r = 0; r < F.dim; ++r) m[r] -= D.coeffs[cone[i]] * Rat(p.dual_basis[i][r]);
    return m;
}

Coeff evaluate_section_at_fixed_point(const Section& s, const Fan& F, const LatticePolytope& P, const FixedPoint& p) {
    auto m = cone_vertex(F, divisor_of_polytope(F, P), p.cone);
    if (!is_integral(m)) throw Error("NonIntegralVertex", "polytope vertex at fixed point is not a lattice point");
    auto it = s.find(to_int(m));
    if (it == s.end() || it->second.mult == 0) return Coeff{0, 0};
    return it->second;
}

Coeff ratio_at_fixed_point(const Section& s1, const Section& s2, const Fan& F, const LatticePolytope& P,
                           const FixedPoint& p, const std::optional<EdgeLimit>& edge) {
    auto a = evaluate_section_at_fixed_point(s1, F, P, p);
    auto b = evaluate_section_at_fixed_point(s2, F, P, p);
    if (b.mult != 0) {
        if (a.mult == 0) return Coeff{0, 0};
        return a / b;
    }
    if (a.mult != 0 || !edge) throw Error("IndeterminateRatio", "denominator vanishes at the fixed point");
    auto m = cone_vertex(F, divisor_of_polytope(F, P), p.cone);
    if (to_q(edge->from) != m) throw Error("IndeterminateRatio", "edge does not start at the fixed point's vertex");
    auto r1 = edge_lattice_restriction(P, s1, edge->from, edge->to);
    auto r2 = edge_lattice_restriction(P, s2, edge->from, edge->to);
    std::erase_if(r1, [](const auto& kv) { return kv.second.mult == 0; });
    std::erase_if(r2, [](const auto& kv) { return kv.second.mult == 0; });
    if (r2.empty()) throw Error("IndeterminateRatio", "denominator vanishes on the edge");
    const auto& [t, c2] = *r2.begin();
    if (!r1.empty() && r1.begin()->first < t) throw Error("IndeterminateRatio", "ratio has a pole along the edge");
    auto it = r1.find(t);
    if (it == r1.end()) return Coeff{0, 0};
    return it->second / c2;
}

Rat exact_value(const Coeff& c) {
    if (c.mult == 0) return 0;
    if (c.log != 0) throw Error("NotRational", "coefficient depends on k");
    return c.mult;
}

}  // namespace toric
