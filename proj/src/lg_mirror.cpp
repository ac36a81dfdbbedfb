#include "toric/lg_mirror.hpp"

namespace toric {

LGPotential potential_from_divisor(const Fan& F, const ToricDivisor& D, const Rat& k) {
    if (D.coeffs.size() != F.rays.size()) throw Error("DimensionMismatch", "divisor does not match fan");
    if (k <= 0) throw Error("InvalidParameter", "k must be positive");
    LGPotential W;
    W.k = k;
    W.dim = F.dim;
    for (std::size_t i = 0; i < F.rays.size(); ++i) W.terms[F.rays[i]] = Coeff{1, -D.coeffs[i]};
    return W;
}

LGPotential build_potential(const ToricTestConfiguration& tc, const Rat& k) {
    return potential_from_divisor(tc.total_fan, tc.polarisation, k);
}

PotentialSplit deformation_split(const LGPotential& W, const IVec& lambda) {
    PotentialSplit s{W, W};
    s.fiber.terms.clear();
    s.rest.terms.clear();
    for (const auto& [b, c] : W.terms) (dot(lambda, b) == 0 ? s.fiber : s.rest).terms[b] = c;
    return s;
}

JacobiClassExpression divisor_to_jacobi_leading(const Fan& F, const ToricDivisor& D, const LGPotential& W) {
    if (D.coeffs.size() != F.rays.size()) throw Error("DimensionMismatch", "divisor does not match fan");
    JacobiClassExpression out;
    for (std::size_t i = 0; i < F.rays.size(); ++i) {
        if (D.coeffs[i] == 0) continue;
        auto it = W.terms.find(F.rays[i]);
        if (it == W.terms.end()) throw Error("MissingTerm", "potential has no term at ray " + to_string(F.rays[i]));
        out[F.rays[i]] = Coeff{D.coeffs[i] * it->second.mult, it->second.log};
    }
    return out;
}

std::optional<Rat> anticanonical_multiple(const Fan& F, const ToricDivisor& L) {
    // solve L_rho = r + <m, b_rho> for (r, m)
    std::size_t n = F.dim;
    QMat A, Ab;
    for (std::size_t i = 0; i < F.rays.size(); ++i) {
        QVec row{Rat(1)};
        for (std::size_t j = 0; j < n; ++j) row.push_back(Rat(F.rays[i][j]));
        A.push_back(row);
        row.push_back(L.coeffs[i]);
        Ab.push_back(row);
    }
    if (rank(A) != rank(Ab)) return std::nullopt;
    // -K is not a principal divisor on a complete fan, so r is determined
    auto ns = nullspace(Ab);
    for (const auto& v : ns)
        if (v.back() != 0) return -v[0] / v.back();
    return std::nullopt;
}

MirrorClasses mirror_classes(const ToricTestConfiguration& tc, const LGPotential& W) {
    const auto& F = tc.total_fan;
    MirrorClasses mc;
    auto r = anticanonical_multiple(F, tc.polarisation);
    if (!r) throw Error("NotAnticanonical", "polarisation is not a multiple of -K", ErrorKind::HypothesisFailed);
    mc.r = *r;
    mc.theta = divisor_to_jacobi_leading(F, scale(*r, scale(-1, canonical_divisor(F))), W);
    auto krel = relative_canonical(tc);
    auto kterm = divisor_to_jacobi_leading(F, krel, W);
    mc.psi = W.terms;
    for (const auto& [b, c] : kterm) {
        auto& t = mc.psi[b];
        t.mult += c.mult;
    }
    std::erase_if(mc.psi, [](const auto& kv) { return kv.second.mult == 0; });
    mc.weak_fano = is_nef(F, scale(-1, canonical_divisor(F)));
    for (const auto& b : F.rays)
        if (abs(dot(tc.lambda(), b)) > 1) mc.multiplicity_above_one = true;
    return mc;
}

LatticePolytope newton_polytope(const LGPotential& W) {
    if (W.terms.empty()) throw Error("EmptyPotential", "potential has no terms");
    std::vector<IVec> pts;
    for (const auto& [b, c] : W.terms) pts.push_back(b);
    return convex_hull(pts);
}

LGPotential rescale_torus(const LGPotential& W, const QVec& m) {
    LGPotential out = W;
    for (auto& [b, c] : out.terms) c.log -= dot(m, b);
    return out;
}

}  // namespace toric
