#pragma once

#include "toric/lg_mirror.hpp"
#include "toric/numeric.hpp"

namespace toric {

// sum_b exp(kappa_b + <b, u>)
struct NumPotential {
    std::vector<IVec> exps;
    CxVec kappa;
    std::size_t dim = 0;
};
NumPotential numeric_potential(const LGPotential& W);
// the Laurent polynomial g with coefficients at scale k, same form as a potential
NumPotential numeric_section(const Section& g, const Rat& k, std::size_t dim);

Cx evaluate(const NumPotential& W, const CxVec& u);
CxVec log_gradient(const NumPotential& W, const CxVec& u);  // x_i d_i W
CxMat toric_hessian(const NumPotential& W, const CxVec& u);  // (x_i d_i)(x_j d_j) W

struct CriticalPoint {
    CxVec log_coords;  // imaginary parts reduced to [0, 2 pi)
    Cx value;
    Cx hessian_det;
    int multiplicity = 1;
    bool degenerate = false;
    Real residual;  // relative
};

struct SolverOptions {
    unsigned precision_bits = 256;
    std::uint64_t seed = 0;
    std::size_t max_starts = 4000;
    std::size_t max_iterations = 200;
    double dedup_radius = 1e-8;
    double degeneracy_threshold = 1e-20;
    bool stop_at_bkk = true;
};

struct CriticalSearch {
    std::vector<CriticalPoint> points;
    long bkk = 0;
    std::size_t starts_used = 0;
    bool complete = false;  // found == bkk
};

long bkk_bound(const NumPotential& W);
long bkk_bound(const LGPotential& W);

// never throws on incompleteness; see find_critical_points_strict
CriticalSearch find_critical_points(const NumPotential& W, const SolverOptions& opts = {});
CriticalSearch find_critical_points(const LGPotential& W, const SolverOptions& opts = {});
// SolverIncomplete if fewer than the BKK bound were found
CriticalSearch find_critical_points_strict(const LGPotential& W, const SolverOptions& opts = {});

struct StationaryPhaseReport {
    long milnor_sum = 0;
    long euler_characteristic = 0;
    bool euler_from_newton_polytope = true;
    bool degenerate_points = false;
    bool holds = false;
};
StationaryPhaseReport check_stationary_phase(const NumPotential& W, const std::vector<CriticalPoint>& crit,
                                             std::optional<long> euler = std::nullopt);

// sum_p g(p) / det[(x_i d_i)(x_j d_j) W](p)
Cx grothendieck_residue(const NumPotential& g, const std::vector<CriticalPoint>& crit);
Cx grothendieck_residue(const NumPotential& W, const NumPotential& g, const SolverOptions& opts = {});

struct MirrorResidue {
    Cx value;
    CriticalSearch search;
    MirrorClasses classes;
    Rat slope;
};
// sum_p theta^n (a theta - W + psi) / hess, a = n c / (n + 1)
MirrorResidue df_mirror_residue(const ToricTestConfiguration& tc, const Rat& k, const SolverOptions& opts = {});

// finite-difference Jacobian of u -> x grad W(e^u)
CxMat fd_jacobian(const NumPotential& W, const CxVec& u, const Real& h);

}  // namespace toric
