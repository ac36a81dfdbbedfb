#pragma once

#include "toric/boundary.hpp"
#include "toric/critical.hpp"

namespace toric {

// max cones of the ambient fan grouped by the sign of a functional on their rays
Grouping cone_grouping(const Fan& F, const IVec& functional);
// tries the preferred functional, then the normals of opposite ray pairs in cyclic order (dim 2 only)
IVec fibration_functional(const Fan& F, const std::optional<IVec>& preferred = std::nullopt);
// the fixed-point partition matching a grouping of max cones
Grouping point_grouping(const Fan& F, const Grouping& cones);

struct DualTestConfiguration {
    std::size_t id = 0;
    SplitPiece piece;
    IVec functional;                         // the group lies in functional >= 0
    std::vector<FixedPoint> central;         // Z(v): fixed points over 0
    std::vector<std::size_t> ambient_point;  // index into fixed_points(ambient fan) for each central point
    std::vector<std::size_t> central_rays;   // functional > 0
    std::vector<std::size_t> fiber_rays;     // functional == 0
    const Fan& fan() const { return piece.fan; }
};

std::vector<DualTestConfiguration> build_duals(const Compactification& comp, const Grouping& cones);

struct RankInequalityReport {
    long h11 = 0;
    long dim_d_perp = 0;
    long n_plus_1 = 0;
    long z_count = 0;
    long f_d = 0;
    long lhs = 0;
    long rhs = 0;
    bool holds = false;
    std::string comparison;  // e.g. "9 > 6"
};
// ray is an index into dtc.fan().rays, which must be a central ray
RankInequalityReport rank_inequality_check(const DualTestConfiguration& dtc, std::size_t ray);

// central ray whose distinguished fixed points all have psi = 1, most such points first
std::optional<std::size_t> psi_divisor(const DualTestConfiguration& dtc, const ResidueReport& rep);

struct TargetRow {
    std::size_t point = 0;  // index into dtc.central
    bool distinguished = false;
    Rat det, t;             // product of the weights, their sum minus one
    Rat theta, psi, f;      // residue data, zero off the distinguished set
    Cx d;                   // principal (n+1)-th root of det
    Cx H, K;
};
std::vector<TargetRow> prescribed_targets(const DualTestConfiguration& dtc, const ResidueReport& rep, const QVec& v);

struct HamiltonianOptions {
    unsigned precision_bits = 256;
    int max_denominator = 6;
    std::size_t max_grid = 24;
    std::size_t max_iterations = 60;
    double tolerance = 1e-9;
    double min_weight = 1e-6;  // converged v must keep every weight on Z(v) at least this large
    bool xi_divisor_constraint = true;
    bool slope_gauge = true;
    std::optional<std::size_t> divisor;  // overrides psi_divisor
    std::vector<QVec> starts;            // replaces the rational grid when nonempty
    bool free_v = true;                  // let v move after the linear phase
};

struct HamiltonianSolution {
    CxVec v;
    CxVec eta, xi;  // ray coefficients on dtc.fan()
    std::vector<Cx> H, K, h_eta, h_xi;
    Real residual;
    std::optional<std::size_t> divisor;
    Cx slope;                // c of the original configuration
    std::optional<Cx> dual_slope;  // c of the found classes on the fibre, when defined
    std::size_t grid_points_tried = 0;
    bool xi_divisor_constraint = true;
    bool slope_gauge = true;
};
// NoSolutionFound when no grid start converges below the tolerance
HamiltonianSolution solve_hamiltonians(const DualTestConfiguration& dtc, const ResidueReport& rep, const Rat& slope,
                                       std::size_t fiber_dim, const HamiltonianOptions& opts = {});

// sum over Z(v) of (-h)^n (-n c/(n+1) h - sum w + 1 - h_xi) / e
Cx formal_twisted_df(const DualTestConfiguration& dtc, const HamiltonianSolution& sol, const Cx& slope,
                     std::size_t fiber_dim);

struct Theorem1Row {
    std::size_t id = 0;
    RankInequalityReport rank;
    HamiltonianSolution solution;
    Cx df;
    Rat residue_group_total;
    // failures that forced dropping the xi divisor constraint, then the slope gauge
    std::vector<std::string> relaxations;
};
struct Theorem1Report {
    Rat k;
    Rat df;
    Rat residue_total;
    std::vector<Theorem1Row> rows;
    Cx duals_total;
    Cx defect;  // df - duals_total
};
Theorem1Report assemble_theorem1(const ToricTestConfiguration& tc, const Rat& k, const Compactification& comp,
                                 const Grouping& cones, const HamiltonianOptions& opts = {});
Theorem1Report assemble_theorem1(const ToricTestConfiguration& tc, const Rat& k, const HamiltonianOptions& opts = {});

struct OrbifoldDual {
    std::string name;
    LatticePolytope polytope;
    std::size_t rays = 0;
    long class_group_rank = 0;  // rays - dim
    long picard_rank = 0;       // Cartier classes
    std::size_t central_fixed_points = 0;
};
// the four candidate duals built from the two polygons of the slope-unstable surface example
std::vector<OrbifoldDual> orbifold_duals();

}  // namespace toric
