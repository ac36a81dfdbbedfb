#pragma once

#include "toric/lg_mirror.hpp"

#include <map>

namespace toric {

struct Compactification {
    LatticePolytope container;
    Fan container_fan;               // normal fan of the container
    Fan ambient_fan;                 // after the star subdivisions
    ToricDivisor cut;                // on ambient_fan; each subdivision cuts one lattice step off the corner
    std::vector<FixedPoint> base_points;  // on container_fan, vertex coefficient of W zero
    std::vector<QVec> subdivided_at;      // container vertices, in subdivision order
    std::map<ConeIdx, EdgeLimit> edges;   // ambient cones over a base point, edge used for limits
};

Compactification build_compactification(const LGPotential& W, std::size_t budget = 32);

// coefficient of the vertex monomial for the cone of p with respect to D; mult 0 when absent
Coeff vertex_coefficient(const Section& s, const Fan& F, const ToricDivisor& D, const FixedPoint& p);

// order of W along the divisor of b: min over exponents of <m, b>
Rat connection_residue(const LGPotential& W, const IVec& b);

// sign of det of the generators in the order given
int omega0_sign(const std::vector<IVec>& generators);
// the global log form -dlog x_1 ^ ... in local coordinates of the positively ordered cone
int omega0_sign(const Fan& F, const FixedPoint& p);

struct ResiduePoint {
    ConeIdx cone;
    QVec vertex;  // in the container
    Rat theta, psi;
    int omega0 = 0;
    Rat connection;  // product over the rays of the cone
    Rat f;
    Rat term;
    std::size_t group = 0;
};

struct ResidueReport {
    std::vector<ResiduePoint> points;
    std::vector<Rat> group_totals;
    Rat total;
    Rat df;
    Rat boundary_remainder;  // df - total
    std::vector<IVec> nonpositive_integer_residues;
};

using Grouping = std::vector<std::vector<std::size_t>>;  // indices into fixed_points(ambient_fan); empty = one group

ResidueReport residue_decomposition(const ToricTestConfiguration& tc, const Rat& k, const Compactification& comp,
                                    const Grouping& grouping = {});
ResidueReport residue_decomposition(const ToricTestConfiguration& tc, const Rat& k, const Grouping& grouping = {});

struct VanishingReport {
    std::vector<Rat> ks;
    std::vector<Rat> residuals;  // |df - toric total|
    Rat df;
    bool non_increasing = false;
    bool holds = false;
};
VanishingReport vanishing_check(const ToricTestConfiguration& tc, const std::vector<Rat>& ks,
                                const Rat& tolerance = Rat(1, 1000));

}  // namespace toric
