#pragma once

#include "toric/toric_geom.hpp"

namespace toric {

struct ToricTestConfiguration {
    Fan total_fan;
    FanProjection projection;
    ToricDivisor polarisation;
    Fan fiber_fan;
    ToricDivisor fiber_polarisation;
    std::vector<std::size_t> fiber_ray_source;  // fiber ray -> total ray
    // rows: w0 with <lambda, w0> = 1, then a basis of ker(lambda); fiber coordinates are taken in this basis
    IMat basis;

    const IVec& lambda() const { return projection.functional; }
    std::size_t fiber_dim() const { return total_fan.dim - 1; }
};

// validates smoothness, completeness, the fibration and the fiber fan
ToricTestConfiguration make_test_configuration(const Fan& total, const IVec& lambda, const ToricDivisor& L);

// coordinates (<lambda, b>, kernel coordinates) of a total-space lattice vector
QVec split_coordinates(const ToricTestConfiguration& tc, const IVec& b);

// center: rays of a cone of X (a ray for an invariant divisor, a maximal cone for a fixed point)
ToricTestConfiguration degeneration_to_normal_cone(const Fan& X, const ToricDivisor& L, const ConeIdx& center,
                                                   const Rat& r);

Rat slope_constant(const Fan& X, const ToricDivisor& L);

bool is_nef(const Fan& F, const ToricDivisor& D);
bool is_ample(const Fan& F, const ToricDivisor& D);
// positive on every torus-invariant curve inside a fiber
bool is_relatively_ample(const ToricTestConfiguration& tc);

// K_X - pi^* K_{P^1}
ToricDivisor relative_canonical(const ToricTestConfiguration& tc);
// pi^* of a point, supported over 0
ToricDivisor fiber_class(const ToricTestConfiguration& tc);

enum class FixedPointSide { OverZero, OverInfinity };
FixedPointSide side_of(const ToricTestConfiguration& tc, const FixedPoint& p);

Rat df_intersection(const ToricTestConfiguration& tc);
Rat df_localised(const ToricTestConfiguration& tc, const QVec& v);
// retries over generic_vectors
Rat df_localised(const ToricTestConfiguration& tc);
std::vector<QVec> generic_vectors_for(const ToricTestConfiguration& tc, std::size_t count);

// c for the fiber classes (c1(X) - xi|) . (eta|)^{n-1} / (eta|)^n
CRat twisted_slope(const ToricTestConfiguration& tc, const ComplexDivisorClass& eta, const ComplexDivisorClass& xi);
CRat df_twisted(const ToricTestConfiguration& tc, const ComplexDivisorClass& eta, const ComplexDivisorClass& xi,
                const QVec& v, const std::optional<CRat>& slope_override = std::nullopt);

struct DonaldsonData {
    Rat boundary_integral;  // int over dP of f with the lattice facet measure
    Rat interior_integral;  // int over P of f
    Rat boundary_volume;
    Rat volume;
    // sum over non-reduced central components of (m-1)/m times the area where that facet is on top
    Rat nonreduced_correction;
    Rat value;
};
// f is the length of the fiber of the total polytope over m
DonaldsonData donaldson_polytope_data(const ToricTestConfiguration& tc);
Rat df_donaldson_polytope(const ToricTestConfiguration& tc);

struct DFReport {
    Rat value_intersection, value_localised, value_polytope, slope;
    bool polytope_defined = true;
};
DFReport df_report(const ToricTestConfiguration& tc);

ToricTestConfiguration scale_polarisation(const ToricTestConfiguration& tc, const Rat& k);

}  // namespace toric
