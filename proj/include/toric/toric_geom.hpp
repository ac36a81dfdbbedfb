#pragma once

#include "toric/fan.hpp"
#include "toric/section.hpp"

#include <optional>

namespace toric {

// exact complex rational
struct CRat {
    Rat re = 0, im = 0;
    CRat() = default;
    CRat(Rat r) : re(std::move(r)) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    CRat(int r) : re(r) {}
    bool operator==(const CRat&) const = default;
};
CRat operator+(const CRat& a, const CRat& b);
CRat operator-(const CRat& a, const CRat& b);
CRat operator-(const CRat& a);
CRat operator*(const CRat& a, const CRat& b);
CRat operator/(const CRat& a, const CRat& b);
CRat conj(const CRat& a);
std::string to_string(const CRat& z);

// sum a_rho D_rho, indexed like the fan's rays
struct ToricDivisor {
    std::vector<Rat> coeffs;
};
struct ComplexDivisorClass {
    std::vector<CRat> coeffs;
};
ComplexDivisorClass complexify(const ToricDivisor& D);

struct FixedPoint {
    ConeIdx cone;
    std::vector<IVec> dual_basis;  // dual_basis[i] pairs to 1 with the i-th ray of cone
};

FixedPoint fixed_point(const Fan& F, const ConeIdx& cone);
std::vector<FixedPoint> fixed_points(const Fan& F);

ToricDivisor canonical_divisor(const Fan& F);
ToricDivisor scale(const Rat& s, const ToricDivisor& D);
ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b);
// D + div(chi^m): coefficients shift by <m, b_rho>
ToricDivisor shift_by_character(const Fan& F, const ToricDivisor& D, const QVec& m);

// <sum_i a_i u_i, v>: the equivariant restriction of D at p
Rat hamiltonian_value(const Fan& F, const ToricDivisor& D, const FixedPoint& p, const QVec& v);
CRat hamiltonian_value(const Fan& F, const ComplexDivisorClass& D, const FixedPoint& p, const QVec& v);
std::vector<Rat> equivariant_weights(const Fan& F, const FixedPoint& p, const QVec& v);
Rat euler_class(const Fan& F, const FixedPoint& p, const QVec& v);
Rat equivariant_integrate(const Fan& F, const std::vector<ToricDivisor>& classes, const QVec& v);
// retries over the deterministic sequence of generic vectors
Rat intersection_number(const Fan& F, const std::vector<ToricDivisor>& classes);
CRat equivariant_integrate(const Fan& F, const std::vector<ComplexDivisorClass>& classes, const QVec& v);
CRat intersection_number(const Fan& F, const std::vector<ComplexDivisorClass>& classes);
std::vector<QVec> generic_vectors(std::size_t n, std::size_t count);
bool is_generic_for(const Fan& F, const QVec& v);

// D . V(wall) on a smooth complete fan
Rat intersection_with_curve(const Fan& F, const ToricDivisor& D, const ConeIdx& wall);

// support data of the divisor with polytope P on a fan refining its normal fan
ToricDivisor divisor_of_polytope(const Fan& F, const LatticePolytope& P);
// the point m with <m, b_rho> = -a_rho on the cone
QVec cone_vertex(const Fan& F, const ToricDivisor& D, const ConeIdx& cone);

// mult 0 when the vertex monomial is absent
Coeff evaluate_section_at_fixed_point(const Section& s, const Fan& F, const LatticePolytope& P, const FixedPoint& p);
struct EdgeLimit {
    IVec from;  // the vertex
    IVec to;    // other endpoint of the edge of P
};
// zero is reported as a Coeff with mult 0
Coeff ratio_at_fixed_point(const Section& s1, const Section& s2, const Fan& F, const LatticePolytope& P,
                           const FixedPoint& p, const std::optional<EdgeLimit>& edge = std::nullopt);
Rat exact_value(const Coeff& c);

}  // namespace toric
