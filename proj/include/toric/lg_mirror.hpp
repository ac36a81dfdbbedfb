#pragma once

#include "toric/testconfig.hpp"

namespace toric {

struct LGPotential {
    Section terms;  // exponent in N -> mult * exp(2 pi k log)
    Rat k = 1;
    std::size_t dim = 0;
};

LGPotential build_potential(const ToricTestConfiguration& tc, const Rat& k);
LGPotential potential_from_divisor(const Fan& F, const ToricDivisor& D, const Rat& k);

struct PotentialSplit {
    LGPotential fiber;
    LGPotential rest;
};
// fiber part: exponents with <lambda, b> = 0
PotentialSplit deformation_split(const LGPotential& W, const IVec& lambda);

using JacobiClassExpression = Section;

// sum c_rho * (term of W at b_rho); zero terms dropped
JacobiClassExpression divisor_to_jacobi_leading(const Fan& F, const ToricDivisor& D, const LGPotential& W);

// r with L = r(-K) up to linear equivalence, if any
std::optional<Rat> anticanonical_multiple(const Fan& F, const ToricDivisor& L);

struct MirrorClasses {
    JacobiClassExpression theta;
    JacobiClassExpression psi;
    Rat r;                          // L = r(-K)
    bool weak_fano = true;          // -K nef; otherwise the leading rule is uncontrolled
    bool multiplicity_above_one = false;
};
// theta from the representative r(-K) of L, psi = K_rel term + W
MirrorClasses mirror_classes(const ToricTestConfiguration& tc, const LGPotential& W);

LatticePolytope newton_polytope(const LGPotential& W);

// W after x -> t x with t_j = exp(-2 pi k m_j): equals the potential of D + div(m)
LGPotential rescale_torus(const LGPotential& W, const QVec& m);

}  // namespace toric
