#pragma once

#include "toric/lattice.hpp"
#include "toric/polytope.hpp"

#include <optional>
#include <vector>

namespace toric {

using ConeIdx = std::vector<std::size_t>;  // sorted ray indices

struct Fan {
    std::vector<IVec> rays;
    std::vector<ConeIdx> max_cones;
    std::size_t dim = 0;

    std::vector<IVec> cone_rays(const ConeIdx& c) const;
    std::optional<std::size_t> ray_index(const IVec& r) const;
    std::optional<std::size_t> cone_index(const ConeIdx& c) const;
    bool is_simplicial() const;
    bool is_smooth() const;
    // every max cone full-dimensional, every wall shared by exactly two cones on opposite sides, degree one
    bool is_complete() const;
    // codimension-one faces with the max cones containing them
    std::vector<std::pair<ConeIdx, std::vector<std::size_t>>> walls() const;
    std::size_t containing_count(const QVec& x) const;
};

// validates rays and pairwise-compatible simplicial cones (wall sidedness and generic covering degree <= 1)
Fan make_fan(std::vector<IVec> rays, std::vector<ConeIdx> cones);
// complete 2-d fan from rays, cones between angular neighbours
Fan fan_from_cyclic_rays(const std::vector<IVec>& rays);
// 2-d rays sorted counter-clockwise from angle 0
std::vector<IVec> cyclic_order(std::vector<IVec> rays);

bool cone_contains(const std::vector<IVec>& gens, const QVec& x);

Fan face_fan(const LatticePolytope& P);
Fan normal_fan(const LatticePolytope& P);
Fan product_fan(const Fan& A, const Fan& B);
Fan projective_line_fan();
Fan projective_space_fan(std::size_t n);

// sigma given by ray indices; must be a face of some max cone
Fan star_subdivide(const Fan& F, const ConeIdx& sigma);

enum class RayKind { Fiber, OverZero, OverInfinity };
struct RayClass {
    RayKind kind;
    Int multiplicity;  // |<lambda, b>|
};
struct FanProjection {
    Fan base;
    IVec functional;
    std::vector<RayClass> ray_classification;
};
FanProjection classify_projection(const Fan& F, const IVec& lambda);
// rays with pairing zero, modulo nothing: the fan in ker(lambda) of cones lying there
std::vector<ConeIdx> fiber_cones(const Fan& F, const IVec& lambda);

struct SplitPiece {
    Fan fan;                 // completed fan
    IVec lambda;             // group support is {lambda >= 0}; empty for the trivial grouping
    std::vector<std::size_t> source_cones;   // indices into the input fan's max cones
    std::vector<std::size_t> ray_from_input; // completed-fan ray -> input ray index, or npos for added rays
    std::vector<ConeIdx> central_cones;      // cones of the completed fan coming from the group
};
std::vector<SplitPiece> subfan_split(const Fan& F, const std::vector<std::vector<std::size_t>>& grouping);

}  // namespace toric
