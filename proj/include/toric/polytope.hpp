#pragma once

#include "toric/lattice.hpp"
#include "toric/section.hpp"

#include <map>
#include <vector>

namespace toric {

// {m : <m, normal> >= -offset}, normal primitive and inward
struct Facet {
    IVec normal;
    Rat offset;
};

struct LatticePolytope {
    std::vector<QVec> vertices;  // lex sorted
    std::vector<Facet> facets;   // empty unless full-dimensional
    std::size_t dim = 0;
    std::size_t ambient = 0;

    bool full_dimensional() const { return dim == ambient; }
    bool is_lattice() const;
    std::vector<IVec> lattice_vertices() const;
    bool contains(const QVec& p) const;
    bool contains(const IVec& p) const { return contains(to_q(p)); }
    // indices of facets through a vertex
    std::vector<std::size_t> facets_at(const QVec& v) const;
};

LatticePolytope convex_hull(const std::vector<IVec>& points);
LatticePolytope convex_hull_q(const std::vector<QVec>& points);

LatticePolytope polar_dual(const LatticePolytope& P);
bool is_reflexive(const LatticePolytope& P);
Int normalized_volume(const LatticePolytope& P);
// simplices as vertex lists, fan-triangulated from the lex-first vertex
std::vector<std::vector<QVec>> triangulate(const LatticePolytope& P);
std::vector<IVec> lattice_points(const LatticePolytope& P);
bool is_delzant(const LatticePolytope& P);

struct DelzantChoice {
    LatticePolytope polytope;
    std::string strategy;
};
DelzantChoice delzant_container_report(const std::vector<IVec>& points);
LatticePolytope delzant_container(const std::vector<IVec>& points);

// monomials of s on the edge [a, b], keyed by lattice distance from a
std::map<Int, Coeff> edge_lattice_restriction(const LatticePolytope& P, const Section& s,
                                              const IVec& a, const IVec& b);
bool is_edge(const LatticePolytope& P, const QVec& a, const QVec& b);

// vertices of a polygon in counter-clockwise order starting from the smallest angle in [0, 2pi)
std::vector<IVec> polygon_cyclic_vertices(const LatticePolytope& P);

}  // namespace toric
