#pragma once

#include "toric/testconfig.hpp"

#include <string>
#include <vector>

namespace toric {

// degeneration to the normal cone of a point of P^1, polarised by -r K; r = 1/2 is anticanonical up to scale
ToricTestConfiguration normal_cone_example(const Rat& r = Rat(1, 2));
// P(O + O(1)) as a product test configuration of P^1, polarised by -K/3
ToricTestConfiguration hirzebruch_example();
// P^1 x P^1 with the trivial action on the fibre, polarised by -K
ToricTestConfiguration trivial_example();

// "normal-cone", "hirzebruch", "trivial"
ToricTestConfiguration named_example(const std::string& name);
std::vector<std::string> example_names();

// the vertices x_1..x_6 of the hexagon containing both mirror Newton polygons, counter-clockwise from (1,0)
const std::vector<IVec>& hexagon_vertices();

// "p3", or "p3'" / "p3''" over a blown-up hexagon vertex
std::string hexagon_label(const Fan& F, const QVec& vertex, const ConeIdx& cone);

}  // namespace toric
