#pragma once

#include "layered.hpp"
#include "structure.hpp"

namespace conjforge::gengraph {

// For Kn-freeness parameters, n = 0 means "no clique constraint" (the plain
// random-graph case); otherwise n >= 3.
inline constexpr int kUnboundedN = 0;

// Two disjoint copies of G, corresponding vertices matched by an edge;
// phi^0 swaps the copies.
layered::LayeredStructure build_delta0_graph(const FiniteStructure& g);

// One new vertex per subset S of the current vertex set with |S| <= cap and
// no K_{n-1} inside S, adjacent exactly to S; phi extends by S -> phi(S).
layered::LayeredStructure extend_level_graph(const layered::LayeredStructure& d,
                                             int n, int cap);

// build_delta0_graph followed by `levels` extensions; checks that G is
// Kn-free up front and that the result stays Kn-free after every level.
layered::LayeredStructure build_reduction_graph(const FiniteStructure& g, int n,
                                                int levels, int cap);

// Restrict to {x : x adjacent to phi(x)} and quotient by phi-orbits.
FiniteStructure recover_base_graph(const FiniteStructure& g, const VertexMap& phi);

}  // namespace conjforge::gengraph
