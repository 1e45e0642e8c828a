#pragma once

#include <vector>

#include "layered.hpp"
#include "structure.hpp"

namespace conjforge::gendigraph {

// Family of forbidden tournaments, each of size >= 3.
class ForbiddenFamily {
public:
  explicit ForbiddenFamily(std::vector<FiniteStructure> members);
  const std::vector<FiniteStructure>& members() const { return members_; }

private:
  std::vector<FiniteStructure> members_;
};

// Three copies of T with per-letter directed triangles x0->x1->x2->x0 and the
// nine cross edges x_i -> y_j per T-edge; phi^0 is the rotation.
layered::LayeredStructure build_tournament_delta0(const FiniteStructure& t);

// One new vertex per subset S (|S| <= cap): s->x for s in S, x->a otherwise.
// Nontrivial new phi-orbits close into directed triangles with phi(x)->x;
// distinct new orbits are fully oriented by the well-order on their least
// creating subsets.
layered::LayeredStructure extend_tournament_level(const layered::LayeredStructure& d,
                                                  int cap);

layered::LayeredStructure build_reduction_tournament(const FiniteStructure& t,
                                                     int levels, int cap);

// The I_n-free variant: one new vertex per disjoint pair (S, S') with
// |S|+|S'| <= cap and no independent set of size n-1 inside S'; the new
// vertex is dominated by S, non-adjacent to S', and dominates the rest.
layered::LayeredStructure build_reduction_in_free(const FiniteStructure& t, int n,
                                                  int levels, int cap);

// The forbidden-tournament variant: four copies of G at level 0 (per-letter
// C4 plus aligned cross edges x_i -> y_i), candidate vertices per subset with
// the skip rule, new orbits closed into C4 with phi(x)->x. Candidate orbits
// whose addition would embed a member of F are skipped whole; orbits of
// length two cannot be oriented equivariantly and are skipped as well.
layered::LayeredStructure build_reduction_forbidden(const FiniteStructure& g,
                                                    const ForbiddenFamily& f,
                                                    int levels, int cap);

// The generic complete n-partite construction (2 <= n): four copies of T at
// level 0 with the eight cross edges per T-edge, parts = copy-index parity;
// per-part extensions; phi swaps parts 0 and 1 and fixes the others setwise.
layered::LayeredStructure build_reduction_multipartite(const FiniteStructure& t,
                                                       int n, int levels, int cap);

// Hat graph: two copies of a -> T with cross edges reversed. Corresponding
// points (including the pair a, a-bar) end up non-adjacent.
FiniteStructure build_hat(const FiniteStructure& t);

// Lifts phi in Aut(T) to the hat graph, acting identically on both copies
// and fixing a and a-bar, optionally composed with the copy swap.
VertexMap hat_lift(const FiniteStructure& t, const VertexMap& phi, bool with_swap);

// Restrict to {x : x -> phi(x)} and quotient by phi-orbits.
FiniteStructure recover_base_digraph(const FiniteStructure& d, const VertexMap& phi);

}  // namespace conjforge::gendigraph
