#pragma once

#include <map>
#include <optional>
#include <vector>

#include "structure.hpp"

namespace conjforge {

// Exhaustive kind-and-edge-preserving isomorphism search. Deterministic:
// returns the first witness in lexicographic order over the ordered domains.
// Throws InputError on kind mismatch.
std::optional<VertexMap> brute_force_isomorphism(const FiniteStructure& a,
                                                 const FiniteStructure& b);

// True iff no n vertices of g are pairwise adjacent. Requires a graph, n >= 2.
bool is_kn_free(const FiniteStructure& g, int n);

// True iff no n vertices of d are pairwise non-adjacent (neither direction).
// Requires a digraph or tournament, n >= 2.
bool is_in_free(const FiniteStructure& d, int n);

// True iff some injection of the tournament `pattern` into `host` preserves
// every edge directionally.
bool embeds_tournament(const FiniteStructure& pattern, const FiniteStructure& host);

// As embeds_tournament, but the image must meet `required`. Used by the
// skip rule of the forbidden-tournament construction: the host minus the
// candidate vertices is already known clean.
bool embeds_tournament_through(const FiniteStructure& pattern,
                               const FiniteStructure& host,
                               const std::vector<int>& required);

// Relation required between a witness vertex and one element of the probed
// subset. Toward: subset element -> witness; Away: witness -> subset element.
enum class ExtensionRel { Toward, Away, None, Adjacent };

// One-point extension probe. Finds the least vertex a outside the probed
// subset whose relations to it match `spec` exactly. For graph and digraph
// hosts the witness must additionally be non-adjacent to every vertex
// outside the subset (exact neighborhood); for total kinds the remaining
// pairs are unconstrained. Throws InputError when a marker is inconsistent
// with the host kind.
std::optional<int> check_one_point_extension(const FiniteStructure& host,
                                             const std::map<int, ExtensionRel>& spec);

// True iff f is a bijection of s.domain preserving the edge relation both ways.
bool verify_automorphism(const FiniteStructure& s, const VertexMap& f);

// True iff delta o phi == psi o delta pointwise. All three maps must be total
// on the same domain; throws InputError otherwise.
bool verify_conjugacy_witness(const VertexMap& phi, const VertexMap& psi,
                              const VertexMap& delta);

// Full automorphism group by backtracking, in lexicographic order.
// Intended for hosts of at most ~12 vertices.
std::vector<VertexMap> automorphism_group(const FiniteStructure& s);

// First delta in the automorphism group of s with delta o phi = psi o delta.
std::optional<VertexMap> find_conjugator_brute(const FiniteStructure& s,
                                               const VertexMap& phi,
                                               const VertexMap& psi);

}  // namespace conjforge
