#pragma once

#include <map>
#include <vector>

#include "structure.hpp"

namespace conjforge::layered {

enum class Mode { Graph, Tournament, InFree, Forbidden, Multipartite };

std::string mode_name(Mode m);
Mode mode_from_name(const std::string& name);

// Per-vertex provenance. Level-0 vertices carry (copy, base); later vertices
// carry the creating subset (plus the non-adjacent subset in InFree mode and
// the part index in Multipartite mode, where level-0 vertices are also
// assigned parts).
struct VertexOrigin {
  int level = 0;
  int copy = -1;
  int base = -1;
  std::vector<int> subset;
  std::vector<int> subset2;
  int part = -1;

  bool operator==(const VertexOrigin& o) const = default;
};

// A generic structure built in levels with a propagated automorphism.
class LayeredStructure {
public:
  LayeredStructure(Mode mode, FiniteStructure base, FiniteStructure structure,
                   std::vector<std::vector<int>> levels,
                   std::map<int, VertexOrigin> origins, VertexMap phi,
                   std::vector<std::vector<int>> skipped = {});

  Mode mode() const { return mode_; }
  const FiniteStructure& base() const { return base_; }
  const FiniteStructure& structure() const { return structure_; }
  const std::vector<std::vector<int>>& levels() const { return levels_; }
  const std::map<int, VertexOrigin>& origins() const { return origins_; }
  const VertexOrigin& origin(int v) const;
  const VertexMap& phi() const { return phi_; }
  // Candidate creating subsets rejected by a skip rule (Forbidden mode) or
  // by orbit-orientability (Multipartite mode), least orbit member only.
  const std::vector<std::vector<int>>& skipped() const { return skipped_; }

  int top_level() const { return static_cast<int>(levels_.size()) - 1; }

private:
  Mode mode_;
  FiniteStructure base_;
  FiniteStructure structure_;
  std::vector<std::vector<int>> levels_;
  std::map<int, VertexOrigin> origins_;
  VertexMap phi_;
  std::vector<std::vector<int>> skipped_;
};

// Canonical subset order used everywhere a construction enumerates finite
// subsets: by size, then lexicographically on the sorted elements.
bool subset_less(const std::vector<int>& a, const std::vector<int>& b);

// All subsets of `pool` (sorted ascending) with size <= cap, in canonical
// order. Throws InputError when cap < 0.
std::vector<std::vector<int>> enumerate_subsets(const std::vector<int>& pool, int cap);

// Shared recovery map: restrict to {x : x has an edge to phi(x)}, quotient
// by phi-orbits, transport edges. Requires phi to be a verified automorphism
// (InputError otherwise); asserts that the quotient edge rule is unambiguous
// (every vertex of an adjacent orbit pair participates) and antisymmetric.
// The quotient keeps the kind of the input structure.
FiniteStructure recover_base(const FiniteStructure& s, const VertexMap& phi);

// The level-wise map induced by an isomorphism of the bases; returns the
// vertex map a -> b. Throws InvariantError when some provenance image is
// missing in b (differing build parameters).
VertexMap induced_isomorphism(const LayeredStructure& a, const LayeredStructure& b,
                              const VertexMap& base_iso);

}  // namespace conjforge::layered
