#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace conjforge {

enum class Kind { Graph, Digraph, Tournament, LinearOrder };

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& name);
bool is_directed_kind(Kind k);

class VertexMap;

// Finite relational structure over a single binary relation: undirected
// graph, digraph (antisymmetric, irreflexive), tournament, or linear order.
// The domain is an explicit ordered list of vertex ids; all search loops in
// the library run in domain-list order so that witnesses are reproducible.
// Undirected edges are stored as both ordered pairs.
class FiniteStructure {
public:
  // Validates the per-kind invariants and throws InputError on violation.
  // For Kind::Graph the edge set is symmetrized, so undirected edges may be
  // given once.
  FiniteStructure(Kind kind, std::vector<int> domain,
                  const std::set<std::pair<int, int>>& edges);

  static FiniteStructure empty(Kind kind) { return FiniteStructure(kind, {}, {}); }
  // The order 0 < 1 < ... < size-1.
  static FiniteStructure linear_order(int size);

  Kind kind() const { return kind_; }
  const std::vector<int>& domain() const { return domain_; }
  const std::set<std::pair<int, int>>& edges() const { return edges_; }
  int size() const { return static_cast<int>(domain_.size()); }

  bool has_vertex(int v) const { return index_.count(v) > 0; }
  bool has_edge(int u, int v) const { return edges_.count({u, v}) > 0; }
  bool adjacent(int u, int v) const { return has_edge(u, v) || has_edge(v, u); }

  // Out-/in-neighbor and undirected degree counts.
  int out_degree(int v) const;
  int in_degree(int v) const;

  FiniteStructure relabel(const VertexMap& p) const;
  FiniteStructure induced(const std::vector<int>& subset) const;
  // Re-tags the structure under another kind, revalidating its invariants.
  FiniteStructure as_kind(Kind k) const;

  bool operator==(const FiniteStructure& o) const = default;

private:
  Kind kind_;
  std::vector<int> domain_;
  std::set<std::pair<int, int>> edges_;
  std::map<int, int> index_;  // vertex id -> position in domain_
};

// Total injective assignment of vertices. The carrier for isomorphisms,
// automorphisms and conjugators on finite structures.
class VertexMap {
public:
  VertexMap() = default;
  explicit VertexMap(std::map<int, int> pairs);  // validates injectivity

  static VertexMap identity(const std::vector<int>& domain);

  int operator()(int v) const;  // throws InputError when v is unmapped
  bool defined(int v) const { return pairs_.count(v) > 0; }
  const std::map<int, int>& pairs() const { return pairs_; }
  size_t size() const { return pairs_.size(); }

  void set(int v, int w);  // throws InputError if injectivity would break

  VertexMap inverse() const;
  VertexMap compose_after(const VertexMap& inner) const;  // (*this) o inner

  bool total_on(const std::vector<int>& domain) const;
  // Bijection of `domain` onto itself.
  bool permutes(const std::vector<int>& domain) const;

  std::vector<int> image_of(const std::vector<int>& subset) const;  // sorted

  // Orbits of the permutation restricted to `domain`, each cycle listed from
  // its least element, cycles ordered by least element. Requires permutes().
  std::vector<std::vector<int>> orbits(const std::vector<int>& domain) const;

  bool operator==(const VertexMap& o) const = default;

private:
  std::map<int, int> pairs_;
  std::set<int> values_;
};

}  // namespace conjforge
