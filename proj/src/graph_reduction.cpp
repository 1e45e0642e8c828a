#include "graph_reduction.hpp"

#include <algorithm>

#include "errors.hpp"
#include "predicates.hpp"

namespace conjforge::gengraph {

using layered::LayeredStructure;
using layered::Mode;
using layered::VertexOrigin;

layered::LayeredStructure build_delta0_graph(const FiniteStructure& g) {
  if (g.kind() != Kind::Graph) throw InputError("build_delta0_graph requires a graph");
  const int m = g.size();
  std::vector<int> dom(2 * m);
  for (int i = 0; i < 2 * m; ++i) dom[i] = i;
  std::set<std::pair<int, int>> edges;
  std::map<int, int> pos;  // base vertex -> index
  for (int i = 0; i < m; ++i) pos[g.domain()[i]] = i;
  for (auto& [u, v] : g.edges()) {
    edges.insert({pos[u], pos[v]});
    edges.insert({m + pos[u], m + pos[v]});
  }
  for (int i = 0; i < m; ++i) edges.insert({i, m + i});

  std::map<int, VertexOrigin> origins;
  std::map<int, int> phi;
  std::vector<int> level0;
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < m; ++i) {
      int id = c * m + i;
      origins[id] = VertexOrigin{0, c, g.domain()[i], {}, {}, -1};
      phi[id] = (c == 0 ? m + i : i);
      level0.push_back(id);
    }
  return LayeredStructure(Mode::Graph, g,
                          FiniteStructure(Kind::Graph, std::move(dom), edges),
                          {level0}, std::move(origins), VertexMap(std::move(phi)));
}

layered::LayeredStructure extend_level_graph(const layered::LayeredStructure& d,
                                             int n, int cap) {
  if (d.mode() != Mode::Graph) throw InputError("extend_level_graph requires graph mode");
  if (n != kUnboundedN && n < 3) throw InputError("extend_level_graph requires n >= 3");
  const FiniteStructure& cur = d.structure();

  auto qualifies = [&](const std::vector<int>& s) {
    if (n == kUnboundedN || static_cast<int>(s.size()) < n - 1) return true;
    return is_kn_free(cur.induced(s), n - 1);
  };

  std::vector<std::vector<int>> chosen;
  for (auto& s : layered::enumerate_subsets(cur.domain(), cap))
    if (qualifies(s)) chosen.push_back(s);

  int next = cur.size();
  std::map<std::vector<int>, int> id_of;
  for (auto& s : chosen) id_of[s] = next++;

  std::vector<int> dom = cur.domain();
  std::set<std::pair<int, int>> edges = cur.edges();
  std::map<int, VertexOrigin> origins = d.origins();
  std::map<int, int> phi = d.phi().pairs();
  std::vector<int> new_level;
  const int lvl = d.top_level() + 1;
  for (auto& s : chosen) {
    int id = id_of[s];
    dom.push_back(id);
    new_level.push_back(id);
    origins[id] = VertexOrigin{lvl, -1, -1, s, {}, -1};
    for (int u : s) edges.insert({id, u});
    auto img = id_of.find(d.phi().image_of(s));
    if (img == id_of.end())
      throw InvariantError("image subset did not qualify; automorphism broken");
    phi[id] = img->second;
  }
  auto levels = d.levels();
  levels.push_back(std::move(new_level));
  return LayeredStructure(d.mode(), d.base(),
                          FiniteStructure(Kind::Graph, std::move(dom), edges),
                          std::move(levels), std::move(origins), VertexMap(std::move(phi)));
}

layered::LayeredStructure build_reduction_graph(const FiniteStructure& g, int n,
                                                int levels, int cap) {
  if (levels < 0) throw InputError("level count must be nonnegative");
  if (n != kUnboundedN && !is_kn_free(g, n))
    throw InputError("input graph is not K" + std::to_string(n) + "-free");
  LayeredStructure d = build_delta0_graph(g);
  for (int k = 0; k < levels; ++k) {
    d = extend_level_graph(d, n, cap);
    if (n != kUnboundedN && !is_kn_free(d.structure(), n))
      throw InvariantError("extension broke K" + std::to_string(n) + "-freeness");
  }
  return d;
}

FiniteStructure recover_base_graph(const FiniteStructure& g, const VertexMap& phi) {
  if (g.kind() != Kind::Graph) throw InputError("recover_base_graph requires a graph");
  return layered::recover_base(g, phi);
}

}  // namespace conjforge::gengraph
