#include "structure.hpp"

#include <algorithm>

#include "errors.hpp"

namespace conjforge {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Graph: return "graph";
    case Kind::Digraph: return "digraph";
    case Kind::Tournament: return "tournament";
    case Kind::LinearOrder: return "linearOrder";
  }
  throw InputError("unknown kind");
}

Kind kind_from_name(const std::string& name) {
  if (name == "graph") return Kind::Graph;
  if (name == "digraph") return Kind::Digraph;
  if (name == "tournament") return Kind::Tournament;
  if (name == "linearOrder") return Kind::LinearOrder;
  throw InputError("unknown structure kind '" + name + "'");
}

bool is_directed_kind(Kind k) { return k != Kind::Graph; }

FiniteStructure::FiniteStructure(Kind kind, std::vector<int> domain,
                                 const std::set<std::pair<int, int>>& edges)
    : kind_(kind), domain_(std::move(domain)) {
  for (size_t i = 0; i < domain_.size(); ++i) {
    if (domain_[i] < 0) throw InputError("negative vertex id");
    if (!index_.emplace(domain_[i], static_cast<int>(i)).second)
      throw InputError("duplicate vertex id " + std::to_string(domain_[i]));
  }
  for (auto& [u, v] : edges) {
    if (!has_vertex(u) || !has_vertex(v))
      throw InputError("edge endpoint outside the domain");
    if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
    edges_.insert({u, v});
    if (kind_ == Kind::Graph) edges_.insert({v, u});
  }
  if (kind_ != Kind::Graph) {
    for (auto& [u, v] : edges_)
      if (edges_.count({v, u}))
        throw InputError("antisymmetry violated on pair (" + std::to_string(u) +
                         "," + std::to_string(v) + ")");
  }
  if (kind_ == Kind::Tournament || kind_ == Kind::LinearOrder) {
    for (int u : domain_)
      for (int v : domain_)
        if (u != v && !adjacent(u, v))
          throw InputError("totality violated on pair (" + std::to_string(u) +
                           "," + std::to_string(v) + ")");
  }
  if (kind_ == Kind::LinearOrder) {
    for (auto& [u, v] : edges_)
      for (int w : domain_)
        if (has_edge(v, w) && !has_edge(u, w))
          throw InputError("transitivity violated at (" + std::to_string(u) +
                           "," + std::to_string(v) + "," + std::to_string(w) + ")");
  }
}

FiniteStructure FiniteStructure::linear_order(int size) {
  if (size < 0) throw InputError("negative linear order size");
  std::vector<int> dom(size);
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < size; ++i) {
    dom[i] = i;
    for (int j = i + 1; j < size; ++j) edges.insert({i, j});
  }
  return FiniteStructure(Kind::LinearOrder, std::move(dom), edges);
}

int FiniteStructure::out_degree(int v) const {
  int d = 0;
  for (int w : domain_)
    if (has_edge(v, w)) ++d;
  return d;
}

int FiniteStructure::in_degree(int v) const {
  int d = 0;
  for (int w : domain_)
    if (has_edge(w, v)) ++d;
  return d;
}

FiniteStructure FiniteStructure::relabel(const VertexMap& p) const {
  if (!p.total_on(domain_)) throw InputError("relabeling map not total on the domain");
  std::vector<int> dom;
  dom.reserve(domain_.size());
  for (int v : domain_) dom.push_back(p(v));
  std::set<std::pair<int, int>> edges;
  for (auto& [u, v] : edges_) edges.insert({p(u), p(v)});
  return FiniteStructure(kind_, std::move(dom), edges);
}

FiniteStructure FiniteStructure::induced(const std::vector<int>& subset) const {
  std::set<int> keep(subset.begin(), subset.end());
  std::vector<int> dom;
  for (int v : domain_)
    if (keep.count(v)) dom.push_back(v);
  if (dom.size() != keep.size()) throw InputError("induced subset not within the domain");
  std::set<std::pair<int, int>> edges;
  for (auto& [u, v] : edges_)
    if (keep.count(u) && keep.count(v)) edges.insert({u, v});
  return FiniteStructure(kind_, std::move(dom), edges);
}

FiniteStructure FiniteStructure::as_kind(Kind k) const {
  if (k == Kind::Graph && kind_ != Kind::Graph)
    throw InputError("cannot re-tag a directed structure as a graph");
  return FiniteStructure(k, domain_, edges_);
}

VertexMap::VertexMap(std::map<int, int> pairs) : pairs_(std::move(pairs)) {
  for (auto& [v, w] : pairs_)
    if (!values_.insert(w).second)
      throw InputError("vertex map not injective at value " + std::to_string(w));
}

VertexMap VertexMap::identity(const std::vector<int>& domain) {
  std::map<int, int> p;
  for (int v : domain) p[v] = v;
  return VertexMap(std::move(p));
}

int VertexMap::operator()(int v) const {
  auto it = pairs_.find(v);
  if (it == pairs_.end())
    throw InputError("vertex map undefined at " + std::to_string(v));
  return it->second;
}

void VertexMap::set(int v, int w) {
  if (pairs_.count(v)) throw InputError("vertex map already defined at " + std::to_string(v));
  if (!values_.insert(w).second)
    throw InputError("vertex map not injective at value " + std::to_string(w));
  pairs_[v] = w;
}

VertexMap VertexMap::inverse() const {
  std::map<int, int> p;
  for (auto& [v, w] : pairs_) p[w] = v;
  return VertexMap(std::move(p));
}

VertexMap VertexMap::compose_after(const VertexMap& inner) const {
  std::map<int, int> p;
  for (auto& [v, w] : inner.pairs_) p[v] = (*this)(w);
  return VertexMap(std::move(p));
}

bool VertexMap::total_on(const std::vector<int>& domain) const {
  return std::all_of(domain.begin(), domain.end(),
                     [&](int v) { return defined(v); });
}

bool VertexMap::permutes(const std::vector<int>& domain) const {
  if (pairs_.size() != domain.size() || !total_on(domain)) return false;
  std::set<int> dom(domain.begin(), domain.end());
  return values_ == dom;
}

std::vector<int> VertexMap::image_of(const std::vector<int>& subset) const {
  std::vector<int> out;
  out.reserve(subset.size());
  for (int v : subset) out.push_back((*this)(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> VertexMap::orbits(const std::vector<int>& domain) const {
  if (!permutes(domain)) throw InputError("orbits require a permutation of the domain");
  std::set<int> seen;
  std::vector<std::vector<int>> out;
  std::vector<int> sorted(domain);
  std::sort(sorted.begin(), sorted.end());
  for (int v : sorted) {
    if (seen.count(v)) continue;
    std::vector<int> cyc;
    int w = v;
    do {
      cyc.push_back(w);
      seen.insert(w);
      w = (*this)(w);
    } while (w != v);
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace conjforge
