#include "predicates.hpp"

#include <algorithm>
#include <functional>

#include "errors.hpp"

namespace conjforge {

namespace {

// Backtracking injection search in domain order. `edge_ok` checks the new
// assignment (u -> x) against every previously assigned pair; `full` decides
// whether partial injections short of the whole pattern may stop early.
bool extend_injection(const std::vector<int>& pattern_dom,
                      const std::vector<int>& host_dom, size_t at,
                      std::map<int, int>& partial, std::set<int>& used,
                      const std::function<bool(int, int, const std::map<int, int>&)>& edge_ok,
                      const std::function<bool(const std::map<int, int>&)>& accept) {
  if (at == pattern_dom.size()) return accept(partial);
  int u = pattern_dom[at];
  for (int x : host_dom) {
    if (used.count(x)) continue;
    if (!edge_ok(u, x, partial)) continue;
    partial[u] = x;
    used.insert(x);
    if (extend_injection(pattern_dom, host_dom, at + 1, partial, used, edge_ok, accept))
      return true;
    partial.erase(u);
    used.erase(x);
  }
  return false;
}

}  // namespace

std::optional<VertexMap> brute_force_isomorphism(const FiniteStructure& a,
                                                 const FiniteStructure& b) {
  if (a.kind() != b.kind())
    throw InputError("isomorphism search requires structures of the same kind");
  if (a.size() != b.size() || a.edges().size() != b.edges().size()) return std::nullopt;

  auto edge_ok = [&](int u, int x, const std::map<int, int>& partial) {
    for (auto& [v, y] : partial) {
      if (a.has_edge(u, v) != b.has_edge(x, y)) return false;
      if (a.has_edge(v, u) != b.has_edge(y, x)) return false;
    }
    return true;
  };
  std::map<int, int> partial;
  std::set<int> used;
  if (extend_injection(a.domain(), b.domain(), 0, partial, used, edge_ok,
                       [](const std::map<int, int>&) { return true; }))
    return VertexMap(partial);
  return std::nullopt;
}

namespace {

// Grows a clique (or independent set, when `independent`) one vertex at a
// time over the domain suffix starting at `from`.
bool grow_homogeneous_set(const FiniteStructure& s, bool independent,
                          std::vector<int>& chosen, size_t from, int target) {
  if (static_cast<int>(chosen.size()) == target) return true;
  const auto& dom = s.domain();
  for (size_t i = from; i < dom.size(); ++i) {
    int v = dom[i];
    bool fits = true;
    for (int u : chosen) {
      bool adj = s.adjacent(u, v);
      if (independent ? adj : !adj) { fits = false; break; }
    }
    if (!fits) continue;
    chosen.push_back(v);
    if (grow_homogeneous_set(s, independent, chosen, i + 1, target)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool is_kn_free(const FiniteStructure& g, int n) {
  if (g.kind() != Kind::Graph) throw InputError("is_kn_free requires a graph");
  if (n < 2) throw InputError("is_kn_free requires n >= 2");
  std::vector<int> chosen;
  return !grow_homogeneous_set(g, /*independent=*/false, chosen, 0, n);
}

bool is_in_free(const FiniteStructure& d, int n) {
  if (d.kind() != Kind::Digraph && d.kind() != Kind::Tournament)
    throw InputError("is_in_free requires a digraph or tournament");
  if (n < 2) throw InputError("is_in_free requires n >= 2");
  std::vector<int> chosen;
  return !grow_homogeneous_set(d, /*independent=*/true, chosen, 0, n);
}

namespace {

bool embeds_tournament_impl(const FiniteStructure& pattern, const FiniteStructure& host,
                            const std::vector<int>& required) {
  if (pattern.kind() != Kind::Tournament)
    throw InputError("embedding pattern must be a tournament");
  if (host.kind() != Kind::Digraph && host.kind() != Kind::Tournament)
    throw InputError("embedding host must be a digraph or tournament");
  if (pattern.size() > host.size()) return false;

  std::set<int> req(required.begin(), required.end());
  auto edge_ok = [&](int u, int x, const std::map<int, int>& partial) {
    for (auto& [v, y] : partial) {
      if (pattern.has_edge(u, v) != host.has_edge(x, y)) return false;
      if (pattern.has_edge(v, u) != host.has_edge(y, x)) return false;
    }
    return true;
  };
  auto accept = [&](const std::map<int, int>& partial) {
    if (req.empty()) return true;
    for (auto& [v, y] : partial)
      if (req.count(y)) return true;
    return false;
  };
  std::map<int, int> partial;
  std::set<int> used;
  return extend_injection(pattern.domain(), host.domain(), 0, partial, used, edge_ok, accept);
}

}  // namespace

bool embeds_tournament(const FiniteStructure& pattern, const FiniteStructure& host) {
  return embeds_tournament_impl(pattern, host, {});
}

bool embeds_tournament_through(const FiniteStructure& pattern,
                               const FiniteStructure& host,
                               const std::vector<int>& required) {
  return embeds_tournament_impl(pattern, host, required);
}

std::optional<int> check_one_point_extension(const FiniteStructure& host,
                                             const std::map<int, ExtensionRel>& spec) {
  Kind k = host.kind();
  for (auto& [v, rel] : spec) {
    if (!host.has_vertex(v)) throw InputError("extension spec mentions an unknown vertex");
    switch (rel) {
      case ExtensionRel::Adjacent:
        if (k != Kind::Graph) throw InputError("'adjacent' marker requires a graph host");
        break;
      case ExtensionRel::None:
        if (k != Kind::Digraph) throw InputError("'none' marker requires a digraph host");
        break;
      case ExtensionRel::Toward:
      case ExtensionRel::Away:
        if (k == Kind::Graph) throw InputError("directed marker on a graph host");
        break;
    }
  }
  bool exact_outside = (k == Kind::Graph || k == Kind::Digraph);
  for (int a : host.domain()) {
    if (spec.count(a)) continue;
    bool ok = true;
    for (int v : host.domain()) {
      if (v == a) continue;
      auto it = spec.find(v);
      if (it == spec.end()) {
        if (exact_outside && host.adjacent(a, v)) { ok = false; break; }
        continue;
      }
      switch (it->second) {
        case ExtensionRel::Adjacent:
          if (!host.adjacent(a, v)) ok = false;
          break;
        case ExtensionRel::None:
          if (host.adjacent(a, v)) ok = false;
          break;
        case ExtensionRel::Toward:
          if (!host.has_edge(v, a)) ok = false;
          break;
        case ExtensionRel::Away:
          if (!host.has_edge(a, v)) ok = false;
          break;
      }
      if (!ok) break;
    }
    if (ok) return a;
  }
  return std::nullopt;
}

bool verify_automorphism(const FiniteStructure& s, const VertexMap& f) {
  if (!f.permutes(s.domain())) return false;
  for (int u : s.domain())
    for (int v : s.domain())
      if (u != v && s.has_edge(u, v) != s.has_edge(f(u), f(v))) return false;
  return true;
}

bool verify_conjugacy_witness(const VertexMap& phi, const VertexMap& psi,
                              const VertexMap& delta) {
  const auto& dom = phi.pairs();
  auto same_keys = [&](const VertexMap& m) {
    if (m.pairs().size() != dom.size()) return false;
    for (auto& [v, w] : dom)
      if (!m.defined(v)) return false;
    return true;
  };
  if (!same_keys(psi) || !same_keys(delta))
    throw InputError("conjugacy witness maps must share one domain");
  for (auto& [v, w] : dom)
    if (delta(phi(v)) != psi(delta(v))) return false;
  return true;
}

std::vector<VertexMap> automorphism_group(const FiniteStructure& s) {
  std::vector<VertexMap> out;
  auto edge_ok = [&](int u, int x, const std::map<int, int>& partial) {
    for (auto& [v, y] : partial) {
      if (s.has_edge(u, v) != s.has_edge(x, y)) return false;
      if (s.has_edge(v, u) != s.has_edge(y, x)) return false;
    }
    return true;
  };
  std::function<void(size_t, std::map<int, int>&, std::set<int>&)> rec =
      [&](size_t at, std::map<int, int>& partial, std::set<int>& used) {
        if (at == s.domain().size()) {
          out.emplace_back(partial);
          return;
        }
        int u = s.domain()[at];
        for (int x : s.domain()) {
          if (used.count(x) || !edge_ok(u, x, partial)) continue;
          partial[u] = x;
          used.insert(x);
          rec(at + 1, partial, used);
          partial.erase(u);
          used.erase(x);
        }
      };
  std::map<int, int> partial;
  std::set<int> used;
  rec(0, partial, used);
  return out;
}

std::optional<VertexMap> find_conjugator_brute(const FiniteStructure& s,
                                               const VertexMap& phi,
                                               const VertexMap& psi) {
  for (const auto& delta : automorphism_group(s))
    if (verify_conjugacy_witness(phi, psi, delta)) return delta;
  return std::nullopt;
}

}  // namespace conjforge
