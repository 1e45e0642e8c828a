#include "digraph_reduction.hpp"

#include <algorithm>

#include "errors.hpp"
#include "predicates.hpp"

namespace conjforge::gendigraph {

using layered::LayeredStructure;
using layered::Mode;
using layered::VertexOrigin;

ForbiddenFamily::ForbiddenFamily(std::vector<FiniteStructure> members)
    : members_(std::move(members)) {
  for (const auto& t : members_) {
    if (t.kind() != Kind::Tournament)
      throw InputError("forbidden family members must be tournaments");
    if (t.size() < 3)
      throw InputError("forbidden family members must have at least 3 vertices");
  }
}

namespace {

// Raw pieces of a copies-of-T level 0: `copies` disjoint copies with
// per-letter directed cycles x_0 -> ... -> x_{copies-1} -> x_0 and phi the
// rotation. Cross edges are added by the caller.
struct Delta0 {
  std::vector<int> dom;
  std::set<std::pair<int, int>> edges;
  std::map<int, VertexOrigin> origins;
  std::map<int, int> phi;
  std::vector<int> level0;
};

Delta0 copies_delta0(const FiniteStructure& base, int copies) {
  const int m = base.size();
  Delta0 d;
  for (int c = 0; c < copies; ++c)
    for (int i = 0; i < m; ++i) {
      int id = c * m + i;
      d.dom.push_back(id);
      d.level0.push_back(id);
      d.origins[id] = VertexOrigin{0, c, base.domain()[i], {}, {}, -1};
      d.phi[id] = ((c + 1) % copies) * m + i;
      d.edges.insert({id, ((c + 1) % copies) * m + i});  // letter cycle
    }
  return d;
}

int base_pos(const FiniteStructure& base, int v) {
  for (int i = 0; i < base.size(); ++i)
    if (base.domain()[i] == v) return i;
  throw InvariantError("base vertex lookup failed");
}

bool pair_less(const std::pair<std::vector<int>, std::vector<int>>& a,
               const std::pair<std::vector<int>, std::vector<int>>& b) {
  if (a.first != b.first) return layered::subset_less(a.first, b.first);
  return layered::subset_less(a.second, b.second);
}

}  // namespace

layered::LayeredStructure build_tournament_delta0(const FiniteStructure& t) {
  if (t.kind() != Kind::Tournament)
    throw InputError("build_tournament_delta0 requires a tournament");
  const int m = t.size();
  Delta0 d = copies_delta0(t, 3);
  for (auto& [u, v] : t.edges()) {
    int iu = base_pos(t, u), iv = base_pos(t, v);
    for (int c = 0; c < 3; ++c)
      for (int e = 0; e < 3; ++e) d.edges.insert({c * m + iu, e * m + iv});
  }
  return LayeredStructure(Mode::Tournament, t,
                          FiniteStructure(Kind::Tournament, d.dom, d.edges),
                          {d.level0}, std::move(d.origins), VertexMap(std::move(d.phi)));
}

namespace {

// Orbit of a subset under the subset action of phi, starting from its least
// representative. Returns members in rotation order.
std::vector<std::vector<int>> subset_orbit(const VertexMap& phi,
                                           const std::vector<int>& s) {
  std::vector<std::vector<int>> orbit{s};
  std::vector<int> cur = phi.image_of(s);
  while (cur != s) {
    orbit.push_back(cur);
    cur = phi.image_of(cur);
    if (orbit.size() > 8) throw InvariantError("unexpected subset orbit length");
  }
  return orbit;
}

}  // namespace

layered::LayeredStructure extend_tournament_level(const layered::LayeredStructure& d,
                                                  int cap) {
  if (d.mode() != Mode::Tournament && d.mode() != Mode::InFree)
    throw InputError("extend_tournament_level requires tournament or inFree mode");
  const FiniteStructure& cur = d.structure();
  auto subs = layered::enumerate_subsets(cur.domain(), cap);

  int next = cur.size();
  std::map<std::vector<int>, int> id_of;
  for (auto& s : subs) id_of[s] = next++;

  std::vector<int> dom = cur.domain();
  std::set<std::pair<int, int>> edges = cur.edges();
  std::map<int, VertexOrigin> origins = d.origins();
  std::map<int, int> phi = d.phi().pairs();
  std::vector<int> new_level;
  const int lvl = d.top_level() + 1;

  std::set<int> news;
  for (auto& s : subs) {
    int id = id_of[s];
    dom.push_back(id);
    new_level.push_back(id);
    news.insert(id);
    origins[id] = VertexOrigin{lvl, -1, -1, s, {}, -1};
    std::set<int> in_s(s.begin(), s.end());
    for (int a : cur.domain())
      edges.insert(in_s.count(a) ? std::make_pair(a, id) : std::make_pair(id, a));
    phi[id] = id_of.at(d.phi().image_of(s));
  }

  // Orbit closure and inter-orbit orientation over the new vertices.
  std::vector<std::vector<std::vector<int>>> orbits;  // in least-member order
  std::set<std::vector<int>> claimed;
  for (auto& s : subs) {
    if (claimed.count(s)) continue;
    auto orbit = subset_orbit(d.phi(), s);
    if (orbit.size() != 1 && orbit.size() != 3)
      throw InvariantError("tournament-mode subset orbit of unexpected length");
    for (auto& member : orbit) claimed.insert(member);
    if (orbit.size() == 3)
      for (size_t i = 0; i < 3; ++i)
        edges.insert({id_of[orbit[(i + 1) % 3]], id_of[orbit[i]]});  // phi(x) -> x
    orbits.push_back(std::move(orbit));
  }
  for (size_t i = 0; i < orbits.size(); ++i)
    for (size_t j = i + 1; j < orbits.size(); ++j)
      for (auto& sa : orbits[i])
        for (auto& sb : orbits[j]) edges.insert({id_of[sa], id_of[sb]});

  auto levels = d.levels();
  levels.push_back(std::move(new_level));
  return LayeredStructure(d.mode(), d.base(),
                          FiniteStructure(cur.kind(), std::move(dom), edges),
                          std::move(levels), std::move(origins), VertexMap(std::move(phi)));
}

layered::LayeredStructure build_reduction_tournament(const FiniteStructure& t,
                                                     int levels, int cap) {
  if (levels < 0) throw InputError("level count must be nonnegative");
  LayeredStructure d = build_tournament_delta0(t);
  for (int k = 0; k < levels; ++k) d = extend_tournament_level(d, cap);
  return d;
}

layered::LayeredStructure build_reduction_in_free(const FiniteStructure& t, int n,
                                                  int levels, int cap) {
  if (n < 2) throw InputError("I_n-free construction requires n >= 2");
  if (levels < 0) throw InputError("level count must be nonnegative");
  if (t.kind() != Kind::Tournament)
    throw InputError("build_reduction_in_free requires a tournament");

  // Same three-copy base, carried as a digraph since later levels contain
  // non-adjacent pairs.
  LayeredStructure d0 = build_tournament_delta0(t);
  LayeredStructure d(Mode::InFree, t, d0.structure().as_kind(Kind::Digraph),
                     d0.levels(), d0.origins(), d0.phi());

  for (int k = 0; k < levels; ++k) {
    const FiniteStructure& cur = d.structure();
    auto qualifies = [&](const std::vector<int>& s2) {
      if (n - 1 < 2) return s2.empty();
      if (static_cast<int>(s2.size()) < n - 1) return true;
      return is_in_free(cur.induced(s2), n - 1);
    };

    using Pair = std::pair<std::vector<int>, std::vector<int>>;
    std::vector<Pair> pairs;
    for (auto& s : layered::enumerate_subsets(cur.domain(), cap)) {
      std::set<int> in_s(s.begin(), s.end());
      std::vector<int> rest;
      for (int v : cur.domain())
        if (!in_s.count(v)) rest.push_back(v);
      for (auto& s2 : layered::enumerate_subsets(rest, cap - static_cast<int>(s.size())))
        if (qualifies(s2)) pairs.emplace_back(s, s2);
    }
    std::sort(pairs.begin(), pairs.end(), pair_less);

    int next = cur.size();
    std::map<Pair, int> id_of;
    for (auto& p : pairs) id_of[p] = next++;

    std::vector<int> dom = cur.domain();
    std::set<std::pair<int, int>> edges = cur.edges();
    std::map<int, VertexOrigin> origins = d.origins();
    std::map<int, int> phi = d.phi().pairs();
    std::vector<int> new_level;
    const int lvl = d.top_level() + 1;

    for (auto& p : pairs) {
      int id = id_of[p];
      dom.push_back(id);
      new_level.push_back(id);
      origins[id] = VertexOrigin{lvl, -1, -1, p.first, p.second, -1};
      std::set<int> in_s(p.first.begin(), p.first.end());
      std::set<int> in_s2(p.second.begin(), p.second.end());
      for (int a : cur.domain()) {
        if (in_s.count(a))
          edges.insert({a, id});
        else if (!in_s2.count(a))
          edges.insert({id, a});
      }
      Pair img{d.phi().image_of(p.first), d.phi().image_of(p.second)};
      auto it = id_of.find(img);
      if (it == id_of.end())
        throw InvariantError("image pair did not qualify; automorphism broken");
      phi[id] = it->second;
    }

    // Orbits and inter-orbit orientation, as in the tournament case.
    std::vector<std::vector<Pair>> orbits;
    std::set<Pair> claimed;
    for (auto& p : pairs) {
      if (claimed.count(p)) continue;
      std::vector<Pair> orbit{p};
      Pair curp{d.phi().image_of(p.first), d.phi().image_of(p.second)};
      while (curp != p) {
        orbit.push_back(curp);
        curp = {d.phi().image_of(curp.first), d.phi().image_of(curp.second)};
      }
      if (orbit.size() != 1 && orbit.size() != 3)
        throw InvariantError("inFree-mode pair orbit of unexpected length");
      for (auto& member : orbit) claimed.insert(member);
      if (orbit.size() == 3)
        for (size_t i = 0; i < 3; ++i)
          edges.insert({id_of[orbit[(i + 1) % 3]], id_of[orbit[i]]});
      orbits.push_back(std::move(orbit));
    }
    for (size_t i = 0; i < orbits.size(); ++i)
      for (size_t j = i + 1; j < orbits.size(); ++j)
        for (auto& pa : orbits[i])
          for (auto& pb : orbits[j]) edges.insert({id_of[pa], id_of[pb]});

    auto lv = d.levels();
    lv.push_back(std::move(new_level));
    d = LayeredStructure(Mode::InFree, t,
                         FiniteStructure(Kind::Digraph, std::move(dom), edges),
                         std::move(lv), std::move(origins), VertexMap(std::move(phi)));
    if (!is_in_free(d.structure(), n))
      throw InvariantError("extension broke I" + std::to_string(n) + "-freeness");
  }
  return d;
}

layered::LayeredStructure build_reduction_forbidden(const FiniteStructure& g,
                                                    const ForbiddenFamily& f,
                                                    int levels, int cap) {
  if (levels < 0) throw InputError("level count must be nonnegative");
  if (g.kind() != Kind::Digraph && g.kind() != Kind::Tournament)
    throw InputError("build_reduction_forbidden requires a digraph");
  for (const auto& p : f.members())
    if (embeds_tournament(p, g))
      throw InputError("input digraph embeds a forbidden tournament");

  const int m = g.size();
  Delta0 raw = copies_delta0(g, 4);
  for (auto& [u, v] : g.edges()) {
    int iu = base_pos(g, u), iv = base_pos(g, v);
    for (int c = 0; c < 4; ++c) raw.edges.insert({c * m + iu, c * m + iv});
  }
  LayeredStructure d(Mode::Forbidden, g,
                     FiniteStructure(Kind::Digraph, raw.dom, raw.edges),
                     {raw.level0}, std::move(raw.origins), VertexMap(std::move(raw.phi)));
  for (const auto& p : f.members())
    if (embeds_tournament(p, d.structure()))
      throw InvariantError("level 0 unexpectedly embeds a forbidden tournament");

  for (int k = 0; k < levels; ++k) {
    const FiniteStructure& cur = d.structure();
    auto subs = layered::enumerate_subsets(cur.domain(), cap);

    // Candidate orbits are admitted or skipped whole. An orbit of length two
    // cannot be closed into a C4 equivariantly and is dropped outright.
    std::vector<std::vector<std::vector<int>>> survivors;
    std::vector<std::vector<int>> skipped = d.skipped();
    std::set<std::vector<int>> claimed;
    for (auto& s : subs) {
      if (claimed.count(s)) continue;
      auto orbit = subset_orbit(d.phi(), s);
      for (auto& member : orbit) claimed.insert(member);
      if (orbit.size() == 2) continue;
      if (orbit.size() != 1 && orbit.size() != 4)
        throw InvariantError("forbidden-mode subset orbit of unexpected length");

      // Tentatively add the whole orbit (with its C4 edges) and test for
      // forbidden copies through the new vertices.
      std::vector<int> tdom = cur.domain();
      std::set<std::pair<int, int>> tedges = cur.edges();
      std::vector<int> new_ids;
      int tnext = cur.size();
      std::map<std::vector<int>, int> tid;
      for (auto& member : orbit) {
        int id = tnext++;
        tid[member] = id;
        tdom.push_back(id);
        new_ids.push_back(id);
        std::set<int> in_s(member.begin(), member.end());
        for (int a : cur.domain())
          tedges.insert(in_s.count(a) ? std::make_pair(a, id) : std::make_pair(id, a));
      }
      if (orbit.size() == 4)
        for (size_t i = 0; i < 4; ++i)
          tedges.insert({tid[orbit[(i + 1) % 4]], tid[orbit[i]]});  // phi(x) -> x
      FiniteStructure tentative(Kind::Digraph, tdom, tedges);
      bool bad = false;
      for (const auto& p : f.members())
        if (embeds_tournament_through(p, tentative, new_ids)) { bad = true; break; }
      if (bad)
        skipped.push_back(orbit.front());
      else
        survivors.push_back(orbit);
    }

    // Ids in canonical subset order over the surviving vertices.
    std::vector<std::vector<int>> kept;
    for (auto& orbit : survivors)
      for (auto& member : orbit) kept.push_back(member);
    std::sort(kept.begin(), kept.end(), layered::subset_less);

    int next = cur.size();
    std::map<std::vector<int>, int> id_of;
    for (auto& s : kept) id_of[s] = next++;

    std::vector<int> dom = cur.domain();
    std::set<std::pair<int, int>> edges = cur.edges();
    std::map<int, VertexOrigin> origins = d.origins();
    std::map<int, int> phi = d.phi().pairs();
    std::vector<int> new_level;
    const int lvl = d.top_level() + 1;
    for (auto& s : kept) {
      int id = id_of[s];
      dom.push_back(id);
      new_level.push_back(id);
      origins[id] = VertexOrigin{lvl, -1, -1, s, {}, -1};
      std::set<int> in_s(s.begin(), s.end());
      for (int a : cur.domain())
        edges.insert(in_s.count(a) ? std::make_pair(a, id) : std::make_pair(id, a));
      phi[id] = id_of.at(d.phi().image_of(s));
    }
    for (auto& orbit : survivors)
      if (orbit.size() == 4)
        for (size_t i = 0; i < 4; ++i)
          edges.insert({id_of[orbit[(i + 1) % 4]], id_of[orbit[i]]});

    auto lv = d.levels();
    lv.push_back(std::move(new_level));
    d = LayeredStructure(Mode::Forbidden, g,
                         FiniteStructure(Kind::Digraph, std::move(dom), edges),
                         std::move(lv), std::move(origins), VertexMap(std::move(phi)),
                         std::move(skipped));
    for (const auto& p : f.members())
      if (embeds_tournament(p, d.structure()))
        throw InvariantError("extension embedded a forbidden tournament");
  }
  return d;
}

layered::LayeredStructure build_reduction_multipartite(const FiniteStructure& t,
                                                       int n, int levels, int cap) {
  if (t.kind() != Kind::Tournament)
    throw InputError("build_reduction_multipartite requires a tournament");
  if (n < 2) throw InputError("multipartite construction requires n >= 2");
  if (levels < 0) throw InputError("level count must be nonnegative");

  const int m = t.size();
  Delta0 raw = copies_delta0(t, 4);
  for (auto& [u, v] : t.edges()) {
    int iu = base_pos(t, u), iv = base_pos(t, v);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        raw.edges.insert({2 * i * m + iu, (2 * j + 1) * m + iv});
        raw.edges.insert({(2 * i + 1) * m + iu, 2 * j * m + iv});
      }
  }
  for (auto& [id, o] : raw.origins) o.part = o.copy % 2;

  auto check_partite = [n](const LayeredStructure& d) {
    const FiniteStructure& s = d.structure();
    for (int u : s.domain())
      for (int v : s.domain()) {
        if (u == v) continue;
        bool same = d.origin(u).part == d.origin(v).part;
        if (same && s.adjacent(u, v))
          throw InvariantError("edge inside a part");
        if (!same && !s.adjacent(u, v))
          throw InvariantError("missing cross-part edge");
      }
    for (int u : s.domain()) {
      int pu = d.origin(u).part, pv = d.origin(d.phi()(u)).part;
      int expect = pu < 2 ? 1 - pu : pu;
      if (pv != expect)
        throw InvariantError("automorphism does not respect the part action");
      if (pu < 0 || pu >= n) throw InvariantError("part index out of range");
    }
  };

  LayeredStructure d(Mode::Multipartite, t,
                     FiniteStructure(Kind::Digraph, raw.dom, raw.edges),
                     {raw.level0}, std::move(raw.origins), VertexMap(std::move(raw.phi)));
  check_partite(d);

  using Key = std::pair<int, std::vector<int>>;  // (part, creating subset)
  for (int k = 0; k < levels; ++k) {
    const FiniteStructure& cur = d.structure();
    auto part_of = [&](int v) { return d.origin(v).part; };
    auto phi_key = [&](const Key& key) -> Key {
      int i = key.first;
      return {i < 2 ? 1 - i : i, d.phi().image_of(key.second)};
    };

    std::vector<Key> keys;
    for (int i = 0; i < n; ++i) {
      std::vector<int> pool;
      for (int v : cur.domain())
        if (part_of(v) != i) pool.push_back(v);
      for (auto& s : layered::enumerate_subsets(pool, cap)) keys.emplace_back(i, s);
    }

    // Orbit processing: parts 0/1 alternate under phi, so their orbits have
    // length 2 or 4; length-2 orbits would need an oriented cross-part pair
    // invariant under phi, which cannot exist, and are dropped.
    std::vector<std::vector<Key>> orbits;
    std::set<Key> claimed;
    for (auto& key : keys) {
      if (claimed.count(key)) continue;
      std::vector<Key> orbit{key};
      Key curk = phi_key(key);
      while (curk != key) {
        orbit.push_back(curk);
        curk = phi_key(curk);
        if (orbit.size() > 8) throw InvariantError("unexpected key orbit length");
      }
      for (auto& member : orbit) claimed.insert(member);
      if (key.first < 2 && orbit.size() == 2) continue;
      orbits.push_back(std::move(orbit));
    }

    std::vector<Key> kept;
    for (auto& orbit : orbits)
      for (auto& member : orbit) kept.push_back(member);
    std::sort(kept.begin(), kept.end(), [](const Key& a, const Key& b) {
      if (a.first != b.first) return a.first < b.first;
      return layered::subset_less(a.second, b.second);
    });

    int next = cur.size();
    std::map<Key, int> id_of;
    for (auto& key : kept) id_of[key] = next++;

    std::vector<int> dom = cur.domain();
    std::set<std::pair<int, int>> edges = cur.edges();
    std::map<int, VertexOrigin> origins = d.origins();
    std::map<int, int> phi = d.phi().pairs();
    std::vector<int> new_level;
    const int lvl = d.top_level() + 1;
    for (auto& key : kept) {
      int id = id_of[key];
      dom.push_back(id);
      new_level.push_back(id);
      origins[id] = VertexOrigin{lvl, -1, -1, key.second, {}, key.first};
      std::set<int> in_s(key.second.begin(), key.second.end());
      for (int a : cur.domain()) {
        if (in_s.count(a))
          edges.insert({a, id});
        else if (part_of(a) != key.first)
          edges.insert({id, a});
      }
      phi[id] = id_of.at(phi_key(key));
    }
    // Orbit edges within parts 0/1 (length-4 orbits): phi(x) -> x.
    for (auto& orbit : orbits)
      if (orbit.front().first < 2)
        for (size_t i = 0; i < orbit.size(); ++i)
          edges.insert({id_of[orbit[(i + 1) % orbit.size()]], id_of[orbit[i]]});
    // Cross-orbit completion among new vertices.
    for (size_t i = 0; i < orbits.size(); ++i)
      for (size_t j = 0; j < orbits.size(); ++j) {
        if (i == j) continue;
        for (auto& ka : orbits[i])
          for (auto& kb : orbits[j]) {
            int pa = ka.first, pb = kb.first;
            if (pa == pb) continue;
            if (pb >= 2) {
              if (pa < pb) edges.insert({id_of[ka], id_of[kb]});
            } else if (pa < 2) {
              if (i < j) edges.insert({id_of[ka], id_of[kb]});  // well-order
            }
          }
      }

    auto lv = d.levels();
    lv.push_back(std::move(new_level));
    d = LayeredStructure(Mode::Multipartite, t,
                         FiniteStructure(Kind::Digraph, std::move(dom), edges),
                         std::move(lv), std::move(origins), VertexMap(std::move(phi)));
    check_partite(d);
  }
  return d;
}

FiniteStructure build_hat(const FiniteStructure& t) {
  if (t.kind() != Kind::Tournament) throw InputError("build_hat requires a tournament");
  const int m = t.size();
  // Ids: a = 0, T = 1..m, a-bar = m+1, T-bar = m+2..2m+1.
  const int bar = m + 1;
  std::vector<int> dom(2 * m + 2);
  for (int i = 0; i < 2 * m + 2; ++i) dom[i] = i;

  // The extended tournament a -> T on ids 0..m.
  std::set<std::pair<int, int>> ext;
  for (int i = 1; i <= m; ++i) ext.insert({0, i});
  for (auto& [u, v] : t.edges())
    ext.insert({1 + base_pos(t, u), 1 + base_pos(t, v)});

  std::set<std::pair<int, int>> edges;
  for (auto& [u, v] : ext) {
    edges.insert({u, v});              // unbarred copy
    edges.insert({u + bar, v + bar});  // barred copy
    // Cross edges reversed: x -> y-bar iff y -> x.
    edges.insert({v, u + bar});
    edges.insert({v + bar, u});
  }
  return FiniteStructure(Kind::Digraph, std::move(dom), edges);
}

VertexMap hat_lift(const FiniteStructure& t, const VertexMap& phi, bool with_swap) {
  if (!verify_automorphism(t, phi))
    throw InputError("hat_lift requires an automorphism of the base tournament");
  const int m = t.size();
  const int bar = m + 1;
  std::map<int, int> lift;
  auto barred = [&](int v) { return v < bar ? v + bar : v - bar; };
  lift[0] = with_swap ? barred(0) : 0;
  lift[bar] = with_swap ? 0 : bar;
  for (int i = 0; i < m; ++i) {
    int img = 1 + base_pos(t, phi(t.domain()[i]));
    lift[1 + i] = with_swap ? barred(img) : img;
    lift[bar + 1 + i] = with_swap ? img : barred(img);
  }
  VertexMap out((std::map<int, int>(lift)));
  if (!verify_automorphism(build_hat(t), out))
    throw InvariantError("hat lift is not an automorphism");
  return out;
}

FiniteStructure recover_base_digraph(const FiniteStructure& d, const VertexMap& phi) {
  if (d.kind() != Kind::Digraph && d.kind() != Kind::Tournament)
    throw InputError("recover_base_digraph requires a digraph or tournament");
  return layered::recover_base(d, phi);
}

}  // namespace conjforge::gendigraph
