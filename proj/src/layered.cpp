#include "layered.hpp"

#include <algorithm>

#include "errors.hpp"
#include "predicates.hpp"

namespace conjforge::layered {

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Graph: return "graph";
    case Mode::Tournament: return "tournament";
    case Mode::InFree: return "inFree";
    case Mode::Forbidden: return "forbidden";
    case Mode::Multipartite: return "multipartite";
  }
  throw InputError("unknown mode");
}

Mode mode_from_name(const std::string& name) {
  if (name == "graph") return Mode::Graph;
  if (name == "tournament") return Mode::Tournament;
  if (name == "inFree") return Mode::InFree;
  if (name == "forbidden") return Mode::Forbidden;
  if (name == "multipartite") return Mode::Multipartite;
  throw InputError("unknown layered mode '" + name + "'");
}

LayeredStructure::LayeredStructure(Mode mode, FiniteStructure base,
                                   FiniteStructure structure,
                                   std::vector<std::vector<int>> levels,
                                   std::map<int, VertexOrigin> origins, VertexMap phi,
                                   std::vector<std::vector<int>> skipped)
    : mode_(mode),
      base_(std::move(base)),
      structure_(std::move(structure)),
      levels_(std::move(levels)),
      origins_(std::move(origins)),
      phi_(std::move(phi)),
      skipped_(std::move(skipped)) {
  size_t covered = 0;
  for (const auto& lvl : levels_) covered += lvl.size();
  if (covered != structure_.domain().size() || origins_.size() != covered)
    throw InvariantError("layered structure bookkeeping out of sync");
  if (!verify_automorphism(structure_, phi_))
    throw InvariantError("propagated map is not an automorphism");
  for (const auto& lvl : levels_)
    for (int v : lvl)
      if (origin(phi_(v)).level != origin(v).level)
        throw InvariantError("automorphism does not preserve levels");
}

const VertexOrigin& LayeredStructure::origin(int v) const {
  auto it = origins_.find(v);
  if (it == origins_.end())
    throw InputError("unknown vertex " + std::to_string(v));
  return it->second;
}

bool subset_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<std::vector<int>> enumerate_subsets(const std::vector<int>& pool, int cap) {
  if (cap < 0) throw InputError("subset cap must be nonnegative");
  std::vector<int> sorted(pool);
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> out;
  int maxsize = std::min<int>(cap, static_cast<int>(sorted.size()));
  std::vector<int> cur;
  auto rec = [&](auto&& self, size_t from, int want) -> void {
    if (want == 0) {
      out.push_back(cur);
      return;
    }
    for (size_t i = from; i + static_cast<size_t>(want) <= sorted.size(); ++i) {
      cur.push_back(sorted[i]);
      self(self, i + 1, want - 1);
      cur.pop_back();
    }
  };
  for (int s = 0; s <= maxsize; ++s) rec(rec, 0, s);
  return out;
}

FiniteStructure recover_base(const FiniteStructure& s, const VertexMap& phi) {
  if (!verify_automorphism(s, phi))
    throw InputError("recovery requires a verified automorphism");
  std::vector<int> kept;
  for (int v : s.domain())
    if (s.has_edge(v, phi(v))) kept.push_back(v);

  // phi preserves the recovery set, so its orbits partition it.
  std::map<int, int> orbit_of;  // vertex -> orbit rep (least element)
  std::vector<int> reps;
  std::set<int> seen;
  for (int v : kept) {
    if (seen.count(v)) continue;
    int rep = v, w = v;
    do {
      seen.insert(w);
      orbit_of[w] = v;
      w = phi(w);
    } while (w != v);
    reps.push_back(rep);
  }
  std::map<int, std::vector<int>> members;
  for (auto& [v, rep] : orbit_of) members[rep].push_back(v);

  // Quotient vertices are orbit reps relabeled densely in rep order.
  std::map<int, int> quotient_id;
  std::vector<int> dom;
  for (size_t i = 0; i < reps.size(); ++i) {
    quotient_id[reps[i]] = static_cast<int>(i);
    dom.push_back(static_cast<int>(i));
  }
  std::set<std::pair<int, int>> qedges;
  for (size_t i = 0; i < reps.size(); ++i) {
    for (size_t j = i + 1; j < reps.size(); ++j) {
      const auto& oi = members[reps[i]];
      const auto& oj = members[reps[j]];
      bool fwd = false, bwd = false;
      for (int u : oi)
        for (int v : oj) {
          if (s.has_edge(u, v)) fwd = true;
          if (s.has_edge(v, u)) bwd = true;
        }
      if (s.kind() == Kind::Graph) {
        if (!fwd) continue;
      } else {
        if (fwd && bwd)
          throw InvariantError("quotient edge rule ambiguous: both directions between orbits");
        if (!fwd && !bwd) continue;
      }
      // Some pair is adjacent; assert every member participates on both sides.
      for (int u : oi) {
        bool any = std::any_of(oj.begin(), oj.end(),
                               [&](int v) { return s.adjacent(u, v); });
        if (!any)
          throw InvariantError("quotient edge rule ambiguous: orbit member without neighbor");
      }
      for (int v : oj) {
        bool any = std::any_of(oi.begin(), oi.end(),
                               [&](int u) { return s.adjacent(u, v); });
        if (!any)
          throw InvariantError("quotient edge rule ambiguous: orbit member without neighbor");
      }
      if (s.kind() == Kind::Graph || fwd)
        qedges.insert({quotient_id[reps[i]], quotient_id[reps[j]]});
      else
        qedges.insert({quotient_id[reps[j]], quotient_id[reps[i]]});
    }
  }
  return FiniteStructure(s.kind(), std::move(dom), qedges);
}

namespace {

// Canonical provenance key for looking up image vertices.
struct OriginKey {
  int level, copy, base, part;
  std::vector<int> subset, subset2;
  auto operator<=>(const OriginKey&) const = default;
};

OriginKey key_of(const VertexOrigin& o) {
  return OriginKey{o.level, o.copy, o.base, o.part, o.subset, o.subset2};
}

}  // namespace

VertexMap induced_isomorphism(const LayeredStructure& a, const LayeredStructure& b,
                              const VertexMap& base_iso) {
  if (a.mode() != b.mode()) throw InputError("induced map requires equal modes");
  if (a.levels().size() != b.levels().size())
    throw InputError("induced map requires equal level counts");
  std::map<OriginKey, int> lookup;
  for (auto& [v, o] : b.origins()) lookup.emplace(key_of(o), v);

  VertexMap out;
  for (size_t lvl = 0; lvl < a.levels().size(); ++lvl) {
    for (int v : a.levels()[lvl]) {
      VertexOrigin o = a.origin(v);
      VertexOrigin img = o;
      if (o.level == 0) {
        img.base = base_iso(o.base);
      } else {
        img.subset = out.image_of(o.subset);
        img.subset2 = out.image_of(o.subset2);
      }
      auto it = lookup.find(key_of(img));
      if (it == lookup.end())
        throw InvariantError("induced image vertex missing; differing build parameters");
      out.set(v, it->second);
    }
  }
  return out;
}

}  // namespace conjforge::layered
