#include "serialize.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace conjforge::io {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

namespace {

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Rat rat_from_json(const json& j) {
  if (!j.is_string()) throw InputError("rationals are encoded as strings");
  return Rat::parse(j.get<std::string>());
}

json count_to_json(const composite::Count& c) {
  if (c.infinite) return json("inf");
  return json(c.value);
}

}  // namespace

json structure_to_json(const FiniteStructure& s) {
  json j;
  j["kind"] = kind_name(s.kind());
  j["vertices"] = s.domain();
  json edges = json::array();
  for (auto& [u, v] : s.edges()) {
    if (s.kind() == Kind::Graph && u > v) continue;  // one entry per edge
    edges.push_back({u, v});
  }
  j["edges"] = std::move(edges);
  return j;
}

FiniteStructure structure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("vertices") ||
      !j.contains("edges"))
    throw InputError("structure JSON needs kind, vertices, edges");
  Kind kind = kind_from_name(j["kind"].get<std::string>());
  std::vector<int> dom;
  for (auto& v : j["vertices"]) dom.push_back(as_int(v, "vertex"));
  std::set<std::pair<int, int>> edges;
  for (auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw InputError("edges are [u,v] pairs");
    edges.insert({as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint")});
  }
  return FiniteStructure(kind, std::move(dom), edges);
}

std::string structure_to_dot(const FiniteStructure& s) {
  std::ostringstream os;
  bool directed = is_directed_kind(s.kind());
  os << (directed ? "digraph" : "graph") << " conjforge {\n";
  for (int v : s.domain()) os << "  " << v << ";\n";
  for (auto& [u, v] : s.edges()) {
    if (!directed && u > v) continue;
    os << "  " << u << (directed ? " -> " : " -- ") << v << ";\n";
  }
  os << "}\n";
  return os.str();
}

json family_to_json(const gendigraph::ForbiddenFamily& f) {
  json j = json::array();
  for (const auto& t : f.members()) j.push_back(structure_to_json(t));
  return j;
}

gendigraph::ForbiddenFamily family_from_json(const json& j) {
  if (!j.is_array()) throw InputError("a forbidden family is a JSON array of tournaments");
  std::vector<FiniteStructure> members;
  for (auto& t : j) members.push_back(structure_from_json(t));
  return gendigraph::ForbiddenFamily(std::move(members));
}

json plmap_to_json(const qorder::PLAutomorphism& f) {
  json knots = json::array();
  for (auto& [x, y] : f.knots()) knots.push_back({x.str(), y.str()});
  json j;
  j["knots"] = std::move(knots);
  return j;
}

qorder::PLAutomorphism plmap_from_json(const json& j) {
  if (!j.is_object() || !j.contains("knots"))
    throw InputError("PL map JSON needs a knots array");
  std::vector<qorder::PLAutomorphism::Knot> knots;
  for (auto& k : j["knots"]) {
    if (!k.is_array() || k.size() != 2)
      throw InputError("knots are [\"x\",\"y\"] pairs");
    knots.emplace_back(rat_from_json(k[0]), rat_from_json(k[1]));
  }
  return qorder::PLAutomorphism(std::move(knots));
}

json decomposition_to_json(const qorder::OrbitalDecomposition& d) {
  json regions = json::array();
  for (const auto& r : d.regions) {
    json e;
    e["lo"] = r.lo ? json(r.lo->str()) : json("-inf");
    e["hi"] = r.hi ? json(r.hi->str()) : json("+inf");
    switch (r.type) {
      case qorder::RegionType::Fixed: e["type"] = "fixed"; break;
      case qorder::RegionType::Up: e["type"] = "up"; break;
      case qorder::RegionType::Down: e["type"] = "down"; break;
    }
    regions.push_back(std::move(e));
  }
  json j;
  j["regions"] = std::move(regions);
  return j;
}

json registry_to_json(const circular::SnRegistry& r) {
  json points = json::array();
  for (const auto& p : r.points()) points.push_back(p.str());
  json j;
  j["n"] = r.n();
  j["points"] = std::move(points);
  return j;
}

circular::SnRegistry registry_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("points"))
    throw InputError("registry JSON needs n and points");
  circular::SnRegistry reg(as_int(j["n"], "n"));
  for (auto& p : j["points"]) reg.add(rat_from_json(p));
  return reg;
}

json snmap_to_json(const circular::SnAutomorphism& f) {
  json j;
  j["n"] = f.registry().n();
  json points = json::array();
  for (const auto& p : f.registry().points()) points.push_back(p.str());
  j["points"] = std::move(points);
  json pairs = json::array();
  for (auto& [x, y] : f.assignment()) pairs.push_back({x.str(), y.str()});
  j["map"] = std::move(pairs);
  return j;
}

circular::SnAutomorphism snmap_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("points") || !j.contains("map"))
    throw InputError("S(n) automorphism JSON needs n, points, map");
  circular::SnRegistry reg(as_int(j["n"], "n"));
  for (auto& p : j["points"]) reg.add(rat_from_json(p));
  std::map<Rat, Rat> assignment;
  for (auto& e : j["map"]) {
    if (!e.is_array() || e.size() != 2)
      throw InputError("map entries are theta-string pairs");
    assignment.emplace(rat_from_json(e[0]), rat_from_json(e[1]));
  }
  return circular::SnAutomorphism(std::move(reg), std::move(assignment));
}

json layered_to_json(const layered::LayeredStructure& d) {
  json j;
  j["mode"] = layered::mode_name(d.mode());
  j["base"] = structure_to_json(d.base());
  j["structure"] = structure_to_json(d.structure());
  // Each level lists its vertices alongside the parallel created_from
  // records: level 0 entries carry the copy index and base vertex, later
  // entries the creating subset(s); multipartite entries add the part.
  json levels = json::array();
  for (const auto& lvl : d.levels()) {
    json created = json::array();
    for (int v : lvl) {
      const auto& o = d.origin(v);
      json e;
      if (o.level == 0) {
        e["copy"] = o.copy;
        e["base"] = o.base;
      } else {
        e["s"] = o.subset;
        if (!o.subset2.empty()) e["s2"] = o.subset2;
      }
      if (o.part >= 0) e["part"] = o.part;
      created.push_back(std::move(e));
    }
    json entry;
    entry["vertices"] = lvl;
    entry["created_from"] = std::move(created);
    levels.push_back(std::move(entry));
  }
  j["levels"] = std::move(levels);
  json phi = json::array();
  for (auto& [v, w] : d.phi().pairs()) phi.push_back({v, w});
  j["phi"] = std::move(phi);
  if (!d.skipped().empty()) j["skipped"] = d.skipped();
  return j;
}

layered::LayeredStructure layered_from_json(const json& j) {
  if (!j.is_object() || !j.contains("mode") || !j.contains("base") ||
      !j.contains("structure") || !j.contains("levels") || !j.contains("phi"))
    throw InputError("layered JSON needs mode, base, structure, levels, phi");
  layered::Mode mode = layered::mode_from_name(j["mode"].get<std::string>());
  FiniteStructure base = structure_from_json(j["base"]);
  FiniteStructure structure = structure_from_json(j["structure"]);
  std::vector<std::vector<int>> levels;
  std::map<int, layered::VertexOrigin> origins;
  int level_index = 0;
  for (auto& lvl : j["levels"]) {
    if (!lvl.is_object() || !lvl.contains("vertices") || !lvl.contains("created_from"))
      throw InputError("each level needs vertices and created_from");
    std::vector<int> ids;
    for (auto& v : lvl["vertices"]) ids.push_back(as_int(v, "level vertex"));
    const json& created = lvl["created_from"];
    if (created.size() != ids.size())
      throw InputError("created_from must parallel the level's vertices");
    for (size_t i = 0; i < ids.size(); ++i) {
      const json& e = created[i];
      layered::VertexOrigin o;
      o.level = level_index;
      if (e.contains("copy")) o.copy = as_int(e["copy"], "origin copy");
      if (e.contains("base")) o.base = as_int(e["base"], "origin base");
      if (e.contains("s"))
        for (auto& v : e["s"]) o.subset.push_back(as_int(v, "origin subset"));
      if (e.contains("s2"))
        for (auto& v : e["s2"]) o.subset2.push_back(as_int(v, "origin subset"));
      if (e.contains("part")) o.part = as_int(e["part"], "origin part");
      origins[ids[i]] = std::move(o);
    }
    levels.push_back(std::move(ids));
    ++level_index;
  }
  std::map<int, int> phi;
  for (auto& e : j["phi"]) {
    if (!e.is_array() || e.size() != 2) throw InputError("phi entries are [v,w] pairs");
    phi[as_int(e[0], "phi vertex")] = as_int(e[1], "phi vertex");
  }
  std::vector<std::vector<int>> skipped;
  if (j.contains("skipped"))
    for (auto& s : j["skipped"]) {
      std::vector<int> sub;
      for (auto& v : s) sub.push_back(as_int(v, "skipped subset"));
      skipped.push_back(std::move(sub));
    }
  return layered::LayeredStructure(mode, std::move(base), std::move(structure),
                                   std::move(levels), std::move(origins),
                                   VertexMap(std::move(phi)), std::move(skipped));
}

std::string layered_to_dot(const layered::LayeredStructure& d) {
  static const char* palette[] = {"lightblue", "lightgoldenrod", "lightpink",
                                  "lightgreen", "lightgray"};
  const FiniteStructure& s = d.structure();
  std::ostringstream os;
  bool directed = is_directed_kind(s.kind());
  os << (directed ? "digraph" : "graph") << " conjforge {\n";
  os << "  node [style=filled];\n";
  for (int v : s.domain()) {
    int lvl = d.origin(v).level;
    os << "  " << v << " [fillcolor=" << palette[lvl % 5] << "];\n";
  }
  for (auto& [u, v] : s.edges()) {
    if (!directed && u > v) continue;
    os << "  " << u << (directed ? " -> " : " -- ") << v << ";\n";
  }
  os << "}\n";
  return os.str();
}

json composite_to_json(const composite::CompositeAutomorphism& f) {
  json j;
  j["m"] = f.copies() ? json(*f.copies()) : json("inf");
  j["n"] = f.copy_size() ? json(*f.copy_size()) : json("inf");
  json perm = json::array();
  for (auto& [c, d] : f.copy_perm()) perm.push_back({c, d});
  j["copy_perm"] = std::move(perm);
  json twists = json::object();
  for (auto& [c, p] : f.per_copy()) {
    json cycles = json::array();
    for (auto& cyc : composite::support_cycles(p)) cycles.push_back(cyc);
    twists[std::to_string(c)] = std::move(cycles);
  }
  j["twists"] = std::move(twists);
  j["tail"] = f.tail() == composite::Tail::Identity ? "identity" : "id_2cycles";
  return j;
}

composite::CompositeAutomorphism composite_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("n"))
    throw InputError("composite JSON needs m and n");
  auto opt_size = [](const json& v, const char* what) -> std::optional<int> {
    if (v.is_string()) {
      if (v.get<std::string>() != "inf")
        throw InputError(std::string(what) + " must be an integer or \"inf\"");
      return std::nullopt;
    }
    return as_int(v, what);
  };
  std::optional<int> m = opt_size(j["m"], "m"), n = opt_size(j["n"], "n");
  composite::Perm copy_perm;
  if (j.contains("copy_perm"))
    for (auto& e : j["copy_perm"]) {
      if (!e.is_array() || e.size() != 2)
        throw InputError("copy_perm entries are [i,j] pairs");
      copy_perm[as_int(e[0], "copy index")] = as_int(e[1], "copy index");
    }
  std::map<int, composite::Perm> per_copy;
  if (j.contains("twists"))
    for (auto& [key, cycles] : j["twists"].items()) {
      composite::Perm p;
      for (auto& cyc : cycles) {
        std::vector<int> c;
        for (auto& v : cyc) c.push_back(as_int(v, "cycle element"));
        if (c.size() < 2) throw InputError("twist cycles need at least two elements");
        for (size_t i = 0; i < c.size(); ++i) {
          if (p.count(c[i])) throw InputError("twist cycles overlap");
          p[c[i]] = c[(i + 1) % c.size()];
        }
      }
      per_copy[std::stoi(key)] = std::move(p);
    }
  composite::Tail tail = composite::Tail::Identity;
  if (j.contains("tail")) {
    std::string t = j["tail"].get<std::string>();
    if (t == "id_2cycles")
      tail = composite::Tail::IdentityTwoCycles;
    else if (t != "identity")
      throw InputError("unknown tail convention '" + t + "'");
  }
  return composite::CompositeAutomorphism(m, n, std::move(copy_perm),
                                          std::move(per_copy), tail);
}

json twist_to_json(const composite::TwistType& t) {
  json j;
  j["lengths"] = t.lengths;
  if (t.infinite_orbits != 0) j["infinite_orbits"] = t.infinite_orbits;
  if (t.rotation >= 0) j["rotation"] = t.rotation;
  return j;
}

composite::TwistType twist_from_json(const json& j) {
  composite::TwistType t;
  if (!j.is_object() || !j.contains("lengths"))
    throw InputError("twist JSON needs a lengths array");
  for (auto& v : j["lengths"]) t.lengths.push_back(as_int(v, "twist length"));
  if (j.contains("infinite_orbits"))
    t.infinite_orbits = as_int(j["infinite_orbits"], "infinite orbit count");
  if (j.contains("rotation")) t.rotation = as_int(j["rotation"], "rotation");
  return t;
}

json invariant_to_json(const composite::CycleInvariant& inv) {
  json cycles = json::array();
  for (auto& [key, count] : inv.finite_cycles) {
    json e;
    e["k"] = key.first;
    e["twist"] = twist_to_json(key.second);
    e["count"] = count_to_json(count);
    cycles.push_back(std::move(e));
  }
  json realized = json::array();
  for (auto& t : inv.realized) realized.push_back(twist_to_json(t));
  json j;
  j["finite_cycles"] = std::move(cycles);
  j["infinite_cycles"] = count_to_json(inv.infinite_cycles);
  j["realized"] = std::move(realized);
  if (inv.class_rotation >= 0) j["class_rotation"] = inv.class_rotation;
  return j;
}

json eset_to_json(const composite::EsetCode& code) {
  json tuples = json::array();
  for (auto& t : code.tuples) {
    json e;
    e["twist"] = twist_to_json(t.twist);
    e["k"] = t.k;
    e["count"] = count_to_json(t.count);
    e["infinite_cycles"] = count_to_json(t.infinite_cycles);
    tuples.push_back(std::move(e));
  }
  json j;
  j["tuples"] = std::move(tuples);
  return j;
}

}  // namespace conjforge::io
