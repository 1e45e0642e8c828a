#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "errors.hpp"
#include "predicates.hpp"
#include "structure.hpp"

using namespace conjforge;

namespace {

FiniteStructure c3(std::vector<int> dom = {0, 1, 2}) {
  return FiniteStructure(Kind::Tournament, dom,
                         {{dom[0], dom[1]}, {dom[1], dom[2]}, {dom[2], dom[0]}});
}

FiniteStructure path3() {
  return FiniteStructure(Kind::Graph, {0, 1, 2}, {{0, 1}, {1, 2}});
}

FiniteStructure k(int n) {
  std::set<std::pair<int, int>> edges;
  std::vector<int> dom;
  for (int i = 0; i < n; ++i) {
    dom.push_back(i);
    for (int j = i + 1; j < n; ++j) edges.insert({i, j});
  }
  return FiniteStructure(Kind::Graph, dom, edges);
}

FiniteStructure edgeless(int n, Kind kind = Kind::Graph) {
  std::vector<int> dom;
  for (int i = 0; i < n; ++i) dom.push_back(i);
  return FiniteStructure(kind, dom, {});
}

FiniteStructure cycle_graph(int n) {
  std::set<std::pair<int, int>> edges;
  std::vector<int> dom;
  for (int i = 0; i < n; ++i) {
    dom.push_back(i);
    edges.insert({i, (i + 1) % n});
  }
  return FiniteStructure(Kind::Graph, dom, edges);
}

// C3 with an extra isolated vertex 3.
FiniteStructure c3_plus_isolated() {
  return FiniteStructure(Kind::Digraph, {0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 0}});
}

// Independent oracle: scan every subset of the given size directly.
bool no_homogeneous_subset(const FiniteStructure& s, int size, bool independent) {
  const auto& dom = s.domain();
  std::vector<int> idx(static_cast<size_t>(size));
  std::function<bool(int, int)> rec = [&](int at, int from) -> bool {
    if (at == size) {
      for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) {
          bool adj = s.adjacent(dom[static_cast<size_t>(idx[static_cast<size_t>(i)])],
                                dom[static_cast<size_t>(idx[static_cast<size_t>(j)])]);
          if (independent ? adj : !adj) return false;
        }
      return true;  // found one
    }
    for (int i = from; i < s.size(); ++i) {
      idx[static_cast<size_t>(at)] = i;
      if (rec(at + 1, i + 1)) return true;
    }
    return false;
  };
  return !rec(0, 0);
}

FiniteStructure random_structure(std::mt19937_64& rng, Kind kind, int n) {
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::uint64_t r = rng() % 4;
      if (kind == Kind::Graph) {
        if (r & 1) edges.insert({i, j});
      } else if (kind == Kind::Tournament) {
        edges.insert(r & 1 ? std::make_pair(i, j) : std::make_pair(j, i));
      } else {
        if (r == 1) edges.insert({i, j});
        if (r == 2) edges.insert({j, i});
      }
    }
  std::vector<int> dom;
  for (int i = 0; i < n; ++i) dom.push_back(i);
  return FiniteStructure(kind, dom, edges);
}

}  // namespace

TEST_CASE("structure invariants are validated") {
  CHECK_THROWS_AS(FiniteStructure(Kind::Graph, {0, 1}, {{0, 0}}), InputError);
  CHECK_THROWS_AS(FiniteStructure(Kind::Digraph, {0, 1}, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(FiniteStructure(Kind::Tournament, {0, 1, 2}, {{0, 1}, {1, 2}}),
                  InputError);
  // Directed triangle is not transitive.
  CHECK_THROWS_AS(FiniteStructure(Kind::LinearOrder, {0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}}),
                  InputError);
  CHECK_THROWS_AS(FiniteStructure(Kind::Graph, {0, 0}, {}), InputError);
  CHECK_THROWS_AS(FiniteStructure(Kind::Graph, {0}, {{0, 1}}), InputError);

  // Graphs symmetrize one-sided input.
  FiniteStructure g(Kind::Graph, {0, 1}, {{1, 0}});
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));

  CHECK(FiniteStructure::linear_order(3).has_edge(0, 2));
  CHECK_THROWS_AS(c3().as_kind(Kind::LinearOrder), InputError);
}

TEST_CASE("vertex map semantics") {
  VertexMap m(std::map<int, int>{{0, 1}, {1, 2}, {2, 0}});
  CHECK(m(0) == 1);
  CHECK(m.permutes({0, 1, 2}));
  CHECK(m.inverse()(1) == 0);
  CHECK(m.compose_after(m)(0) == 2);
  CHECK_THROWS_AS(m(5), InputError);
  CHECK_THROWS_AS(VertexMap(std::map<int, int>{{0, 1}, {2, 1}}), InputError);
  auto orbits = VertexMap(std::map<int, int>{{0, 1}, {1, 0}, {2, 2}}).orbits({0, 1, 2});
  CHECK(orbits == std::vector<std::vector<int>>{{0, 1}, {2}});
}

TEST_CASE("brute force isomorphism: examples") {
  auto w = brute_force_isomorphism(edgeless(0), edgeless(0));
  REQUIRE(w.has_value());
  CHECK(w->pairs().empty());

  // C3 against its relabeling to {5,6,7}: the lexicographically first
  // witness is 0->5, 1->6, 2->7.
  auto w2 = brute_force_isomorphism(c3(), c3({5, 6, 7}));
  REQUIRE(w2.has_value());
  CHECK((*w2)(0) == 5);
  CHECK((*w2)(1) == 6);
  CHECK((*w2)(2) == 7);

  CHECK_FALSE(brute_force_isomorphism(path3(), k(3)).has_value());
  CHECK_THROWS_AS(brute_force_isomorphism(path3(), c3()), InputError);
}

TEST_CASE("brute force isomorphism: symmetry and relabel properties") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    auto a = random_structure(rng, Kind::Graph, n);
    auto b = random_structure(rng, Kind::Graph, n);
    CHECK(brute_force_isomorphism(a, b).has_value() ==
          brute_force_isomorphism(b, a).has_value());

    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::map<int, int> p;
    for (int i = 0; i < n; ++i) p[i] = perm[static_cast<size_t>(i)] + 10;
    CHECK(brute_force_isomorphism(a, a.relabel(VertexMap(p))).has_value());
  }
}

TEST_CASE("clique and independence freeness") {
  CHECK_FALSE(is_kn_free(k(3), 3));
  CHECK(is_kn_free(k(3), 4));
  CHECK(is_kn_free(cycle_graph(5), 3));  // all 10 triples miss an edge
  CHECK_THROWS_AS(is_kn_free(k(3), 1), InputError);
  CHECK_THROWS_AS(is_kn_free(c3(), 3), InputError);

  CHECK(is_in_free(c3(), 2));
  CHECK_FALSE(is_in_free(edgeless(3, Kind::Digraph), 3));
  CHECK_FALSE(is_in_free(c3_plus_isolated(), 2));
  CHECK_THROWS_AS(is_in_free(k(3), 2), InputError);
  CHECK_THROWS_AS(is_in_free(c3(), 1), InputError);
}

TEST_CASE("freeness agrees with direct subset enumeration") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);  // up to 8 vertices
    auto g = random_structure(rng, Kind::Graph, n);
    for (int size = 2; size <= 4; ++size)
      CHECK(is_kn_free(g, size) == no_homogeneous_subset(g, size, false));
    auto d = random_structure(rng, Kind::Digraph, n);
    for (int size = 2; size <= 4; ++size)
      CHECK(is_in_free(d, size) == no_homogeneous_subset(d, size, true));
  }
}

TEST_CASE("tournament embedding") {
  CHECK(embeds_tournament(c3(), c3()));
  FiniteStructure trans3(Kind::Tournament, {0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}});
  CHECK_FALSE(embeds_tournament(c3(), trans3));
  CHECK_FALSE(embeds_tournament(c3(), edgeless(4, Kind::Digraph)));
  CHECK_THROWS_AS(embeds_tournament(path3(), c3()), InputError);

  // Oracle for the transitive case: all six injections, checked directly.
  std::vector<int> perm{0, 1, 2};
  bool any = false;
  do {
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j && c3().has_edge(i, j) &&
            !trans3.has_edge(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]))
          ok = false;
    any = any || ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK_FALSE(any);

  CHECK(embeds_tournament_through(c3(), c3(), {1}));
  CHECK_FALSE(embeds_tournament_through(c3(), c3_plus_isolated(), {3}));
}

TEST_CASE("one point extension probing") {
  auto found = check_one_point_extension(
      k(3), {{0, ExtensionRel::Adjacent}, {1, ExtensionRel::Adjacent}});
  REQUIRE(found.has_value());
  CHECK(*found == 2);

  CHECK_FALSE(
      check_one_point_extension(edgeless(3), {{0, ExtensionRel::Adjacent}}).has_value());

  CHECK_THROWS_AS(check_one_point_extension(c3(), {{0, ExtensionRel::None}}), InputError);
  CHECK_THROWS_AS(check_one_point_extension(k(3), {{0, ExtensionRel::Toward}}),
                  InputError);
  CHECK_THROWS_AS(check_one_point_extension(k(3), {{7, ExtensionRel::Adjacent}}),
                  InputError);

  // Tournament host: outside the probed set the relations are unconstrained.
  auto w = check_one_point_extension(c3(), {{0, ExtensionRel::Toward}});
  REQUIRE(w.has_value());
  CHECK(*w == 1);

  // Digraph host: the witness's neighborhood must be exactly the probed set.
  auto none = check_one_point_extension(
      c3_plus_isolated(), {{0, ExtensionRel::Toward}, {1, ExtensionRel::Away}});
  CHECK_FALSE(none.has_value());
  auto iso = check_one_point_extension(c3_plus_isolated(), {{0, ExtensionRel::None}});
  REQUIRE(iso.has_value());
  CHECK(*iso == 3);
}

TEST_CASE("automorphism and conjugacy witnesses") {
  VertexMap rot(std::map<int, int>{{0, 1}, {1, 2}, {2, 0}});
  VertexMap swap01(std::map<int, int>{{0, 1}, {1, 0}, {2, 2}});
  CHECK(verify_automorphism(c3(), rot));
  CHECK_FALSE(verify_automorphism(c3(), swap01));
  CHECK(verify_automorphism(edgeless(3), swap01));

  VertexMap id = VertexMap::identity({0, 1, 2});
  CHECK(verify_conjugacy_witness(rot, rot, id));
  VertexMap swap12(std::map<int, int>{{0, 0}, {1, 2}, {2, 1}});
  CHECK(verify_conjugacy_witness(rot, rot.inverse(), swap12));
  CHECK_FALSE(verify_conjugacy_witness(rot, id, swap12));
  VertexMap small(std::map<int, int>{{0, 0}});
  CHECK_THROWS_AS(verify_conjugacy_witness(rot, rot, small), InputError);
}

TEST_CASE("conjugate permutations share cycle types") {
  std::mt19937_64 rng(5);
  auto cycle_type = [](const VertexMap& m, const std::vector<int>& dom) {
    std::vector<size_t> lens;
    for (auto& orb : m.orbits(dom)) lens.push_back(orb.size());
    std::sort(lens.begin(), lens.end());
    return lens;
  };
  std::vector<int> dom{0, 1, 2, 3, 4};
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<int> p(dom), q(dom);
    std::shuffle(p.begin(), p.end(), rng);
    std::shuffle(q.begin(), q.end(), rng);
    std::map<int, int> phi_m, delta_m;
    for (size_t i = 0; i < dom.size(); ++i) {
      phi_m[dom[i]] = p[i];
      delta_m[dom[i]] = q[i];
    }
    VertexMap phi(phi_m), delta(delta_m);
    VertexMap psi = delta.compose_after(phi).compose_after(delta.inverse());
    CHECK(verify_conjugacy_witness(phi, psi, delta));
    CHECK(cycle_type(phi, dom) == cycle_type(psi, dom));
  }
}

TEST_CASE("automorphism group enumeration") {
  CHECK(automorphism_group(c3()).size() == 3);  // the rotation group
  CHECK(automorphism_group(k(3)).size() == 6);
  CHECK(automorphism_group(path3()).size() == 2);

  VertexMap rot(std::map<int, int>{{0, 1}, {1, 2}, {2, 0}});
  auto delta = find_conjugator_brute(c3(), rot, rot);
  REQUIRE(delta.has_value());
  CHECK(verify_conjugacy_witness(rot, rot, *delta));
  // Aut(C3) is abelian, so the two rotations are not conjugate within it,
  // even though they are conjugate as abstract permutations.
  CHECK_FALSE(find_conjugator_brute(c3(), rot, rot.inverse()).has_value());
  auto sym = find_conjugator_brute(k(3), rot, rot.inverse());
  REQUIRE(sym.has_value());
  CHECK(verify_conjugacy_witness(rot, rot.inverse(), *sym));
}
