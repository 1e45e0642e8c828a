#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "digraph_reduction.hpp"
#include "errors.hpp"
#include "predicates.hpp"

using namespace conjforge;
using gendigraph::ForbiddenFamily;

namespace {

FiniteStructure point_t() { return FiniteStructure(Kind::Tournament, {0}, {}); }

FiniteStructure edge_t() { return FiniteStructure(Kind::Tournament, {0, 1}, {{0, 1}}); }

FiniteStructure c3_t() {
  return FiniteStructure(Kind::Tournament, {0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
}

FiniteStructure single_edge_digraph() {
  return FiniteStructure(Kind::Digraph, {0, 1}, {{0, 1}});
}

bool is_total(const FiniteStructure& s) {
  for (int u : s.domain())
    for (int v : s.domain())
      if (u != v && s.has_edge(u, v) == s.has_edge(v, u)) return false;
  return true;
}

std::set<int> recovery_set(const FiniteStructure& s, const VertexMap& phi) {
  std::set<int> out;
  for (int v : s.domain())
    if (s.has_edge(v, phi(v))) out.insert(v);
  return out;
}

}  // namespace

TEST_CASE("tournament level zero: three rotating copies") {
  auto d = gendigraph::build_tournament_delta0(point_t());
  CHECK(d.structure().size() == 3);
  CHECK(d.structure().has_edge(0, 1));
  CHECK(d.structure().has_edge(1, 2));
  CHECK(d.structure().has_edge(2, 0));
  CHECK(verify_automorphism(d.structure(), d.phi()));

  auto de = gendigraph::build_tournament_delta0(edge_t());
  const FiniteStructure& s = de.structure();
  CHECK(s.size() == 6);
  // 15 pairs in total: two letter triangles (3+3) plus nine cross edges.
  CHECK(s.edges().size() == 15);
  CHECK(is_total(s));
  // Every x_i -> y_j edge present (ids: x copies are c*2, y copies c*2+1).
  for (int ci = 0; ci < 3; ++ci)
    for (int cj = 0; cj < 3; ++cj) CHECK(s.has_edge(ci * 2, cj * 2 + 1));
  for (int v : s.domain()) CHECK(s.has_edge(v, de.phi()(v)));

  CHECK_THROWS_AS(gendigraph::build_tournament_delta0(single_edge_digraph()),
                  InputError);
}

TEST_CASE("tournament extension: orbits close into directed triangles") {
  auto d0 = gendigraph::build_tournament_delta0(point_t());
  auto d1 = gendigraph::extend_tournament_level(d0, 1);
  const FiniteStructure& s = d1.structure();
  CHECK(s.size() == 7);
  CHECK(is_total(s));
  CHECK(verify_automorphism(s, d1.phi()));

  // The empty-subset vertex is fixed; the singleton orbit has size 3 and is
  // oriented against phi.
  int empty_vertex = -1;
  for (int v : d1.levels()[1])
    if (d1.origin(v).subset.empty()) empty_vertex = v;
  REQUIRE(empty_vertex >= 0);
  CHECK(d1.phi()(empty_vertex) == empty_vertex);
  for (int v : d1.levels()[1]) {
    if (v == empty_vertex) continue;
    CHECK(s.has_edge(d1.phi()(v), v));  // phi(x) -> x on new orbits
  }
  CHECK(recovery_set(s, d1.phi()) ==
        std::set<int>(d1.levels()[0].begin(), d1.levels()[0].end()));
}

TEST_CASE("tournament reduction round trips") {
  for (const auto& t : {point_t(), edge_t(), c3_t()}) {
    auto d = gendigraph::build_reduction_tournament(t, 1, 1);
    FiniteStructure rec = gendigraph::recover_base_digraph(d.structure(), d.phi());
    CHECK(brute_force_isomorphism(rec, t).has_value());
  }
  auto d0 = gendigraph::build_reduction_tournament(edge_t(), 0, 1);
  CHECK(d0.levels().size() == 1);
}

TEST_CASE("I_n-free variant") {
  // n = 2 admits only empty non-adjacent subsets: the same vertex count as
  // the plain tournament extension.
  auto plain = gendigraph::build_reduction_tournament(point_t(), 1, 1);
  auto lam2 = gendigraph::build_reduction_in_free(point_t(), 2, 1, 1);
  CHECK(plain.structure().size() == lam2.structure().size());
  CHECK(brute_force_isomorphism(plain.structure().as_kind(Kind::Digraph),
                                lam2.structure())
            .has_value());

  // Lambda_3 from a point: some new vertex is non-adjacent to vertex 0.
  auto lam3 = gendigraph::build_reduction_in_free(point_t(), 3, 1, 2);
  CHECK(is_in_free(lam3.structure(), 3));
  bool has_nonadjacent = false;
  for (int v : lam3.levels()[1])
    if (!lam3.structure().adjacent(v, 0)) has_nonadjacent = true;
  CHECK(has_nonadjacent);
  CHECK(recovery_set(lam3.structure(), lam3.phi()) ==
        std::set<int>(lam3.levels()[0].begin(), lam3.levels()[0].end()));
  FiniteStructure rec = gendigraph::recover_base_digraph(lam3.structure(), lam3.phi());
  CHECK(brute_force_isomorphism(rec.as_kind(Kind::Tournament), point_t()).has_value());

  CHECK_THROWS_AS(gendigraph::build_reduction_in_free(point_t(), 1, 1, 1), InputError);
}

TEST_CASE("forbidden family validation") {
  CHECK_THROWS_AS(ForbiddenFamily({single_edge_digraph()}), InputError);
  CHECK_THROWS_AS(ForbiddenFamily({edge_t()}), InputError);  // size < 3
  ForbiddenFamily ok({c3_t()});
  CHECK(ok.members().size() == 1);
}

TEST_CASE("forbidden-tournament construction") {
  ForbiddenFamily f({c3_t()});
  // Level 0 contains no C3: only the tournaments of G survive.
  auto d0 = gendigraph::build_reduction_forbidden(single_edge_digraph(), f, 0, 2);
  CHECK(d0.structure().size() == 8);
  CHECK_FALSE(embeds_tournament(c3_t(), d0.structure()));
  for (int v : d0.structure().domain())
    CHECK(d0.structure().has_edge(v, d0.phi()(v)));

  auto d1 = gendigraph::build_reduction_forbidden(single_edge_digraph(), f, 1, 2);
  CHECK_FALSE(embeds_tournament(c3_t(), d1.structure()));
  CHECK_FALSE(d1.skipped().empty());
  // A candidate dominated by two mutually adjacent vertices closes a C3 and
  // is skipped: {u0, u1} = ids {0, 2} (letter edge 0 -> 2).
  bool skipped_adjacent_pair = false;
  for (auto& s : d1.skipped())
    if (s == std::vector<int>{0, 2}) skipped_adjacent_pair = true;
  CHECK(skipped_adjacent_pair);
  CHECK(recovery_set(d1.structure(), d1.phi()) ==
        std::set<int>(d1.levels()[0].begin(), d1.levels()[0].end()));
  FiniteStructure rec = gendigraph::recover_base_digraph(d1.structure(), d1.phi());
  CHECK(brute_force_isomorphism(rec, single_edge_digraph()).has_value());

  // The empty family never skips: the random digraph case.
  ForbiddenFamily none({});
  auto dr = gendigraph::build_reduction_forbidden(single_edge_digraph(), none, 1, 1);
  CHECK(dr.skipped().empty());

  CHECK_THROWS_AS(gendigraph::build_reduction_forbidden(c3_t().as_kind(Kind::Digraph),
                                                        f, 1, 1),
                  InputError);
}

TEST_CASE("multipartite construction") {
  auto d = gendigraph::build_reduction_multipartite(point_t(), 2, 0, 2);
  const FiniteStructure& s = d.structure();
  CHECK(s.size() == 4);
  // A directed 4-cycle with parts {0,2} and {1,3}.
  CHECK(s.has_edge(0, 1));
  CHECK(s.has_edge(1, 2));
  CHECK(s.has_edge(2, 3));
  CHECK(s.has_edge(3, 0));
  CHECK_FALSE(s.adjacent(0, 2));
  CHECK_FALSE(s.adjacent(1, 3));
  CHECK(d.origin(0).part == 0);
  CHECK(d.origin(1).part == 1);

  auto de = gendigraph::build_reduction_multipartite(edge_t(), 2, 0, 2);
  CHECK(de.structure().size() == 8);
  int cross = 0, edges = 0;
  for (int u : de.structure().domain())
    for (int v : de.structure().domain()) {
      if (u == v) continue;
      if (de.origin(u).part != de.origin(v).part) {
        if (u < v) {
          ++cross;
          CHECK(de.structure().adjacent(u, v));
        }
      } else {
        CHECK_FALSE(de.structure().adjacent(u, v));
      }
      if (de.structure().has_edge(u, v)) ++edges;
    }
  CHECK(cross == 16);
  CHECK(edges == 16);  // eight C4 edges plus eight cross edges

  FiniteStructure rec = gendigraph::recover_base_digraph(de.structure(), de.phi());
  CHECK(brute_force_isomorphism(rec.as_kind(Kind::Tournament), edge_t()).has_value());

  // n = 3: the extra parts start empty and get populated at level 1.
  auto d3 = gendigraph::build_reduction_multipartite(point_t(), 3, 1, 1);
  bool part2 = false;
  for (auto& [v, o] : d3.origins())
    if (o.part == 2) part2 = true;
  CHECK(part2);
  for (auto& [v, o] : d3.origins()) {
    int pv = d3.origin(d3.phi()(v)).part;
    CHECK(pv == (o.part < 2 ? 1 - o.part : o.part));
  }

  CHECK_THROWS_AS(gendigraph::build_reduction_multipartite(point_t(), 1, 1, 1),
                  InputError);
}

TEST_CASE("hat graphs") {
  FiniteStructure empty_hat = gendigraph::build_hat(
      FiniteStructure(Kind::Tournament, {}, {}));
  CHECK(empty_hat.size() == 2);
  CHECK_FALSE(empty_hat.adjacent(0, 1));  // a and a-bar stay non-adjacent

  FiniteStructure hat = gendigraph::build_hat(point_t());
  CHECK(hat.size() == 4);
  // a=0, p=1, abar=2, pbar=3: each copy has a -> p; the cross rule reverses.
  CHECK(hat.has_edge(0, 1));
  CHECK(hat.has_edge(2, 3));
  CHECK(hat.has_edge(1, 2));
  CHECK(hat.has_edge(3, 0));
  CHECK_FALSE(hat.adjacent(0, 2));
  CHECK_FALSE(hat.adjacent(1, 3));

  // The copy swap is an automorphism.
  VertexMap swap = gendigraph::hat_lift(point_t(), VertexMap::identity({0}), true);
  CHECK(verify_automorphism(hat, swap));
  VertexMap ident = gendigraph::hat_lift(point_t(), VertexMap::identity({0}), false);
  CHECK(ident == VertexMap::identity(hat.domain()));

  // Conjugate pairs lift to conjugate pairs with the lifted witness.
  VertexMap rot(std::map<int, int>{{0, 1}, {1, 2}, {2, 0}});
  auto delta = find_conjugator_brute(c3_t(), rot, rot);
  REQUIRE(delta.has_value());
  VertexMap lift_rot = gendigraph::hat_lift(c3_t(), rot, false);
  VertexMap lift_delta = gendigraph::hat_lift(c3_t(), *delta, false);
  CHECK(verify_conjugacy_witness(lift_rot, lift_rot, lift_delta));

  CHECK_THROWS_AS(gendigraph::hat_lift(c3_t(), VertexMap::identity({0, 1}), false),
                  InputError);
}

TEST_CASE("two-level builds stay coherent") {
  auto d = gendigraph::build_reduction_tournament(point_t(), 2, 1);
  CHECK(d.structure().size() == 15);  // 3, then 7, then 7 + 8 subsets
  CHECK(is_total(d.structure()));
  CHECK(recovery_set(d.structure(), d.phi()) ==
        std::set<int>(d.levels()[0].begin(), d.levels()[0].end()));
  FiniteStructure rec = gendigraph::recover_base_digraph(d.structure(), d.phi());
  CHECK(brute_force_isomorphism(rec, point_t()).has_value());

  ForbiddenFamily f({c3_t()});
  auto df = gendigraph::build_reduction_forbidden(single_edge_digraph(), f, 2, 1);
  CHECK_FALSE(embeds_tournament(c3_t(), df.structure()));
  CHECK(recovery_set(df.structure(), df.phi()) ==
        std::set<int>(df.levels()[0].begin(), df.levels()[0].end()));

  auto dm = gendigraph::build_reduction_multipartite(point_t(), 2, 2, 1);
  for (int u : dm.structure().domain())
    for (int v : dm.structure().domain()) {
      if (u == v) continue;
      bool same = dm.origin(u).part == dm.origin(v).part;
      CHECK(same != dm.structure().adjacent(u, v));
    }
  FiniteStructure recm = gendigraph::recover_base_digraph(dm.structure(), dm.phi());
  CHECK(brute_force_isomorphism(recm.as_kind(Kind::Tournament), point_t()).has_value());

  auto dl = gendigraph::build_reduction_in_free(point_t(), 3, 2, 1);
  CHECK(is_in_free(dl.structure(), 3));
}

TEST_CASE("isomorphism transport for digraph builds") {
  for (const auto& t : {edge_t(), c3_t()}) {
    std::map<int, int> relab;
    for (int v : t.domain()) relab[v] = v + 5;
    FiniteStructure t2 = t.relabel(VertexMap(relab));
    auto a = gendigraph::build_reduction_tournament(t, 1, 1);
    auto b = gendigraph::build_reduction_tournament(t2, 1, 1);
    auto base_iso = brute_force_isomorphism(t, t2);
    REQUIRE(base_iso.has_value());
    VertexMap alpha = layered::induced_isomorphism(a, b, *base_iso);
    for (int v : a.structure().domain()) {
      CHECK(alpha(a.phi()(v)) == b.phi()(alpha(v)));
      for (int w : a.structure().domain())
        if (v != w)
          CHECK(a.structure().has_edge(v, w) ==
                b.structure().has_edge(alpha(v), alpha(w)));
    }
  }
}

TEST_CASE("recovery guards") {
  FiniteStructure d = single_edge_digraph();
  CHECK(gendigraph::recover_base_digraph(d, VertexMap::identity(d.domain())).size() == 0);
  CHECK_THROWS_AS(
      gendigraph::recover_base_digraph(FiniteStructure(Kind::Graph, {0}, {}),
                                       VertexMap::identity({0})),
      InputError);
}
