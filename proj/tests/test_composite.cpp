#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "composite.hpp"
#include "errors.hpp"
#include "predicates.hpp"

using namespace conjforge;
using namespace conjforge::composite;

namespace {

TwistType twist(std::vector<int> lengths, int rotation = -1) {
  return TwistType{std::move(lengths), 0, rotation};
}

CompositeAutomorphism swap_copies(int m, int n, std::map<int, Perm> maps = {}) {
  return CompositeAutomorphism(m, n, Perm{{0, 1}, {1, 0}}, std::move(maps));
}

}  // namespace

TEST_CASE("support permutation helpers") {
  Perm p{{0, 1}, {1, 0}, {2, 3}, {3, 4}, {4, 2}};
  CHECK(support_cycle_lengths(p) == std::vector<int>{3, 2});
  CHECK(support_cycles(p) == std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}});
  CHECK(invert_perm(p)[1] == 0);
  Perm q = compose_perms(p, invert_perm(p));
  CHECK(q.empty());
  CHECK_THROWS_AS(support_cycles(Perm{{0, 1}}), InputError);
}

TEST_CASE("composite validation and canonicalization") {
  // Self-maps and empty per-copy supports are dropped.
  CompositeAutomorphism f(3, 2, Perm{{0, 0}, {1, 2}, {2, 1}},
                          {{0, Perm{{0, 0}}}, {1, Perm{{0, 1}, {1, 0}}}});
  CHECK(f.copy_perm() == Perm{{1, 2}, {2, 1}});
  CHECK(f.per_copy().size() == 1);

  CHECK_THROWS_AS(CompositeAutomorphism(2, 2, Perm{{0, 5}, {5, 0}}, {}), InputError);
  CHECK_THROWS_AS(CompositeAutomorphism(2, 2, Perm{{0, 1}}, {}), InputError);
  CHECK_THROWS_AS(CompositeAutomorphism(2, 2, {}, {{0, Perm{{0, 5}, {5, 0}}}}),
                  InputError);
  CHECK_THROWS_AS(CompositeAutomorphism(2, 2, {}, {}, Tail::IdentityTwoCycles),
                  InputError);
}

TEST_CASE("identity-2-cycles tail pairing") {
  // Copies 0 and 1 are described; free copies pair (2,3), (4,5), ...
  CompositeAutomorphism f(std::nullopt, std::nullopt, Perm{{0, 1}, {1, 0}}, {},
                          Tail::IdentityTwoCycles);
  CHECK(f.apply_copy(0) == 1);
  CHECK(f.apply_copy(2) == 3);
  CHECK(f.apply_copy(3) == 2);
  CHECK(f.apply_copy(4) == 5);
  CHECK(f.apply_copy(7) == 6);
}

TEST_CASE("cycle decomposition") {
  CompositeAutomorphism ident(3, 2, {}, {});
  auto dec = cycle_decompose(ident);
  CHECK(dec.cycles.empty());
  CHECK(dec.tail_count == Count{false, 3});

  auto dec2 = cycle_decompose(swap_copies(3, 2));
  CHECK(dec2.cycles == std::vector<std::vector<int>>{{0, 1}});
  CHECK(dec2.tail_count == Count{false, 1});

  CompositeAutomorphism f(5, 2, Perm{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 3}}, {});
  auto dec3 = cycle_decompose(f);
  CHECK(dec3.cycles == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4}});
}

TEST_CASE("twist types") {
  // Both labelings identity: the return map is the identity of K3.
  CHECK(twist_type(swap_copies(2, 3), {0, 1}) == twist({1, 1, 1}));
  // One 3-cycle labeling: the return map is that 3-cycle.
  auto f = swap_copies(2, 3, {{0, Perm{{0, 1}, {1, 2}, {2, 0}}}});
  CHECK(twist_type(f, {0, 1}) == twist({3}));
  CHECK_THROWS_AS(twist_type(f, {}), InputError);

  // Base-point independence: conjugating the return map computed from the
  // other end of the cycle gives the same cycle type.
  Perm g{{0, 1}, {1, 2}, {2, 0}};  // labeling out of copy 0
  Perm h{{0, 2}, {2, 0}};          // labeling out of copy 1
  auto f2 = swap_copies(2, 3, {{0, g}, {1, h}});
  Perm at0 = compose_perms(h, g);
  Perm at1 = compose_perms(g, h);
  CHECK(support_cycle_lengths(at0) == support_cycle_lengths(at1));
  // On the finite carrier K3 the twist pads its fixed points.
  CHECK(twist_type(f2, {0, 1}) == twist({2, 1}));
  CHECK(support_cycle_lengths(at0) == std::vector<int>{2});
}

TEST_CASE("invariants: examples") {
  CompositeAutomorphism ident(3, 2, {}, {});
  auto inv = invariant(ident);
  REQUIRE(inv.finite_cycles.size() == 1);
  CHECK(inv.finite_cycles.at({1, twist({1, 1})}) == Count{false, 3});

  auto inv2 = invariant(swap_copies(2, 2));
  REQUIRE(inv2.finite_cycles.size() == 1);
  CHECK(inv2.finite_cycles.at({2, twist({1, 1})}) == Count{false, 1});

  auto inv3 = invariant(swap_copies(2, 2, {{0, Perm{{0, 1}, {1, 0}}}}));
  CHECK(inv3.finite_cycles.at({2, twist({2})}) == Count{false, 1});
  CHECK(inv3.realized.count(twist({2})) == 1);
}

TEST_CASE("conjugacy decision") {
  auto a = swap_copies(3, 2);
  CHECK(decide_conjugacy(a, a));
  // Swapping copies {1,2} instead of {0,1} is conjugate.
  CompositeAutomorphism b(3, 2, Perm{{1, 2}, {2, 1}}, {});
  CHECK(decide_conjugacy(a, b));
  // Twisted swap is not conjugate to the untwisted one.
  auto c = swap_copies(2, 2, {{0, Perm{{0, 1}, {1, 0}}}});
  CHECK_FALSE(decide_conjugacy(swap_copies(2, 2), c));
  CHECK_THROWS_AS(decide_conjugacy(a, c), InputError);
}

TEST_CASE("constructed conjugators verify") {
  auto a = swap_copies(3, 2);
  CompositeAutomorphism b(3, 2, Perm{{1, 2}, {2, 1}}, {});
  auto delta = build_conjugator_composite(a, b);
  CHECK(composite_commutes(delta, a, b));
  CHECK(verify_conjugacy_witness(a.materialize(), b.materialize(), delta.materialize()));

  // Matched 2-cycles with twist {3} on 2*K3, labeled on different sides.
  auto p = swap_copies(2, 3, {{0, Perm{{0, 1}, {1, 2}, {2, 0}}}});
  auto r = swap_copies(2, 3, {{1, Perm{{0, 2}, {2, 1}, {1, 0}}}});
  REQUIRE(decide_conjugacy(p, r));
  auto delta2 = build_conjugator_composite(p, r);
  CHECK(verify_conjugacy_witness(p.materialize(), r.materialize(), delta2.materialize()));

  CHECK_THROWS_AS(
      build_conjugator_composite(swap_copies(2, 2),
                                 swap_copies(2, 2, {{0, Perm{{0, 1}, {1, 0}}}})),
      InputError);
}

TEST_CASE("conjugators across shifted supports with 2-cycle tails") {
  // Same single twist {3}, carried on different copy pairs; the tail pairing
  // must re-align the free copies.
  auto phi = decode_eset({twist({3})});
  Perm three{{0, 1}, {1, 2}, {2, 0}};
  CompositeAutomorphism psi(std::nullopt, std::nullopt, Perm{{4, 7}, {7, 4}},
                            {{4, three}}, Tail::IdentityTwoCycles);
  REQUIRE(decide_conjugacy(phi, psi));
  auto delta = build_conjugator_composite(phi, psi);
  CHECK(composite_commutes(delta, phi, psi));
}

TEST_CASE("eset coding") {
  auto empty = decode_eset({});
  auto code = encode_eset(empty);
  CHECK(code.finite_twist_set().empty());
  REQUIRE(code.tuples.size() == 1);  // the tail tuple alone
  CHECK(code.tuples.begin()->count.infinite);

  auto one = decode_eset({twist({3})});
  auto two = decode_eset({twist({3}), twist({3})});
  CHECK(invariant(one) == invariant(two));
  CHECK(encode_eset(one).finite_twist_set() ==
        std::set<TwistType>{twist({3})});

  auto ab = decode_eset({twist({3}), twist({2, 2})});
  auto ba = decode_eset({twist({2, 2}), twist({3})});
  CHECK(invariant(ab) == invariant(ba));
  CHECK(encode_eset(ab) == encode_eset(ba));
  CHECK_FALSE(invariant(ab) == invariant(one));

  CHECK_THROWS_AS(decode_eset({TwistType{{3}, 1, -1}}), InputError);
  CHECK_THROWS_AS(decode_eset({twist({3}, 1)}), InputError);
  CHECK_THROWS_AS(encode_eset(swap_copies(2, 2)), InputError);
}

TEST_CASE("C3 composite invariants") {
  Perm rot1{{0, 1}, {1, 2}, {2, 0}};
  Perm rot2{{0, 2}, {1, 0}, {2, 1}};

  // infinity * C3: identity.
  CompositeAutomorphism ident(std::nullopt, 3, {}, {});
  auto inv = c3_composite_invariant(ident);
  REQUIRE(inv.finite_cycles.size() == 1);
  CHECK(inv.finite_cycles.begin()->second.infinite);

  // One fixed copy twisted by each rotation: r and r^2 are distinct twists
  // even though their cycle types agree.
  CompositeAutomorphism a(std::nullopt, 3, {}, {{0, rot1}});
  CompositeAutomorphism b(std::nullopt, 3, {}, {{0, rot2}});
  CHECK_FALSE(c3_composite_invariant(a) == c3_composite_invariant(b));

  // A 3-cycle of copies with net rotation r.
  CompositeAutomorphism c(std::nullopt, 3, Perm{{0, 1}, {1, 2}, {2, 0}}, {{0, rot1}});
  auto invc = c3_composite_invariant(c);
  CHECK(invc.finite_cycles.count({3, TwistType{{3}, 0, 1}}) == 1);

  // Non-rotation labels are rejected.
  CHECK_THROWS_AS(
      c3_composite_invariant(CompositeAutomorphism(std::nullopt, 3, {},
                                                   {{0, Perm{{0, 1}, {1, 0}}}})),
      InputError);

  // C3[infinity]: the class action must be a rotation and is recorded.
  CompositeAutomorphism d(3, std::nullopt, Perm{{0, 1}, {1, 2}, {2, 0}},
                          {{0, Perm{{0, 1}, {1, 0}}}});
  auto invd = c3_composite_invariant(d);
  CHECK(invd.class_rotation == 1);
  CHECK(invd.finite_cycles.count({3, twist({2})}) == 1);
  CHECK_THROWS_AS(
      c3_composite_invariant(CompositeAutomorphism(3, std::nullopt,
                                                   Perm{{0, 1}, {1, 0}}, {})),
      InputError);
  CHECK_THROWS_AS(c3_composite_invariant(swap_copies(2, 2)), InputError);

  // Opposite class rotations never look conjugate.
  CompositeAutomorphism e(3, std::nullopt, Perm{{0, 2}, {2, 1}, {1, 0}},
                          {{0, Perm{{0, 1}, {1, 0}}}});
  CHECK_FALSE(c3_composite_invariant(d) == c3_composite_invariant(e));
}

TEST_CASE("direct sum with identity") {
  FiniteStructure c3(Kind::Tournament, {0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
  VertexMap rot(std::map<int, int>{{0, 1}, {1, 2}, {2, 0}});
  auto lifted = direct_sum_id(c3, rot, 2);
  CHECK(lifted.structure.size() == 6);
  CHECK(verify_automorphism(lifted.structure, lifted.map));
  CHECK(lifted.map(0) == 1);
  CHECK(lifted.map(3) == 3);

  auto ident = direct_sum_id(c3, VertexMap::identity(c3.domain()), 2);
  CHECK(ident.map == VertexMap::identity(ident.structure.domain()));

  FiniteStructure disconnected(Kind::Graph, {0, 1}, {});
  CHECK_THROWS_AS(direct_sum_id(disconnected, VertexMap::identity({0, 1}), 2),
                  InputError);
  CHECK_THROWS_AS(direct_sum_id(c3, VertexMap::identity({0, 1}), 2), InputError);
}

TEST_CASE("blowup") {
  FiniteStructure c3(Kind::Tournament, {0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
  VertexMap rot(std::map<int, int>{{0, 1}, {1, 2}, {2, 0}});
  auto blown = blowup(c3, rot, 2);
  CHECK(blown.structure.size() == 6);
  CHECK(verify_automorphism(blown.structure, blown.map));
  // Classes are independent; edges go class-to-class.
  CHECK_FALSE(blown.structure.adjacent(0, 1));
  CHECK(blown.structure.has_edge(0, 2));
  CHECK(blown.structure.has_edge(0, 3));

  FiniteStructure graph(Kind::Graph, {0, 1}, {{0, 1}});
  CHECK_THROWS_AS(blowup(graph, VertexMap::identity({0, 1}), 2), InputError);
}

TEST_CASE("group enumeration sizes") {
  CHECK(all_composite_automorphisms(2, 2).size() == 8);
  CHECK(all_composite_automorphisms(3, 2).size() == 48);
  CHECK(all_composite_automorphisms(2, 3).size() == 72);
  // Every enumerated element materializes to an automorphism of m*K_n.
  FiniteStructure two_k2 = disjoint_copies(complete_graph(2), 2);
  for (auto& f : all_composite_automorphisms(2, 2))
    CHECK(verify_automorphism(two_k2, f.materialize()));
}
