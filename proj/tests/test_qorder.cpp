#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "budget.hpp"
#include "errors.hpp"
#include "orbitals.hpp"
#include "pl_map.hpp"
#include "predicates.hpp"
#include "rational.hpp"

using namespace conjforge;
using qorder::PLAutomorphism;
using qorder::Region;
using qorder::RegionType;

namespace {

Rat q(long num, long den = 1) { return Rat(num, den); }

PLAutomorphism up_bump_unit() {
  // Fixes everything outside (0,1), up-bump inside.
  return PLAutomorphism({{q(0), q(0)}, {q(1, 2), q(3, 4)}, {q(1), q(1)}});
}

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
  CHECK(Rat::parse("7/21") == q(1, 3));
  CHECK(Rat::parse("-6/4").str() == "-3/2");
  CHECK(Rat::parse("5").str() == "5");
  CHECK_THROWS_AS(Rat::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rat::parse("a/b"), InputError);
  CHECK_THROWS_AS(Rat::parse(""), InputError);
  CHECK_THROWS_AS(Rat::parse("1/-2"), InputError);
  CHECK(q(-7, 2).floor() == q(-4));
  CHECK(q(-7, 2).frac() == q(1, 2));
  CHECK(q(-7, 2).floor_long() == -4);
  CHECK(q(3, 2) + q(1, 6) == q(5, 3));
  CHECK((q(1, 3) < q(1, 2)));
}

TEST_CASE("pl map evaluation") {
  PLAutomorphism ident({{q(0), q(0)}, {q(1), q(1)}});
  CHECK(ident(q(7)) == q(7));
  PLAutomorphism trans = PLAutomorphism::translation(q(1));
  CHECK(trans.knots() == std::vector<PLAutomorphism::Knot>{{q(0), q(1)}});
  CHECK(trans(q(-3, 2)) == q(-1, 2));
  CHECK(up_bump_unit()(q(1, 4)) == q(3, 8));
  CHECK(up_bump_unit()(q(-5)) == q(-5));
  CHECK(up_bump_unit()(q(2)) == q(2));

  CHECK_THROWS_AS(PLAutomorphism({}), InputError);
  CHECK_THROWS_AS(PLAutomorphism({{q(0), q(0)}, {q(1), q(0)}}), InputError);
  CHECK_THROWS_AS(PLAutomorphism({{q(1), q(0)}, {q(0), q(1)}}), InputError);
}

TEST_CASE("pl inverse and composition") {
  PLAutomorphism f = up_bump_unit();
  PLAutomorphism g({{q(-1), q(0)}, {q(2), q(4)}});
  PLAutomorphism gf = g.compose_after(f);
  PLAutomorphism f_inv = f.inverse();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    Rat x(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 40));
    CHECK(gf(x) == g(f(x)));
    CHECK(f_inv(f(x)) == x);
  }
  // Composition with the inverse normalizes to an identity representation.
  PLAutomorphism round = f.compose_after(f_inv).normalized();
  for (int i = 0; i < 10; ++i) CHECK(round(q(i - 5)) == q(i - 5));
}

TEST_CASE("perfect embedding") {
  auto e0 = qorder::perfect_embed(FiniteStructure::linear_order(0));
  CHECK(e0.image.empty());
  auto e3 = qorder::perfect_embed(FiniteStructure::linear_order(3));
  CHECK(e3.image == std::vector<Rat>{q(0), q(1), q(2)});
  CHECK(e3.order == std::vector<int>{0, 1, 2});
  auto e5 = qorder::perfect_embed(FiniteStructure::linear_order(5));
  for (size_t i = 1; i < e5.image.size(); ++i) CHECK(e5.image[i - 1] < e5.image[i]);
  CHECK_THROWS_AS(qorder::perfect_embed(FiniteStructure(Kind::Graph, {0}, {})),
                  InputError);

  // Vertex ids need not be presorted; the order relation decides ranks.
  FiniteStructure swapped(Kind::LinearOrder, {0, 1}, {{1, 0}});
  CHECK(qorder::perfect_embed(swapped).order == std::vector<int>{1, 0});
}

TEST_CASE("build_phi_l: empty order is translation by one") {
  PLAutomorphism phi = qorder::build_phi_l(FiniteStructure::linear_order(0));
  CHECK(phi.knots() == std::vector<PLAutomorphism::Knot>{{q(0), q(1)}});
  CHECK(phi(q(12, 7)) == q(19, 7));
}

TEST_CASE("build_phi_l: singleton and pair") {
  PLAutomorphism phi = qorder::build_phi_l(FiniteStructure::linear_order(1));
  CHECK(phi(q(0)) == q(0));
  CHECK(phi(q(-5)) == q(-4));
  CHECK(phi(q(-1)) == q(-1, 2));
  CHECK(phi(q(1, 3)) == q(2, 3));
  CHECK(phi(q(7)) == q(8));
  for (long num = -20; num <= 20; ++num) {
    Rat x(num, 3);
    if (x == q(0)) continue;
    CHECK(phi(x) > x);
  }

  PLAutomorphism phi2 = qorder::build_phi_l(FiniteStructure::linear_order(2));
  CHECK(phi2(q(0)) == q(0));
  CHECK(phi2(q(1)) == q(1));
  CHECK(phi2(q(-3)) > q(-3));
  CHECK(phi2(q(1, 2)) > q(1, 2));
  CHECK(phi2(q(1, 2)) < q(1));
  CHECK(phi2(q(5)) > q(5));
}

TEST_CASE("orbital classification") {
  auto dec1 = qorder::classify_orbitals(PLAutomorphism::translation(q(1)));
  REQUIRE(dec1.regions.size() == 1);
  CHECK(dec1.regions[0].type == RegionType::Up);
  CHECK(dec1.regions[0].unbounded());
  CHECK_FALSE(dec1.regions[0].lo.has_value());
  CHECK_FALSE(dec1.regions[0].hi.has_value());

  auto dec2 = qorder::classify_orbitals(PLAutomorphism::identity());
  REQUIRE(dec2.regions.size() == 1);
  CHECK(dec2.regions[0].type == RegionType::Fixed);
  CHECK(dec2.regions[0].has_interior());

  auto dec3 = qorder::classify_orbitals(up_bump_unit());
  REQUIRE(dec3.regions.size() == 3);
  CHECK(dec3.regions[0].type == RegionType::Fixed);
  CHECK_FALSE(dec3.regions[0].lo.has_value());
  CHECK(*dec3.regions[0].hi == q(0));
  CHECK(dec3.regions[1].type == RegionType::Up);
  CHECK(*dec3.regions[1].lo == q(0));
  CHECK(*dec3.regions[1].hi == q(1));
  CHECK(dec3.regions[2].type == RegionType::Fixed);
  CHECK(*dec3.regions[2].lo == q(1));
  CHECK_FALSE(dec3.regions[2].hi.has_value());

  // Down-bump via the inverse.
  auto dec4 = qorder::classify_orbitals(up_bump_unit().inverse());
  CHECK(dec4.type_sequence() ==
        std::vector<RegionType>{RegionType::Fixed, RegionType::Down, RegionType::Fixed});
}

TEST_CASE("every rational sits in a region of its displacement sign") {
  std::mt19937_64 rng(17);
  PLAutomorphism phi = qorder::build_phi_l(FiniteStructure::linear_order(3));
  auto dec = qorder::classify_orbitals(phi);
  for (int i = 0; i < 200; ++i) {
    Rat x(static_cast<long>(rng() % 241) - 120, 1 + static_cast<long>(rng() % 24));
    int sign = (phi(x) - x).sign();
    bool found = false;
    for (const auto& r : dec.regions) {
      bool inside = r.type == RegionType::Fixed
                        ? (!r.lo || *r.lo <= x) && (!r.hi || x <= *r.hi)
                        : (!r.lo || *r.lo < x) && (!r.hi || x < *r.hi);
      if (!inside) continue;
      found = true;
      if (sign == 0) CHECK(r.type == RegionType::Fixed);
      if (sign > 0) CHECK(r.type == RegionType::Up);
      if (sign < 0) CHECK(r.type == RegionType::Down);
    }
    CHECK(found);
  }
}

TEST_CASE("recover_order") {
  for (int size = 0; size <= 6; ++size) {
    FiniteStructure l = FiniteStructure::linear_order(size);
    FiniteStructure rec = qorder::recover_order(qorder::build_phi_l(l));
    CHECK(brute_force_isomorphism(rec, l).has_value());
  }
  CHECK_THROWS_AS(qorder::recover_order(PLAutomorphism::identity()), InputError);
  CHECK_THROWS_AS(qorder::recover_order(up_bump_unit()), InputError);
}

TEST_CASE("orbital matching") {
  auto up = qorder::classify_orbitals(PLAutomorphism::translation(q(1)));
  auto up2 = qorder::classify_orbitals(PLAutomorphism::translation(q(2)));
  auto down = qorder::classify_orbitals(PLAutomorphism::translation(q(-1)));
  auto m = qorder::orbital_match(up, up2);
  REQUIRE(m.has_value());
  CHECK(m->pairs.size() == 1);
  CHECK_FALSE(qorder::orbital_match(up, down).has_value());

  PLAutomorphism fix0 = qorder::build_phi_l(FiniteStructure::linear_order(1));
  // Fixing 5 instead of 0, bumps on both sides.
  PLAutomorphism fix5(
      {{q(3), q(4)}, {q(5), q(5)}, {q(6), q(7)}});
  auto m2 = qorder::orbital_match(qorder::classify_orbitals(fix0),
                                  qorder::classify_orbitals(fix5));
  REQUIRE(m2.has_value());
  CHECK(m2->pairs.size() == 3);

  // A fixed interval never matches a singleton fixed point, even when the
  // type sequences agree.
  PLAutomorphism interval_fix({{q(-2), q(-1)}, {q(0), q(0)}, {q(1), q(1)}, {q(2), q(3)}});
  auto di = qorder::classify_orbitals(interval_fix);
  CHECK(di.type_sequence() ==
        std::vector<RegionType>{RegionType::Up, RegionType::Fixed, RegionType::Up});
  CHECK_FALSE(qorder::orbital_match(di, qorder::classify_orbitals(fix0)).has_value());
}

TEST_CASE("conjugator on translations") {
  PLAutomorphism t1 = PLAutomorphism::translation(q(1));
  PLAutomorphism t2 = PLAutomorphism::translation(q(2));
  auto m = qorder::orbital_match(qorder::classify_orbitals(t1),
                                 qorder::classify_orbitals(t1));
  REQUIRE(m.has_value());
  qorder::Conjugator same(t1, t1, *m);
  for (long i = -6; i <= 6; ++i) CHECK(same(q(i, 2)) == q(i, 2));

  qorder::Conjugator delta(t1, t2, *m);
  CHECK(delta(q(0)) == q(0));
  CHECK(delta(q(1)) == q(2));
  CHECK(delta(q(1, 2)) == q(1));
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    Rat x(static_cast<long>(rng() % 201) - 100, 1 + static_cast<long>(rng() % 20));
    CHECK(delta(t1(x)) == t2(delta(x)));
  }
}

TEST_CASE("conjugator matches singleton fixed points") {
  PLAutomorphism fix0 = qorder::build_phi_l(FiniteStructure::linear_order(1));
  PLAutomorphism fix5({{q(3), q(4)}, {q(5), q(5)}, {q(6), q(7)}});
  auto m = qorder::orbital_match(qorder::classify_orbitals(fix0),
                                 qorder::classify_orbitals(fix5));
  REQUIRE(m.has_value());
  qorder::Conjugator delta(fix0, fix5, *m);
  CHECK(delta(q(0)) == q(5));
  for (long i = -8; i <= 8; ++i) {
    Rat x(2 * i + 1, 2);
    CHECK(delta(fix0(x)) == fix5(delta(x)));
  }
}

TEST_CASE("conjugator across unbounded fixed regions") {
  // Fixed ray, bounded up-bump, fixed ray; the rays map by translation and
  // the bounded fixed interval pins the bump between them.
  PLAutomorphism phi = up_bump_unit();
  PLAutomorphism psi({{q(3), q(3)}, {q(4), q(9, 2)}, {q(5), q(5)}});
  auto m = qorder::orbital_match(qorder::classify_orbitals(phi),
                                 qorder::classify_orbitals(psi));
  REQUIRE(m.has_value());
  qorder::Conjugator delta(phi, psi, *m);
  CHECK(delta(q(-10)) == q(-7));  // left rays differ by translation 3
  CHECK(delta(q(0)) == q(3));
  CHECK(delta(q(1)) == q(5));
  CHECK(delta(q(37)) == q(41));
  for (long i = 1; i < 16; ++i) {
    Rat x(i, 16);
    CHECK(delta(phi(x)) == psi(delta(x)));
  }
}

TEST_CASE("conjugator budget is enforced") {
  PLAutomorphism t1 = PLAutomorphism::translation(q(1));
  auto m = qorder::orbital_match(qorder::classify_orbitals(t1),
                                 qorder::classify_orbitals(t1));
  qorder::Conjugator delta(t1, t1, *m, /*budget=*/5);
  CHECK_THROWS_AS(delta(q(1000)), BudgetError);
  CHECK(delta(q(3)) == q(3));
}

TEST_CASE("matching rejects mismatched inputs in the conjugator") {
  PLAutomorphism t1 = PLAutomorphism::translation(q(1));
  PLAutomorphism down = PLAutomorphism::translation(q(-1));
  qorder::OrbitalMatching fake{{{0, 0}}};
  CHECK_THROWS_AS(qorder::Conjugator(t1, down, fake), InputError);
}

TEST_CASE("build_phi_l invariance under relabeling") {
  FiniteStructure l = FiniteStructure::linear_order(3);
  std::map<int, int> p{{0, 7}, {1, 3}, {2, 11}};
  // Relabeled as a plain structure: same order type, scrambled ids.
  FiniteStructure l2 = l.relabel(VertexMap(p));
  auto d1 = qorder::classify_orbitals(qorder::build_phi_l(l));
  auto d2 = qorder::classify_orbitals(qorder::build_phi_l(l2));
  CHECK(qorder::orbital_match(d1, d2).has_value());
}

TEST_CASE("conjugation covariance on explicit triples") {
  std::mt19937_64 rng(31);
  PLAutomorphism phi = qorder::build_phi_l(FiniteStructure::linear_order(2));
  for (int i = 0; i < 10; ++i) {
    // Random increasing knot lists give arbitrary conjugating elements.
    std::vector<PLAutomorphism::Knot> ks;
    Rat x(static_cast<long>(rng() % 7) - 3), y(static_cast<long>(rng() % 7) - 3);
    for (int j = 0; j < 3; ++j) {
      ks.push_back({x, y});
      x += Rat(1 + static_cast<long>(rng() % 8), 2);
      y += Rat(1 + static_cast<long>(rng() % 8), 2);
    }
    PLAutomorphism g(ks);
    PLAutomorphism conj = g.compose_after(phi).compose_after(g.inverse());
    auto da = qorder::classify_orbitals(phi);
    auto db = qorder::classify_orbitals(conj);
    REQUIRE(da.type_sequence() == db.type_sequence());
    for (size_t r = 0; r < da.regions.size(); ++r) {
      if (da.regions[r].lo) CHECK(g(*da.regions[r].lo) == *db.regions[r].lo);
      if (da.regions[r].hi) CHECK(g(*da.regions[r].hi) == *db.regions[r].hi);
    }
  }
}
