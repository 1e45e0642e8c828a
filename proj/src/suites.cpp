#include "suites.hpp"

#include <algorithm>
#include <random>

#include "budget.hpp"
#include "composite.hpp"
#include "digraph_reduction.hpp"
#include "errors.hpp"
#include "graph_reduction.hpp"
#include "orbitals.hpp"
#include "predicates.hpp"
#include "sn.hpp"

namespace conjforge::suites {

bool Report::passed() const {
  return std::all_of(cases.begin(), cases.end(),
                     [](const CaseResult& c) { return c.pass; });
}

io::json Report::to_json() const {
  io::json cs = io::json::array();
  for (const auto& c : cases) {
    io::json e;
    e["label"] = c.label;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    cs.push_back(std::move(e));
  }
  io::json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["passed"] = passed();
  j["cases"] = std::move(cs);
  return j;
}

namespace {

using qorder::PLAutomorphism;
using qorder::RegionType;

// Seeded generator with explicit integer draws; distributions from <random>
// are implementation-defined and would break cross-platform determinism.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t next() { return eng(); }
  long below(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }
  // A rational strictly inside (1/4, 3/4); keeps synthesized slopes away
  // from 1 so orbit chases stay short.
  Rat mid_frac() {
    long den = 8 + below(24);
    long lo = den / 4 + 1, hi = 3 * den / 4 - 1;
    return Rat(lo + below(hi - lo + 1), den);
  }
  Rat small_positive() {  // in (1/2, 4]
    long den = 2 + below(6);
    return Rat(den / 2 + 1 + below(3 * den), den);
  }
};

void check(Report& rep, const std::string& label, bool ok, const std::string& detail = "") {
  rep.cases.push_back({label, ok, ok ? std::string() : detail});
}

// ---------------------------------------------------------------------------
// PL synthesis for the qorder suites.

struct PLPattern {
  std::vector<RegionType> bumps;  // bump types, outermost first
  int fixed_points = 0;           // singleton fixed points (bumps.size()-1)
  bool fixed_interval = false;    // one interior fixed interval instead
};

PLPattern random_pattern(Rng& rng) {
  PLPattern p;
  long mode = rng.below(4);
  if (mode == 0) {
    p.bumps = {rng.below(2) ? RegionType::Up : RegionType::Down};
  } else if (mode == 3) {
    p.fixed_interval = true;
    p.bumps = {rng.below(2) ? RegionType::Up : RegionType::Down,
               rng.below(2) ? RegionType::Up : RegionType::Down};
  } else {
    p.fixed_points = static_cast<int>(mode);  // 1 or 2
    for (int i = 0; i <= p.fixed_points; ++i)
      p.bumps.push_back(rng.below(2) ? RegionType::Up : RegionType::Down);
  }
  return p;
}

// Anchor values: singleton fixed points, or the endpoints of the fixed
// interval. Spread out so every region has room.
std::vector<Rat> random_anchors(Rng& rng, int count) {
  std::vector<Rat> out;
  Rat at = Rat(rng.below(7)) - Rat(3);
  for (int i = 0; i < count; ++i) {
    at += Rat(2) + Rat(rng.below(16) + 1, 8);
    out.push_back(at);
  }
  return out;
}

PLAutomorphism synthesize(Rng& rng, const PLPattern& p) {
  std::vector<PLAutomorphism::Knot> ks;
  if (p.fixed_points == 0 && !p.fixed_interval) {
    Rat t = rng.small_positive();
    if (p.bumps[0] == RegionType::Down) t = -t;
    Rat x0 = Rat(rng.below(9)) - Rat(4);
    return PLAutomorphism({{x0, x0 + t}});
  }
  std::vector<Rat> anchors = random_anchors(rng, p.fixed_interval ? 2 : p.fixed_points);
  {
    Rat t = rng.small_positive(), c = rng.small_positive();
    const Rat& f = anchors.front();
    if (p.bumps.front() == RegionType::Up)
      ks.push_back({f - t - c, f - c});
    else
      ks.push_back({f - c, f - c - t});
  }
  ks.push_back({anchors.front(), anchors.front()});
  if (p.fixed_interval) {
    ks.push_back({anchors.back(), anchors.back()});
  } else {
    for (int i = 1; i < p.fixed_points; ++i) {
      const Rat &a = anchors[i - 1], &b = anchors[i];
      Rat xm = a + (b - a) * rng.mid_frac();
      Rat ym = (p.bumps[i] == RegionType::Up) ? xm + (b - xm) * rng.mid_frac()
                                              : a + (xm - a) * rng.mid_frac();
      ks.push_back({xm, ym});
      ks.push_back({b, b});
    }
  }
  {
    Rat a = rng.small_positive(), b = rng.small_positive();
    const Rat& f = anchors.back();
    if (p.bumps.back() == RegionType::Up)
      ks.push_back({f + a, f + a + b});
    else
      ks.push_back({f + a + b, f + a + b / 2});
  }
  return PLAutomorphism(std::move(ks));
}

// An arbitrary PL automorphism used as a conjugating element.
PLAutomorphism random_pl(Rng& rng) {
  int count = 1 + static_cast<int>(rng.below(4));
  Rat x = Rat(rng.below(9)) - Rat(4), y = Rat(rng.below(9)) - Rat(4);
  std::vector<PLAutomorphism::Knot> ks;
  for (int i = 0; i < count; ++i) {
    ks.push_back({x, y});
    x += rng.small_positive();
    y += rng.small_positive();
  }
  return PLAutomorphism(std::move(ks));
}

// Deterministic sample points spread across the regions of a decomposition,
// at least `total` of them over the moving regions. Unbounded regions are
// sampled inside a bounded window with distinct fractional offsets: orbit
// chases stay short while the points remain pairwise distinct.
std::vector<Rat> spread_samples(const qorder::OrbitalDecomposition& dec, int total) {
  std::vector<Rat> out;
  int bumps = 0;
  for (const auto& r : dec.regions)
    if (r.type != RegionType::Fixed) ++bumps;
  const int per = (total + bumps - 1) / std::max(1, bumps);
  const long window = 8;
  for (const auto& r : dec.regions) {
    if (r.type == RegionType::Fixed) {
      if (r.singleton()) {
        out.push_back(*r.lo);
      } else if (r.lo && r.hi) {
        for (int j = 1; j <= 3; ++j)
          out.push_back(*r.lo + (*r.hi - *r.lo) * Rat(j, 4));
      } else {
        out.push_back(r.lo ? *r.lo + 1 : (r.hi ? *r.hi - 1 : Rat(0)));
      }
      continue;
    }
    for (long j = 0; j < per; ++j) {
      Rat offset = Rat(j % window) + Rat(2 * j + 1, 2l * (per + 1));
      if (r.lo && r.hi)
        out.push_back(*r.lo + (*r.hi - *r.lo) * Rat(j + 1, per + 2));
      else if (r.lo)
        out.push_back(*r.lo + offset);
      else if (r.hi)
        out.push_back(*r.hi - offset);
      else
        out.push_back(offset - Rat(window / 2));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Structure enumeration up to isomorphism.

std::vector<std::pair<int, int>> vertex_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<int> iota_domain(int n) {
  std::vector<int> d(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = i;
  return d;
}

std::vector<FiniteStructure> graphs_upto_iso(int max_n, int kn_free) {
  std::vector<FiniteStructure> reps;
  for (int n = 0; n <= max_n; ++n) {
    auto pairs = vertex_pairs(n);
    for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
      std::set<std::pair<int, int>> edges;
      for (size_t i = 0; i < pairs.size(); ++i)
        if (mask & (1ull << i)) edges.insert(pairs[i]);
      FiniteStructure g(Kind::Graph, iota_domain(n), edges);
      if (kn_free > 0 && !is_kn_free(g, kn_free)) continue;
      bool fresh = std::none_of(reps.begin(), reps.end(), [&](const FiniteStructure& r) {
        return r.size() == n && brute_force_isomorphism(r, g).has_value();
      });
      if (fresh) reps.push_back(std::move(g));
    }
  }
  return reps;
}

std::vector<FiniteStructure> tournaments_upto_iso(int max_n) {
  std::vector<FiniteStructure> reps;
  for (int n = 0; n <= max_n; ++n) {
    auto pairs = vertex_pairs(n);
    for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
      std::set<std::pair<int, int>> edges;
      for (size_t i = 0; i < pairs.size(); ++i)
        edges.insert(mask & (1ull << i) ? pairs[i]
                                        : std::make_pair(pairs[i].second, pairs[i].first));
      FiniteStructure t(Kind::Tournament, iota_domain(n), edges);
      bool fresh = std::none_of(reps.begin(), reps.end(), [&](const FiniteStructure& r) {
        return r.size() == n && brute_force_isomorphism(r, t).has_value();
      });
      if (fresh) reps.push_back(std::move(t));
    }
  }
  return reps;
}

// Reversal relabeling: v -> max_id - v. Nontrivial on every structure with
// at least two vertices, and keeps ids nonnegative.
FiniteStructure reversed_copy(const FiniteStructure& s) {
  int hi = 0;
  for (int v : s.domain()) hi = std::max(hi, v);
  std::map<int, int> p;
  for (int v : s.domain()) p[v] = hi - v;
  return s.relabel(VertexMap(std::move(p)));
}

FiniteStructure c3_tournament() {
  return FiniteStructure(Kind::Tournament, {0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
}

FiniteStructure transitive_tournament(int n) {
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.insert({i, j});
  return FiniteStructure(Kind::Tournament, iota_domain(n), edges);
}

// ---------------------------------------------------------------------------

Report run_qorder_roundtrip(std::uint64_t seed, int) {
  Report rep{"qorder-roundtrip", seed, {}};
  for (int size = 0; size <= 6; ++size) {
    FiniteStructure l = FiniteStructure::linear_order(size);
    PLAutomorphism phi = qorder::build_phi_l(l);
    FiniteStructure rec = qorder::recover_order(phi);
    bool iso = brute_force_isomorphism(rec, l).has_value();
    check(rep, "recover(build_phi_l(L)) ~ L, |L|=" + std::to_string(size), iso,
          "recovered order of size " + std::to_string(rec.size()));

    auto types = qorder::classify_orbitals(phi).type_sequence();
    std::vector<RegionType> expect;
    expect.push_back(RegionType::Up);
    for (int i = 0; i < size; ++i) {
      expect.push_back(RegionType::Fixed);
      expect.push_back(RegionType::Up);
    }
    check(rep, "type sequence (up, fixed)^" + std::to_string(size) + " up",
          types == expect, "unexpected orbital sequence");
  }
  return rep;
}

Report run_glass_conjugator(std::uint64_t seed, int samples) {
  Report rep{"glass-conjugator", seed, {}};
  Rng rng(seed);
  const int pairs = samples > 0 ? samples : 50;
  const int points = 1000;
  for (int i = 0; i < pairs; ++i) {
    PLPattern pat = random_pattern(rng);
    PLAutomorphism phi = synthesize(rng, pat);
    PLAutomorphism psi = synthesize(rng, pat);
    auto dphi = qorder::classify_orbitals(phi);
    auto dpsi = qorder::classify_orbitals(psi);
    auto m = qorder::orbital_match(dphi, dpsi);
    if (!m) {
      check(rep, "pair " + std::to_string(i) + ": matching decompositions", false,
            "synthesized pair failed to match");
      continue;
    }
    qorder::Conjugator delta = qorder::build_conjugator(phi, psi, *m);
    bool commutes = true, monotone = true;
    std::vector<Rat> qs = spread_samples(dphi, points);
    Rat prev_d;
    bool have_prev = false;
    for (const Rat& q : qs) {
      Rat dq = delta(q);
      if (delta(phi(q)) != psi(dq)) { commutes = false; break; }
      if (have_prev && !(dq > prev_d)) { monotone = false; break; }
      prev_d = dq;
      have_prev = true;
    }
    check(rep, "pair " + std::to_string(i) + ": delta(phi(q)) = psi(delta(q)) on " +
                   std::to_string(qs.size()) + " rationals",
          commutes, "conjugacy identity failed");
    check(rep, "pair " + std::to_string(i) + ": delta strictly increasing", monotone,
          "monotonicity failed");
  }
  return rep;
}

Report run_covariance(std::uint64_t seed, int samples) {
  Report rep{"conjugation-covariance", seed, {}};
  Rng rng(seed);
  const int trials = samples > 0 ? samples : 100;
  for (int i = 0; i < trials; ++i) {
    PLAutomorphism phi = synthesize(rng, random_pattern(rng));
    PLAutomorphism g = random_pl(rng);
    PLAutomorphism conj = g.compose_after(phi).compose_after(g.inverse());
    auto dphi = qorder::classify_orbitals(phi);
    auto dconj = qorder::classify_orbitals(conj);
    bool same_types = dphi.type_sequence() == dconj.type_sequence();
    check(rep, "trial " + std::to_string(i) + ": type sequence preserved", same_types,
          "conjugate decomposition changed type sequence");
    if (!same_types) continue;
    bool transported = true;
    for (size_t r = 0; r < dphi.regions.size(); ++r) {
      const auto& a = dphi.regions[r];
      const auto& b = dconj.regions[r];
      if (a.lo.has_value() != b.lo.has_value() ||
          a.hi.has_value() != b.hi.has_value() || (a.lo && g(*a.lo) != *b.lo) ||
          (a.hi && g(*a.hi) != *b.hi)) {
        transported = false;
        break;
      }
    }
    check(rep, "trial " + std::to_string(i) + ": endpoints transported by g",
          transported, "region endpoints not g-images");
  }
  return rep;
}

Report run_sn(std::uint64_t seed, int) {
  Report rep{"sn", seed, {}};
  for (int n = 2; n <= 4; ++n) {
    for (int size = 0; size <= 4; ++size) {
      FiniteStructure l = FiniteStructure::linear_order(size);
      circular::SnAutomorphism phi = circular::build_phi_l_sn(l, n);
      const auto& reg = phi.registry();
      std::string tag = "n=" + std::to_string(n) + " |L|=" + std::to_string(size);

      bool antipodal = true;
      const auto& pts = reg.points();
      for (size_t a = 0; a < pts.size() && antipodal; ++a)
        for (size_t b = a + 1; b < pts.size(); ++b)
          if (reg.relate(pts[a], pts[b]) + reg.relate(pts[b], pts[a]) != n - 1) {
            antipodal = false;
            break;
          }
      check(rep, tag + ": antipodal coherence on all registry pairs", antipodal,
            "relate(x,y) + relate(y,x) != n-1");

      if (n == 2) {
        bool total = true;
        for (size_t a = 0; a < pts.size() && total; ++a)
          for (size_t b = a + 1; b < pts.size(); ++b)
            if (reg.local_order_edge(pts[a], pts[b]) ==
                reg.local_order_edge(pts[b], pts[a])) {
              total = false;
              break;
            }
        check(rep, tag + ": local order is a tournament", total,
              "pair oriented zero or two ways");
      }

      bool preserved = true;
      std::vector<Rat> dom;
      for (auto& [x, y] : phi.assignment()) dom.push_back(x);
      for (size_t a = 0; a < dom.size() && preserved; ++a)
        for (size_t b = 0; b < dom.size(); ++b) {
          if (a == b) continue;
          if (reg.relate(dom[a], dom[b]) !=
              reg.relate(phi.apply(dom[a]), phi.apply(dom[b]))) {
            preserved = false;
            break;
          }
        }
      check(rep, tag + ": phi_L preserves relate on all sampled pairs", preserved,
            "relation not preserved");

      FiniteStructure rec = circular::recover_order_sn(phi);
      check(rep, tag + ": recover_order_sn round-trips",
            brute_force_isomorphism(rec, l).has_value(),
            "recovered size " + std::to_string(rec.size()));
    }
  }
  return rep;
}

Report run_graphs(std::uint64_t seed, int) {
  Report rep{"roundtrip-graphs", seed, {}};
  auto reps = graphs_upto_iso(4, 3);
  std::vector<FiniteStructure> quotients;
  for (size_t gi = 0; gi < reps.size(); ++gi) {
    const FiniteStructure& g = reps[gi];
    std::string tag = "G#" + std::to_string(gi) + " (|G|=" + std::to_string(g.size()) + ")";
    auto d = gengraph::build_reduction_graph(g, 3, 1, 3);
    check(rep, tag + ": Delta is K3-free", is_kn_free(d.structure(), 3), "triangle found");
    check(rep, tag + ": phi verified", verify_automorphism(d.structure(), d.phi()),
          "not an automorphism");
    bool dichotomy = true;
    for (int v : d.levels()[0])
      if (!d.structure().adjacent(v, d.phi()(v))) dichotomy = false;
    if (d.levels().size() > 1)
      for (int v : d.levels()[1])
        if (d.structure().adjacent(v, d.phi()(v))) dichotomy = false;
    check(rep, tag + ": adjacency dichotomy between levels", dichotomy,
          "level-0/new vertex adjacency rule failed");
    FiniteStructure q = gengraph::recover_base_graph(d.structure(), d.phi());
    check(rep, tag + ": recovery quotient isomorphic to G",
          brute_force_isomorphism(q, g).has_value(), "quotient mismatch");
    quotients.push_back(std::move(q));

    FiniteStructure grev = reversed_copy(g);
    auto drev = gengraph::build_reduction_graph(grev, 3, 1, 3);
    FiniteStructure qrev = gengraph::recover_base_graph(drev.structure(), drev.phi());
    check(rep, tag + ": relabeled input yields isomorphic quotient",
          brute_force_isomorphism(qrev, quotients.back()).has_value(),
          "relabeling changed the quotient class");
  }
  bool separated = true;
  for (size_t i = 0; i < reps.size() && separated; ++i)
    for (size_t j = i + 1; j < reps.size(); ++j) {
      bool base_iso = reps[i].size() == reps[j].size() &&
                      brute_force_isomorphism(reps[i], reps[j]).has_value();
      bool quot_iso = quotients[i].size() == quotients[j].size() &&
                      brute_force_isomorphism(quotients[i], quotients[j]).has_value();
      if (base_iso != quot_iso) {
        separated = false;
        break;
      }
    }
  check(rep, "G ~ G' iff recovered quotients isomorphic, over all pairs", separated,
        "separation failed");
  return rep;
}

Report run_tournaments(std::uint64_t seed, int) {
  Report rep{"roundtrip-tournaments", seed, {}};
  auto reps = tournaments_upto_iso(4);
  std::vector<FiniteStructure> quotients;
  for (size_t ti = 0; ti < reps.size(); ++ti) {
    const FiniteStructure& t = reps[ti];
    std::string tag = "T#" + std::to_string(ti) + " (|T|=" + std::to_string(t.size()) + ")";
    auto d = gendigraph::build_reduction_tournament(t, 1, 1);
    const FiniteStructure& s = d.structure();
    bool total = true;
    for (int u : s.domain())
      for (int v : s.domain())
        if (u != v && s.has_edge(u, v) == s.has_edge(v, u)) total = false;
    check(rep, tag + ": total irreflexive antisymmetric at top level", total,
          "not a tournament");
    std::set<int> level0(d.levels()[0].begin(), d.levels()[0].end());
    std::set<int> recovered;
    for (int v : s.domain())
      if (s.has_edge(v, d.phi()(v))) recovered.insert(v);
    check(rep, tag + ": recovery set equals level 0", recovered == level0,
          "recovery set mismatch");
    FiniteStructure q = gendigraph::recover_base_digraph(s, d.phi());
    check(rep, tag + ": recovery quotient isomorphic to T",
          brute_force_isomorphism(q, t).has_value(), "quotient mismatch");
    quotients.push_back(std::move(q));

    FiniteStructure trev = reversed_copy(t);
    auto drev = gendigraph::build_reduction_tournament(trev, 1, 1);
    FiniteStructure qrev = gendigraph::recover_base_digraph(drev.structure(), drev.phi());
    check(rep, tag + ": relabeled input yields isomorphic quotient",
          brute_force_isomorphism(qrev, quotients.back()).has_value(),
          "relabeling changed the quotient class");
  }
  bool separated = true;
  for (size_t i = 0; i < reps.size() && separated; ++i)
    for (size_t j = i + 1; j < reps.size(); ++j) {
      bool base_iso = reps[i].size() == reps[j].size() &&
                      brute_force_isomorphism(reps[i], reps[j]).has_value();
      bool quot_iso = quotients[i].size() == quotients[j].size() &&
                      brute_force_isomorphism(quotients[i], quotients[j]).has_value();
      if (base_iso != quot_iso) {
        separated = false;
        break;
      }
    }
  check(rep, "T ~ T' iff recovered quotients isomorphic, over all pairs", separated,
        "separation failed");
  return rep;
}

Report run_infree_forbidden(std::uint64_t seed, int) {
  Report rep{"infree-forbidden", seed, {}};
  const int cap = 2;
  for (int base_size = 1; base_size <= 2; ++base_size) {
    FiniteStructure t = transitive_tournament(base_size);
    std::string tag = "Lambda3 |T|=" + std::to_string(base_size);
    auto d0 = gendigraph::build_reduction_in_free(t, 3, 0, cap);
    auto d1 = gendigraph::build_reduction_in_free(t, 3, 1, cap);
    check(rep, tag + ": I3-free at level 0", is_in_free(d0.structure(), 3), "I3 found");
    check(rep, tag + ": I3-free at level 1", is_in_free(d1.structure(), 3), "I3 found");

    // Every capped qualifying (S, S') signature has a witness with that
    // exact adjacency pattern over level 0.
    const FiniteStructure& base = d0.structure();
    const FiniteStructure& full = d1.structure();
    bool all_realized = true;
    int signatures = 0;
    for (auto& s : layered::enumerate_subsets(base.domain(), cap)) {
      std::set<int> in_s(s.begin(), s.end());
      std::vector<int> rest;
      for (int v : base.domain())
        if (!in_s.count(v)) rest.push_back(v);
      for (auto& s2 : layered::enumerate_subsets(rest, cap - static_cast<int>(s.size()))) {
        if (!s2.empty() &&
            !(static_cast<int>(s2.size()) < 2 || is_in_free(base.induced(s2), 2)))
          continue;
        ++signatures;
        std::set<int> in_s2(s2.begin(), s2.end());
        bool found = false;
        for (int w : full.domain()) {
          if (base.has_vertex(w)) continue;
          bool match = true;
          for (int a : base.domain()) {
            bool ok = in_s.count(a) ? full.has_edge(a, w)
                    : in_s2.count(a) ? !full.adjacent(a, w)
                                     : full.has_edge(w, a);
            if (!ok) {
              match = false;
              break;
            }
          }
          if (match) {
            found = true;
            break;
          }
        }
        if (!found) {
          all_realized = false;
          break;
        }
      }
      if (!all_realized) break;
    }
    check(rep, tag + ": all " + std::to_string(signatures) +
                   " capped (S,S') signatures realized",
          all_realized, "missing signature witness");
  }

  FiniteStructure g(Kind::Digraph, {0, 1}, {{0, 1}});
  gendigraph::ForbiddenFamily family({c3_tournament()});
  auto d = gendigraph::build_reduction_forbidden(g, family, 1, cap);
  check(rep, "Gamma_{C3}: no C3 embeds after 1 level",
        !embeds_tournament(c3_tournament(), d.structure()), "C3 found");
  check(rep, "Gamma_{C3}: skip rule fired on an enumerated candidate",
        !d.skipped().empty(), "no candidate was skipped");
  return rep;
}

Report run_multipartite(std::uint64_t seed, int) {
  Report rep{"multipartite", seed, {}};
  for (int base_size = 1; base_size <= 2; ++base_size) {
    for (int n = 2; n <= 3; ++n) {
      FiniteStructure t = transitive_tournament(base_size);
      std::string tag = "|T|=" + std::to_string(base_size) + " n=" + std::to_string(n);
      auto d = gendigraph::build_reduction_multipartite(t, n, 1, 2);
      const FiniteStructure& s = d.structure();

      bool partite = true;
      for (int u : s.domain())
        for (int v : s.domain()) {
          if (u == v) continue;
          bool same = d.origin(u).part == d.origin(v).part;
          if (same == s.adjacent(u, v)) partite = false;
        }
      check(rep, tag + ": complete n-partite at top level", partite,
            "independence/completeness failed");

      bool action = true;
      for (int u : s.domain()) {
        int pu = d.origin(u).part, pv = d.origin(d.phi()(u)).part;
        if (pv != (pu < 2 ? 1 - pu : pu)) action = false;
      }
      check(rep, tag + ": phi swaps parts 0,1 and fixes the rest", action,
            "part action wrong");

      FiniteStructure q = gendigraph::recover_base_digraph(s, d.phi());
      bool iso = false;
      if (q.size() == t.size())
        iso = brute_force_isomorphism(q.as_kind(Kind::Tournament), t).has_value();
      check(rep, tag + ": recovery isomorphic to T", iso, "quotient mismatch");
    }
  }
  return rep;
}

Report run_composite_oracle(std::uint64_t seed, int) {
  Report rep{"composite-oracle", seed, {}};
  struct Sig { int m, n; size_t order; };
  for (Sig sig : {Sig{2, 2, 8}, Sig{3, 2, 48}, Sig{2, 3, 72}}) {
    std::string tag = std::to_string(sig.m) + "*K" + std::to_string(sig.n);
    auto group = composite::all_composite_automorphisms(sig.m, sig.n);
    check(rep, tag + ": |Aut| = " + std::to_string(sig.order),
          group.size() == sig.order, "group size " + std::to_string(group.size()));
    std::vector<VertexMap> mats;
    mats.reserve(group.size());
    for (auto& f : group) mats.push_back(f.materialize());

    bool agree = true, witnesses = true;
    long positives = 0;
    for (size_t i = 0; i < group.size() && agree && witnesses; ++i) {
      for (size_t j = 0; j < group.size(); ++j) {
        bool brute = false;
        for (size_t k = 0; k < mats.size(); ++k)
          if (verify_conjugacy_witness(mats[i], mats[j], mats[k])) {
            brute = true;
            break;
          }
        bool decided = composite::decide_conjugacy(group[i], group[j]);
        if (decided != brute) {
          agree = false;
          break;
        }
        if (decided) {
          ++positives;
          auto delta = composite::build_conjugator_composite(group[i], group[j]);
          if (!verify_conjugacy_witness(mats[i], mats[j], delta.materialize())) {
            witnesses = false;
            break;
          }
        }
      }
    }
    check(rep, tag + ": decide_conjugacy agrees with exhaustive search on all " +
                   std::to_string(group.size() * group.size()) + " pairs",
          agree, "disagreement with brute force");
    check(rep, tag + ": all " + std::to_string(positives) + " positive verdicts verified",
          witnesses, "constructed witness failed");
  }
  return rep;
}

Report run_eset(std::uint64_t seed, int samples) {
  Report rep{"eset-coding", seed, {}};
  Rng rng(seed);
  // Ten nontrivial twist types over an infinite carrier. The identity twist
  // is excluded: the identity-2-cycles tail realizes it unconditionally, so
  // it cannot separate sets.
  std::vector<composite::TwistType> pool;
  for (auto lengths : std::vector<std::vector<int>>{
           {2}, {3}, {4}, {5}, {6}, {2, 2}, {3, 2}, {3, 3}, {4, 2}, {2, 2, 2}})
    pool.push_back(composite::TwistType{lengths, 0, -1});

  const int runs = samples > 0 ? samples : 100;
  std::vector<std::set<composite::TwistType>> sets;
  std::vector<composite::CycleInvariant> invs;
  bool roundtrip = true;
  for (int i = 0; i < runs; ++i) {
    int len = 1 + static_cast<int>(rng.below(8));
    std::vector<composite::TwistType> e;
    for (int j = 0; j < len; ++j) e.push_back(pool[static_cast<size_t>(rng.below(10))]);
    auto phi = composite::decode_eset(e);
    auto code = composite::encode_eset(phi);
    std::set<composite::TwistType> want(e.begin(), e.end());
    if (code.finite_twist_set() != want) roundtrip = false;
    sets.push_back(std::move(want));
    invs.push_back(composite::invariant(phi));
  }
  check(rep, "decode-then-encode reproduces the deduplicated set, " +
                 std::to_string(runs) + " runs",
        roundtrip, "set mismatch");

  bool faithful = true;
  for (size_t i = 0; i < invs.size() && faithful; ++i)
    for (size_t j = i + 1; j < invs.size(); ++j)
      if ((sets[i] == sets[j]) != (invs[i] == invs[j])) {
        faithful = false;
        break;
      }
  check(rep, "equal sets iff invariant-equal decodes, over all pairs", faithful,
        "invariant equality diverged from set equality");
  return rep;
}

Report run_transport(std::uint64_t seed, int) {
  Report rep{"transport", seed, {}};
  for (const FiniteStructure& t : {c3_tournament(), transitive_tournament(4)}) {
    std::string tag = "T(|T|=" + std::to_string(t.size()) + ")";
    auto aut = automorphism_group(t);

    FiniteStructure hat = gendigraph::build_hat(t);
    FiniteStructure sum = composite::disjoint_copies(t, 2);
    FiniteStructure blown = composite::blowup_structure(t, 2);

    bool hat_ok = true, sum_ok = true, blow_ok = true;
    for (const auto& phi : aut)
      for (const auto& psi : aut) {
        auto delta = find_conjugator_brute(t, phi, psi);
        bool conj = delta.has_value();

        VertexMap hphi = gendigraph::hat_lift(t, phi, false);
        VertexMap hpsi = gendigraph::hat_lift(t, psi, false);
        bool hconj = find_conjugator_brute(hat, hphi, hpsi).has_value();
        if (hconj != conj) hat_ok = false;
        if (conj) {
          VertexMap hdelta = gendigraph::hat_lift(t, *delta, false);
          if (!verify_conjugacy_witness(hphi, hpsi, hdelta)) hat_ok = false;
        }

        auto sphi = composite::direct_sum_id(t, phi, 2);
        auto spsi = composite::direct_sum_id(t, psi, 2);
        bool sconj = find_conjugator_brute(sum, sphi.map, spsi.map).has_value();
        if (sconj != conj) sum_ok = false;
        if (conj) {
          auto sdelta = composite::direct_sum_id(t, *delta, 2);
          if (!verify_conjugacy_witness(sphi.map, spsi.map, sdelta.map)) sum_ok = false;
        }

        auto bphi = composite::blowup(t, phi, 2);
        auto bpsi = composite::blowup(t, psi, 2);
        bool bconj = find_conjugator_brute(blown, bphi.map, bpsi.map).has_value();
        if (bconj != conj) blow_ok = false;
        if (conj) {
          auto bdelta = composite::blowup(t, *delta, 2);
          if (!verify_conjugacy_witness(bphi.map, bpsi.map, bdelta.map)) blow_ok = false;
        }
      }
    check(rep, tag + ": hat_lift preserves and reflects conjugacy with witnesses",
          hat_ok, "hat transport failed");
    check(rep, tag + ": direct_sum_id (k=2) preserves and reflects conjugacy", sum_ok,
          "direct sum transport failed");
    check(rep, tag + ": blowup (k=2) preserves and reflects conjugacy", blow_ok,
          "blowup transport failed");
  }
  return rep;
}

const std::vector<std::string>& base_suites() {
  static const std::vector<std::string> names = {
      "qorder-roundtrip", "glass-conjugator", "conjugation-covariance", "sn",
      "roundtrip-graphs", "roundtrip-tournaments", "infree-forbidden",
      "multipartite", "composite-oracle", "eset-coding", "transport"};
  return names;
}

Report run_determinism(std::uint64_t seed, int samples) {
  Report rep{"determinism", seed, {}};
  for (const auto& name : base_suites()) {
    std::string a = io::dump(run_suite(name, seed, samples).to_json());
    std::string b = io::dump(run_suite(name, seed, samples).to_json());
    check(rep, name + ": re-run with the same seed is byte-identical", a == b,
          "serialized reports differ");
  }
  return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names = base_suites();
  names.push_back("determinism");
  names.push_back("all");
  return names;
}

Report run_suite(const std::string& name, std::uint64_t seed, int samples) {
  if (name == "qorder-roundtrip") return run_qorder_roundtrip(seed, samples);
  if (name == "glass-conjugator") return run_glass_conjugator(seed, samples);
  if (name == "conjugation-covariance") return run_covariance(seed, samples);
  if (name == "sn") return run_sn(seed, samples);
  if (name == "roundtrip-graphs") return run_graphs(seed, samples);
  if (name == "roundtrip-tournaments") return run_tournaments(seed, samples);
  if (name == "infree-forbidden") return run_infree_forbidden(seed, samples);
  if (name == "multipartite") return run_multipartite(seed, samples);
  if (name == "composite-oracle") return run_composite_oracle(seed, samples);
  if (name == "eset-coding") return run_eset(seed, samples);
  if (name == "transport") return run_transport(seed, samples);
  if (name == "determinism") return run_determinism(seed, samples);
  if (name == "all") {
    Report rep{"all", seed, {}};
    for (const auto& n : base_suites()) {
      Report sub = run_suite(n, seed, samples);
      for (auto& c : sub.cases)
        rep.cases.push_back({n + ": " + c.label, c.pass, c.detail});
    }
    Report det = run_determinism(seed, samples);
    for (auto& c : det.cases)
      rep.cases.push_back({"determinism: " + c.label, c.pass, c.detail});
    return rep;
  }
  throw InputError("unknown suite '" + name + "'");
}

}  // namespace conjforge::suites
