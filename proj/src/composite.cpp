#include "composite.hpp"

#include <algorithm>

#include "errors.hpp"
#include "predicates.hpp"

namespace conjforge::composite {

Perm compose_perms(const Perm& outer, const Perm& inner) {
  auto get = [](const Perm& p, int e) {
    auto it = p.find(e);
    return it == p.end() ? e : it->second;
  };
  std::set<int> support;
  for (auto& [k, v] : outer) support.insert(k);
  for (auto& [k, v] : inner) support.insert(k);
  Perm out;
  for (int e : support) {
    int img = get(outer, get(inner, e));
    if (img != e) out[e] = img;
  }
  return out;
}

Perm invert_perm(const Perm& p) {
  Perm out;
  for (auto& [k, v] : p) out[v] = k;
  return out;
}

std::vector<std::vector<int>> support_cycles(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::set<int> seen;
  for (auto& [start, img] : p) {
    if (seen.count(start)) continue;
    std::vector<int> cyc;
    int e = start;
    do {
      cyc.push_back(e);
      seen.insert(e);
      auto it = p.find(e);
      if (it == p.end()) throw InputError("support permutation is not closed");
      e = it->second;
    } while (e != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> support_cycle_lengths(const Perm& p) {
  std::vector<int> lengths;
  for (auto& cyc : support_cycles(p)) lengths.push_back(static_cast<int>(cyc.size()));
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

namespace {

void validate_perm(const Perm& p, std::optional<int> bound, const std::string& what) {
  std::set<int> values;
  for (auto& [k, v] : p) {
    if (k < 0 || v < 0) throw InputError(what + " mentions a negative index");
    if (bound && (k >= *bound || v >= *bound))
      throw InputError(what + " exceeds the carrier size");
    if (!values.insert(v).second) throw InputError(what + " is not injective");
  }
  std::set<int> keys;
  for (auto& [k, v] : p) keys.insert(k);
  if (keys != values) throw InputError(what + " is not a permutation of its support");
}

TwistType identity_twist(std::optional<int> n) {
  TwistType t;
  if (n) t.lengths.assign(static_cast<size_t>(*n), 1);
  return t;
}

}  // namespace

CompositeAutomorphism::CompositeAutomorphism(std::optional<int> copies,
                                             std::optional<int> copy_size,
                                             Perm copy_perm,
                                             std::map<int, Perm> per_copy, Tail tail)
    : copies_(copies), copy_size_(copy_size), copy_perm_(std::move(copy_perm)),
      per_copy_(std::move(per_copy)), tail_(tail) {
  if (copies_ && *copies_ < 0) throw InputError("negative copy count");
  if (copy_size_ && *copy_size_ < 0) throw InputError("negative copy size");
  // Canonicalize before validation.
  for (auto it = copy_perm_.begin(); it != copy_perm_.end();)
    it = (it->first == it->second) ? copy_perm_.erase(it) : std::next(it);
  for (auto it = per_copy_.begin(); it != per_copy_.end();) {
    for (auto jt = it->second.begin(); jt != it->second.end();)
      jt = (jt->first == jt->second) ? it->second.erase(jt) : std::next(jt);
    it = it->second.empty() ? per_copy_.erase(it) : std::next(it);
  }
  validate_perm(copy_perm_, copies_, "copy permutation");
  for (auto& [c, p] : per_copy_) {
    if (c < 0 || (copies_ && c >= *copies_))
      throw InputError("per-copy map on an out-of-range copy");
    validate_perm(p, copy_size_, "per-copy map");
  }
  if (tail_ == Tail::IdentityTwoCycles && copies_)
    throw InputError("the identity-2-cycles tail requires unboundedly many copies");
}

std::set<int> CompositeAutomorphism::described() const {
  std::set<int> out;
  for (auto& [c, d] : copy_perm_) out.insert(c);
  for (auto& [c, p] : per_copy_) out.insert(c);
  return out;
}

int CompositeAutomorphism::apply_copy(int c) const {
  auto it = copy_perm_.find(c);
  if (it != copy_perm_.end()) return it->second;
  if (per_copy_.count(c) || tail_ == Tail::Identity) return c;
  // Identity-2-cycles tail: pair consecutive undescribed copies.
  std::set<int> desc = described();
  if (desc.count(c)) return c;  // twisted fixed copy
  long idx = c;
  for (int d : desc) {
    if (d < c) --idx;
    else break;
  }
  // Partner is the neighboring free copy (next when idx even, previous
  // otherwise).
  int step = (idx % 2 == 0) ? 1 : -1;
  int partner = c + step;
  while (desc.count(partner)) partner += step;
  if (partner < 0) throw InvariantError("tail pairing underflow");
  return partner;
}

int CompositeAutomorphism::apply_element(int c, int e) const {
  auto it = per_copy_.find(c);
  if (it == per_copy_.end()) return e;
  auto jt = it->second.find(e);
  return jt == it->second.end() ? e : jt->second;
}

VertexMap CompositeAutomorphism::materialize() const {
  if (!copies_ || !copy_size_)
    throw InputError("materialize requires finite copies and copy size");
  const int m = *copies_, n = *copy_size_;
  std::map<int, int> out;
  for (int c = 0; c < m; ++c)
    for (int e = 0; e < n; ++e)
      out[c * n + e] = apply_copy(c) * n + apply_element(c, e);
  return VertexMap(std::move(out));
}

CycleDecomposition cycle_decompose(const CompositeAutomorphism& phi) {
  CycleDecomposition out;
  out.tail = phi.tail();
  std::set<int> desc = phi.described();
  std::set<int> seen;
  for (int c : desc) {
    if (seen.count(c)) continue;
    std::vector<int> cyc;
    int d = c;
    do {
      cyc.push_back(d);
      seen.insert(d);
      d = phi.apply_copy(d);
    } while (d != c);
    out.cycles.push_back(std::move(cyc));
  }
  if (phi.copies()) {
    out.tail_count = Count{false, *phi.copies() - static_cast<long>(desc.size())};
    if (out.tail_count.value < 0)
      throw InvariantError("described copies exceed the copy count");
  } else {
    out.tail_count = Count::inf();
  }
  return out;
}

TwistType twist_type(const CompositeAutomorphism& phi, const std::vector<int>& cycle) {
  if (cycle.empty())
    throw InputError("no twist type: infinite cycles carry none");
  // Return map around the cycle starting from its least copy.
  size_t start = 0;
  for (size_t i = 1; i < cycle.size(); ++i)
    if (cycle[i] < cycle[start]) start = i;
  Perm ret;
  for (size_t i = 0; i < cycle.size(); ++i) {
    int c = cycle[(start + i) % cycle.size()];
    Perm step;
    auto it = phi.per_copy().find(c);
    if (it != phi.per_copy().end()) step = it->second;
    ret = compose_perms(step, ret);
  }
  TwistType t;
  t.lengths = support_cycle_lengths(ret);
  if (phi.copy_size()) {
    long moved = 0;
    for (int len : t.lengths) moved += len;
    for (long i = moved; i < *phi.copy_size(); ++i) t.lengths.push_back(1);
  }
  return t;
}

CycleInvariant invariant(const CompositeAutomorphism& phi) {
  CycleInvariant inv;
  inv.infinite_cycles = Count{false, 0};
  CycleDecomposition dec = cycle_decompose(phi);
  for (const auto& cyc : dec.cycles) {
    auto key = std::make_pair(static_cast<int>(cyc.size()), twist_type(phi, cyc));
    inv.finite_cycles[key] += 1;
  }
  // Tail contribution.
  TwistType id = identity_twist(phi.copy_size());
  if (dec.tail_count.infinite) {
    int k = (phi.tail() == Tail::IdentityTwoCycles) ? 2 : 1;
    inv.finite_cycles[{k, id}].make_infinite();
  } else if (dec.tail_count.value > 0) {
    inv.finite_cycles[{1, id}] += dec.tail_count.value;
  }
  for (auto& [key, count] : inv.finite_cycles) inv.realized.insert(key.second);
  return inv;
}

bool decide_conjugacy(const CompositeAutomorphism& phi,
                      const CompositeAutomorphism& psi) {
  if (phi.copies() != psi.copies() || phi.copy_size() != psi.copy_size())
    throw InputError("conjugacy decision requires equal (m, n) signatures");
  return invariant(phi) == invariant(psi);
}

namespace {

// Minimal order-preserving bijection between the complements of two equal-size
// exclusion sets, as a support permutation (identity wherever possible).
// Within a finite carrier the complements are taken inside [0, bound);
// without a bound they are cofinite and the result is eventually the
// identity.
Perm order_iso_outside(const std::set<int>& from, const std::set<int>& to,
                       std::optional<int> bound) {
  if (from.size() != to.size())
    throw InvariantError("complement order isomorphism needs equal exclusion counts");
  int window = bound ? *bound : 0;
  if (!bound) {
    for (int v : from) window = std::max(window, v + 1);
    for (int v : to) window = std::max(window, v + 1);
  }
  std::vector<int> a, b;
  for (int v = 0; v < window; ++v) {
    if (!from.count(v)) a.push_back(v);
    if (!to.count(v)) b.push_back(v);
  }
  if (a.size() != b.size())
    throw InvariantError("complement order isomorphism misaligned");
  Perm out;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) out[a[i]] = b[i];
  return out;
}

// A bijection sigma with sigma o alpha = beta o sigma for two support
// permutations of equal cycle type; pairs cycles by (length desc, least
// element) and maps the complements order-preservingly.
Perm conjugating_perm(const Perm& alpha, const Perm& beta, std::optional<int> bound) {
  auto cycles_sorted = [](const Perm& p) {
    auto cycles = support_cycles(p);
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const std::vector<int>& x, const std::vector<int>& y) {
                       if (x.size() != y.size()) return x.size() > y.size();
                       return x.front() < y.front();
                     });
    return cycles;
  };
  auto ca = cycles_sorted(alpha), cb = cycles_sorted(beta);
  if (ca.size() != cb.size())
    throw InvariantError("conjugating permutation requires equal cycle types");
  Perm sigma;
  std::set<int> from, to;
  for (size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].size() != cb[i].size())
      throw InvariantError("conjugating permutation requires equal cycle types");
    for (size_t j = 0; j < ca[i].size(); ++j) {
      sigma[ca[i][j]] = cb[i][j];
      from.insert(ca[i][j]);
      to.insert(cb[i][j]);
    }
  }
  for (auto& [k, v] : order_iso_outside(from, to, bound)) sigma[k] = v;
  // Drop accidental self-maps for canonical support form.
  for (auto it = sigma.begin(); it != sigma.end();)
    it = (it->first == it->second) ? sigma.erase(it) : std::next(it);
  return sigma;
}

Perm per_copy_of(const CompositeAutomorphism& phi, int c) {
  auto it = phi.per_copy().find(c);
  return it == phi.per_copy().end() ? Perm{} : it->second;
}

}  // namespace

CompositeAutomorphism build_conjugator_composite(const CompositeAutomorphism& phi,
                                                 const CompositeAutomorphism& psi) {
  if (!decide_conjugacy(phi, psi))
    throw InputError("conjugator construction requires equal invariants");

  CycleDecomposition dphi = cycle_decompose(phi), dpsi = cycle_decompose(psi);
  // Group cycles by (length, twist) and pair the classes in lexicographic
  // order; within a class, cycles are already in least-copy order.
  std::map<std::pair<int, TwistType>, std::vector<std::vector<int>>> by_phi, by_psi;
  for (auto& cyc : dphi.cycles)
    by_phi[{static_cast<int>(cyc.size()), twist_type(phi, cyc)}].push_back(cyc);
  for (auto& cyc : dpsi.cycles)
    by_psi[{static_cast<int>(cyc.size()), twist_type(psi, cyc)}].push_back(cyc);

  Perm delta_copy;
  std::map<int, Perm> delta_maps;
  std::set<int> used_from, used_to;

  for (auto& [key, ycycles] : by_phi) {
    auto it = by_psi.find(key);
    if (it == by_psi.end() || it->second.size() != ycycles.size())
      throw InvariantError("cycle classes misaligned despite equal invariants");
    for (size_t idx = 0; idx < ycycles.size(); ++idx) {
      // Rotate both cycles to start at their least copy.
      auto rotate_least = [](std::vector<int> cyc) {
        size_t s = 0;
        for (size_t i = 1; i < cyc.size(); ++i)
          if (cyc[i] < cyc[s]) s = i;
        std::rotate(cyc.begin(), cyc.begin() + static_cast<long>(s), cyc.end());
        return cyc;
      };
      std::vector<int> y = rotate_least(ycycles[idx]);
      std::vector<int> z = rotate_least(it->second[idx]);
      const size_t k = y.size();
      // Return maps at the cycle base points.
      auto return_map = [](const CompositeAutomorphism& f, const std::vector<int>& cyc) {
        Perm ret;
        for (int c : cyc) ret = compose_perms(per_copy_of(f, c), ret);
        return ret;
      };
      Perm alpha = return_map(phi, y), beta = return_map(psi, z);
      Perm u = conjugating_perm(alpha, beta, phi.copy_size());
      for (size_t i = 0; i < k; ++i) {
        delta_copy[y[i]] = z[i];
        used_from.insert(y[i]);
        used_to.insert(z[i]);
        if (!u.empty()) delta_maps[y[i]] = u;
        if (i + 1 < k) {
          // u_{i+1} = psi_{z_i} o u_i o phi_{y_i}^{-1}
          u = compose_perms(per_copy_of(psi, z[i]),
                            compose_perms(u, invert_perm(per_copy_of(phi, y[i]))));
        }
      }
    }
  }

  // Remaining copies map order-preservingly; under the identity-2-cycles
  // tail this sends the i-th undescribed copy of phi to the i-th of psi,
  // which matches the positional pairing on both sides.
  for (auto& [k, v] : order_iso_outside(used_from, used_to, phi.copies()))
    delta_copy[k] = v;

  CompositeAutomorphism delta(phi.copies(), phi.copy_size(), std::move(delta_copy),
                              std::move(delta_maps), Tail::Identity);
  if (!composite_commutes(delta, phi, psi))
    throw InvariantError("constructed conjugator failed verification");
  return delta;
}

bool composite_commutes(const CompositeAutomorphism& delta,
                        const CompositeAutomorphism& phi,
                        const CompositeAutomorphism& psi) {
  if (phi.copies() != psi.copies() || phi.copy_size() != psi.copy_size() ||
      delta.copies() != phi.copies() || delta.copy_size() != phi.copy_size())
    return false;
  if (phi.tail() != psi.tail()) return false;

  int copy_window, elem_window;
  if (phi.copies()) {
    copy_window = *phi.copies();
  } else {
    int hi = 0;
    for (const auto* f : {&delta, &phi, &psi})
      for (int c : f->described()) hi = std::max(hi, c + 1);
    copy_window = hi + 4;
    // Beyond the window: delta must act as the identity and the undescribed
    // prefixes must align, which pins the tail pairings together.
    if (delta.tail() != Tail::Identity) return false;
    auto free_below = [&](const CompositeAutomorphism& f) {
      int cnt = 0;
      auto desc = f.described();
      for (int c = 0; c < copy_window; ++c)
        if (!desc.count(c)) ++cnt;
      return cnt;
    };
    if (free_below(phi) != free_below(psi)) return false;
  }
  if (phi.copy_size()) {
    elem_window = *phi.copy_size();
  } else {
    int hi = 0;
    for (const auto* f : {&delta, &phi, &psi})
      for (auto& [c, p] : f->per_copy())
        for (auto& [e, v] : p) hi = std::max({hi, e + 1, v + 1});
    elem_window = hi + 2;
  }
  for (int c = 0; c < copy_window; ++c) {
    if (delta.apply_copy(phi.apply_copy(c)) != psi.apply_copy(delta.apply_copy(c)))
      return false;
    for (int e = 0; e < elem_window; ++e) {
      int lhs = delta.apply_element(phi.apply_copy(c), phi.apply_element(c, e));
      int rhs = psi.apply_element(delta.apply_copy(c), delta.apply_element(c, e));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::set<TwistType> EsetCode::finite_twist_set() const {
  std::set<TwistType> out;
  for (const auto& t : tuples)
    if (!t.count.infinite) out.insert(t.twist);
  return out;
}

EsetCode encode_eset(const CompositeAutomorphism& phi) {
  if (phi.copies() || phi.copy_size())
    throw InputError("E_set coding lives on the unbounded-by-unbounded signature");
  CycleInvariant inv = invariant(phi);
  EsetCode code;
  for (auto& [key, count] : inv.finite_cycles)
    code.tuples.insert(EsetTuple{key.second, key.first, count, inv.infinite_cycles});
  return code;
}

CompositeAutomorphism decode_eset(const std::vector<TwistType>& enumeration) {
  std::vector<TwistType> twists;
  std::set<TwistType> seen;
  for (const auto& raw : enumeration) {
    TwistType t = raw;
    if (t.rotation != -1)
      throw InputError("rotation-tagged twists do not arise in K_infinity");
    if (t.infinite_orbits != 0)
      throw InputError("infinite twist orbits are not finitely describable");
    // The cofinite fixed part is implicit on an infinite carrier.
    std::erase(t.lengths, 1);
    std::sort(t.lengths.rbegin(), t.lengths.rend());
    for (int len : t.lengths)
      if (len < 2) throw InputError("twist cycle lengths must be positive");
    if (seen.insert(t).second) twists.push_back(t);
  }
  Perm copy_perm;
  std::map<int, Perm> per_copy;
  for (size_t i = 0; i < twists.size(); ++i) {
    int a = static_cast<int>(2 * i), b = a + 1;
    copy_perm[a] = b;
    copy_perm[b] = a;
    Perm p;
    int at = 0;
    for (int len : twists[i].lengths) {
      for (int j = 0; j < len; ++j) p[at + j] = at + (j + 1) % len;
      at += len;
    }
    if (!p.empty()) per_copy[a] = std::move(p);
  }
  return CompositeAutomorphism(std::nullopt, std::nullopt, std::move(copy_perm),
                               std::move(per_copy), Tail::IdentityTwoCycles);
}

namespace {

int rotation_of(const Perm& p) {
  static const Perm rot1{{0, 1}, {1, 2}, {2, 0}};
  static const Perm rot2{{0, 2}, {1, 0}, {2, 1}};
  if (p.empty()) return 0;
  if (p == rot1) return 1;
  if (p == rot2) return 2;
  return -1;
}

}  // namespace

CycleInvariant c3_composite_invariant(const CompositeAutomorphism& phi) {
  const bool inf_c3 = !phi.copies() && phi.copy_size() == std::optional<int>(3);
  const bool c3_inf = phi.copies() == std::optional<int>(3) && !phi.copy_size();
  if (!inf_c3 && !c3_inf)
    throw InputError("not a C3 composite signature");

  if (inf_c3) {
    // infinity * C3: every per-copy map must be a rotation of the directed
    // triangle; the twist of a cycle is the composite rotation.
    for (auto& [c, p] : phi.per_copy())
      if (rotation_of(p) < 0)
        throw InputError("per-copy map on copy " + std::to_string(c) +
                         " is not a rotation of C3");
    CycleInvariant inv;
    inv.infinite_cycles = Count{false, 0};
    CycleDecomposition dec = cycle_decompose(phi);
    auto rot_twist = [](int j) {
      TwistType t;
      t.lengths = (j == 0) ? std::vector<int>{1, 1, 1} : std::vector<int>{3};
      t.rotation = j;
      return t;
    };
    for (const auto& cyc : dec.cycles) {
      int j = 0;
      for (int c : cyc) j = (j + rotation_of(per_copy_of(phi, c))) % 3;
      inv.finite_cycles[{static_cast<int>(cyc.size()), rot_twist(j)}] += 1;
    }
    if (dec.tail_count.infinite)
      inv.finite_cycles[{phi.tail() == Tail::IdentityTwoCycles ? 2 : 1, rot_twist(0)}]
          .make_infinite();
    for (auto& [key, count] : inv.finite_cycles) inv.realized.insert(key.second);
    return inv;
  }

  // C3[infinity]: the action on the three independent classes must be a
  // rotation; twists are S_infinity classes as usual.
  Perm action = phi.copy_perm();
  int rot = rotation_of(action);
  if (rot < 0)
    throw InputError("class action is not a rotation of C3");
  CycleInvariant inv = invariant(phi);
  inv.class_rotation = rot;
  return inv;
}

FiniteStructure complete_graph(int n) {
  if (n < 0) throw InputError("negative clique size");
  std::vector<int> dom(static_cast<size_t>(n));
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    dom[static_cast<size_t>(i)] = i;
    for (int j = i + 1; j < n; ++j) edges.insert({i, j});
  }
  return FiniteStructure(Kind::Graph, std::move(dom), edges);
}

FiniteStructure disjoint_copies(const FiniteStructure& g, int k) {
  if (k < 1) throw InputError("copy count must be positive");
  const int m = g.size();
  std::vector<int> dom;
  std::set<std::pair<int, int>> edges;
  std::map<int, int> pos;
  for (int i = 0; i < m; ++i) pos[g.domain()[i]] = i;
  for (int c = 0; c < k; ++c) {
    for (int i = 0; i < m; ++i) dom.push_back(c * m + i);
    for (auto& [u, v] : g.edges()) edges.insert({c * m + pos[u], c * m + pos[v]});
  }
  return FiniteStructure(g.kind() == Kind::Graph ? Kind::Graph : Kind::Digraph,
                         std::move(dom), edges);
}

FiniteStructure blowup_structure(const FiniteStructure& g, int k) {
  if (k < 1) throw InputError("class size must be positive");
  const int m = g.size();
  std::vector<int> dom;
  std::set<std::pair<int, int>> edges;
  std::map<int, int> pos;
  for (int i = 0; i < m; ++i) pos[g.domain()[i]] = i;
  for (int i = 0; i < m; ++i)
    for (int s = 0; s < k; ++s) dom.push_back(i * k + s);
  for (auto& [u, v] : g.edges())
    for (int s = 0; s < k; ++s)
      for (int t2 = 0; t2 < k; ++t2) edges.insert({pos[u] * k + s, pos[v] * k + t2});
  return FiniteStructure(Kind::Digraph, std::move(dom), edges);
}

StructureAutomorphism direct_sum_id(const FiniteStructure& g, const VertexMap& phi,
                                    int k) {
  if (!verify_automorphism(g, phi))
    throw InputError("direct_sum_id requires an automorphism of G");
  // Weak connectivity.
  const int m = g.size();
  if (m > 0) {
    std::set<int> seen{g.domain()[0]};
    std::vector<int> stack{g.domain()[0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.domain())
        if (!seen.count(w) && g.adjacent(v, w)) {
          seen.insert(w);
          stack.push_back(w);
        }
    }
    if (static_cast<int>(seen.size()) != m)
      throw InputError("direct_sum_id requires a connected structure");
  }
  FiniteStructure sum = disjoint_copies(g, k);
  std::map<int, int> pos;
  for (int i = 0; i < m; ++i) pos[g.domain()[i]] = i;
  std::map<int, int> map;
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < m; ++i)
      map[c * m + i] = (c == 0) ? pos[phi(g.domain()[i])] : c * m + i;
  VertexMap out(std::move(map));
  if (!verify_automorphism(sum, out))
    throw InvariantError("direct sum map is not an automorphism");
  return {std::move(sum), std::move(out)};
}

StructureAutomorphism blowup(const FiniteStructure& g, const VertexMap& phi, int k) {
  if (g.kind() != Kind::Tournament) throw InputError("blowup requires a tournament");
  if (!verify_automorphism(g, phi))
    throw InputError("blowup requires an automorphism of G");
  FiniteStructure blown = blowup_structure(g, k);
  const int m = g.size();
  std::map<int, int> pos;
  for (int i = 0; i < m; ++i) pos[g.domain()[i]] = i;
  std::map<int, int> map;
  for (int i = 0; i < m; ++i)
    for (int s = 0; s < k; ++s) map[i * k + s] = pos[phi(g.domain()[i])] * k + s;
  VertexMap out(std::move(map));
  if (!verify_automorphism(blown, out))
    throw InvariantError("blowup map is not an automorphism");
  return {std::move(blown), std::move(out)};
}

std::vector<CompositeAutomorphism> all_composite_automorphisms(int m, int n) {
  if (m < 1 || n < 1) throw InputError("signature must be positive");
  auto all_perms = [](int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> p(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) p[static_cast<size_t>(i)] = i;
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  };
  auto to_support = [](const std::vector<int>& p) {
    Perm out;
    for (size_t i = 0; i < p.size(); ++i)
      if (static_cast<int>(i) != p[i]) out[static_cast<int>(i)] = p[i];
    return out;
  };
  auto copy_perms = all_perms(m);
  auto elem_perms = all_perms(n);
  std::vector<CompositeAutomorphism> out;
  std::vector<size_t> odo(static_cast<size_t>(m), 0);
  for (const auto& cp : copy_perms) {
    std::fill(odo.begin(), odo.end(), 0);
    while (true) {
      std::map<int, Perm> maps;
      for (int c = 0; c < m; ++c) {
        Perm p = to_support(elem_perms[odo[static_cast<size_t>(c)]]);
        if (!p.empty()) maps[c] = std::move(p);
      }
      out.emplace_back(m, n, to_support(cp), std::move(maps));
      size_t at = 0;
      while (at < odo.size() && ++odo[at] == elem_perms.size()) odo[at++] = 0;
      if (at == odo.size()) break;
    }
  }
  return out;
}

}  // namespace conjforge::composite
