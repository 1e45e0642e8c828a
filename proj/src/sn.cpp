#include "sn.hpp"

#include <algorithm>
#include <random>

#include "errors.hpp"
#include "orbitals.hpp"
#include "pl_map.hpp"

namespace conjforge::circular {

SnRegistry::SnRegistry(int n) : n_(n) {
  if (n < 2) throw InputError("S(n) requires n >= 2");
}

bool SnRegistry::registered(const Rat& theta) const {
  return std::binary_search(points_.begin(), points_.end(), theta);
}

void SnRegistry::add(const Rat& theta) {
  if (!(Rat(0) < theta && theta < Rat(1)))
    throw InputError("circle point theta must lie in (0,1)");
  if ((theta * Rat(n_)).is_integer())
    throw InvariantError("theta " + theta.str() + " sits on an arc boundary");
  Rat u = unroll(theta);
  for (const Rat& p : points_) {
    if (p == theta) throw InvariantError("duplicate registry point " + theta.str());
    if (unroll(p) == u)
      throw InvariantError("registry points " + p.str() + " and " + theta.str() +
                           " coincide modulo 1/n");
  }
  points_.insert(std::upper_bound(points_.begin(), points_.end(), theta), theta);
}

int SnRegistry::relate(const Rat& x, const Rat& y) const {
  if (x == y) throw InputError("relate requires distinct points");
  Rat d = (x - y).frac();
  Rat scaled = d * Rat(n_);
  if (scaled.is_integer())
    throw InvariantError("angular difference " + d.str() + " lies on an arc boundary");
  return static_cast<int>(scaled.floor_long());
}

bool SnRegistry::local_order_edge(const Rat& x, const Rat& y) const {
  if (n_ != 2) throw InputError("the local order requires n = 2");
  return relate(x, y) == 0 || relate(y, x) == 1;
}

bool SnRegistry::s3_digraph_edge(const Rat& x, const Rat& y) const {
  if (n_ != 3) throw InputError("the S(3) digraph requires n = 3");
  return relate(x, y) == 0 || relate(y, x) == 2;
}

Rat SnRegistry::unroll(const Rat& theta) const {
  Rat scaled = theta * Rat(n_);
  if (scaled.is_integer())
    throw InvariantError("theta " + theta.str() + " sits on an arc boundary");
  long k = scaled.floor_long();
  return theta - Rat(k, 1) / Rat(n_);
}

int SnRegistry::arc_of(const Rat& theta) const {
  Rat scaled = theta * Rat(n_);
  if (scaled.is_integer())
    throw InvariantError("theta " + theta.str() + " sits on an arc boundary");
  return static_cast<int>(scaled.floor_long());
}

SnAutomorphism::SnAutomorphism(SnRegistry reg, std::map<Rat, Rat> assignment)
    : reg_(std::move(reg)), assignment_(std::move(assignment)) {
  std::set<Rat> values;
  for (auto& [x, y] : assignment_) {
    if (!reg_.registered(x) || !reg_.registered(y))
      throw InputError("assignment mentions an unregistered point");
    if (!values.insert(y).second)
      throw InputError("assignment is not injective at " + y.str());
  }
}

Rat SnAutomorphism::apply(const Rat& theta) const {
  auto it = assignment_.find(theta);
  if (it == assignment_.end())
    throw InputError("automorphism sample undefined at " + theta.str());
  return it->second;
}

bool SnAutomorphism::fixes(const Rat& theta) const {
  auto it = assignment_.find(theta);
  return it != assignment_.end() && it->second == theta;
}

namespace {

// The unrolled automorphism psi_L on (0, 1/n): identity outside, fixes every
// u_i, down-bumps on the two outer intervals, up-bumps between consecutive
// fixed points.
qorder::PLAutomorphism build_unrolled_map(const std::vector<Rat>& fixed, const Rat& arc) {
  std::vector<qorder::PLAutomorphism::Knot> ks;
  ks.push_back({Rat(0), Rat(0)});
  auto down_knot = [&](const Rat& a, const Rat& b) {
    ks.push_back({(a + b) / 2, a + (b - a) / 4});
  };
  auto up_knot = [&](const Rat& a, const Rat& b) {
    ks.push_back({(a + b) / 2, a + (b - a) * Rat(3, 4)});
  };
  down_knot(Rat(0), fixed.front());
  ks.push_back({fixed.front(), fixed.front()});
  for (size_t i = 0; i + 1 < fixed.size(); ++i) {
    up_knot(fixed[i], fixed[i + 1]);
    ks.push_back({fixed[i + 1], fixed[i + 1]});
  }
  down_knot(fixed.back(), arc);
  ks.push_back({arc, arc});
  return qorder::PLAutomorphism(std::move(ks));
}

}  // namespace

SnAutomorphism build_phi_l_sn(const FiniteStructure& l, int n, int orbit_depth) {
  if (l.kind() != Kind::LinearOrder)
    throw InputError("build_phi_l_sn requires a linear order");
  if (n < 2) throw InputError("S(n) requires n >= 2");
  if (orbit_depth < 1) throw InputError("orbit depth must be positive");

  const Rat arc = Rat(1) / Rat(n);
  // Adjoin endpoints: m = |L| + 2 fixed coordinates, the minimum at 1/(4n)
  // and the maximum at 3/(4n), the embedded L spread uniformly between.
  const int m = l.size() + 2;
  std::vector<Rat> fixed;
  fixed.reserve(static_cast<size_t>(m));
  Rat lo = arc / 4, span = arc / 2;
  for (int i = 0; i < m; ++i)
    fixed.push_back(lo + span * Rat(i) / Rat(m - 1));

  qorder::PLAutomorphism psi = build_unrolled_map(fixed, arc);
  qorder::PLAutomorphism psi_inv = psi.inverse();

  // Complementary intervals of the fixed set within (0, 1/n).
  std::vector<std::pair<Rat, Rat>> intervals;
  intervals.emplace_back(Rat(0), fixed.front());
  for (size_t i = 0; i + 1 < fixed.size(); ++i)
    intervals.emplace_back(fixed[i], fixed[i + 1]);
  intervals.emplace_back(fixed.back(), arc);

  const int max_attempts = 8;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    try {
      SnRegistry reg(n);
      std::map<Rat, Rat> assignment;
      for (const Rat& u : fixed) {
        reg.add(u);
        assignment.emplace(u, u);
      }
      // One seed per arc, rotating through the complementary intervals, plus
      // one per interval left unseeded, so every arc and every interval
      // carries an orbit. Seed positions come from a deterministically keyed
      // generator: fixed fraction families interact with the rational bump
      // dynamics (the piece slopes are 3/2 and 1/2), so one seed's orbit can
      // hit another seed exactly; wide random dyadic numerators make such
      // collisions freak accidents, and the attempt loop absorbs those.
      std::mt19937_64 seeder(0x536e5265ull ^ (static_cast<std::uint64_t>(n) << 32) ^
                             (static_cast<std::uint64_t>(m) << 16) ^
                             static_cast<std::uint64_t>(attempt));
      const int icount = static_cast<int>(intervals.size());
      std::vector<std::pair<int, int>> placements;  // (arc, interval)
      for (int k = 0; k < n; ++k) placements.emplace_back(k, k % icount);
      for (int i = n; i < icount; ++i) placements.emplace_back(i % n, i);
      for (auto& [k, i] : placements) {
        Rat offset = Rat(k) * arc;
        {
          const auto& [a, b] = intervals[static_cast<size_t>(i)];
          long numerator = 2 * static_cast<long>(seeder() % (1l << 19)) + 1;
          Rat frac = Rat(1, 4) + Rat(numerator, 1l << 21);  // inside (1/4, 3/4)
          Rat seed = a + (b - a) * frac;
          // Materialize the two-sided orbit; the forward frontier has no
          // registered image and stays outside the assignment.
          std::vector<Rat> orbit;
          Rat back = seed;
          for (int j = 0; j < orbit_depth; ++j) back = psi_inv(back);
          Rat cur = back;
          for (int j = -orbit_depth; j <= orbit_depth; ++j) {
            orbit.push_back(cur);
            cur = psi(cur);
          }
          for (const Rat& u : orbit) reg.add(offset + u);
          for (size_t j = 0; j + 1 < orbit.size(); ++j)
            assignment.emplace(offset + orbit[j], offset + orbit[j + 1]);
        }
      }
      SnAutomorphism phi(std::move(reg), std::move(assignment));
      // Exhaustive preservation check over the sampled registry.
      std::vector<Rat> dom;
      for (auto& [x, y] : phi.assignment()) dom.push_back(x);
      for (const Rat& x : dom)
        for (const Rat& y : dom) {
          if (x == y) continue;
          if (phi.registry().relate(x, y) !=
              phi.registry().relate(phi.apply(x), phi.apply(y)))
            throw InvariantError("sampled automorphism fails to preserve relate at (" +
                                 x.str() + "," + y.str() + ")");
        }
      return phi;
    } catch (const InvariantError&) {
      if (attempt + 1 == max_attempts)
        throw BudgetError("registry sampling failed after " +
                          std::to_string(max_attempts) + " perturbed attempts");
    }
  }
  throw BudgetError("registry sampling failed");  // unreachable
}

FiniteStructure recover_order_sn(const SnAutomorphism& phi) {
  const SnRegistry& reg = phi.registry();
  std::vector<Rat> fixed_unrolled;
  for (auto& [x, y] : phi.assignment())
    if (x == y) fixed_unrolled.push_back(reg.unroll(x));
  std::sort(fixed_unrolled.begin(), fixed_unrolled.end());
  if (fixed_unrolled.empty())
    throw InputError("malformed automorphism: no fixed points");
  const size_t m = fixed_unrolled.size();

  // Bump direction evidence per complementary interval, indexed 0..m with
  // interval i spanning (w_{i-1}, w_i) and the outer two unbounded within
  // the unrolled arc.
  std::vector<int> direction(m + 1, 0);  // 0 unknown, +1 up, -1 down
  for (auto& [x, y] : phi.assignment()) {
    if (x == y) continue;
    Rat u = reg.unroll(x), v = reg.unroll(y);
    size_t idx = static_cast<size_t>(
        std::upper_bound(fixed_unrolled.begin(), fixed_unrolled.end(), u) -
        fixed_unrolled.begin());
    int s = v > u ? 1 : -1;
    if (direction[idx] != 0 && direction[idx] != s)
      throw InputError("malformed automorphism: inconsistent bump direction");
    direction[idx] = s;
  }
  for (int d : direction)
    if (d == 0) throw InputError("malformed automorphism: interval without samples");

  std::vector<size_t> special;
  for (size_t i = 0; i < m; ++i)
    if (direction[i] == -1 || direction[i + 1] == -1) special.push_back(i);
  if (special.size() != 2)
    throw InputError("malformed automorphism: expected exactly two down-bump endpoints, found " +
                     std::to_string(special.size()));

  int between = static_cast<int>(special[1] - special[0]) - 1;
  return FiniteStructure::linear_order(between < 0 ? 0 : between);
}

}  // namespace conjforge::circular
