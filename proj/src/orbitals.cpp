#include "orbitals.hpp"

#include <algorithm>

#include "budget.hpp"
#include "errors.hpp"

namespace conjforge::qorder {

std::vector<RegionType> OrbitalDecomposition::type_sequence() const {
  std::vector<RegionType> out;
  out.reserve(regions.size());
  for (const auto& r : regions) out.push_back(r.type);
  return out;
}

PerfectEmbedding perfect_embed(const FiniteStructure& l) {
  if (l.kind() != Kind::LinearOrder)
    throw InputError("perfect_embed requires a linear order");
  std::vector<int> order = l.domain();
  std::sort(order.begin(), order.end(),
            [&](int u, int v) { return l.has_edge(u, v); });
  std::vector<Rat> image;
  image.reserve(order.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) image.emplace_back(i);
  return PerfectEmbedding{l, std::move(order), std::move(image)};
}

PLAutomorphism build_phi_l(const FiniteStructure& l) {
  PerfectEmbedding emb = perfect_embed(l);
  const int m = static_cast<int>(emb.image.size());
  if (m == 0) return PLAutomorphism::translation(Rat(1));
  std::vector<PLAutomorphism::Knot> knots;
  // Left ray: translation by 1 far out, blended to the first fixed point.
  knots.push_back({Rat(-2), Rat(-1)});
  knots.push_back({Rat(0), Rat(0)});
  for (int k = 0; k + 1 < m; ++k) {
    // Bounded up-bump on (k, k+1): interior knot at the midpoint, mapped
    // three quarters of the way up.
    knots.push_back({Rat(2 * k + 1, 2), Rat(4 * k + 3, 4)});
    knots.push_back({Rat(k + 1), Rat(k + 1)});
  }
  // Right ray: one blend knot, then translation by 1.
  knots.push_back({Rat(m), Rat(m + 1)});
  return PLAutomorphism(std::move(knots));
}

namespace {

struct FixedInterval {
  std::optional<Rat> lo, hi;  // absent endpoint = unbounded
};

Rat displacement(const PLAutomorphism& phi, const Rat& q) { return phi(q) - q; }

}  // namespace

OrbitalDecomposition classify_orbitals(const PLAutomorphism& phi) {
  const auto& ks = phi.knots();
  std::vector<FixedInterval> fixed;

  // Left ray.
  if (ks.front().second == ks.front().first)
    fixed.push_back({std::nullopt, ks.front().first});
  // Interior pieces: solve phi(x) = x on each affine segment.
  for (size_t i = 0; i + 1 < ks.size(); ++i) {
    const auto& [xa, ya] = ks[i];
    const auto& [xb, yb] = ks[i + 1];
    Rat dx = xb - xa, dy = yb - ya;
    if (dy == dx) {
      if (ya == xa) fixed.push_back({xa, xb});
    } else {
      // root of (ya + (x-xa)*dy/dx) - x
      Rat root = (ya * dx - xa * dy) / (dx - dy);
      if (xa <= root && root <= xb) fixed.push_back({root, root});
    }
  }
  // Right ray.
  if (ks.back().second == ks.back().first)
    fixed.push_back({ks.back().first, std::nullopt});

  // Merge touching intervals (piece endpoints are produced twice).
  std::vector<FixedInterval> merged;
  for (auto& f : fixed) {
    if (!merged.empty()) {
      auto& last = merged.back();
      bool touches = !last.hi || !f.lo || *f.lo <= *last.hi;
      if (touches) {
        if (last.hi && (!f.hi || *f.hi > *last.hi)) last.hi = f.hi;
        if (!f.hi) last.hi = std::nullopt;
        continue;
      }
    }
    merged.push_back(f);
  }

  OrbitalDecomposition dec;
  auto bump = [&](std::optional<Rat> lo, std::optional<Rat> hi, const Rat& probe) {
    int s = displacement(phi, probe).sign();
    if (s == 0)
      throw InvariantError("probe point unexpectedly fixed at " + probe.str());
    dec.regions.push_back({lo, hi, s > 0 ? RegionType::Up : RegionType::Down});
  };

  if (merged.empty()) {
    bump(std::nullopt, std::nullopt, ks.front().first);
    return dec;
  }
  if (merged.front().lo) bump(std::nullopt, merged.front().lo, *merged.front().lo - 1);
  for (size_t i = 0; i < merged.size(); ++i) {
    dec.regions.push_back({merged[i].lo, merged[i].hi, RegionType::Fixed});
    if (i + 1 < merged.size()) {
      Rat a = *merged[i].hi, b = *merged[i + 1].lo;
      bump(a, b, (a + b) / 2);
    }
  }
  if (merged.back().hi) bump(merged.back().hi, std::nullopt, *merged.back().hi + 1);
  return dec;
}

FiniteStructure recover_order(const PLAutomorphism& phi) {
  OrbitalDecomposition dec = classify_orbitals(phi);
  int count = 0;
  for (const auto& r : dec.regions) {
    if (r.type != RegionType::Fixed) continue;
    if (r.has_interior())
      throw InputError("not in the image of build_phi_l: fixed region with interior");
    ++count;
  }
  return FiniteStructure::linear_order(count);
}

std::optional<OrbitalMatching> orbital_match(const OrbitalDecomposition& a,
                                             const OrbitalDecomposition& b) {
  if (a.regions.size() != b.regions.size()) return std::nullopt;
  OrbitalMatching m;
  for (size_t i = 0; i < a.regions.size(); ++i) {
    const Region& ra = a.regions[i];
    const Region& rb = b.regions[i];
    if (ra.type != rb.type) return std::nullopt;
    if (ra.lo.has_value() != rb.lo.has_value()) return std::nullopt;
    if (ra.hi.has_value() != rb.hi.has_value()) return std::nullopt;
    if (ra.type == RegionType::Fixed && ra.singleton() != rb.singleton())
      return std::nullopt;
    m.pairs.emplace_back(static_cast<int>(i), static_cast<int>(i));
  }
  return m;
}

Conjugator::Conjugator(PLAutomorphism phi, PLAutomorphism psi,
                       const OrbitalMatching& m, long budget)
    : phi_(std::move(phi)),
      psi_(std::move(psi)),
      phi_inv_(phi_.inverse()),
      psi_inv_(psi_.inverse()),
      dec_phi_(classify_orbitals(phi_)),
      dec_psi_(classify_orbitals(psi_)),
      matching_(m),
      budget_(budget > 0 ? budget : budget::iteration_limit()) {
  auto check = orbital_match(dec_phi_, dec_psi_);
  if (!check || check->pairs != matching_.pairs)
    throw InputError("conjugator requires a valid orbital matching");
  charts_.reserve(dec_phi_.regions.size());
  auto base_point = [](const Region& r) -> Rat {
    if (r.lo && r.hi) return (*r.lo + *r.hi) / 2;
    if (r.lo) return *r.lo + 1;   // right ray: fixed endpoint plus one
    if (r.hi) return *r.hi - 1;   // left ray, mirrored
    return Rat(0);                // full line
  };
  for (size_t i = 0; i < dec_phi_.regions.size(); ++i) {
    Chart c;
    if (dec_phi_.regions[i].type != RegionType::Fixed) {
      c.is_bump = true;
      c.x0 = base_point(dec_phi_.regions[i]);
      c.y0 = base_point(dec_psi_.regions[i]);
    }
    charts_.push_back(c);
  }
}

int Conjugator::region_index(const Rat& q) const {
  for (size_t i = 0; i < dec_phi_.regions.size(); ++i) {
    const Region& r = dec_phi_.regions[i];
    if (r.type == RegionType::Fixed) {
      if ((!r.lo || *r.lo <= q) && (!r.hi || q <= *r.hi)) return static_cast<int>(i);
    } else {
      if ((!r.lo || *r.lo < q) && (!r.hi || q < *r.hi)) return static_cast<int>(i);
    }
  }
  throw InvariantError("decomposition does not cover " + q.str());
}

Rat Conjugator::operator()(const Rat& q) const {
  int i = region_index(q);
  const Region& rp = dec_phi_.regions[i];
  const Region& rq = dec_psi_.regions[i];
  if (rp.type == RegionType::Fixed) {
    if (rp.singleton()) return *rq.lo;
    if (rp.lo && rp.hi)
      return *rq.lo + (q - *rp.lo) * (*rq.hi - *rq.lo) / (*rp.hi - *rp.lo);
    if (rp.hi) return q + (*rq.hi - *rp.hi);  // (-inf, hi]
    if (rp.lo) return q + (*rq.lo - *rp.lo);  // [lo, +inf)
    return q;                                 // identity on the whole line
  }
  const Chart& c = charts_[static_cast<size_t>(i)];
  Rat fx0 = phi_(c.x0);
  bool up = fx0 > c.x0;
  Rat lo = up ? c.x0 : fx0;
  Rat hi = up ? fx0 : c.x0;
  Rat slope = (psi_(c.y0) - c.y0) / (fx0 - c.x0);

  Rat cur = q;
  long k = 0, steps = 0;
  while (!(lo <= cur && cur < hi)) {
    if (++steps > budget_)
      throw BudgetError("fundamental domain search exceeded " +
                        std::to_string(budget_) + " steps at q = " + q.str());
    if (cur < lo) {
      cur = up ? phi_(cur) : phi_inv_(cur);
      k += up ? 1 : -1;
    } else {
      cur = up ? phi_inv_(cur) : phi_(cur);
      k += up ? -1 : 1;
    }
  }
  Rat img = c.y0 + (cur - c.x0) * slope;
  while (k > 0) { img = psi_inv_(img); --k; }
  while (k < 0) { img = psi_(img); ++k; }
  return img;
}

Conjugator build_conjugator(const PLAutomorphism& phi, const PLAutomorphism& psi,
                            const OrbitalMatching& m, long budget) {
  return Conjugator(phi, psi, m, budget);
}

}  // namespace conjforge::qorder
