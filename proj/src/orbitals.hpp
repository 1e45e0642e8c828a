#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pl_map.hpp"
#include "rational.hpp"
#include "structure.hpp"

namespace conjforge::qorder {

enum class RegionType { Fixed, Up, Down };

// One region of an orbital decomposition. Fixed regions are closed
// intervals (possibly a single point, possibly unbounded); bump regions are
// open intervals. An absent endpoint stands for -inf / +inf.
struct Region {
  std::optional<Rat> lo, hi;
  RegionType type = RegionType::Fixed;

  bool singleton() const { return lo && hi && *lo == *hi; }
  bool unbounded() const { return !lo || !hi; }
  // A fixed region that is more than one point (including unbounded ones).
  bool has_interior() const { return type == RegionType::Fixed && !singleton(); }

  bool operator==(const Region& o) const = default;
};

// The conjugacy invariant of a PL automorphism: the ordered regions tile the
// line, alternating between maximal fixed sets and maximal moving intervals.
struct OrbitalDecomposition {
  std::vector<Region> regions;

  std::vector<RegionType> type_sequence() const;
  bool operator==(const OrbitalDecomposition& o) const = default;
};

// Order-preserving embedding of a finite linear order into Q with image
// 0,1,...,|L|-1. `order` lists the source vertices from least to greatest.
struct PerfectEmbedding {
  FiniteStructure source;
  std::vector<int> order;
  std::vector<Rat> image;
};

PerfectEmbedding perfect_embed(const FiniteStructure& l);

// The reduction L -> phi_L: fixes exactly {0,...,|L|-1} and is an up-bump on
// every complementary interval. For empty L the result is translation by 1.
PLAutomorphism build_phi_l(const FiniteStructure& l);

// Exact decomposition computed piecewise from the knots.
OrbitalDecomposition classify_orbitals(const PLAutomorphism& phi);

// Inverse of build_phi_l on its image: the linear order of the isolated
// fixed points. Throws InputError if some fixed region has interior.
FiniteStructure recover_order(const PLAutomorphism& phi);

// Positional matching of two decompositions. Succeeds iff the type
// sequences agree, the end regions agree in unboundedness, and paired fixed
// regions are both singletons or both have interior.
struct OrbitalMatching {
  std::vector<std::pair<int, int>> pairs;
};
std::optional<OrbitalMatching> orbital_match(const OrbitalDecomposition& a,
                                             const OrbitalDecomposition& b);

// Evaluable conjugator delta with delta o phi = psi o delta, built from a
// successful orbital matching. On each matched bump the fundamental domain
// [x0, phi(x0)) maps affinely onto [y0, psi(y0)) and extends along orbits;
// matched fixed regions map affinely endpoint to endpoint.
class Conjugator {
public:
  // budget <= 0 uses the process-wide iteration limit.
  Conjugator(PLAutomorphism phi, PLAutomorphism psi, const OrbitalMatching& m,
             long budget = 0);

  Rat operator()(const Rat& q) const;

  const OrbitalMatching& matching() const { return matching_; }
  const PLAutomorphism& phi() const { return phi_; }
  const PLAutomorphism& psi() const { return psi_; }

  // Base points chosen for the i-th matched region (bumps only).
  struct Chart {
    bool is_bump = false;
    Rat x0, y0;  // bump base points
  };
  const std::vector<Chart>& charts() const { return charts_; }

private:
  PLAutomorphism phi_, psi_, phi_inv_, psi_inv_;
  OrbitalDecomposition dec_phi_, dec_psi_;
  OrbitalMatching matching_;
  std::vector<Chart> charts_;
  long budget_;

  int region_index(const Rat& q) const;
};

Conjugator build_conjugator(const PLAutomorphism& phi, const PLAutomorphism& psi,
                            const OrbitalMatching& m, long budget = 0);

}  // namespace conjforge::qorder
