#pragma once

#include <map>
#include <vector>

#include "rational.hpp"
#include "structure.hpp"

namespace conjforge::circular {

// Finite sample of the circle structure S(n). Points are rational fractions
// theta of the full turn, kept in (0,1). Registered points never sit on an
// arc boundary (theta*n integral) and have pairwise distinct residues
// theta mod 1/n, so the unrolling map is injective on the registry.
class SnRegistry {
public:
  explicit SnRegistry(int n);

  int n() const { return n_; }
  const std::vector<Rat>& points() const { return points_; }  // sorted
  bool registered(const Rat& theta) const;

  // Validates the registry invariants against every existing point;
  // violations raise InvariantError.
  void add(const Rat& theta);

  // The arc index k with frac(theta_x - theta_y) in (k/n, (k+1)/n).
  // A difference on an arc boundary raises InvariantError. Requires x != y.
  int relate(const Rat& x, const Rat& y) const;

  // The local order O, defined from S(2): x -> y iff x ->_0 y or y ->_1 x.
  bool local_order_edge(const Rat& x, const Rat& y) const;

  // The S(3) digraph: x -> y iff x ->_0 y or y ->_2 x.
  bool s3_digraph_edge(const Rat& x, const Rat& y) const;

  // theta - k/n for the arc index k containing theta; lands in (0, 1/n).
  Rat unroll(const Rat& theta) const;

  int arc_of(const Rat& theta) const;

private:
  int n_;
  std::vector<Rat> points_;
};

// Registry automorphism sample. Because the registry truncates each infinite
// orbit at a finite depth, the point assignment is a bijection between the
// sub-registry with materialized images and its image set; fixed points are
// always in its domain.
class SnAutomorphism {
public:
  SnAutomorphism(SnRegistry reg, std::map<Rat, Rat> assignment);

  const SnRegistry& registry() const { return reg_; }
  const std::map<Rat, Rat>& assignment() const { return assignment_; }

  bool defined(const Rat& theta) const { return assignment_.count(theta) > 0; }
  Rat apply(const Rat& theta) const;
  bool fixes(const Rat& theta) const;

private:
  SnRegistry reg_;
  std::map<Rat, Rat> assignment_;
};

// The reduction L -> phi_L of the S(n) theorem at finite scale. Adjoins a
// minimum and maximum to L, embeds the result in arc 0, builds the unrolled
// PL automorphism with down-bumps outside the image and up-bumps between
// consecutive image points, and populates the registry with orbit samples
// (one seed per arc per complementary interval, each materialized to
// +-orbit_depth). Construction retries with perturbed seeds on a registry
// collision and raises BudgetError when the retry budget is exhausted.
SnAutomorphism build_phi_l_sn(const FiniteStructure& l, int n, int orbit_depth = 8);

// Recovery half of the reduction: locates the two special fixed points
// (endpoints of down-bumps, witnessed by sample motion in unrolled
// coordinates) and returns the linear order of the fixed points strictly
// between them. Raises InputError on malformed input (no fixed points,
// inconsistent bump evidence, or a down-bump endpoint count other than two).
FiniteStructure recover_order_sn(const SnAutomorphism& phi);

}  // namespace conjforge::circular
