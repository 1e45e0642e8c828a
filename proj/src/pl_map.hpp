#pragma once

#include <utility>
#include <vector>

#include "rational.hpp"

namespace conjforge::qorder {

// Piecewise-linear order-automorphism of the rationals given by its knot
// list. Between consecutive knots the map interpolates affinely; before the
// first knot it translates by y0-x0 and after the last by yN-xN, so both end
// slopes are 1 and the map is a strictly increasing bijection of Q.
// The knot list is never empty; the identity is knots [(0,0)].
class PLAutomorphism {
public:
  using Knot = std::pair<Rat, Rat>;

  // Validates strictly increasing x- and y-coordinates.
  explicit PLAutomorphism(std::vector<Knot> knots);

  static PLAutomorphism identity() { return PLAutomorphism({{Rat(0), Rat(0)}}); }
  static PLAutomorphism translation(const Rat& t) {
    return PLAutomorphism({{Rat(0), t}});
  }

  const std::vector<Knot>& knots() const { return knots_; }

  Rat operator()(const Rat& q) const;

  PLAutomorphism inverse() const;
  // (*this) o inner, computed exactly; the result's knots are the inner
  // knots together with inner-preimages of the outer knots.
  PLAutomorphism compose_after(const PLAutomorphism& inner) const;

  // Drops knots that carry no information (collinear interior knots,
  // slope-1-consistent end knots). Keeps at least one knot.
  PLAutomorphism normalized() const;

  bool operator==(const PLAutomorphism& o) const { return knots_ == o.knots_; }

private:
  std::vector<Knot> knots_;
};

}  // namespace conjforge::qorder
