#include "pl_map.hpp"

#include <algorithm>

#include "errors.hpp"

namespace conjforge::qorder {

PLAutomorphism::PLAutomorphism(std::vector<Knot> knots) : knots_(std::move(knots)) {
  if (knots_.empty()) throw InputError("PL map requires at least one knot");
  for (size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i - 1].first < knots_[i].first))
      throw InputError("PL knot x-coordinates must be strictly increasing");
    if (!(knots_[i - 1].second < knots_[i].second))
      throw InputError("PL knot y-coordinates must be strictly increasing");
  }
}

Rat PLAutomorphism::operator()(const Rat& q) const {
  const auto& first = knots_.front();
  if (q <= first.first) return q + (first.second - first.first);
  const auto& last = knots_.back();
  if (q >= last.first) return q + (last.second - last.first);
  // Binary search for the piece containing q.
  size_t lo = 0, hi = knots_.size() - 1;
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (knots_[mid].first <= q)
      lo = mid;
    else
      hi = mid;
  }
  const auto& [xa, ya] = knots_[lo];
  const auto& [xb, yb] = knots_[hi];
  return ya + (q - xa) * (yb - ya) / (xb - xa);
}

PLAutomorphism PLAutomorphism::inverse() const {
  std::vector<Knot> inv;
  inv.reserve(knots_.size());
  for (const auto& [x, y] : knots_) inv.emplace_back(y, x);
  return PLAutomorphism(std::move(inv));
}

PLAutomorphism PLAutomorphism::compose_after(const PLAutomorphism& inner) const {
  std::vector<Rat> xs;
  for (const auto& [x, y] : inner.knots_) xs.push_back(x);
  PLAutomorphism inner_inv = inner.inverse();
  for (const auto& [x, y] : knots_) xs.push_back(inner_inv(x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Knot> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.emplace_back(x, (*this)(inner(x)));
  return PLAutomorphism(std::move(out));
}

PLAutomorphism PLAutomorphism::normalized() const {
  std::vector<Knot> ks = knots_;
  // Interior collinear knots.
  for (size_t i = 1; i + 1 < ks.size();) {
    const auto& [xa, ya] = ks[i - 1];
    const auto& [xb, yb] = ks[i];
    const auto& [xc, yc] = ks[i + 1];
    if ((yb - ya) * (xc - xb) == (yc - yb) * (xb - xa))
      ks.erase(ks.begin() + static_cast<long>(i));
    else
      ++i;
  }
  // Leading knot on a slope-1 continuation of the first segment.
  while (ks.size() > 1) {
    const auto& [xa, ya] = ks[0];
    const auto& [xb, yb] = ks[1];
    if (yb - ya == xb - xa)
      ks.erase(ks.begin());
    else
      break;
  }
  while (ks.size() > 1) {
    const auto& [xa, ya] = ks[ks.size() - 2];
    const auto& [xb, yb] = ks[ks.size() - 1];
    if (yb - ya == xb - xa)
      ks.pop_back();
    else
      break;
  }
  return PLAutomorphism(std::move(ks));
}

}  // namespace conjforge::qorder
