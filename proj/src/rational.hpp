#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace conjforge {

// Exact rational number. Thin value wrapper over GMP's mpq_class that keeps
// every value canonicalized (reduced, positive denominator) and provides the
// "p/q" string form used by all serialization.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long num) : v_(num) {}  // NOLINT: implicit integer promotion is intended
  Rat(long num, long den);
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Parses "p", "-p", or "p/q" (decimal digits only). Throws InputError.
  static Rat parse(const std::string& s);

  std::string str() const;  // "p" when the denominator is 1, else "p/q"

  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator/(const Rat& o) const;
  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Rat& o) const {
    int c = cmp(v_, o.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  // Largest integer <= *this, as a Rat.
  Rat floor() const;
  // floor() as a machine integer; throws InvariantError when out of range.
  long floor_long() const;
  // Fractional part in [0,1): *this - floor().
  Rat frac() const { return *this - floor(); }

  const mpq_class& raw() const { return v_; }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace conjforge
