#include "rational.hpp"

#include <cctype>
#include <ostream>

#include "errors.hpp"

namespace conjforge {

Rat::Rat(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!digits(s)) throw InputError("malformed rational '" + s + "'");
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits(num) || !digits(den) || den[0] == '-')
      throw InputError("malformed rational '" + s + "'");
    if (mpz_class(den) == 0) throw InputError("rational with zero denominator: '" + s + "'");
  }
  mpq_class v(s);
  v.canonicalize();
  return Rat(std::move(v));
}

std::string Rat::str() const {
  return v_.get_str();  // canonical form already has den > 0 and gcd 1
}

Rat Rat::operator/(const Rat& o) const {
  if (o.sign() == 0) throw InputError("division by zero rational");
  return Rat(mpq_class(v_ / o.v_));
}

Rat Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return Rat(mpq_class(q));
}

long Rat::floor_long() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  if (!q.fits_slong_p()) throw InvariantError("floor out of machine range");
  return q.get_si();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace conjforge
