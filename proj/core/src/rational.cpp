#include "fibrerank/rational.hpp"

#include "fibrerank/primality.hpp"

namespace fibrerank {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Valuation val_at_unchecked(const Int& x, const Int& p) {
  if (x == 0) return Valuation::inf();
  Int t = x;
  long v = static_cast<long>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t()));
  return Valuation::of(v);
}

Valuation val_at_unchecked(const Rat& x, const Int& p) {
  if (x == 0) return Valuation::inf();
  // Canonical form: at most one of num, den is divisible by p.
  Valuation vn = val_at_unchecked(x.get_num(), p);
  if (vn.v > 0 && !vn.infinite) return vn;
  Valuation vd = val_at_unchecked(x.get_den(), p);
  return Valuation::of(vn.v - vd.v);
}

static void require_prime(const Int& p) {
  if (p < 2 || !is_prime(p)) throw PreconditionError("p = " + p.get_str() + " is not prime");
}

Valuation val_p(const Int& x, const Int& p) {
  require_prime(p);
  return val_at_unchecked(x, p);
}

Valuation val_p(const Rat& x, const Int& p) {
  require_prime(p);
  return val_at_unchecked(x, p);
}

bool is_square(const Int& x) {
  if (x < 0) return false;
  return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

bool is_square(const Rat& x) {
  // Canonical form makes the test structural: both parts must be squares.
  return is_square(x.get_num()) && is_square(x.get_den());
}

Int isqrt(const Int& x) {
  if (x < 0) throw PreconditionError("isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

std::string rat_to_string(const Rat& x) { return x.get_str(); }

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw PreconditionError("malformed rational: " + s);
  if (q.get_den() == 0) throw PreconditionError("rational with zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace fibrerank
