#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "fibrerank/errors.hpp"

namespace fibrerank {

// All arithmetic in the library is exact. GMP supplies the bignum substrate;
// mpq_class values are kept canonical (lowest terms, positive denominator),
// which GMP guarantees for results of arithmetic on canonical inputs.
using Int = mpz_class;
using Rat = mpq_class;

// v_p(x) for x != 0, or the infinite valuation of 0. The infinity is an
// explicit tag, never a large sentinel integer.
struct Valuation {
  bool infinite = false;
  long v = 0;

  static Valuation inf() { return {true, 0}; }
  static Valuation of(long value) { return {false, value}; }

  bool operator==(const Valuation&) const = default;

  // Addition with infinity absorbing (v(xy) = v(x) + v(y)).
  Valuation operator+(const Valuation& o) const {
    if (infinite || o.infinite) return inf();
    return of(v + o.v);
  }

  std::string str() const { return infinite ? "inf" : std::to_string(v); }
};

// Constructs num/den in canonical form. Throws on den == 0.
Rat make_rat(const Int& num, const Int& den);

inline Int num(const Rat& x) { return x.get_num(); }
inline Int den(const Rat& x) { return x.get_den(); }

// p-adic valuation; the prime is validated. The *_at variants skip the
// primality check and exist for hot paths that pre-validated their place.
Valuation val_p(const Int& x, const Int& p);
Valuation val_p(const Rat& x, const Int& p);
Valuation val_at_unchecked(const Int& x, const Int& p);
Valuation val_at_unchecked(const Rat& x, const Int& p);

bool is_square(const Int& x);
bool is_square(const Rat& x);

// Floor square root of a nonnegative integer.
Int isqrt(const Int& x);

// GMP canonical form: "n" when the denominator is 1, else "n/d".
std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

}  // namespace fibrerank
