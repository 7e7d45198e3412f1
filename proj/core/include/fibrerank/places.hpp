#pragma once

#include <variant>

#include "fibrerank/polynomial.hpp"

namespace fibrerank {

// A place of Q (a rational prime) or of Q(t) (a monic irreducible
// polynomial, or the place at infinity). Primality / irreducibility is
// checked at construction; function-field places of degree > 2 are outside
// the supported range and rejected.
class Place {
 public:
  enum class Kind { rational_prime, finite_poly, infinity };

  static Place prime(const Int& p);
  static Place finite_poly(const Poly& pi);
  static Place at_infinity();

  Kind kind() const { return kind_; }
  const Int& prime_value() const;
  const Poly& poly_value() const;
  int degree() const;  // residue degree: 1 for primes and infinity

  bool operator==(const Place& o) const;
  std::string str() const;  // "2", "t", "t-1", "t^2+64", "infinity"

 private:
  Place() = default;
  Kind kind_ = Kind::rational_prime;
  Int p_ = 0;
  Poly pi_;
};

}  // namespace fibrerank
