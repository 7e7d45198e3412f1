#include "fibrerank/places.hpp"

#include "fibrerank/primality.hpp"

namespace fibrerank {

Place Place::prime(const Int& p) {
  if (p < 2 || !is_prime(p)) throw PreconditionError("place " + p.get_str() + " is not prime");
  Place v;
  v.kind_ = Kind::rational_prime;
  v.p_ = p;
  return v;
}

Place Place::finite_poly(const Poly& pi) {
  Poly m = pi.monic();
  if (m.degree() < 1) throw PreconditionError("constant polynomial is not a place");
  if (m.degree() == 2) {
    Rat disc = m.coeff(1) * m.coeff(1) - 4 * m.coeff(0);
    if (is_square(disc)) throw PreconditionError("reducible quadratic place: " + m.str());
  } else if (m.degree() > 2) {
    // Both families only ever need degree <= 2; a full irreducibility test
    // is out of range here.
    throw PreconditionError("function-field places of degree > 2 unsupported");
  }
  Place v;
  v.kind_ = Kind::finite_poly;
  v.pi_ = m;
  return v;
}

Place Place::at_infinity() {
  Place v;
  v.kind_ = Kind::infinity;
  return v;
}

const Int& Place::prime_value() const {
  if (kind_ != Kind::rational_prime) throw PreconditionError("place is not a rational prime");
  return p_;
}

const Poly& Place::poly_value() const {
  if (kind_ != Kind::finite_poly) throw PreconditionError("place is not a finite polynomial place");
  return pi_;
}

int Place::degree() const { return kind_ == Kind::finite_poly ? pi_.degree() : 1; }

bool Place::operator==(const Place& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == Kind::rational_prime) return p_ == o.p_;
  if (kind_ == Kind::finite_poly) return pi_ == o.pi_;
  return true;
}

std::string Place::str() const {
  switch (kind_) {
    case Kind::rational_prime:
      return p_.get_str();
    case Kind::finite_poly:
      return pi_.str();
    case Kind::infinity:
      return "infinity";
  }
  return "?";
}

}  // namespace fibrerank
