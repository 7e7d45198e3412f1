#pragma once

#include <vector>

#include "fibrerank/factorization.hpp"
#include "fibrerank/places.hpp"
#include "fibrerank/weierstrass.hpp"

namespace fibrerank {

struct Kodaira {
  enum class Family { I, Istar, II, III, IV, IVstar, IIIstar, IIstar } family = Family::I;
  long n = 0;  // index for I_n / I_n*

  static Kodaira I(long n) { return {Family::I, n}; }
  static Kodaira Istar(long n) { return {Family::Istar, n}; }
  static Kodaira simple(Family f) { return {f, 0}; }

  bool operator==(const Kodaira&) const = default;
  // "I0", "I2", "I2*", "II", "III*", ...
  std::string str() const;
  // Euler number contribution (= number of components counted with the
  // standard weights): I_n -> n, I_n* -> n+6, II,III,IV -> 2,3,4, and the
  // starred duals 10,9,8.
  long euler_contribution() const;
};

enum class ReductionClass { good, split_multiplicative, nonsplit_multiplicative, additive };

std::string reduction_class_name(ReductionClass c);

struct ReductionData {
  Place place = Place::prime(2);
  Kodaira kodaira;
  long v_delta_min = 0;
  ReductionClass cls = ReductionClass::good;
  WeierstrassModel minimal_model;  // minimal at this place
};

// Full Tate algorithm at a rational prime (any residue characteristic,
// including 2 and 3). Input may be non-integral; it is scaled first.
ReductionData tate_reduce(const WeierstrassModel& w, const Place& v);

class NotMultiplicativeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

enum class Splitness { split, nonsplit };

// Tangent-direction test at a place of multiplicative reduction of a model
// that is minimal there: translates the node to the origin and asks whether
// T² + a1·T - a2 splits over the residue field.
Splitness split_multiplicative_test(const WeierstrassModel& w_min, const Place& v);

struct ReductionProfile {
  WeierstrassModel model;                // the integral model analyzed
  std::vector<ReductionData> bad_places;  // v(Δ_min) > 0, primes ascending
  long alpha = 0;  // additive places
  long mu = 0;     // multiplicative places
  bool semistable() const { return alpha == 0; }
  const ReductionData* at_prime(const Int& p) const;
};

// Runs tate_reduce at every prime dividing the discriminant. A caller that
// already knows the factorization of Δ (e.g. from the shape of a family)
// passes it as delta_factorization; it is verified against the computed Δ
// before use, so it is a certificate, not a trusted hint.
ReductionProfile reduction_profile(const WeierstrassModel& w, const FactorBudget& budget = {},
                                   const Factorization* delta_factorization = nullptr);

}  // namespace fibrerank
