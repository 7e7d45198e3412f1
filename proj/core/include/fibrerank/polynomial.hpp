#pragma once

#include <vector>

#include "fibrerank/rational.hpp"

namespace fibrerank {

// Dense univariate polynomial over Q, trailing zeros stripped.
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c) { coeffs_ = {c}; normalize(); }          // NOLINT implicit
  Poly(int c) : Poly(Rat(c)) {}                               // NOLINT implicit
  explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static Poly variable();  // t

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rat& coeff(int i) const;  // 0 outside range
  const Rat& lead() const;

  bool operator==(const Poly&) const = default;
  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  // Euclidean division by a nonzero divisor.
  std::pair<Poly, Poly> divrem(const Poly& d) const;
  bool divisible_by(const Poly& d) const { return divrem(d).second.is_zero(); }

  Poly derivative() const;
  Poly monic() const;
  Poly pow(unsigned e) const;
  Rat eval(const Rat& x) const;
  // Composition p(q(t)) for polynomial q.
  Poly compose(const Poly& q) const;

  std::string str(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<Rat> coeffs_;  // coeffs_[i] multiplies t^i
};

// Monic gcd.
Poly poly_gcd(Poly a, Poly b);

// Rational function over Q, normalized: monic denominator, gcd(num,den)=1.
struct RatFunc {
  Poly num;
  Poly den = Poly(1);

  RatFunc() : num() {}
  RatFunc(const Poly& p) : num(p) {}  // NOLINT implicit
  RatFunc(int c) : num(Poly(c)) {}    // NOLINT implicit
  RatFunc(Poly n, Poly d);

  bool is_zero() const { return num.is_zero(); }
  bool operator==(const RatFunc&) const = default;
  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;

  // f(1/t) as a rational function (substitution used at the infinite place).
  RatFunc invert_variable() const;

  std::string str(const std::string& var = "t") const;
};

// Multiplicity of the monic irreducible pi in f (f != 0).
long poly_place_valuation(const Poly& f, const Poly& pi);

}  // namespace fibrerank
