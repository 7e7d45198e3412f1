#include "fibrerank/polynomial.hpp"

#include <algorithm>

namespace fibrerank {

namespace {
const Rat kZero = 0;
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::variable() { return Poly(std::vector<Rat>{0, 1}); }

const Rat& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

const Rat& Poly::lead() const {
  if (is_zero()) return kZero;
  return coeffs_.back();
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
  if (d.is_zero()) throw PreconditionError("polynomial division by zero");
  Poly r = *this;
  std::vector<Rat> q(degree() >= d.degree() ? static_cast<size_t>(degree() - d.degree() + 1) : 0,
                     Rat(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    Rat f = r.lead() / d.lead();
    q[static_cast<size_t>(k)] = f;
    std::vector<Rat> sub(static_cast<size_t>(k), Rat(0));
    sub.push_back(f);
    r = r - d * Poly(std::move(sub));
  }
  return {Poly(std::move(q)), r};
}

Poly Poly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rat> c(static_cast<size_t>(degree()), Rat(0));
  for (int i = 1; i <= degree(); ++i) c[static_cast<size_t>(i - 1)] = i * coeff(i);
  return Poly(std::move(c));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly out = *this;
  Rat l = lead();
  for (auto& c : out.coeffs_) c /= l;
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly acc = Poly(1), base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Poly Poly::compose(const Poly& q) const {
  Poly acc;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * q + Poly(coeffs_[i]);
  return acc;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeff(i);
    if (c == 0) continue;
    std::string term;
    if (i == 0) {
      term = rat_to_string(c);
    } else {
      std::string mono = i == 1 ? var : var + "^" + std::to_string(i);
      if (c == 1) {
        term = mono;
      } else if (c == -1) {
        term = "-" + mono;
      } else {
        term = rat_to_string(c) + "*" + mono;
      }
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divrem(b).second;
    a = b;
    b = r;
  }
  return a.monic();
}

RatFunc::RatFunc(Poly n, Poly d) {
  if (d.is_zero()) throw PreconditionError("rational function with zero denominator");
  Poly g = poly_gcd(n, d);
  if (g.degree() > 0) {
    n = n.divrem(g).first;
    d = d.divrem(g).first;
  }
  Rat l = d.lead();
  num = n * Poly(make_rat(den(l), num(l)));
  den = d.monic();
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num = -out.num;
  return out;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num * o.den + o.num * den, den * o.den);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num * o.num, den * o.den); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw PreconditionError("rational function division by zero");
  return RatFunc(num * o.den, den * o.num);
}

RatFunc RatFunc::invert_variable() const {
  // f(1/t) = (t^n num~(t)) / (t^m den~(t)) balanced by t-powers.
  auto reverse = [](const Poly& p) {
    std::vector<Rat> c;
    for (int i = p.degree(); i >= 0; --i) c.push_back(p.coeff(i));
    return Poly(std::move(c));
  };
  int n = num.degree(), m = den.degree();
  if (is_zero()) return {};
  Poly rn = reverse(num), rd = reverse(den);
  Poly t = Poly::variable();
  if (n >= m) return RatFunc(rn, rd * t.pow(static_cast<unsigned>(n - m)));
  return RatFunc(rn * t.pow(static_cast<unsigned>(m - n)), rd);
}

std::string RatFunc::str(const std::string& var) const {
  if (den == Poly(1)) return num.str(var);
  return "(" + num.str(var) + ")/(" + den.str(var) + ")";
}

long poly_place_valuation(const Poly& f, const Poly& pi) {
  internal_check(!f.is_zero(), "valuation of zero polynomial");
  long v = 0;
  Poly g = f;
  while (true) {
    auto [q, r] = g.divrem(pi);
    if (!r.is_zero()) return v;
    ++v;
    g = q;
  }
}

}  // namespace fibrerank
