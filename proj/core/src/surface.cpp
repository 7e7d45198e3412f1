#include "fibrerank/surface.hpp"

#include <algorithm>

#include "tate_core.hpp"

namespace fibrerank {

SurfaceModel generic_fibre(SurfaceFamily f) {
  Poly t = Poly::variable();
  SurfaceModel m;
  if (f == SurfaceFamily::legendre) {
    // y² = x(x+1)(x+t) = x³ + (1+t)x² + t·x
    m.a1 = RatFunc(0);
    m.a2 = RatFunc(Poly(1) + t);
    m.a3 = RatFunc(0);
    m.a4 = RatFunc(t);
    m.a6 = RatFunc(0);
  } else {
    // y² = x³ + t·x² - 16x
    m.a1 = RatFunc(0);
    m.a2 = RatFunc(t);
    m.a3 = RatFunc(0);
    m.a4 = RatFunc(-16);
    m.a6 = RatFunc(0);
  }
  return m;
}

namespace {

detail::Coeffs<RatFunc> to_coeffs(const SurfaceModel& m) {
  return {m.a1, m.a2, m.a3, m.a4, m.a6};
}

std::vector<Int> positive_divisors(const Int& n) {
  std::vector<Int> ds{1};
  for (const auto& [p, e] : factorize(abs(n)).factors) {
    size_t base = ds.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

std::vector<Rat> rational_roots(Poly f) {
  std::vector<Rat> roots;
  Poly t = Poly::variable();
  if (f.degree() > 0 && f.coeff(0) == 0) roots.push_back(0);
  while (f.degree() > 0 && f.coeff(0) == 0) f = f.divrem(t).first;
  if (f.degree() < 1) return roots;
  Int den_lcm = 1;
  for (int i = 0; i <= f.degree(); ++i) den_lcm = lcm(den_lcm, den(f.coeff(i)));
  Int c0 = num(f.coeff(0) * Rat(den_lcm));
  Int lead = num(f.coeff(f.degree()) * Rat(den_lcm));
  for (const Int& pnum : positive_divisors(c0)) {
    for (const Int& qden : positive_divisors(lead)) {
      for (int sign : {1, -1}) {
        Rat cand = make_rat(sign * pnum, qden);
        if (f.eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end()) {
          roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Monic irreducible factors with multiplicities. Linear factors come from
// rational roots; anything left must be a power of one irreducible
// quadratic, which covers every family discriminant handled here.
std::vector<std::pair<Poly, long>> factor_discriminant(const Poly& f) {
  std::vector<std::pair<Poly, long>> out;
  Poly rest = f.monic();
  Poly t = Poly::variable();
  for (const Rat& root : rational_roots(rest)) {
    Poly lin = t - Poly(root);
    long e = 0;
    while (rest.degree() > 0 && rest.divisible_by(lin)) {
      rest = rest.divrem(lin).first;
      ++e;
    }
    out.emplace_back(lin, e);
  }
  if (rest.degree() > 0) {
    Poly g = poly_gcd(rest, rest.derivative());
    Poly q = g.degree() > 0 ? rest.divrem(g).first : rest;
    internal_check(q.degree() == 2, "unsupported discriminant factor of degree > 2");
    long e = 0;
    while (rest.degree() > 0 && rest.divisible_by(q)) {
      rest = rest.divrem(q).first;
      ++e;
    }
    internal_check(e > 0 && rest.degree() == 0, "quadratic factor extraction failed");
    out.emplace_back(q.monic(), e);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.str() < b.first.str();
  });
  return out;
}

}  // namespace

std::vector<std::pair<RatFunc, RatFunc>> torsion_sections(SurfaceFamily family) {
  SurfaceModel m = generic_fibre(family);
  std::vector<std::pair<RatFunc, RatFunc>> sections;
  Poly t = Poly::variable();
  if (family == SurfaceFamily::legendre) {
    sections = {{RatFunc(0), RatFunc(0)}, {RatFunc(-1), RatFunc(0)}, {RatFunc(-t), RatFunc(0)}};
  } else {
    sections = {{RatFunc(0), RatFunc(0)}};
  }
  for (const auto& [x, y] : sections) {
    RatFunc lhs = y * y + m.a1 * x * y + m.a3 * y;
    RatFunc rhs = x * x * x + m.a2 * x * x + m.a4 * x + m.a6;
    internal_check(lhs == rhs, "section fails the generic equation");
  }
  return sections;
}

SurfaceFibreReport surface_fibre_types(SurfaceFamily family) {
  SurfaceFibreReport report;
  report.family = family;
  report.generic_mordell_weil_rank = 0;
  torsion_sections(family);  // symbolic verification of the 2-torsion sections

  SurfaceModel m = generic_fibre(family);
  auto coeffs = to_coeffs(m);
  auto bv = detail::b_inv(coeffs);
  internal_check(!bv.delta.is_zero() && bv.delta.den.degree() == 0,
                 "family discriminant should be polynomial");
  Poly delta = bv.delta.num;

  for (const auto& [pi, mult] : factor_discriminant(delta)) {
    detail::FuncFieldDvr dvr(pi);
    auto res = detail::run_tate(dvr, coeffs);
    if (res.v_delta_min == 0) continue;
    report.fibres.push_back({Place::finite_poly(pi), res.kodaira, res.v_delta_min});
    report.euler_sum += res.kodaira.euler_contribution() * pi.degree();
  }

  // Place at infinity: substitute t = 1/s; the place is s = 0.
  detail::Coeffs<RatFunc> at_inf{m.a1.invert_variable(), m.a2.invert_variable(),
                                 m.a3.invert_variable(), m.a4.invert_variable(),
                                 m.a6.invert_variable()};
  detail::FuncFieldDvr dvr_inf{Poly::variable()};
  auto res_inf = detail::run_tate(dvr_inf, at_inf);
  if (res_inf.v_delta_min > 0) {
    report.fibres.push_back({Place::at_infinity(), res_inf.kodaira, res_inf.v_delta_min});
    report.euler_sum += res_inf.kodaira.euler_contribution();
  }

  internal_check(report.euler_sum == 12, "rational elliptic surface must have e = 12");

  if (family == SurfaceFamily::legendre) {
    report.t_plus_one_smooth = delta.eval(-1) != 0;
    internal_check(report.t_plus_one_smooth, "legendre fibre at t = -1 should be smooth");
  }
  return report;
}

}  // namespace fibrerank
