#pragma once

// Tate's algorithm written once over a discrete valuation ring interface,
// instantiated for Z localized at a prime p (residue field F_p, any p
// including 2 and 3) and for Q[t] localized at a monic irreducible pi
// (residue field Q for degree-1 places). Residue-field searches are done
// two ways: closed formulas where 2 and 3 are units, exhaustive enumeration
// over F_2 / F_3 otherwise.

#include <optional>
#include <utility>

#include "fibrerank/polynomial.hpp"
#include "fibrerank/residues.hpp"
#include "fibrerank/tate.hpp"

namespace fibrerank::detail {

inline constexpr long kValInf = 1L << 40;

template <class E>
struct Coeffs {
  E a1, a2, a3, a4, a6;
};

template <class E>
struct BInv {
  E b2, b4, b6, b8, c4, delta;
};

template <class E>
BInv<E> b_inv(const Coeffs<E>& a) {
  BInv<E> v;
  v.b2 = a.a1 * a.a1 + E(4) * a.a2;
  v.b4 = E(2) * a.a4 + a.a1 * a.a3;
  v.b6 = a.a3 * a.a3 + E(4) * a.a6;
  v.b8 = a.a1 * a.a1 * a.a6 + E(4) * a.a2 * a.a6 - a.a1 * a.a3 * a.a4 + a.a2 * a.a3 * a.a3 -
         a.a4 * a.a4;
  v.c4 = v.b2 * v.b2 - E(24) * v.b4;
  v.delta = -v.b2 * v.b2 * v.b8 - E(8) * v.b4 * v.b4 * v.b4 - E(27) * v.b6 * v.b6 +
            E(9) * v.b2 * v.b4 * v.b6;
  return v;
}

// (r, s, t) translation, u = 1.
template <class E>
Coeffs<E> translate(const Coeffs<E>& a, const E& r, const E& s, const E& t) {
  Coeffs<E> m;
  m.a1 = a.a1 + E(2) * s;
  m.a2 = a.a2 - s * a.a1 + E(3) * r - s * s;
  m.a3 = a.a3 + r * a.a1 + E(2) * t;
  m.a4 = a.a4 - s * a.a3 + E(2) * r * a.a2 - (t + r * s) * a.a1 + E(3) * r * r - E(2) * s * t;
  m.a6 = a.a6 + r * a.a4 + r * r * a.a2 + r * r * r - t * a.a3 - t * t - r * t * a.a1;
  return m;
}

// --------------------------------------------------------------------------
// DVR for Z_(p).

struct PadicDvr {
  using E = Rat;
  Int p;
  bool tiny;  // p == 2 or 3: residue searches enumerate F_p

  explicit PadicDvr(Int prime) : p(std::move(prime)), tiny(p <= 3) {}

  long val(const E& x) const {
    Valuation v = val_at_unchecked(x, p);
    return v.infinite ? kValInf : v.v;
  }
  E pi_pow(long k) const {
    Int pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
    return k >= 0 ? Rat(pk) : make_rat(1, pk);
  }
  E shift(const E& x, long k) const { return x * pi_pow(k); }
  E exact_div(const E& x, long k) const {
    internal_check(val(x) >= k, "non-integral division by uniformizer power");
    return shift(x, -k);
  }
  bool split_test_supported() const { return true; }

  // Residue of an integral element as an integer in [0, p).
  Int residue(const E& x) const {
    internal_check(val(x) >= 0, "residue of non-integral element");
    Int n = num(x) % p, d = den(x) % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d != 1) {
      Int inv;
      internal_check(mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) != 0,
                     "denominator not invertible at place");
      n = (n * inv) % p;
    }
    return n;
  }
  E lift(const Int& r) const { return Rat(r); }
};

// --------------------------------------------------------------------------
// DVR for Q[t]_(pi). Residue field is Q for degree-1 places; higher-degree
// places support every element-level operation (enough for Kodaira types)
// but not residue-field square tests.

struct FuncFieldDvr {
  using E = RatFunc;
  Poly pi;
  bool tiny = false;

  explicit FuncFieldDvr(Poly place) : pi(std::move(place)) {}

  long val(const E& x) const {
    if (x.is_zero()) return kValInf;
    return poly_place_valuation(x.num, pi) - poly_place_valuation(x.den, pi);
  }
  E pi_pow(long k) const {
    Poly pk = pi.pow(static_cast<unsigned>(k < 0 ? -k : k));
    return k >= 0 ? RatFunc(pk) : RatFunc(Poly(1), pk);
  }
  E shift(const E& x, long k) const { return x * pi_pow(k); }
  E exact_div(const E& x, long k) const {
    internal_check(val(x) >= k, "non-integral division by uniformizer power");
    return shift(x, -k);
  }
  bool split_test_supported() const { return pi.degree() == 1; }

  // Residue in Q at a degree-1 place t - c.
  Rat residue(const E& x) const {
    internal_check(pi.degree() == 1, "residue field of higher-degree place unsupported");
    internal_check(val(x) >= 0, "residue of non-integral element");
    Rat c = -pi.coeff(0);
    E red = x;
    long v = val(x);
    if (v > 0) return 0;
    Rat dv = red.den.eval(c);
    internal_check(dv != 0, "denominator vanishes at place");
    return red.num.eval(c) / dv;
  }
};

// --------------------------------------------------------------------------
// Residue-field analyses, expressed through lifted elements.

struct CubicRootInfo {
  int multiplicity = 1;  // 1: three distinct roots in the closure
  bool root_valid = false;
};

// Multiple root of T³ + A T² + B T + C over the residue field (A, B, C
// integral elements). Returns multiplicity and, for multiplicity >= 2, a
// lift of the multiple root.
template <class Dvr>
std::pair<CubicRootInfo, typename Dvr::E> cubic_multiple_root(const Dvr& R,
                                                              const typename Dvr::E& A,
                                                              const typename Dvr::E& B,
                                                              const typename Dvr::E& C) {
  using E = typename Dvr::E;
  E disc = E(18) * A * B * C - E(4) * A * A * A * C + A * A * B * B - E(4) * B * B * B -
           E(27) * C * C;
  if (R.val(disc) == 0) return {{1, false}, E(0)};

  if constexpr (std::is_same_v<Dvr, PadicDvr>) {
    if (R.tiny) {
      // Enumerate F_p (p <= 3); synthetic division counts multiplicity.
      Int p = R.p;
      Int ca = R.residue(A), cb = R.residue(B), cc = R.residue(C);
      for (Int r = 0; r < p; ++r) {
        if ((((r + ca) * r + cb) * r + cc) % p != 0) continue;
        // P = (T - r)(T² + q1 T + q0)
        Int q1 = (ca + r) % p;
        Int q0 = (cb + r * q1) % p;
        if ((r * r + q1 * r + q0) % p != 0) continue;  // simple root
        // Q = (T - r)(T + l)
        Int l = (q1 + r) % p;
        int mult = ((r + l) % p == 0) ? 3 : 2;
        return {{mult, true}, R.lift(r)};
      }
      throw InternalError("tiny residue field: multiple root not found");
    }
  }
  // 2 and 3 are units: closed forms.
  E e2 = A * A - E(3) * B;
  if (R.val(e2) > 0) {
    E root = -A / E(3);
    return {{3, true}, root};
  }
  E root = (E(9) * C - A * B) / (E(2) * e2);
  internal_check(R.val(root) >= 0, "cubic double root lift not integral");
  return {{2, true}, root};
}

// Distinct roots in the residue-field closure of Y² + bY + c: works in
// every characteristic because disc = b² - 4c reduces to b² in char 2,
// where separability is exactly b != 0.
template <class Dvr>
bool quad_distinct(const Dvr& R, const typename Dvr::E& b, const typename Dvr::E& c) {
  using E = typename Dvr::E;
  return R.val(b * b - E(4) * c) == 0;
}

// Lift of the double root of Y² + bY + c (called when not distinct).
template <class Dvr>
typename Dvr::E quad_double_root(const Dvr& R, const typename Dvr::E& b,
                                 const typename Dvr::E& c) {
  using E = typename Dvr::E;
  if constexpr (std::is_same_v<Dvr, PadicDvr>) {
    if (R.p == 2) {
      // double root over F_2 requires b ≡ 0; then root² = c, sqrt = id.
      internal_check(R.residue(b) == 0, "char-2 quadratic not degenerate");
      return R.lift(R.residue(c));
    }
  }
  return -b / E(2);
}

// Same pair for a general quadratic A X² + B X + C with A a unit.
template <class Dvr>
bool quad_general_distinct(const Dvr& R, const typename Dvr::E& A, const typename Dvr::E& B,
                           const typename Dvr::E& C) {
  using E = typename Dvr::E;
  return R.val(B * B - E(4) * A * C) == 0;
}

template <class Dvr>
typename Dvr::E quad_general_double_root(const Dvr& R, const typename Dvr::E& A,
                                         const typename Dvr::E& B, const typename Dvr::E& C) {
  using E = typename Dvr::E;
  if constexpr (std::is_same_v<Dvr, PadicDvr>) {
    if (R.p == 2) {
      internal_check(R.residue(B) == 0, "char-2 quadratic not degenerate");
      Int a = R.residue(A), c = R.residue(C);
      internal_check(a == 1, "leading coefficient not a unit mod 2");
      return R.lift(c);
    }
  }
  return -B / (E(2) * A);
}

// Does T² + bT + c have a root in the residue field itself? (Split test.)
inline bool quad_has_residue_root(const PadicDvr& R, const Rat& b, const Rat& c) {
  if (R.p == 2) {
    Int rb = R.residue(b), rc = R.residue(c);
    for (Int tv = 0; tv < 2; ++tv) {
      if ((tv * tv + rb * tv + rc) % 2 == 0) return true;
    }
    return false;
  }
  Int disc = R.residue(b * b - 4 * c);
  return is_square_mod_prime(disc, R.p);
}

inline bool quad_has_residue_root(const FuncFieldDvr& R, const RatFunc& b, const RatFunc& c) {
  internal_check(R.split_test_supported(), "split test needs a degree-1 place");
  Rat disc = R.residue(b * b - RatFunc(4) * c);
  return is_square(disc);
}

// Lift (r, t) of the singular point of the reduced curve.
template <class Dvr>
std::pair<typename Dvr::E, typename Dvr::E> singular_point(const Dvr& R,
                                                           const Coeffs<typename Dvr::E>& a) {
  using E = typename Dvr::E;
  if constexpr (std::is_same_v<Dvr, PadicDvr>) {
    if (R.tiny) {
      Int p = R.p;
      Int r1 = R.residue(a.a1), r2 = R.residue(a.a2), r3 = R.residue(a.a3), r4 = R.residue(a.a4),
          r6 = R.residue(a.a6);
      for (Int x = 0; x < p; ++x) {
        for (Int y = 0; y < p; ++y) {
          Int f = (y * y + r1 * x * y + r3 * y - x * x * x - r2 * x * x - r4 * x - r6) % p;
          Int fx = (r1 * y - 3 * x * x - 2 * r2 * x - r4) % p;
          Int fy = (2 * y + r1 * x + r3) % p;
          if (f % p == 0 && fx % p == 0 && fy % p == 0) return {R.lift(x), R.lift(y)};
        }
      }
      throw InternalError("singular point not found over tiny residue field");
    }
  }
  // Complete the square (2 is a unit): eta² = g(x) with g = x³ + (b2/4)x² +
  // (b4/2)x + b6/4; the singular x is the multiple root of the reduced g.
  BInv<E> bv = b_inv(a);
  E A = bv.b2 / E(4), B = bv.b4 / E(2), C = bv.b6 / E(4);
  auto [info, root] = cubic_multiple_root(R, A, B, C);
  internal_check(info.multiplicity >= 2, "reduction not singular in singular_point");
  E y0 = -(a.a1 * root + a.a3) / E(2);
  return {root, y0};
}

// Shift (s, t) that normalizes v(a1),v(a2) >= 1, v(a3),v(a4) >= 2,
// v(a6) >= 3 once steps II/III/IV have been passed.
template <class Dvr>
std::pair<typename Dvr::E, typename Dvr::E> step6_shift(const Dvr& R,
                                                        const Coeffs<typename Dvr::E>& a) {
  using E = typename Dvr::E;
  if constexpr (std::is_same_v<Dvr, PadicDvr>) {
    if (R.tiny) {
      long p = R.p.get_si();
      long p2 = p * p, p3 = p2 * p;
      for (long sv = 0; sv < p2; ++sv) {
        for (long tv = 0; tv < p3; ++tv) {
          E s = R.lift(sv), t = R.lift(tv);
          Coeffs<E> b = translate(a, E(0), s, t);
          if (R.val(b.a1) >= 1 && R.val(b.a2) >= 1 && R.val(b.a3) >= 2 && R.val(b.a4) >= 2 &&
              R.val(b.a6) >= 3) {
            return {s, t};
          }
        }
      }
      throw InternalError("step-6 normalization shift not found");
    }
  }
  return {-a.a1 / E(2), -a.a3 / E(2)};
}

// --------------------------------------------------------------------------

template <class Dvr>
struct TateResult {
  Kodaira kodaira;
  long v_delta_min = 0;
  bool split = false;        // meaningful for multiplicative I_n, n >= 1
  bool split_known = false;  // residue-field split test was available
  Coeffs<typename Dvr::E> minimal;
};

template <class Dvr>
TateResult<Dvr> run_tate(const Dvr& R, Coeffs<typename Dvr::E> a) {
  using E = typename Dvr::E;
  const E zero(0);

  // Scale to an integral model at the place: u = pi^-m.
  long m = 0;
  const std::pair<const E*, long> weighted[] = {
      {&a.a1, 1}, {&a.a2, 2}, {&a.a3, 3}, {&a.a4, 4}, {&a.a6, 6}};
  for (const auto& [coeff, wt] : weighted) {
    long v = R.val(*coeff);
    if (v < 0 && v != kValInf) m = std::max(m, (-v + wt - 1) / wt);
  }
  if (m > 0) {
    a.a1 = R.shift(a.a1, m);
    a.a2 = R.shift(a.a2, 2 * m);
    a.a3 = R.shift(a.a3, 3 * m);
    a.a4 = R.shift(a.a4, 4 * m);
    a.a6 = R.shift(a.a6, 6 * m);
  }

  BInv<E> bv = b_inv(a);
  internal_check(!(bv.delta == E(0)), "singular equation in tate algorithm");
  long vd0 = R.val(bv.delta);
  const long max_passes = vd0 / 12 + 2;

  for (long pass = 0; pass < max_passes; ++pass) {
    bv = b_inv(a);
    long vd = R.val(bv.delta);
    if (vd == 0) {
      return {Kodaira::I(0), 0, false, true, a};
    }

    // Step 2: move the singular point of the reduction to the origin.
    auto [r0, t0] = singular_point(R, a);
    a = translate(a, r0, zero, t0);
    internal_check(R.val(a.a3) >= 1 && R.val(a.a4) >= 1 && R.val(a.a6) >= 1,
                   "singular point translation failed");
    bv = b_inv(a);

    if (R.val(bv.b2) == 0) {
      // Multiplicative: I_n with n = v(Δ); tangents split over the residue
      // field iff T² + a1 T - a2 has a root there.
      bool known = R.split_test_supported();
      bool split = known && quad_has_residue_root(R, a.a1, -a.a2);
      return {Kodaira::I(vd), vd, split, known, a};
    }

    // Additive types.
    if (R.val(a.a6) < 2) return {Kodaira::simple(Kodaira::Family::II), vd, false, true, a};
    if (R.val(bv.b8) < 3) return {Kodaira::simple(Kodaira::Family::III), vd, false, true, a};
    if (R.val(bv.b6) < 3) return {Kodaira::simple(Kodaira::Family::IV), vd, false, true, a};

    auto [s6, t6] = step6_shift(R, a);
    a = translate(a, zero, s6, t6);
    internal_check(R.val(a.a1) >= 1 && R.val(a.a2) >= 1 && R.val(a.a3) >= 2 &&
                       R.val(a.a4) >= 2 && R.val(a.a6) >= 3,
                   "step-6 normalization failed");

    E A = R.exact_div(a.a2, 1), B = R.exact_div(a.a4, 2), C = R.exact_div(a.a6, 3);
    auto [info, root] = cubic_multiple_root(R, A, B, C);
    if (info.multiplicity == 1) {
      return {Kodaira::Istar(0), vd, false, true, a};
    }

    if (info.multiplicity == 2) {
      a = translate(a, R.shift(root, 1), zero, zero);
      internal_check(R.val(a.a2) == 1 && R.val(a.a3) >= 2 && R.val(a.a4) >= 3 &&
                         R.val(a.a6) >= 4,
                     "I_n* entry valuations failed");
      long n = 1, ylevel = 2;
      while (true) {
        internal_check(n <= vd - 6, "I_n* subtype loop exceeded v(delta)");
        E qb = R.exact_div(a.a3, ylevel), qc = -R.exact_div(a.a6, 2 * ylevel);
        if (quad_distinct(R, qb, qc)) return {Kodaira::Istar(n), vd, false, true, a};
        a = translate(a, zero, zero, R.shift(quad_double_root(R, qb, qc), ylevel));
        ++n;
        E rA = R.exact_div(a.a2, 1);
        E rB = R.exact_div(a.a4, ylevel + 1);
        E rC = R.exact_div(a.a6, 2 * ylevel + 1);
        if (quad_general_distinct(R, rA, rB, rC)) return {Kodaira::Istar(n), vd, false, true, a};
        a = translate(a, R.shift(quad_general_double_root(R, rA, rB, rC), ylevel), zero, zero);
        ++n;
        ++ylevel;
      }
    }

    // Triple root.
    a = translate(a, R.shift(root, 1), zero, zero);
    internal_check(R.val(a.a2) >= 2 && R.val(a.a4) >= 3 && R.val(a.a6) >= 4,
                   "triple-root translation failed");
    E qb = R.exact_div(a.a3, 2), qc = -R.exact_div(a.a6, 4);
    if (quad_distinct(R, qb, qc)) {
      return {Kodaira::simple(Kodaira::Family::IVstar), vd, false, true, a};
    }
    a = translate(a, zero, zero, R.shift(quad_double_root(R, qb, qc), 2));
    if (R.val(a.a4) < 4) return {Kodaira::simple(Kodaira::Family::IIIstar), vd, false, true, a};
    if (R.val(a.a6) < 6) return {Kodaira::simple(Kodaira::Family::IIstar), vd, false, true, a};

    // Non-minimal: u = pi and restart.
    a.a1 = R.exact_div(a.a1, 1);
    a.a2 = R.exact_div(a.a2, 2);
    a.a3 = R.exact_div(a.a3, 3);
    a.a4 = R.exact_div(a.a4, 4);
    a.a6 = R.exact_div(a.a6, 6);
  }
  throw InternalError("tate algorithm did not terminate");
}

}  // namespace fibrerank::detail
