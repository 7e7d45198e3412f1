#include "fibrerank/tate.hpp"

#include <algorithm>

#include "tate_core.hpp"

namespace fibrerank {

std::string Kodaira::str() const {
  switch (family) {
    case Family::I:
      return "I" + std::to_string(n);
    case Family::Istar:
      return "I" + std::to_string(n) + "*";
    case Family::II:
      return "II";
    case Family::III:
      return "III";
    case Family::IV:
      return "IV";
    case Family::IVstar:
      return "IV*";
    case Family::IIIstar:
      return "III*";
    case Family::IIstar:
      return "II*";
  }
  return "?";
}

long Kodaira::euler_contribution() const {
  switch (family) {
    case Family::I:
      return n;
    case Family::Istar:
      return n + 6;
    case Family::II:
      return 2;
    case Family::III:
      return 3;
    case Family::IV:
      return 4;
    case Family::IVstar:
      return 8;
    case Family::IIIstar:
      return 9;
    case Family::IIstar:
      return 10;
  }
  return 0;
}

std::string reduction_class_name(ReductionClass c) {
  switch (c) {
    case ReductionClass::good:
      return "good";
    case ReductionClass::split_multiplicative:
      return "split-multiplicative";
    case ReductionClass::nonsplit_multiplicative:
      return "nonsplit-multiplicative";
    case ReductionClass::additive:
      return "additive";
  }
  return "?";
}

namespace {

detail::Coeffs<Rat> to_coeffs(const WeierstrassModel& w) {
  return {w.a1, w.a2, w.a3, w.a4, w.a6};
}

WeierstrassModel from_coeffs(const detail::Coeffs<Rat>& a) {
  return {a.a1, a.a2, a.a3, a.a4, a.a6};
}

ReductionClass classify(const detail::TateResult<detail::PadicDvr>& t) {
  if (t.kodaira.family == Kodaira::Family::I) {
    if (t.kodaira.n == 0) return ReductionClass::good;
    internal_check(t.split_known, "split flag must be known at prime places");
    return t.split ? ReductionClass::split_multiplicative
                   : ReductionClass::nonsplit_multiplicative;
  }
  if (t.kodaira.family == Kodaira::Family::Istar) return ReductionClass::additive;
  return ReductionClass::additive;
}

}  // namespace

ReductionData tate_reduce(const WeierstrassModel& w, const Place& v) {
  if (v.kind() != Place::Kind::rational_prime) {
    throw PreconditionError("tate_reduce on a model over Q needs a rational prime place");
  }
  compute_invariants(w);  // reject singular input
  detail::PadicDvr dvr(v.prime_value());
  auto res = detail::run_tate(dvr, to_coeffs(w));
  ReductionData out;
  out.place = v;
  out.kodaira = res.kodaira;
  out.v_delta_min = res.v_delta_min;
  out.cls = classify(res);
  out.minimal_model = from_coeffs(res.minimal);

  // Consistency: class/valuation/type relations.
  if (out.cls == ReductionClass::good) internal_check(out.v_delta_min == 0, "good iff v=0");
  if (out.kodaira.family == Kodaira::Family::I && out.kodaira.n >= 1) {
    internal_check(out.kodaira.n == out.v_delta_min, "I_n needs n = v(delta_min)");
    Invariants mi = compute_invariants(out.minimal_model);
    internal_check(val_at_unchecked(mi.c4, v.prime_value()).v == 0 &&
                       !val_at_unchecked(mi.c4, v.prime_value()).infinite,
                   "multiplicative needs unit c4");
  }
  return out;
}

Splitness split_multiplicative_test(const WeierstrassModel& w_min, const Place& v) {
  compute_invariants(w_min);
  if (v.kind() == Place::Kind::rational_prime) {
    detail::PadicDvr dvr(v.prime_value());
    auto a = to_coeffs(w_min);
    auto bv = detail::b_inv(a);
    long vd = dvr.val(bv.delta);
    long vc4 = dvr.val(bv.c4);
    if (vd == 0 || vc4 != 0) {
      throw NotMultiplicativeError("reduction at " + v.str() + " is not multiplicative");
    }
    auto [r0, t0] = detail::singular_point(dvr, a);
    a = detail::translate(a, r0, Rat(0), t0);
    return detail::quad_has_residue_root(dvr, a.a1, -a.a2) ? Splitness::split
                                                           : Splitness::nonsplit;
  }
  throw PreconditionError("split test on a model over Q needs a rational prime place");
}

const ReductionData* ReductionProfile::at_prime(const Int& p) const {
  for (const auto& rd : bad_places) {
    if (rd.place.kind() == Place::Kind::rational_prime && rd.place.prime_value() == p) return &rd;
  }
  return nullptr;
}

ReductionProfile reduction_profile(const WeierstrassModel& w, const FactorBudget& budget,
                                   const Factorization* delta_factorization) {
  ReductionProfile out;
  auto [wi, tr] = integral_model(w);
  out.model = wi;
  Invariants inv = compute_invariants(wi);
  Int delta = num(inv.delta);

  Factorization f;
  if (delta_factorization != nullptr) {
    internal_check(delta_factorization->value() == delta,
                   "provided discriminant factorization does not match");
    f = *delta_factorization;
  } else {
    f = factorize(delta, budget);
  }

  for (const auto& [p, e] : f.factors) {
    ReductionData rd = tate_reduce(wi, Place::prime(p));
    if (rd.v_delta_min == 0) continue;
    if (rd.cls == ReductionClass::additive) {
      ++out.alpha;
    } else {
      ++out.mu;
    }
    out.bad_places.push_back(std::move(rd));
  }
  std::sort(out.bad_places.begin(), out.bad_places.end(),
            [](const ReductionData& a, const ReductionData& b) {
              return a.place.prime_value() < b.place.prime_value();
            });
  internal_check(out.alpha + out.mu == static_cast<long>(out.bad_places.size()),
                 "alpha + mu must count the bad places");
  return out;
}

}  // namespace fibrerank
