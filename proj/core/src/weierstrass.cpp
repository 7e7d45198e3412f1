#include "fibrerank/weierstrass.hpp"

#include <sstream>
#include <vector>

namespace fibrerank {

bool WeierstrassModel::is_integral() const {
  for (const Rat* c : {&a1, &a2, &a3, &a4, &a6}) {
    if (c->get_den() != 1) return false;
  }
  return true;
}

std::string WeierstrassModel::str() const {
  return rat_to_string(a1) + "," + rat_to_string(a2) + "," + rat_to_string(a3) + "," +
         rat_to_string(a4) + "," + rat_to_string(a6);
}

WeierstrassModel WeierstrassModel::from_string(const std::string& s) {
  std::vector<Rat> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(rat_from_string(item));
  if (parts.size() != 5) throw PreconditionError("expected 5 comma-separated coefficients: " + s);
  return {parts[0], parts[1], parts[2], parts[3], parts[4]};
}

WeierstrassModel WeierstrassModel::short_form(const Rat& a, const Rat& b, const Rat& c) {
  return {0, a, 0, b, c};
}

WeierstrassModel WeierstrassModel::from_roots(const Rat& e1, const Rat& e2, const Rat& e3) {
  return {0, -(e1 + e2 + e3), 0, e1 * e2 + e1 * e3 + e2 * e3, -(e1 * e2 * e3)};
}

Invariants raw_invariants(const WeierstrassModel& w) {
  Invariants v;
  v.b2 = w.a1 * w.a1 + 4 * w.a2;
  v.b4 = 2 * w.a4 + w.a1 * w.a3;
  v.b6 = w.a3 * w.a3 + 4 * w.a6;
  v.b8 = w.a1 * w.a1 * w.a6 + 4 * w.a2 * w.a6 - w.a1 * w.a3 * w.a4 + w.a2 * w.a3 * w.a3 -
         w.a4 * w.a4;
  v.c4 = v.b2 * v.b2 - 24 * v.b4;
  v.c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
  v.delta = -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 +
            9 * v.b2 * v.b4 * v.b6;
  v.j = 0;
  if (v.delta != 0) v.j = v.c4 * v.c4 * v.c4 / v.delta;
  return v;
}

Invariants compute_invariants(const WeierstrassModel& w) {
  Invariants v = raw_invariants(w);
  if (v.delta == 0) throw SingularCurveError("discriminant vanishes: " + w.str());
  internal_check(1728 * v.delta == v.c4 * v.c4 * v.c4 - v.c6 * v.c6,
                 "b/c invariant identity failed");
  return v;
}

Transform Transform::then(const Transform& next) const {
  // x = u1²(u2²x'' + r2) + r1, etc.
  Transform c;
  c.u = u * next.u;
  c.r = r + u * u * next.r;
  c.s = s + u * next.s;
  c.t = t + u * u * u * next.t + s * u * u * next.r;
  return c;
}

Transform Transform::inverse() const {
  Transform inv;
  inv.u = make_rat(den(u), num(u));
  inv.r = -r * inv.u * inv.u;
  inv.s = -s * inv.u;
  inv.t = (r * s - t) * inv.u * inv.u * inv.u;
  return inv;
}

WeierstrassModel apply_transform(const WeierstrassModel& w, const Transform& tr) {
  if (tr.u == 0) throw PreconditionError("transform with u = 0");
  const Rat &u = tr.u, &r = tr.r, &s = tr.s, &t = tr.t;
  Rat u2 = u * u, u3 = u2 * u;
  WeierstrassModel m;
  m.a1 = (w.a1 + 2 * s) / u;
  m.a2 = (w.a2 - s * w.a1 + 3 * r - s * s) / u2;
  m.a3 = (w.a3 + r * w.a1 + 2 * t) / u3;
  m.a4 = (w.a4 - s * w.a3 + 2 * r * w.a2 - (t + r * s) * w.a1 + 3 * r * r - 2 * s * t) / (u2 * u2);
  m.a6 = (w.a6 + r * w.a4 + r * r * w.a2 + r * r * r - t * w.a3 - t * t - r * t * w.a1) /
         (u3 * u3);
  return m;
}

std::pair<WeierstrassModel, Transform> integral_model(const WeierstrassModel& w) {
  Int d = 1;
  for (const Rat* c : {&w.a1, &w.a2, &w.a3, &w.a4, &w.a6}) {
    Int dc = c->get_den();
    d = lcm(d, dc);
  }
  Transform tr = Transform::scale(make_rat(1, d));
  WeierstrassModel m = apply_transform(w, tr);
  internal_check(m.is_integral(), "integral clearing failed");
  return {m, tr};
}

}  // namespace fibrerank
