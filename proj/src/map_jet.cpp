#include "rnf/map_jet.hpp"

#include <utility>

namespace rnf {

Mat2Q Mat2Q::inverse() const {
  const Rational det_value = det();
  if (is_zero(det_value)) throw PreconditionError("singular 2x2 matrix");
  return Mat2Q{d / det_value, -b / det_value, -c / det_value, a / det_value};
}

Mat2Q operator*(const Mat2Q& l, const Mat2Q& r) {
  return Mat2Q{l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

MapJet2::MapJet2(Jet2 first, Jet2 second) : first_(std::move(first)), second_(std::move(second)) {
  if (first_.order() != second_.order()) throw OrderMismatch(first_.order(), second_.order());
  if (first_.order() < 1) throw PreconditionError("a map jet needs order >= 1");
  if (!is_zero(first_.constant_term()) || !is_zero(second_.constant_term())) {
    throw PreconditionError("map jet must fix the origin");
  }
  if (is_zero(linear_part().det())) throw PreconditionError("map jet has a singular linear part");
}

MapJet2 MapJet2::identity(int order) { return MapJet2(Jet2::x(order), Jet2::y(order)); }

MapJet2 MapJet2::linear(int order, const Mat2Q& m) {
  return MapJet2(Jet2(order, {{{1, 0}, m.a}, {{0, 1}, m.b}}), Jet2(order, {{{1, 0}, m.c}, {{0, 1}, m.d}}));
}

Mat2Q MapJet2::linear_part() const {
  return Mat2Q{first_.coeff(1, 0), first_.coeff(0, 1), second_.coeff(1, 0), second_.coeff(0, 1)};
}

Jet2 compose(const Jet2& a, const MapJet2& m) { return compose(a, m.first(), m.second()); }

MapJet2 compose_map(const MapJet2& outer, const MapJet2& inner) {
  return MapJet2(compose(outer.first(), inner), compose(outer.second(), inner));
}

MapJet2 invert_map(const MapJet2& m) {
  const int n = m.order();
  const Mat2Q l_inv = m.linear_part().inverse();
  const Mat2Q l = m.linear_part();
  // m = L + R with R of degree >= 2; the inverse g solves g = L^-1 (id - R o g).
  const Jet2 r1 = m.first() - (l.a * Jet2::x(n) + l.b * Jet2::y(n));
  const Jet2 r2 = m.second() - (l.c * Jet2::x(n) + l.d * Jet2::y(n));
  Jet2 g1 = l_inv.a * Jet2::x(n) + l_inv.b * Jet2::y(n);
  Jet2 g2 = l_inv.c * Jet2::x(n) + l_inv.d * Jet2::y(n);
  for (int pass = 1; pass < n; ++pass) {
    const Jet2 u = Jet2::x(n) - compose(r1, g1, g2);
    const Jet2 v = Jet2::y(n) - compose(r2, g1, g2);
    g1 = l_inv.a * u + l_inv.b * v;
    g2 = l_inv.c * u + l_inv.d * v;
  }
  return MapJet2(std::move(g1), std::move(g2));
}

Jet2 det_jacobian(const MapJet2& m) {
  return m.first().partial_x() * m.second().partial_y() - m.first().partial_y() * m.second().partial_x();
}

MapJet2 conjugate(const MapJet2& m, const MapJet2& h) { return compose_map(h, compose_map(m, invert_map(h))); }

}  // namespace rnf
