#pragma once

#include "rnf/jet2.hpp"
#include "rnf/rational.hpp"

namespace rnf {

/// 2x2 rational matrix [[a, b], [c, d]].
struct Mat2Q {
  Rational a{1}, b{0}, c{0}, d{1};

  Rational det() const { return a * d - b * c; }
  Rational trace() const { return a + d; }
  Mat2Q inverse() const;
  friend Mat2Q operator*(const Mat2Q& l, const Mat2Q& r);
  friend bool operator==(const Mat2Q& l, const Mat2Q& r) = default;
};

/// Jet of a planar map germ fixing the origin: (x, y) -> (first, second).
class MapJet2 {
 public:
  /// Both components must share an order and vanish at the origin, and the
  /// linear part must be invertible.
  MapJet2(Jet2 first, Jet2 second);

  static MapJet2 identity(int order);
  static MapJet2 linear(int order, const Mat2Q& m);

  int order() const { return first_.order(); }
  const Jet2& first() const { return first_; }
  const Jet2& second() const { return second_; }
  const Jet2& component(int k) const { return k == 0 ? first_ : second_; }

  /// Matrix of degree-1 coefficients.
  Mat2Q linear_part() const;
  MapJet2 truncated(int order) const { return MapJet2(first_.truncated(order), second_.truncated(order)); }

  friend bool operator==(const MapJet2& l, const MapJet2& r) = default;

 private:
  Jet2 first_;
  Jet2 second_;
};

/// a o m.
Jet2 compose(const Jet2& a, const MapJet2& m);
/// outer o inner.
MapJet2 compose_map(const MapJet2& outer, const MapJet2& inner);
/// Two-sided inverse at the map's order.
MapJet2 invert_map(const MapJet2& m);
/// det Dm, of order N-1.
Jet2 det_jacobian(const MapJet2& m);
/// h o m o h^-1.
MapJet2 conjugate(const MapJet2& m, const MapJet2& h);

}  // namespace rnf
