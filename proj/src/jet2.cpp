#include "rnf/jet2.hpp"

namespace rnf {

template class BasicJet2<Rational>;

Jet2 reciprocal(const Jet2& a) {
  const Rational& c0 = a.constant_term();
  if (is_zero(c0)) throw PreconditionError("reciprocal of a jet with zero constant term");
  const int n = a.order();
  const Rational inv = Rational(1) / c0;
  // a = c0 (1 + b) with b(0) = 0, so 1/a = (1/c0) sum (-b)^k, finite at order n.
  const Jet2 minus_b = Jet2::constant(n, Rational(1)) - inv * a;
  Jet2 sum = Jet2::constant(n, Rational(1));
  Jet2 power = Jet2::constant(n, Rational(1));
  for (int k = 1; k <= n; ++k) {
    power = power * minus_b;
    if (power.is_zero()) break;
    sum = sum + power;
  }
  return inv * sum;
}

Jet2 substitute_xy(const Jet1& a, int order) {
  Jet2 r(order);
  for (int k = 0; 2 * k <= order && k <= a.order(); ++k) {
    if (!is_zero(a[k])) r.add_term(k, k, a[k]);
  }
  return r;
}

Jet1 diag_part(const Jet2& a) {
  const int n = a.order() / 2;
  std::vector<Rational> d(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) d[k] = a.coeff(k, k);
  return Jet1(n, std::move(d));
}

Jet2 off_diagonal(const Jet2& a) {
  Jet2 r(a.order());
  a.for_each_nonzero([&](int i, int j, const Rational& c) {
    if (i != j) r.add_term(i, j, c);
  });
  return r;
}

double eval(const Jet2& a, double x, double y) {
  double acc = 0.0;
  a.for_each_nonzero([&](int i, int j, const Rational& c) {
    double term = c.get_d();
    for (int k = 0; k < i; ++k) term *= x;
    for (int k = 0; k < j; ++k) term *= y;
    acc += term;
  });
  return acc;
}

}  // namespace rnf
