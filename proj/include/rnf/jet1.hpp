#pragma once

#include <initializer_list>
#include <vector>

#include "rnf/rational.hpp"

namespace rnf {

/// Univariate truncated power series c_0 + c_1 z + ... + c_N z^N with exact
/// rational coefficients. Used for functions of the resonance variable z = xy.
class Jet1 {
 public:
  /// The zero jet of order 0.
  Jet1();
  /// The zero jet of the given order.
  explicit Jet1(int order);
  /// Coefficients c_0, c_1, ...; missing trailing coefficients are zero.
  Jet1(int order, std::vector<Rational> coeffs);
  Jet1(int order, std::initializer_list<Rational> coeffs);

  static Jet1 constant(int order, const Rational& value);
  /// The identity series z.
  static Jet1 variable(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of z^k; zero beyond the truncation order.
  const Rational& operator[](int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// True when every coefficient past the constant term vanishes.
  bool is_constant() const;

  Jet1 operator-() const;
  friend Jet1 operator+(const Jet1& a, const Jet1& b);
  friend Jet1 operator-(const Jet1& a, const Jet1& b);
  friend Jet1 operator*(const Jet1& a, const Jet1& b);
  friend Jet1 operator*(const Rational& s, const Jet1& a);
  friend bool operator==(const Jet1& a, const Jet1& b);

  /// Drops coefficients above `order` (which must not exceed the current order).
  Jet1 truncated(int order) const;
  /// Same polynomial viewed at a larger order. Only meaningful for jets that
  /// are exact polynomials (e.g. the output of an integration).
  Jet1 padded(int order) const;

  /// The series d/dz, of order N-1 (order 0 stays order 0).
  Jet1 derivative() const;
  /// c + integral from 0 of the series, of order N+1.
  Jet1 antiderivative(const Rational& constant = Rational(0)) const;
  /// The series z * a(z), of order N+1.
  Jet1 times_z() const;

  /// Evaluation as a double by Horner's rule.
  double eval(double z) const;

 private:
  std::vector<Rational> coeffs_;
};

/// 1/a; requires a nonzero constant term.
Jet1 reciprocal(const Jet1& a);
/// exp(a); requires a(0) = 0.
Jet1 exp(const Jet1& a);
/// log(a); requires a(0) = 1.
Jet1 log(const Jet1& a);
/// a^n for integer n (negative n requires a nonzero constant term).
Jet1 pow(const Jet1& a, int n);
/// a(b(z)); requires b(0) = 0 and equal orders.
Jet1 compose(const Jet1& a, const Jet1& b);

}  // namespace rnf
