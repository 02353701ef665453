#pragma once

#include <vector>

#include "rnf/rational.hpp"

namespace rnf {

/// Polynomial in a time parameter t with rational coefficients. Serves as the
/// coefficient ring for jets whose coefficients depend polynomially on t.
class Poly {
 public:
  Poly() = default;
  Poly(int value) : Poly(Rational(value)) {}  // NOLINT: implicit like the scalar it wraps
  Poly(const Rational& value);                 // NOLINT
  explicit Poly(std::vector<Rational> coeffs);

  /// The polynomial t.
  static Poly t();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& t) const;
  /// integral from 0 to t.
  Poly integral() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;  // empty means zero
};

inline bool is_zero(const Poly& p) { return p.coeffs().empty(); }

}  // namespace rnf
