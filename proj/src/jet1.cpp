#include "rnf/jet1.hpp"

#include <utility>

#include "rnf/errors.hpp"

namespace rnf {

namespace {

const Rational& zero_rational() {
  static const Rational zero(0);
  return zero;
}

void check_order(int order) {
  if (order < 0) throw PreconditionError("jet order must be non-negative");
}

void require_same_order(const Jet1& a, const Jet1& b) {
  if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
}

}  // namespace

Jet1::Jet1() : coeffs_(1) {}

Jet1::Jet1(int order) : coeffs_((check_order(order), static_cast<std::size_t>(order) + 1)) {}

Jet1::Jet1(int order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  check_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Jet1::Jet1(int order, std::initializer_list<Rational> coeffs) : Jet1(order, std::vector<Rational>(coeffs)) {}

Jet1 Jet1::constant(int order, const Rational& value) {
  Jet1 r(order);
  r.coeffs_[0] = value;
  return r;
}

Jet1 Jet1::variable(int order) {
  Jet1 r(order);
  if (order >= 1) r.coeffs_[1] = 1;
  return r;
}

const Rational& Jet1::operator[](int k) const {
  if (k < 0 || k > order()) return zero_rational();
  return coeffs_[static_cast<std::size_t>(k)];
}

bool Jet1::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!rnf::is_zero(c)) return false;
  }
  return true;
}

bool Jet1::is_constant() const {
  for (int k = 1; k <= order(); ++k) {
    if (!rnf::is_zero((*this)[k])) return false;
  }
  return true;
}

Jet1 Jet1::operator-() const {
  Jet1 r(order());
  for (int k = 0; k <= order(); ++k) r.coeffs_[k] = -coeffs_[k];
  return r;
}

Jet1 operator+(const Jet1& a, const Jet1& b) {
  require_same_order(a, b);
  Jet1 r(a.order());
  for (int k = 0; k <= a.order(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return r;
}

Jet1 operator-(const Jet1& a, const Jet1& b) {
  require_same_order(a, b);
  Jet1 r(a.order());
  for (int k = 0; k <= a.order(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return r;
}

Jet1 operator*(const Jet1& a, const Jet1& b) {
  require_same_order(a, b);
  const int n = a.order();
  Jet1 r(n);
  for (int i = 0; i <= n; ++i) {
    if (is_zero(a.coeffs_[i])) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (is_zero(b.coeffs_[j])) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

Jet1 operator*(const Rational& s, const Jet1& a) {
  Jet1 r(a.order());
  for (int k = 0; k <= a.order(); ++k) r.coeffs_[k] = s * a.coeffs_[k];
  return r;
}

bool operator==(const Jet1& a, const Jet1& b) { return a.order() == b.order() && a.coeffs_ == b.coeffs_; }

Jet1 Jet1::truncated(int order) const {
  if (order > this->order()) throw PreconditionError("cannot truncate a jet to a larger order");
  return Jet1(order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Jet1 Jet1::padded(int order) const {
  if (order < this->order()) return truncated(order);
  return Jet1(order, coeffs_);
}

Jet1 Jet1::derivative() const {
  const int n = order();
  Jet1 r(n > 0 ? n - 1 : 0);
  for (int k = 1; k <= n; ++k) r.coeffs_[k - 1] = k * coeffs_[k];
  return r;
}

Jet1 Jet1::antiderivative(const Rational& constant) const {
  const int n = order();
  Jet1 r(n + 1);
  r.coeffs_[0] = constant;
  for (int k = 0; k <= n; ++k) r.coeffs_[k + 1] = coeffs_[k] / (k + 1);
  return r;
}

Jet1 Jet1::times_z() const {
  Jet1 r(order() + 1);
  for (int k = 0; k <= order(); ++k) r.coeffs_[k + 1] = coeffs_[k];
  return r;
}

double Jet1::eval(double z) const {
  double acc = 0.0;
  for (int k = order(); k >= 0; --k) acc = acc * z + coeffs_[k].get_d();
  return acc;
}

Jet1 reciprocal(const Jet1& a) {
  if (is_zero(a[0])) throw PreconditionError("reciprocal of a jet with zero constant term");
  const int n = a.order();
  std::vector<Rational> r(n + 1);
  r[0] = Rational(1) / a[0];
  for (int k = 1; k <= n; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += a[j] * r[k - j];
    r[k] = -acc * r[0];
  }
  return Jet1(n, std::move(r));
}

Jet1 exp(const Jet1& a) {
  if (!is_zero(a[0])) throw PreconditionError("exp of a jet requires a zero constant term");
  const int n = a.order();
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  // e' = a' e
  for (int k = 1; k <= n; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += j * a[j] * e[k - j];
    e[k] = acc / k;
  }
  return Jet1(n, std::move(e));
}

Jet1 log(const Jet1& a) {
  if (a[0] != 1) throw PreconditionError("log of a jet requires constant term 1");
  const int n = a.order();
  std::vector<Rational> l(n + 1);
  // l' a = a'
  for (int k = 1; k <= n; ++k) {
    Rational acc = k * a[k];
    for (int j = 1; j < k; ++j) acc -= j * l[j] * a[k - j];
    l[k] = acc / k;
  }
  return Jet1(n, std::move(l));
}

Jet1 pow(const Jet1& a, int n) {
  if (n < 0) return pow(reciprocal(a), -n);
  Jet1 result = Jet1::constant(a.order(), Rational(1));
  Jet1 base = a;
  for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1) {
    if (e & 1u) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

Jet1 compose(const Jet1& a, const Jet1& b) {
  require_same_order(a, b);
  if (!is_zero(b[0])) throw PreconditionError("inner series of a composition must vanish at 0");
  Jet1 acc(a.order());
  for (int k = a.order(); k >= 0; --k) acc = acc * b + Jet1::constant(a.order(), a[k]);
  return acc;
}

}  // namespace rnf
