#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "rnf/errors.hpp"
#include "rnf/jet1.hpp"
#include "rnf/rational.hpp"

namespace rnf {

/// Exponent pair of the monomial x^i y^j.
struct Monomial {
  int i = 0;
  int j = 0;

  constexpr int degree() const { return i + j; }
  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Position of x^i y^j in graded-lex order: total degree first, then
/// increasing power of x.
constexpr std::size_t graded_index(int i, int j) {
  const auto d = static_cast<std::size_t>(i + j);
  return d * (d + 1) / 2 + static_cast<std::size_t>(i);
}

constexpr std::size_t triangle_size(int order) {
  const auto n = static_cast<std::size_t>(order);
  return (n + 1) * (n + 2) / 2;
}

/// Zero test for any coefficient ring; found by argument-dependent lookup for
/// ring types declared in this namespace.
template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}

/// Bivariate truncated power series sum c_{ij} x^i y^j, i + j <= N.
///
/// Coefficients are kept in a dense graded-lex triangle; only nonzero terms
/// take part in arithmetic, serialization and iteration, so absent and zero
/// coefficients are indistinguishable. `C` is the coefficient ring (exact
/// rationals for every public jet, polynomials in t inside the Moser
/// integrator). It must provide `is_zero(const C&)`, ring operators and
/// construction from an int.
template <class C>
class BasicJet2 {
 public:
  using Coeff = C;

  struct Term {
    Monomial m;
    C c;
  };

  BasicJet2() : BasicJet2(0) {}

  explicit BasicJet2(int order) : order_(order) {
    if (order < 0) throw PreconditionError("jet order must be non-negative");
    coeffs_.assign(triangle_size(order), C(0));
  }

  /// Terms beyond the truncation order are dropped; repeated monomials add up.
  BasicJet2(int order, const std::vector<Term>& terms) : BasicJet2(order) {
    for (const auto& t : terms) {
      if (t.m.i < 0 || t.m.j < 0) throw PreconditionError("negative exponent in jet term");
      if (t.m.degree() <= order_) at(t.m.i, t.m.j) += t.c;
    }
  }

  BasicJet2(int order, std::initializer_list<Term> terms) : BasicJet2(order, std::vector<Term>(terms)) {}

  static BasicJet2 constant(int order, const C& c) { return monomial(order, 0, 0, c); }

  static BasicJet2 monomial(int order, int i, int j, const C& c = C(1)) {
    BasicJet2 r(order);
    if (i + j <= order) r.at(i, j) = c;
    return r;
  }

  static BasicJet2 x(int order) { return monomial(order, 1, 0); }
  static BasicJet2 y(int order) { return monomial(order, 0, 1); }

  int order() const { return order_; }

  const C& coeff(int i, int j) const {
    static const C zero(0);
    if (i < 0 || j < 0 || i + j > order_) return zero;
    return coeffs_[graded_index(i, j)];
  }

  const C& constant_term() const { return coeffs_[0]; }

  /// Nonzero terms in graded-lex order.
  std::vector<Term> terms() const {
    std::vector<Term> out;
    for_each_nonzero([&](int i, int j, const C& c) { out.push_back(Term{{i, j}, c}); });
    return out;
  }

  template <class Fn>
  void for_each_nonzero(Fn&& fn) const {
    std::size_t k = 0;
    for (int d = 0; d <= order_; ++d) {
      for (int i = 0; i <= d; ++i, ++k) {
        if (!coeff_is_zero(coeffs_[k])) fn(i, d - i, coeffs_[k]);
      }
    }
  }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!coeff_is_zero(c)) return false;
    }
    return true;
  }

  /// Smallest total degree carrying a nonzero coefficient; order()+1 for the zero jet.
  int min_degree() const {
    std::size_t k = 0;
    for (int d = 0; d <= order_; ++d) {
      for (int i = 0; i <= d; ++i, ++k) {
        if (!coeff_is_zero(coeffs_[k])) return d;
      }
    }
    return order_ + 1;
  }

  BasicJet2 homogeneous_part(int degree) const {
    BasicJet2 r(order_);
    if (degree < 0 || degree > order_) return r;
    for (int i = 0; i <= degree; ++i) r.at(i, degree - i) = coeff(i, degree - i);
    return r;
  }

  BasicJet2 truncated(int order) const {
    if (order > order_) throw PreconditionError("cannot truncate a jet to a larger order");
    BasicJet2 r(order);
    std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(triangle_size(order)), r.coeffs_.begin());
    return r;
  }

  /// Same polynomial viewed at a larger order (exact polynomials only).
  BasicJet2 padded(int order) const {
    if (order <= order_) return truncated(order);
    BasicJet2 r(order);
    std::copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin());
    return r;
  }

  /// d/dx, of order N-1.
  BasicJet2 partial_x() const {
    BasicJet2 r(order_ > 0 ? order_ - 1 : 0);
    for_each_nonzero([&](int i, int j, const C& c) {
      if (i > 0) r.at(i - 1, j) = C(i) * c;
    });
    return r;
  }

  /// d/dy, of order N-1.
  BasicJet2 partial_y() const {
    BasicJet2 r(order_ > 0 ? order_ - 1 : 0);
    for_each_nonzero([&](int i, int j, const C& c) {
      if (j > 0) r.at(i, j - 1) = C(j) * c;
    });
    return r;
  }

  /// Applies `fn` to every coefficient, producing a jet over another ring.
  template <class Fn>
  auto transform(Fn&& fn) const {
    using D = decltype(fn(std::declval<const C&>()));
    BasicJet2<D> r(order_);
    for_each_nonzero([&](int i, int j, const C& c) { r.add_term(i, j, fn(c)); });
    return r;
  }

  BasicJet2 operator-() const {
    BasicJet2 r(order_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = -coeffs_[k];
    return r;
  }

  friend BasicJet2 operator+(const BasicJet2& a, const BasicJet2& b) {
    require_same_order(a, b);
    BasicJet2 r(a.order_);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return r;
  }

  friend BasicJet2 operator-(const BasicJet2& a, const BasicJet2& b) {
    require_same_order(a, b);
    BasicJet2 r(a.order_);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return r;
  }

  /// Cauchy product truncated at the common order.
  friend BasicJet2 operator*(const BasicJet2& a, const BasicJet2& b) {
    require_same_order(a, b);
    const int n = a.order_;
    const auto ta = a.nonzero_entries();
    const auto tb = b.nonzero_entries();
    BasicJet2 r(n);
    for (const auto& ea : ta) {
      for (const auto& eb : tb) {
        if (ea.i + ea.j + eb.i + eb.j > n) break;  // tb is sorted by degree
        r.coeffs_[graded_index(ea.i + eb.i, ea.j + eb.j)] += a.coeffs_[ea.k] * b.coeffs_[eb.k];
      }
    }
    return r;
  }

  friend BasicJet2 operator*(const C& s, const BasicJet2& a) {
    BasicJet2 r(a.order_);
    if (coeff_is_zero(s)) return r;
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
      if (!coeff_is_zero(a.coeffs_[k])) r.coeffs_[k] = s * a.coeffs_[k];
    }
    return r;
  }

  friend bool operator==(const BasicJet2& a, const BasicJet2& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  /// Builder access used while a fresh jet is being assembled.
  void add_term(int i, int j, const C& c) {
    if (i + j <= order_) at(i, j) += c;
  }

 private:
  struct Entry {
    std::size_t k;
    int i;
    int j;
  };

  static void require_same_order(const BasicJet2& a, const BasicJet2& b) {
    if (a.order_ != b.order_) throw OrderMismatch(a.order_, b.order_);
  }

  C& at(int i, int j) { return coeffs_[graded_index(i, j)]; }

  std::vector<Entry> nonzero_entries() const {
    std::vector<Entry> out;
    std::size_t k = 0;
    for (int d = 0; d <= order_; ++d) {
      for (int i = 0; i <= d; ++i, ++k) {
        if (!coeff_is_zero(coeffs_[k])) out.push_back(Entry{k, i, d - i});
      }
    }
    return out;
  }

  int order_;
  std::vector<C> coeffs_;
};

/// a(X, Y) truncated at the common order; X and Y must have zero constant terms.
template <class C>
BasicJet2<C> compose(const BasicJet2<C>& a, const BasicJet2<C>& x, const BasicJet2<C>& y) {
  const int n = a.order();
  if (x.order() != n) throw OrderMismatch(n, x.order());
  if (y.order() != n) throw OrderMismatch(n, y.order());
  if (!coeff_is_zero(x.constant_term()) || !coeff_is_zero(y.constant_term())) {
    throw PreconditionError("composition requires a map with zero constant term");
  }
  std::vector<BasicJet2<C>> ypow;
  ypow.reserve(static_cast<std::size_t>(n) + 1);
  ypow.push_back(BasicJet2<C>::constant(n, C(1)));
  for (int j = 1; j <= n; ++j) ypow.push_back(ypow.back() * y);

  // Horner in X over the slices sum_j a_{ij} Y^j.
  BasicJet2<C> acc(n);
  for (int i = n; i >= 0; --i) {
    BasicJet2<C> slice(n);
    for (int j = 0; i + j <= n; ++j) {
      const C& c = a.coeff(i, j);
      if (!coeff_is_zero(c)) slice = slice + c * ypow[static_cast<std::size_t>(j)];
    }
    acc = (i == n ? acc : acc * x) + slice;
  }
  return acc;
}

extern template class BasicJet2<Rational>;

using Jet2 = BasicJet2<Rational>;

/// 1/a; requires a nonzero constant term.
Jet2 reciprocal(const Jet2& a);

/// a(xy) as a jet of the given order: x^k y^k carries a_k, nothing else is set.
Jet2 substitute_xy(const Jet1& a, int order);

/// k -> a_{k,k}, as a Jet1 of order floor(N/2).
Jet1 diag_part(const Jet2& a);

/// a with its diagonal x^k y^k terms removed.
Jet2 off_diagonal(const Jet2& a);

/// Floating evaluation of the polynomial.
double eval(const Jet2& a, double x, double y);

}  // namespace rnf
