#include "rnf/cocycle.hpp"

#include <utility>

#include "rnf/errors.hpp"

namespace rnf {

ResMap::ResMap(Rational lambda, Jet1 omega) : lambda_(std::move(lambda)), omega_(std::move(omega)) {
  if (lambda_ <= 1) throw PreconditionError("resonance map needs lambda > 1");
  if (omega_[0] != 1) throw PreconditionError("resonance map needs omega(0) = 1");
}

MapJet2 ResMap::to_map(int order) const {
  if (omega_.order() < (order - 1) / 2) {
    throw PreconditionError("omega of order " + std::to_string(omega_.order()) +
                            " does not determine a map jet of order " + std::to_string(order));
  }
  const Jet2 w = substitute_xy(omega_, order);
  return MapJet2(lambda_ * (Jet2::x(order) * w), (Rational(1) / lambda_) * (Jet2::y(order) * reciprocal(w)));
}

std::pair<Jet1, Jet2> resonance_split(const Jet2& phi) { return {diag_part(phi), off_diagonal(phi)}; }

Jet2 coboundary(const Jet2& u, const MapJet2& f) { return compose(u, f) - u; }

Jet2 coboundary(const Jet2& u, const ResMap& f) { return coboundary(u, f.to_map(u.order())); }

Jet2 solve_coboundary(const Jet2& phi0, const MapJet2& f) {
  const int n = phi0.order();
  if (f.order() != n) throw OrderMismatch(n, f.order());
  const Mat2Q lin = f.linear_part();
  if (!is_zero(lin.b) || !is_zero(lin.c)) throw PreconditionError("solve_coboundary needs a diagonal linear part");
  const Rational& mu1 = lin.a;
  const Rational& mu2 = lin.d;
  for (int k = 0; 2 * k <= n; ++k) {
    if (!is_zero(phi0.coeff(k, k))) throw PreconditionError("solve_coboundary input has a diagonal term");
  }

  Jet2 w(n);
  for (int d = 1; d <= n; ++d) {
    const Jet2 residual = phi0 - coboundary(w, f);
    Jet2 step(n);
    for (int i = 0; i <= d; ++i) {
      const int j = d - i;
      const Rational& c = residual.coeff(i, j);
      if (is_zero(c)) continue;
      const Rational factor = pow(mu1, i) * pow(mu2, j) - 1;
      if (is_zero(factor)) {
        throw PreconditionError("resonant term x^" + std::to_string(i) + " y^" + std::to_string(j) +
                                " cannot be removed by a coboundary");
      }
      step.add_term(i, j, c / factor);
    }
    w = w + step;
  }
  return w;
}

Jet2 solve_coboundary(const Jet2& phi0, const ResMap& f) { return solve_coboundary(phi0, f.to_map(phi0.order())); }

CocycleSplit normalize_cocycle(const Jet2& phi, const ResMap& f) {
  auto [bar, phi0] = resonance_split(phi);
  Jet2 w = solve_coboundary(phi0, f);
  return CocycleSplit{std::move(bar), std::move(w), std::move(phi0)};
}

bool is_cohomologous(const Jet2& phi1, const Jet2& phi2, const ResMap&) {
  if (phi1.order() != phi2.order()) throw OrderMismatch(phi1.order(), phi2.order());
  return diag_part(phi1) == diag_part(phi2);
}

Jet2 retime_roof(const Jet2& r, const Jet2& u, const ResMap& f) { return r - coboundary(u, f); }

std::string Tangency::to_string() const {
  return saturated ? ">=" + std::to_string(order) : std::to_string(order);
}

Tangency tangency_order(const Jet2& phi) {
  int lowest = phi.order() + 1;
  phi.for_each_nonzero([&](int i, int j, const Rational&) {
    if (i + j >= 1 && i + j < lowest) lowest = i + j;
  });
  if (lowest > phi.order()) return Tangency{phi.order(), true};
  return Tangency{lowest - 1, false};
}

Tangency best_achievable_tangency(const Jet2& r, const ResMap&) {
  for (int k = 1; 2 * k <= r.order(); ++k) {
    if (!is_zero(r.coeff(k, k))) return Tangency{2 * k - 1, false};
  }
  return Tangency{r.order(), true};
}

}  // namespace rnf
