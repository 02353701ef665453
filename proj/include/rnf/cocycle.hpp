#pragma once

#include <string>
#include <utility>

#include "rnf/jet1.hpp"
#include "rnf/jet2.hpp"
#include "rnf/map_jet.hpp"

namespace rnf {

/// Area-preserving hyperbolic map in resonance form
/// (x, y) -> (lambda x omega(xy), lambda^-1 y omega(xy)^-1), lambda > 1, omega(0) = 1.
class ResMap {
 public:
  ResMap(Rational lambda, Jet1 omega);

  const Rational& lambda() const { return lambda_; }
  const Jet1& omega() const { return omega_; }

  /// The induced map jet. Needs omega known through z^floor((order-1)/2).
  MapJet2 to_map(int order) const;

  friend bool operator==(const ResMap&, const ResMap&) = default;

 private:
  Rational lambda_;
  Jet1 omega_;
};

/// phi = resonance_part(xy) + coboundary_part, coboundary_part = transfer o F - transfer.
struct CocycleSplit {
  Jet1 resonance_part;
  Jet2 transfer;
  Jet2 coboundary_part;
};

/// (phi_bar, phi_0) with phi_bar_k = phi_{k,k} and phi_0 = phi - phi_bar(xy).
std::pair<Jet1, Jet2> resonance_split(const Jet2& phi);

/// u o F - u.
Jet2 coboundary(const Jet2& u, const MapJet2& f);
Jet2 coboundary(const Jet2& u, const ResMap& f);

/// The unique zero-diagonal w with w o F - w = phi0 at the jet order.
///
/// Coefficients are fixed in graded-lex order (total degree, then power of x).
/// For F with linear part diag(mu_1, mu_2), the coefficient of x^k y^l in
/// w o F - w is (mu_1^k mu_2^l - 1) w_{k,l} plus terms of w of lower degree, so
/// each w_{k,l} is the current residual divided by that factor. Throws when
/// phi0 has a diagonal term or F is not hyperbolic.
Jet2 solve_coboundary(const Jet2& phi0, const ResMap& f);
/// Same recursion for any map jet with diagonal hyperbolic linear part.
Jet2 solve_coboundary(const Jet2& phi0, const MapJet2& f);

CocycleSplit normalize_cocycle(const Jet2& phi, const ResMap& f);

/// Jet-level cohomology test: diagonal coefficients are complete invariants.
bool is_cohomologous(const Jet2& phi1, const Jet2& phi2, const ResMap& f);

/// r - (u o F - u). With u the transfer of normalize_cocycle(r, F) this is
/// r_bar(xy): the section pushed back along the flow by u has roof r_bar.
Jet2 retime_roof(const Jet2& r, const Jet2& u, const ResMap& f);

/// Result of a tangency computation: either an exact order or "at least N".
struct Tangency {
  int order = 0;
  bool saturated = false;

  std::string to_string() const;
  friend bool operator==(const Tangency&, const Tangency&) = default;
};

/// Largest k such that phi - phi(0) has no terms of degree 1..k.
Tangency tangency_order(const Jet2& phi);

/// Best tangency to a constant reachable by adding coboundaries over F:
/// 2k - 1 for the first k >= 1 with r_{k,k} != 0.
Tangency best_achievable_tangency(const Jet2& r, const ResMap& f);

}  // namespace rnf
