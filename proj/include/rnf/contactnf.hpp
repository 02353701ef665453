#pragma once

#include <array>
#include <vector>

#include "rnf/cocycle.hpp"
#include "rnf/jet1.hpp"

namespace rnf {

/// X = f(xy) (d/dt + x g(xy) d/dx - y g(xy) d/dy) on the solid torus.
/// The two jets may have different orders.
class ResVF {
 public:
  ResVF(Jet1 f, Jet1 g);

  const Jet1& f() const { return f_; }
  const Jet1& g() const { return g_; }

  friend bool operator==(const ResVF&, const ResVF&) = default;

 private:
  Jet1 f_;
  Jet1 g_;
};

/// alpha = theta(xy) dt + (x dy - y dx) / 2, with theta(0) > 0 and theta'(0) > 0.
class ContactNF {
 public:
  explicit ContactNF(Jet1 theta);

  const Jet1& theta() const { return theta_; }
  int order() const { return theta_.order(); }

  friend bool operator==(const ContactNF&, const ContactNF&) = default;

 private:
  Jet1 theta_;
};

struct InvariantReport {
  Rational period;
  /// Positive and negative Lyapunov exponents of the periodic orbit.
  Rational lyapunov_plus;
  Rational lyapunov_minus;
  /// Return time to the section, as a function of z = xy.
  Jet1 roof;
  Rational anosov_class;
  Rational fh_class;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

InvariantReport vf_invariants(const ResVF& v);
InvariantReport contact_invariants(const ContactNF& c);

/// theta - z theta'.
Jet1 contact_roof(const Jet1& theta);

/// f = 1 / (theta - z theta'), g = theta'.
ResVF reeb_field(const ContactNF& c);

using Point3 = std::array<double, 3>;
using Point2 = std::array<double, 2>;

/// Points with |xy| above this are refused by the closed-form evaluators.
inline constexpr double kDefaultRadius = 0.25;

/// Closed-form flow (s + f t, e^{t f g} x, e^{-t f g} y), f and g taken at xy.
Point3 flow_eval(const ResVF& v, double t, const Point3& p, double radius = kDefaultRadius);

/// Return map of the section t = 0: x -> x exp(g(xy)), y -> y exp(-g(xy)).
/// The multiplier exp(g(0)) is kept as its exact logarithm.
struct SectionMap {
  Rational log_lambda;
  /// exp(g - g(0)), the exact jet cofactor of the multiplier.
  Jet1 omega;
};

SectionMap section_map(const ResVF& v);
/// -omega'(0).
Rational anosov_class(const SectionMap& s);
/// Numeric application of the section map.
Point2 section_map_eval(const SectionMap& s, const Point2& p);
/// (e^{t g(xy)} x, e^{-t g(xy)} y).
Point2 section_flow_eval(const Jet1& g, double t, const Point2& p, double radius = kDefaultRadius);

/// c + integral of eta - z eta, of order eta.order() + 1.
Jet1 roof_from_eta(const Jet1& eta, const Rational& c);
/// Inverse of roof_from_eta for roofs with vanishing linear coefficient.
Jet1 eta_from_roof(const Jet1& roof, const Rational& eta0);

struct LinearizabilityReport {
  bool linear = false;
  /// Indices k >= 2 with theta_k != 0.
  std::vector<int> offending;
};

LinearizabilityReport linearizability_decide(const ContactNF& c);

/// The contact form with the given roof jet, period and positive Lyapunov exponent.
ContactNF base_roof_reconstruct(const Jet1& roof, const Rational& period, const Rational& lyapunov_plus);

}  // namespace rnf
