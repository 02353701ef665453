#include "rnf/contactnf.hpp"

#include <cmath>
#include <string>

#include "rnf/errors.hpp"

namespace rnf {

ResVF::ResVF(Jet1 f, Jet1 g) : f_(std::move(f)), g_(std::move(g)) {
  if (f_[0] <= 0) throw PreconditionError("resonance field needs f(0) > 0");
  if (g_[0] <= 0) throw PreconditionError("resonance field needs g(0) > 0");
}

ContactNF::ContactNF(Jet1 theta) : theta_(std::move(theta)) {
  if (theta_[0] <= 0) throw PreconditionError("contact form needs theta(0) > 0");
  if (theta_[1] <= 0) throw PreconditionError("contact form needs theta'(0) > 0");
}

InvariantReport vf_invariants(const ResVF& v) {
  const Jet1& f = v.f();
  const Jet1& g = v.g();
  InvariantReport r;
  r.period = Rational(1) / f[0];
  r.lyapunov_plus = g[0] * f[0];
  r.lyapunov_minus = -r.lyapunov_plus;
  r.roof = reciprocal(f);
  r.anosov_class = -g[1];
  r.fh_class = f[1] / f[0];
  return r;
}

Jet1 contact_roof(const Jet1& theta) {
  std::vector<Rational> r(theta.coeffs());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] *= Rational(1 - static_cast<long>(k));
  return Jet1(theta.order(), std::move(r));
}

InvariantReport contact_invariants(const ContactNF& c) {
  const Jet1& th = c.theta();
  InvariantReport r;
  r.period = th[0];
  r.lyapunov_plus = th[1] / th[0];
  r.lyapunov_minus = -r.lyapunov_plus;
  r.roof = contact_roof(th);
  r.anosov_class = -2 * th[2];
  r.fh_class = r.roof[1];
  return r;
}

ResVF reeb_field(const ContactNF& c) {
  const Jet1 roof = contact_roof(c.theta());
  if (roof[0] <= 0) throw PreconditionError("nonpositive period");
  return ResVF(reciprocal(roof), c.theta().derivative());
}

namespace {

void check_radius(double x, double y, double radius) {
  if (!(std::abs(x * y) <= radius)) {
    throw PreconditionError("point outside the evaluation radius |xy| <= " + std::to_string(radius));
  }
}

}  // namespace

Point3 flow_eval(const ResVF& v, double t, const Point3& p, double radius) {
  const auto [s, x, y] = p;
  check_radius(x, y, radius);
  const double z = x * y;
  const double f = v.f().eval(z);
  const double rate = t * f * v.g().eval(z);
  return {s + f * t, std::exp(rate) * x, std::exp(-rate) * y};
}

SectionMap section_map(const ResVF& v) {
  const Jet1& g = v.g();
  return SectionMap{g[0], exp(g - Jet1::constant(g.order(), g[0]))};
}

Rational anosov_class(const SectionMap& s) { return -s.omega[1]; }

Point2 section_map_eval(const SectionMap& s, const Point2& p) {
  const double lambda = std::exp(to_double(s.log_lambda));
  const double w = s.omega.eval(p[0] * p[1]);
  return {lambda * p[0] * w, p[1] / (lambda * w)};
}

Point2 section_flow_eval(const Jet1& g, double t, const Point2& p, double radius) {
  check_radius(p[0], p[1], radius);
  const double rate = t * g.eval(p[0] * p[1]);
  return {std::exp(rate) * p[0], std::exp(-rate) * p[1]};
}

Jet1 roof_from_eta(const Jet1& eta, const Rational& c) {
  const int n = eta.order() + 1;
  std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
  r[0] = c;
  for (int k = 1; k <= n; ++k) r[k] = make_rational(1 - k, k) * eta[k - 1];
  return Jet1(n, std::move(r));
}

Jet1 eta_from_roof(const Jet1& roof, const Rational& eta0) {
  if (!is_zero(roof[1])) {
    throw PreconditionError("roof has nonzero linear coefficient " + to_string(roof[1]) +
                            " (Foulon-Hasselblatt obstruction): not the roof of a contact form");
  }
  const int n = roof.order() > 0 ? roof.order() - 1 : 0;
  std::vector<Rational> eta(static_cast<std::size_t>(n) + 1);
  eta[0] = eta0;
  for (int k = 1; k <= n; ++k) {
    eta[k] = make_rational(-(k + 1), k) * roof[k + 1];
  }
  return Jet1(n, std::move(eta));
}

LinearizabilityReport linearizability_decide(const ContactNF& c) {
  LinearizabilityReport r;
  for (int k = 2; k <= c.order(); ++k) {
    if (!is_zero(c.theta()[k])) r.offending.push_back(k);
  }
  r.linear = r.offending.empty();
  return r;
}

ContactNF base_roof_reconstruct(const Jet1& roof, const Rational& period, const Rational& lyapunov_plus) {
  if (roof[0] != period) {
    throw PreconditionError("roof(0) = " + to_string(roof[0]) + " differs from the period " + to_string(period));
  }
  if (roof.order() < 1) throw PreconditionError("roof jet must have order >= 1");
  const Jet1 eta = eta_from_roof(roof, lyapunov_plus * period);
  return ContactNF(eta.antiderivative(period));
}

}  // namespace rnf
