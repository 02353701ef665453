#include "rnf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rnf/errors.hpp"

namespace rnf {

Mat2 operator*(const Mat2& l, const Mat2& r) {
  return Mat2{l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

double max_entry_diff(const Mat2& l, const Mat2& r) {
  return std::max({std::abs(l.a - r.a), std::abs(l.b - r.b), std::abs(l.c - r.c), std::abs(l.d - r.d)});
}

namespace {

Point3 field_at(const ResVF& v, const Point3& p) {
  const double z = p[1] * p[2];
  const double f = v.f().eval(z);
  const double fg = f * v.g().eval(z);
  return {f, fg * p[1], -fg * p[2]};
}

Point3 axpy(const Point3& p, double h, const Point3& k) { return {p[0] + h * k[0], p[1] + h * k[1], p[2] + h * k[2]}; }

Point3 rk4_step(const ResVF& v, const Point3& p, double h) {
  const Point3 k1 = field_at(v, p);
  const Point3 k2 = field_at(v, axpy(p, h / 2, k1));
  const Point3 k3 = field_at(v, axpy(p, h / 2, k2));
  const Point3 k4 = field_at(v, axpy(p, h, k3));
  Point3 out;
  for (int i = 0; i < 3; ++i) out[i] = p[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return out;
}

double max_norm_diff(const Point3& a, const Point3& b) {
  return std::max({std::abs(a[0] - b[0]), std::abs(a[1] - b[1]), std::abs(a[2] - b[2])});
}

int steps_for(double t, double step) {
  if (!(step > 0)) throw PreconditionError("RK4 step must be positive");
  return std::max(1, static_cast<int>(std::ceil(std::abs(t) / step - 1e-9)));
}

}  // namespace

Point3 rk4_flow(const ResVF& v, double t, const Point3& p, double step, double radius) {
  if (!(std::abs(p[1] * p[2]) <= radius)) throw PreconditionError("start point outside the evaluation radius");
  const int n = steps_for(t, step);
  const double h = t / n;
  Point3 q = p;
  for (int k = 0; k < n; ++k) q = rk4_step(v, q, h);
  if (!(std::abs(q[1] * q[2]) <= radius)) throw PreconditionError("trajectory left the evaluation radius");
  return q;
}

double flow_discrepancy(const ResVF& v, const Point3& p, double t_end, double step) {
  const int n = steps_for(t_end, step);
  const double h = t_end / n;
  Point3 q = p;
  double worst = 0;
  for (int k = 1; k <= n; ++k) {
    q = rk4_step(v, q, h);
    worst = std::max(worst, max_norm_diff(q, flow_eval(v, k * h, p)));
  }
  return worst;
}

double tail_estimate(const Jet1& a, double z) {
  const int n = a.order();
  const double az = std::abs(z);
  if (az == 0) return 0;
  double rho = 0;
  for (int k = 1; k <= n; ++k) rho = std::max(rho, std::pow(std::abs(to_double(a[k])), 1.0 / k));
  const double q = rho * az;
  if (q >= 1) return std::numeric_limits<double>::infinity();
  return std::pow(q, n + 1) / (1 - q);
}

FdReebReport fd_reeb_check(const ContactNF& c, const ResVF& field, const std::vector<Point2>& samples, double h) {
  const Jet1& theta = c.theta();
  const Jet1 roof = contact_roof(theta);
  auto p_coeff = [&](double x, double y) { return theta.eval(x * y); };
  FdReebReport rep;
  for (const auto& [x, y] : samples) {
    const double z = x * y;
    const double f = field.f().eval(z);
    const double fg = f * field.g().eval(z);
    const double xt = f, xx = fg * x, xy = -fg * y;
    // alpha = P dt + Q dx + R dy with Q = -y/2, R = x/2.
    const double alpha_x = p_coeff(x, y) * xt - y / 2 * xx + x / 2 * xy - 1;
    const double px = (p_coeff(x + h, y) - p_coeff(x - h, y)) / (2 * h);
    const double py = (p_coeff(x, y + h) - p_coeff(x, y - h)) / (2 * h);
    const double rx = ((x + h) / 2 - (x - h) / 2) / (2 * h);
    const double qy = (-(y + h) / 2 + (y - h) / 2) / (2 * h);
    // d alpha = A dx^dy + B dt^dx + C dt^dy.
    const double a = rx - qy, b = -px, cc = -py;
    const double idt = -b * xx - cc * xy;
    const double idx = -a * xy + b * xt;
    const double idy = a * xx + cc * xt;
    rep.max_residual = std::max({rep.max_residual, std::abs(alpha_x), std::abs(idt), std::abs(idx), std::abs(idy)});
    rep.tail_bound = std::max(rep.tail_bound, tail_estimate(reciprocal(roof), z));
  }
  return rep;
}

Mat2 sl2_section(double x, double y) {
  if (!(1 + x * y > 0)) throw PreconditionError("sl2 section needs 1 + xy > 0");
  const double s = std::sqrt(1 + x * y);
  return Mat2{s, x, y, s};
}

Mat2 sl2_geodesic(double t) { return Mat2{std::exp(t / 2), 0, 0, std::exp(-t / 2)}; }

Sl2Report sl2_check(double t, const std::vector<Point2>& points, int jet_order) {
  if (!(t > 0)) throw PreconditionError("sl2 period must be positive");
  const Mat2 g = sl2_geodesic(t);
  const Mat2 gamma = g;
  const double et = std::exp(t);
  Sl2Report rep{0, 0, 0, Rational(t), ContactNF(Jet1(jet_order, {Rational(t), Rational(t)})), false, Jet1(), false};
  for (const auto& [x, y] : points) {
    const Mat2 p = sl2_section(x, y);
    const Mat2 lhs = g * p;
    const Mat2 rhs = sl2_section(et * x, y / et) * gamma;
    rep.max_entry_error = std::max(rep.max_entry_error, max_entry_diff(lhs, rhs));
    rep.max_det_error = std::max(rep.max_det_error, std::abs(p.det() - 1));
    ++rep.samples;
  }
  rep.linearizable = linearizability_decide(rep.contact).linear;
  rep.roof = contact_invariants(rep.contact).roof;
  rep.constant_roof = rep.roof.is_constant();
  return rep;
}

}  // namespace rnf
