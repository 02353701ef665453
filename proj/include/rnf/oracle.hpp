#pragma once

#include <vector>

#include "rnf/contactnf.hpp"

namespace rnf {

/// 2x2 matrix of doubles [[a, b], [c, d]].
struct Mat2 {
  double a = 1, b = 0, c = 0, d = 1;

  double det() const { return a * d - b * c; }
  friend Mat2 operator*(const Mat2& l, const Mat2& r);
};

/// Largest entrywise absolute difference.
double max_entry_diff(const Mat2& l, const Mat2& r);

/// Classical RK4 for the resonance field, with the largest step <= `step`
/// that divides t evenly.
Point3 rk4_flow(const ResVF& v, double t, const Point3& p, double step, double radius = kDefaultRadius);

/// sup over the RK4 grid on [0, t_end] of the max-norm distance between the
/// RK4 trajectory and the closed-form flow.
double flow_discrepancy(const ResVF& v, const Point3& p, double t_end, double step);

/// Root-test estimate of the omitted tail sum_{k > N} a_k z^k of a jet,
/// extrapolating the growth of the known coefficients. Infinite when the
/// extrapolated series does not converge at z.
double tail_estimate(const Jet1& a, double z);

struct FdReebReport {
  /// Max over samples of |alpha(X) - 1| and of the components of i_X dalpha.
  double max_residual = 0;
  /// Truncation budget from tail_estimate of the roof reciprocal.
  double tail_bound = 0;
};

/// Numeric Reeb conditions for the Reeb field of c at sample points (x, y),
/// with d alpha from central differences of step h.
FdReebReport fd_reeb_check(const ContactNF& c, const ResVF& field, const std::vector<Point2>& samples,
                           double h = 1e-5);

struct Sl2Report {
  double max_entry_error = 0;
  double max_det_error = 0;
  int samples = 0;
  /// T as an exact binary rational.
  Rational period;
  ContactNF contact;
  bool linearizable = false;
  Jet1 roof;
  bool constant_roof = false;
};

/// p(x, y) = [[sqrt(1+xy), x], [y, sqrt(1+xy)]]; needs 1 + xy > 0.
Mat2 sl2_section(double x, double y);
/// diag(e^{T/2}, e^{-T/2}).
Mat2 sl2_geodesic(double t);

/// Checks g_T p(x, y) = p(e^T x, e^{-T} y) gamma with gamma = g_T at each
/// point, and reports the contact jet T(1 + z) of the induced flow.
Sl2Report sl2_check(double t, const std::vector<Point2>& points, int jet_order = 8);

}  // namespace rnf
