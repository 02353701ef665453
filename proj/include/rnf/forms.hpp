#pragma once

#include <array>
#include <string>
#include <vector>

#include "rnf/cocycle.hpp"
#include "rnf/contactnf.hpp"
#include "rnf/jet2.hpp"
#include "rnf/map_jet.hpp"

namespace rnf {

/// Basis differentials of the solid torus, as bits of a component mask.
enum Differential : unsigned { kDt = 1, kDx = 2, kDy = 4 };

/// Differential form with t-independent jet coefficients on the solid torus.
///
/// Component `mask` multiplies the wedge of the differentials in the mask,
/// taken in the order dt, dx, dy; e.g. mask kDt | kDy is dt^dy.
class FormJet {
 public:
  FormJet(int degree, int order);

  static FormJet function(const Jet2& f);
  /// P dt + Q dx + R dy.
  static FormJet one_form(const Jet2& p, const Jet2& q, const Jet2& r);
  /// A dx^dy + B dt^dx + C dt^dy.
  static FormJet two_form(const Jet2& a, const Jet2& b, const Jet2& c);
  /// V dt^dx^dy.
  static FormJet three_form(const Jet2& v);

  int degree() const { return degree_; }
  int order() const { return order_; }
  const Jet2& coeff(unsigned mask) const { return comps_[mask]; }
  void set(unsigned mask, Jet2 c);
  bool is_zero() const;
  FormJet truncated(int order) const;

  /// Masks of the given degree in canonical order.
  static std::vector<unsigned> masks(int degree);

  friend FormJet operator+(const FormJet& a, const FormJet& b);
  friend FormJet operator-(const FormJet& a, const FormJet& b);
  friend FormJet operator*(const Jet2& f, const FormJet& a);
  friend bool operator==(const FormJet& a, const FormJet& b);

 private:
  int degree_;
  int order_;
  std::array<Jet2, 8> comps_;
};

/// u d/dt + v d/dx + w d/dy.
struct VF3Jet {
  Jet2 u, v, w;

  int order() const { return u.order(); }
  const Jet2& component(unsigned bit) const { return bit == kDt ? u : bit == kDx ? v : w; }
  VF3Jet truncated(int order) const { return {u.truncated(order), v.truncated(order), w.truncated(order)}; }
};

/// Exterior derivative; the result has order N - 1.
FormJet d(const FormJet& f);
FormJet wedge(const FormJet& a, const FormJet& b);
/// Contraction; the field is truncated to the form's order if needed.
FormJet interior(const VF3Jet& v, const FormJet& f);
/// d i_v f + i_v d f, of order N - 1.
FormJet lie(const VF3Jet& v, const FormJet& f);
/// Coefficient of the single component of a 0-form or 3-form.
const Jet2& scalar(const FormJet& f);

/// theta(xy) dt + (x dy - y dx) / 2 at the given disc order.
FormJet contact_form(const ContactNF& c, int order);
/// The disc order used for a contact form: twice the order of theta.
int disc_order(const ContactNF& c);
/// (x dy - y dx) / 2.
FormJet standard_beta(int order);
VF3Jet resonance_field(const ResVF& v, int order);

struct Residual {
  std::string label;
  Jet2 jet;
};

struct CheckReport {
  std::string name;
  bool pass = false;
  /// Jets that must vanish for the check to pass.
  std::vector<Residual> residuals;
  /// Informative jets (e.g. the computed volume density).
  std::vector<Residual> values;
};

/// alpha(X) - 1 and i_X d alpha as exact jets.
CheckReport reeb_check(const ContactNF& c, const ResVF& v);
/// alpha ^ d alpha - roof(xy) dt^dx^dy.
CheckReport volume_identity(const ContactNF& c);

/// tau with d tau = Q dx + R dy and tau(0) = 0, by radial integration.
/// Input must have no dt part and be closed; the result has order N + 1.
Jet2 poincare_primitive(const FormJet& f);

/// For a 1-form on the disc equal to (a - y/2) dx + (b + x/2) dy with
/// a dx + b dy closed, returns tau with input + d tau = (x dy - y dx) / 2.
Jet2 canonical_retime(const FormJet& pullback);

/// Moser normalization of an F-invariant positive density g for a linear
/// hyperbolic F = (lambda x, y / lambda).
///
/// Returns H commuting with F with H^*(g dx^dy) = dx^dy. The constant g(0)
/// is removed by the commuting scaling (x / g(0), y); the rest is the inverse
/// time-1 map of the Moser field f_t d/dx, integrated by Picard iteration
/// with coefficients polynomial in t.
MapJet2 moser_normalize(const Jet2& density, const ResMap& f);

struct TransferResult {
  bool exact = false;
  /// Integral of beta over the periodic orbit.
  Rational period_integral;
  /// f with df = beta when exact.
  Jet2 primitive;
};

/// Primitive of beta = alpha1 - alpha0 on the solid torus, or the period obstruction.
TransferResult contact_transfer(const FormJet& alpha0, const FormJet& alpha1);

/// d(roof(xy)) + xy d(eta(xy)) = 0 for roof = roof_from_eta(eta, c).
CheckReport dr_identity(const Jet1& eta, const Rational& c);
/// L_Y beta = -xy d eta for Y = eta(xy)(x d/dx - y d/dy) and the standard beta.
CheckReport lie_identity(const Jet1& eta);
/// roof(z) + z eta(z) = theta(z) with eta = theta'.
CheckReport tubular_identity(const ContactNF& c);

}  // namespace rnf
