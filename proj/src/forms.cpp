#include "rnf/forms.hpp"

#include <bit>
#include <utility>

#include "rnf/errors.hpp"
#include "rnf/poly.hpp"

namespace rnf {

namespace {

constexpr unsigned kBits[3] = {kDt, kDx, kDy};

int popcount(unsigned m) { return std::popcount(m); }

int sign_of(int parity) { return parity % 2 == 0 ? 1 : -1; }

void require_same_order(const FormJet& a, const FormJet& b) {
  if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
}

Jet2 signed_jet(int sign, const Jet2& j) { return sign > 0 ? j : -j; }

}  // namespace

FormJet::FormJet(int degree, int order) : degree_(degree), order_(order) {
  if (degree < 0 || degree > 3) throw PreconditionError("form degree must be 0..3");
  comps_.fill(Jet2(order));
}

FormJet FormJet::function(const Jet2& f) {
  FormJet r(0, f.order());
  r.set(0, f);
  return r;
}

FormJet FormJet::one_form(const Jet2& p, const Jet2& q, const Jet2& r) {
  FormJet out(1, p.order());
  out.set(kDt, p);
  out.set(kDx, q);
  out.set(kDy, r);
  return out;
}

FormJet FormJet::two_form(const Jet2& a, const Jet2& b, const Jet2& c) {
  FormJet out(2, a.order());
  out.set(kDx | kDy, a);
  out.set(kDt | kDx, b);
  out.set(kDt | kDy, c);
  return out;
}

FormJet FormJet::three_form(const Jet2& v) {
  FormJet out(3, v.order());
  out.set(kDt | kDx | kDy, v);
  return out;
}

void FormJet::set(unsigned mask, Jet2 c) {
  if (mask > 7 || popcount(mask) != degree_) throw PreconditionError("component does not match the form degree");
  if (c.order() != order_) throw OrderMismatch(order_, c.order());
  comps_[mask] = std::move(c);
}

bool FormJet::is_zero() const {
  for (const auto& c : comps_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

FormJet FormJet::truncated(int order) const {
  FormJet r(degree_, order);
  for (unsigned m = 0; m < 8; ++m) r.comps_[m] = comps_[m].truncated(order);
  return r;
}

std::vector<unsigned> FormJet::masks(int degree) {
  switch (degree) {
    case 0: return {0};
    case 1: return {kDt, kDx, kDy};
    case 2: return {kDx | kDy, kDt | kDx, kDt | kDy};
    case 3: return {kDt | kDx | kDy};
    default: return {};
  }
}

FormJet operator+(const FormJet& a, const FormJet& b) {
  require_same_order(a, b);
  if (a.degree_ != b.degree_) throw PreconditionError("adding forms of different degree");
  FormJet r(a.degree_, a.order_);
  for (unsigned m = 0; m < 8; ++m) r.comps_[m] = a.comps_[m] + b.comps_[m];
  return r;
}

FormJet operator-(const FormJet& a, const FormJet& b) {
  require_same_order(a, b);
  if (a.degree_ != b.degree_) throw PreconditionError("subtracting forms of different degree");
  FormJet r(a.degree_, a.order_);
  for (unsigned m = 0; m < 8; ++m) r.comps_[m] = a.comps_[m] - b.comps_[m];
  return r;
}

FormJet operator*(const Jet2& f, const FormJet& a) {
  if (f.order() != a.order_) throw OrderMismatch(a.order_, f.order());
  FormJet r(a.degree_, a.order_);
  for (unsigned m = 0; m < 8; ++m) r.comps_[m] = f * a.comps_[m];
  return r;
}

bool operator==(const FormJet& a, const FormJet& b) {
  return a.degree_ == b.degree_ && a.order_ == b.order_ && a.comps_ == b.comps_;
}

FormJet d(const FormJet& f) {
  if (f.degree() >= 3) throw PreconditionError("d of a 3-form on a 3-manifold");
  const int n = f.order() > 0 ? f.order() - 1 : 0;
  FormJet out(f.degree() + 1, n);
  for (unsigned s : FormJet::masks(f.degree())) {
    const Jet2& c = f.coeff(s);
    if (c.is_zero()) continue;
    for (unsigned v : {kDx, kDy}) {
      if (s & v) continue;
      // dv ^ dS = (-1)^{#(S below v)} d(S + v)
      const int sign = sign_of(popcount(s & (v - 1)));
      const Jet2 partial = v == kDx ? c.partial_x() : c.partial_y();
      out.set(s | v, out.coeff(s | v) + signed_jet(sign, partial));
    }
  }
  return out;
}

FormJet wedge(const FormJet& a, const FormJet& b) {
  require_same_order(a, b);
  if (a.degree() + b.degree() > 3) throw PreconditionError("wedge degree exceeds 3");
  FormJet out(a.degree() + b.degree(), a.order());
  for (unsigned s : FormJet::masks(a.degree())) {
    if (a.coeff(s).is_zero()) continue;
    for (unsigned t : FormJet::masks(b.degree())) {
      if ((s & t) != 0 || b.coeff(t).is_zero()) continue;
      int inversions = 0;
      for (unsigned bit : kBits) {
        if (t & bit) inversions += popcount(s & ~((bit << 1) - 1));
      }
      out.set(s | t, out.coeff(s | t) + signed_jet(sign_of(inversions), a.coeff(s) * b.coeff(t)));
    }
  }
  return out;
}

FormJet interior(const VF3Jet& v, const FormJet& f) {
  if (f.degree() == 0) throw PreconditionError("contraction of a 0-form");
  if (v.order() < f.order()) throw OrderMismatch(f.order(), v.order());
  const VF3Jet field = v.order() == f.order() ? v : v.truncated(f.order());
  FormJet out(f.degree() - 1, f.order());
  for (unsigned s : FormJet::masks(f.degree())) {
    if (f.coeff(s).is_zero()) continue;
    int position = 0;
    for (unsigned bit : kBits) {
      if (!(s & bit)) continue;
      const unsigned rest = s & ~bit;
      out.set(rest, out.coeff(rest) + signed_jet(sign_of(position), field.component(bit) * f.coeff(s)));
      ++position;
    }
  }
  return out;
}

FormJet lie(const VF3Jet& v, const FormJet& f) {
  if (f.degree() == 0) return interior(v, d(f));
  if (f.degree() == 3) return d(interior(v, f));
  return d(interior(v, f)) + interior(v, d(f));
}

const Jet2& scalar(const FormJet& f) {
  if (f.degree() == 0) return f.coeff(0);
  if (f.degree() == 3) return f.coeff(kDt | kDx | kDy);
  throw PreconditionError("scalar() needs a 0-form or a 3-form");
}

int disc_order(const ContactNF& c) { return 2 * c.order(); }

FormJet standard_beta(int order) {
  const Rational half(1, 2);
  return FormJet::one_form(Jet2(order), -half * Jet2::y(order), half * Jet2::x(order));
}

FormJet contact_form(const ContactNF& c, int order) {
  FormJet a = standard_beta(order);
  a.set(kDt, substitute_xy(c.theta(), order));
  return a;
}

VF3Jet resonance_field(const ResVF& v, int order) {
  const Jet2 f = substitute_xy(v.f(), order);
  const Jet2 fg = f * substitute_xy(v.g(), order);
  return VF3Jet{f, fg * Jet2::x(order), -(fg * Jet2::y(order))};
}

CheckReport reeb_check(const ContactNF& c, const ResVF& v) {
  const int n = disc_order(c);
  const FormJet alpha = contact_form(c, n);
  const VF3Jet x = resonance_field(v, n);
  CheckReport r{"reeb", false, {}, {}};
  r.residuals.push_back({"alpha(X) - 1", scalar(interior(x, alpha)) - Jet2::constant(n, Rational(1))});
  const FormJet contraction = interior(x, d(alpha));
  r.residuals.push_back({"i_X dalpha [dt]", contraction.coeff(kDt)});
  r.residuals.push_back({"i_X dalpha [dx]", contraction.coeff(kDx)});
  r.residuals.push_back({"i_X dalpha [dy]", contraction.coeff(kDy)});
  r.pass = true;
  for (const auto& res : r.residuals) r.pass = r.pass && res.jet.is_zero();
  return r;
}

CheckReport volume_identity(const ContactNF& c) {
  const int n = disc_order(c);
  const FormJet alpha = contact_form(c, n);
  const FormJet dalpha = d(alpha);
  const Jet2 volume = scalar(wedge(alpha.truncated(n - 1), dalpha));
  const Jet2 roof = substitute_xy(contact_roof(c.theta()), n - 1);
  CheckReport r{"volume", false, {}, {}};
  r.residuals.push_back({"alpha^dalpha - roof dt^dx^dy", volume - roof});
  r.values.push_back({"alpha^dalpha density", volume});
  r.pass = r.residuals.front().jet.is_zero();
  return r;
}

Jet2 poincare_primitive(const FormJet& f) {
  if (f.degree() != 1) throw PreconditionError("poincare_primitive needs a 1-form");
  if (!f.coeff(kDt).is_zero()) throw PreconditionError("poincare_primitive needs a form without dt part");
  if (!d(f).is_zero()) throw PreconditionError("form is not closed");
  const int n = f.order();
  Jet2 tau(n + 1);
  f.coeff(kDx).for_each_nonzero([&](int i, int j, const Rational& c) { tau.add_term(i + 1, j, c / (i + j + 1)); });
  f.coeff(kDy).for_each_nonzero([&](int i, int j, const Rational& c) { tau.add_term(i, j + 1, c / (i + j + 1)); });
  return tau;
}

Jet2 canonical_retime(const FormJet& pullback) {
  if (pullback.degree() != 1) throw PreconditionError("canonical_retime needs a 1-form");
  if (!pullback.coeff(kDt).is_zero()) throw PreconditionError("canonical_retime needs a form on the disc (no dt part)");
  const int n = pullback.order();
  const FormJet correction = pullback - standard_beta(n);
  if (!d(correction).is_zero()) {
    throw PreconditionError("a dx + b dy is not closed (d of the input is not dx^dy)");
  }
  FormJet negated(1, n);
  negated.set(kDx, -correction.coeff(kDx));
  negated.set(kDy, -correction.coeff(kDy));
  return poincare_primitive(negated);
}

namespace {

using PolyJet = BasicJet2<Poly>;

PolyJet lift(const Jet2& a) {
  return a.transform([](const Rational& c) { return Poly(c); });
}

PolyJet integrate_in_t(const PolyJet& a) {
  return a.transform([](const Poly& c) { return c.integral(); });
}

}  // namespace

MapJet2 moser_normalize(const Jet2& density, const ResMap& f) {
  const int n = density.order();
  if (n < 1) throw PreconditionError("density jet must have order >= 1");
  if (!f.omega().is_constant()) {
    throw PreconditionError("moser_normalize needs a linear map (omega = 1); the commuting Moser field does not exist "
                            "for nonlinear resonance maps");
  }
  const Rational g0 = density.constant_term();
  if (g0 <= 0) throw PreconditionError("density must be positive at the origin");
  const MapJet2 lin = MapJet2::linear(n, Mat2Q{f.lambda(), Rational(0), Rational(0), Rational(1) / f.lambda()});
  if (!(compose(density, lin) == density)) throw PreconditionError("density is not invariant under F");

  // Remove g(0) with a scaling that commutes with F.
  const MapJet2 scale = MapJet2::linear(n, Mat2Q{Rational(1) / g0, Rational(0), Rational(0), Rational(1)});
  const Jet2 g = (Rational(1) / g0) * compose(density, scale);
  const Jet2 q = g - Jet2::constant(n, Rational(1));

  // f_t = (int_0^x g - x) / (1 + (1 - t)(g - 1)), polynomial in t at jet level.
  Jet2 primitive(n);
  q.for_each_nonzero([&](int i, int j, const Rational& c) { primitive.add_term(i + 1, j, c / (i + 1)); });
  const PolyJet qp = lift(q);
  const Poly step = -(Poly(1) - Poly::t());
  PolyJet series = PolyJet::constant(n, Poly(1));
  PolyJet term = series;
  for (int k = 1; k <= n; ++k) {
    term = step * (term * qp);
    if (term.is_zero()) break;
    series = series + term;
  }
  const PolyJet field = lift(primitive) * series;

  // Picard iteration for dX/dt = f_t(X, y), X(0) = x. Each pass fixes one more degree.
  const PolyJet x0 = PolyJet::x(n);
  const PolyJet y0 = PolyJet::y(n);
  PolyJet x = x0;
  for (int iter = 0; iter <= n + 1; ++iter) {
    PolyJet next = x0 + integrate_in_t(compose(field, x, y0));
    if (next == x) break;
    x = std::move(next);
  }
  const Jet2 x1 = x.transform([](const Poly& c) { return c.eval(Rational(1)); });
  const MapJet2 flow(x1, Jet2::y(n));
  MapJet2 h = compose_map(scale, invert_map(flow));

  if (!(compose_map(h, lin) == compose_map(lin, h))) {
    throw Error("moser_normalize: result does not commute with F (internal error)");
  }
  const Jet2 pulled = compose(density, h).truncated(n - 1) * det_jacobian(h);
  if (!(pulled == Jet2::constant(n - 1, Rational(1)))) {
    throw Error("moser_normalize: H^*(g dx^dy) != dx^dy (internal error)");
  }
  return h;
}

TransferResult contact_transfer(const FormJet& alpha0, const FormJet& alpha1) {
  if (alpha0.degree() != 1 || alpha1.degree() != 1) throw PreconditionError("contact_transfer needs 1-forms");
  const FormJet beta = alpha1 - alpha0;
  if (!d(beta).is_zero()) throw PreconditionError("alpha1 - alpha0 is not closed");
  TransferResult r;
  r.period_integral = beta.coeff(kDt).constant_term();
  if (!is_zero(r.period_integral)) {
    r.exact = false;
    r.primitive = Jet2(beta.order() + 1);
    return r;
  }
  FormJet disc = beta;
  disc.set(kDt, Jet2(beta.order()));
  r.exact = true;
  r.primitive = poincare_primitive(disc);
  return r;
}

namespace {

CheckReport finish(CheckReport r) {
  r.pass = true;
  for (const auto& res : r.residuals) r.pass = r.pass && res.jet.is_zero();
  return r;
}

}  // namespace

CheckReport dr_identity(const Jet1& eta, const Rational& c) {
  const Jet1 roof = roof_from_eta(eta, c);
  const int n = 2 * roof.order();
  const FormJet dr = d(FormJet::function(substitute_xy(roof, n)));
  const FormJet deta = d(FormJet::function(substitute_xy(eta, n)));
  const FormJet sum = dr + Jet2::monomial(n - 1, 1, 1) * deta;
  return finish(CheckReport{"dr", false, {{"dr + xy deta [dx]", sum.coeff(kDx)}, {"dr + xy deta [dy]", sum.coeff(kDy)}}, {}});
}

CheckReport lie_identity(const Jet1& eta) {
  const int n = 2 * eta.order() + 2;
  const Jet2 e = substitute_xy(eta, n);
  const VF3Jet y{Jet2(n), e * Jet2::x(n), -(e * Jet2::y(n))};
  const FormJet lhs = lie(y, standard_beta(n));
  const FormJet rhs = Jet2::monomial(n - 1, 1, 1) * d(FormJet::function(e));
  const FormJet diff = lhs + rhs;
  return finish(CheckReport{"lie", false, {{"L_Y beta + xy deta [dx]", diff.coeff(kDx)},
                                          {"L_Y beta + xy deta [dy]", diff.coeff(kDy)},
                                          {"L_Y beta [dt]", diff.coeff(kDt)}},
                            {}});
}

CheckReport tubular_identity(const ContactNF& c) {
  const Jet1& theta = c.theta();
  const Jet1 eta = theta.order() > 0 ? theta.derivative() : Jet1(0);
  const Jet1 lhs = contact_roof(theta) + (theta.order() > 0 ? eta.times_z() : Jet1(0));
  return finish(CheckReport{"tubular", false, {{"roof + z eta - theta", substitute_xy(lhs - theta, disc_order(c))}}, {}});
}

}  // namespace rnf
