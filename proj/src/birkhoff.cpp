#include "rnf/birkhoff.hpp"

#include <utility>

#include "rnf/errors.hpp"

namespace rnf {

namespace {

/// Eigenvector of `a` for eigenvalue `mu`.
std::pair<Rational, Rational> eigenvector(const Mat2Q& a, const Rational& mu) {
  if (!is_zero(a.b)) return {a.b, mu - a.a};
  if (!is_zero(a.c)) return {mu - a.d, a.c};
  if (a.a == mu) return {Rational(1), Rational(0)};
  return {Rational(0), Rational(1)};
}

/// X f for the planar field X = (v1, v2), kept at the order of f. The field
/// vanishes to second order, so the dropped top coefficient of df never reaches
/// the truncation order.
Jet2 lie_derivative(const Jet2& v1, const Jet2& v2, const Jet2& f) {
  const int n = f.order();
  return v1 * f.partial_x().padded(n) + v2 * f.partial_y().padded(n);
}

bool is_resonant(int component, int i, int j) { return component == 0 ? i == j + 1 : j == i + 1; }

void require_area_preserving(const MapJet2& m) {
  const int n = m.order();
  if (!(det_jacobian(m) == Jet2::constant(n - 1, Rational(1)))) {
    throw PreconditionError("map jet is not area-preserving (det Dm != 1)");
  }
}

}  // namespace

Diagonalization diagonalize_linear(const MapJet2& m) {
  const Mat2Q a = m.linear_part();
  if (a.det() != 1) throw PreconditionError("linear part must have determinant 1, got " + to_string(a.det()));
  const Rational tr = a.trace();
  if (tr <= 2 && tr >= -2) throw PreconditionError("linear part is not hyperbolic (|trace| <= 2)");
  if (tr < -2) throw PreconditionError("linear part has negative eigenvalues");
  Rational root;
  if (!rational_sqrt(tr * tr - 4, root)) throw PreconditionError("eigenvalues of the linear part are irrational");
  const Rational lambda = (tr + root) / 2;
  const Rational lambda_inv = Rational(1) / lambda;

  auto [p11, p21] = eigenvector(a, lambda);
  auto [p12, p22] = eigenvector(a, lambda_inv);
  const Rational det_p = p11 * p22 - p12 * p21;
  p12 /= det_p;
  p22 /= det_p;
  const Mat2Q p{p11, p12, p21, p22};
  return Diagonalization{MapJet2::linear(m.order(), p.inverse()), lambda};
}

std::pair<Jet2, Jet2> hamiltonian_field(const Jet2& h) { return {h.partial_y(), -h.partial_x()}; }

MapJet2 time_map(const Jet2& v1, const Jet2& v2, const Rational& t) {
  const int n = v1.order();
  if (v1.min_degree() < 2 || v2.min_degree() < 2) {
    throw PreconditionError("time_map needs a field vanishing to second order");
  }
  Jet2 out[2] = {Jet2::x(n), Jet2::y(n)};
  for (int c = 0; c < 2; ++c) {
    Jet2 term = out[c];
    Rational coeff(1);
    for (int k = 1; k <= n; ++k) {
      term = lie_derivative(v1, v2, term);
      if (term.is_zero()) break;
      coeff *= t / k;
      out[c] = out[c] + coeff * term;
    }
  }
  return MapJet2(std::move(out[0]), std::move(out[1]));
}

NormalizationResult birkhoff_normalize(const MapJet2& m) {
  const int n = m.order();
  const Mat2Q lin = m.linear_part();
  if (!is_zero(lin.b) || !is_zero(lin.c)) {
    throw PreconditionError("birkhoff_normalize needs a diagonal linear part; call diagonalize_linear first");
  }
  const Rational lambda = lin.a;
  if (lambda <= 1) throw PreconditionError("birkhoff_normalize needs lambda > 1 in the first coordinate");
  if (lin.d * lambda != 1) throw PreconditionError("linear part must be diag(lambda, 1/lambda)");
  require_area_preserving(m);

  MapJet2 current = m;
  MapJet2 conjugacy = MapJet2::identity(n);
  for (int d = 2; d <= n; ++d) {
    // V = Lambda^-1 (non-resonant degree-d part), divergence-free for conservative maps.
    Jet2 v[2] = {Jet2(n), Jet2(n)};
    const Rational scale[2] = {Rational(1) / lambda, lambda};
    for (int c = 0; c < 2; ++c) {
      for (int i = 0; i <= d; ++i) {
        const int j = d - i;
        const Rational& coeff = current.component(c).coeff(i, j);
        if (!is_zero(coeff) && !is_resonant(c, i, j)) v[c].add_term(i, j, scale[c] * coeff);
      }
    }
    if (v[0].is_zero() && v[1].is_zero()) continue;

    // Euler's identity gives the Hamiltonian G of V: (d + 1) G = y V1 - x V2.
    const Jet2 g =
        Rational(1, d + 1) * (Jet2::y(n + 1) * v[0].padded(n + 1) - Jet2::x(n + 1) * v[1].padded(n + 1));
    const auto [gx, gy] = hamiltonian_field(g);
    if (!(gx == v[0]) || !(gy == v[1])) {
      throw Error("birkhoff_normalize: non-resonant part is not Hamiltonian (internal error)");
    }
    // Generator H with H o Lambda - H = -G.
    Jet2 h(n + 1);
    bool ok = true;
    g.for_each_nonzero([&](int i, int j, const Rational& c) {
      if (i == j) {
        ok = false;
        return;
      }
      h.add_term(i, j, -c / (pow(lambda, i - j) - 1));
    });
    if (!ok) throw Error("birkhoff_normalize: resonant Hamiltonian term (internal error)");

    const auto [x1, x2] = hamiltonian_field(h);
    const MapJet2 phi = time_map(x1, x2, Rational(1));
    const MapJet2 phi_inv = time_map(x1, x2, Rational(-1));
    current = compose_map(phi, compose_map(current, phi_inv));
    conjugacy = compose_map(phi, conjugacy);
  }

  // Read off omega from the first component and check the conservative pairing.
  const int k_max = (n - 1) / 2;
  std::vector<Rational> omega(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) omega[k] = current.first().coeff(k + 1, k) / lambda;
  ResMap res(lambda, Jet1(k_max, std::move(omega)));
  if (!(res.to_map(n) == current)) {
    throw Error("birkhoff_normalize: result is not in conservative resonance form (internal error)");
  }
  Jet1 coeffs = res.omega();
  return NormalizationResult{std::move(res), std::move(conjugacy), std::move(coeffs)};
}

Rational anosov_class(const Jet1& omega) { return -omega[1]; }

Rational anosov_class(const ResMap& res) { return anosov_class(res.omega()); }

CentralizerReport centralizer_solve(const MapJet2& f, const Rational& det_target) {
  const int n = f.order();
  if (is_zero(det_target)) throw PreconditionError("det target must be nonzero");
  const Mat2Q lin = f.linear_part();
  if (!is_zero(lin.b) || !is_zero(lin.c)) throw PreconditionError("centralizer_solve needs a diagonal linear part");
  if (lin.a == lin.d) throw PreconditionError("centralizer_solve needs distinct eigenvalues");

  // Put the expanding direction first with an area-preserving rotation if needed.
  MapJet2 to_first = MapJet2::identity(n);
  if (lin.a < lin.d) to_first = MapJet2::linear(n, Mat2Q{Rational(0), Rational(1), Rational(-1), Rational(0)});
  const MapJet2 f1 = conjugate(f, to_first);
  const NormalizationResult norm = birkhoff_normalize(f1);
  const MapJet2 h = compose_map(norm.conjugacy, to_first);
  const Jet1& omega = norm.birkhoff_coefficients;
  const int k_max = omega.order();

  int first = 0;
  for (int k = 1; k <= k_max; ++k) {
    if (!is_zero(omega[k])) {
      first = k;
      break;
    }
  }

  CentralizerReport report;
  std::vector<Rational> e(static_cast<std::size_t>(k_max) + 1);
  e[0] = det_target;
  if (first > 0) {
    if (pow(det_target, first) != 1) {
      report.feasible = false;
      report.inconsistent_degree = 2 * first + 1;
      report.message = "infeasible at degree ≤ " + std::to_string(2 * first + 1) + ": a_" + std::to_string(first) +
                       " (det^" + std::to_string(first) + " - 1) = " +
                       to_string(omega[first] * (pow(det_target, first) - 1)) + " != 0";
      return report;
    }
    const Rational slope = omega[first] * first * pow(det_target, first - 1);
    const Jet1 z = Jet1::variable(k_max);
    for (int j = 1; first + j <= k_max; ++j) {
      const Jet1 ej(k_max, e);
      const Jet1 residual = compose(omega, (z * ej)) - omega;
      e[j] -= residual[first + j] / slope;
    }
    const Jet1 ej(k_max, e);
    if (!(compose(omega, z * ej) - omega).is_zero()) {
      throw Error("centralizer_solve: residual did not vanish (internal error)");
    }
  }

  // H_N = (p x, y e(xy) / p) commutes with the normal form; pull it back.
  const Rational p = det_target;
  const Jet2 e_xy = substitute_xy(Jet1(k_max, e), n);
  const MapJet2 h_normal(p * Jet2::x(n), (Rational(1) / p) * (Jet2::y(n) * e_xy));
  MapJet2 witness = compose_map(invert_map(h), compose_map(h_normal, h));
  if (!(compose_map(witness, f) == compose_map(f, witness))) {
    throw Error("centralizer_solve: witness does not commute (internal error)");
  }
  report.feasible = true;
  report.witness = std::move(witness);
  report.message = "feasible";
  return report;
}

}  // namespace rnf
