#pragma once

#include <optional>
#include <string>

#include "rnf/cocycle.hpp"
#include "rnf/jet1.hpp"
#include "rnf/map_jet.hpp"

namespace rnf {

struct NormalizationResult {
  ResMap res_form;
  /// h with h o m o h^-1 = res_form, tangent to the identity and area-preserving.
  MapJet2 conjugacy;
  /// The Birkhoff coefficients a_k, i.e. omega with a_0 = 1.
  Jet1 birkhoff_coefficients;
};

struct Diagonalization {
  /// Linear area-preserving L with L o m o L^-1 having linear part diag(lambda, 1/lambda).
  MapJet2 conjugacy;
  Rational lambda;
};

/// Eigenbasis change for a hyperbolic linear part with rational spectrum
/// lambda > 1 > 1/lambda > 0 and determinant 1.
Diagonalization diagonalize_linear(const MapJet2& m);

/// Time-t map of the planar vector field (v1, v2) by its Lie series. The field
/// must vanish to second order at the origin so the series terminates.
MapJet2 time_map(const Jet2& v1, const Jet2& v2, const Rational& t);

/// Hamiltonian vector field (dH/dy, -dH/dx) of a jet H, at order H.order() - 1.
std::pair<Jet2, Jet2> hamiltonian_field(const Jet2& h);

/// Finite-order Birkhoff-Sternberg normalization of an area-preserving map jet
/// with linear part diag(lambda, 1/lambda), lambda > 1 rational.
///
/// Degree by degree, the non-resonant part of the current map is removed by
/// conjugating with the time-1 map of a homogeneous polynomial Hamiltonian,
/// so every intermediate conjugacy is exactly area-preserving. Resonant parts
/// of each generator are zero. The output satisfies
/// conjugacy o m o conjugacy^-1 = res_form.to_map(N) exactly.
NormalizationResult birkhoff_normalize(const MapJet2& m);

/// -a_1 where omega = 1 + a_1 z + ...
Rational anosov_class(const ResMap& res);
Rational anosov_class(const Jet1& omega);

struct CentralizerReport {
  bool feasible = false;
  /// Map degree of the first unsolvable equation when infeasible.
  std::optional<int> inconsistent_degree;
  /// A jet H with H o F = F o H and det DH(0) = detTarget when feasible.
  std::optional<MapJet2> witness;
  std::string message;
};

/// Looks for a jet H commuting with F and having det DH(0) = det_target.
///
/// F must be conservative with a diagonal hyperbolic linear part. F is brought
/// to resonance form N = (lambda x omega(xy), lambda^-1 y / omega(xy)); any
/// commuting jet of N is (x c(xy), y d(xy)), and commutation reduces to
/// omega(z e(z)) = omega(z) with e = c d, e(0) = det_target. This is solved
/// degree by degree in z. The only obstruction sits at the first nonzero
/// Birkhoff coefficient a_m: a_m (e(0)^m - 1) = 0, which is the map equation
/// of degree 2m + 1.
CentralizerReport centralizer_solve(const MapJet2& f, const Rational& det_target);

}  // namespace rnf
