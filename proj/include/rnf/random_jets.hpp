#pragma once

#include <random>

#include "rnf/birkhoff.hpp"
#include "rnf/cocycle.hpp"
#include "rnf/contactnf.hpp"
#include "rnf/oracle.hpp"

namespace rnf {

using Rng = std::mt19937_64;

/// Uniform p/q with |p| <= max_num, 1 <= q <= max_den.
Rational random_rational(Rng& rng, long max_num = 3, long max_den = 4);
/// Uniform p/q in (0, max_num], 1 <= q <= max_den.
Rational random_positive(Rng& rng, long max_num = 3, long max_den = 4);

/// p/q with 1 <= q <= max_den and |p/q| <= 1 (in (0, 1] when positive).
Rational random_bounded(Rng& rng, long max_den, bool positive);

/// Dense random Jet1; the constant term is drawn like the others.
Jet1 random_jet1(Rng& rng, int order);
/// Random Jet2 with nonzero terms only in degrees [min_degree, order].
Jet2 random_jet2(Rng& rng, int order, int min_degree = 0);
/// Random Jet2 without diagonal terms.
Jet2 random_off_diagonal(Rng& rng, int order);

/// omega with omega(0) = 1, known through z^k.
Jet1 random_unit_omega(Rng& rng, int k);
ResMap random_resmap(Rng& rng, const Rational& lambda, int k);

/// Area-preserving map jet tangent to the identity: the time-1 map of a random
/// Hamiltonian with terms of degree 3..order+1.
MapJet2 random_symplectic(Rng& rng, int order);

/// theta with theta(0), theta'(0) > 0 and bounded coefficients.
ContactNF random_contact(Rng& rng, int order);
/// f(0), g(0) in (0, 1], other coefficients bounded by 1.
ResVF random_resvf(Rng& rng, int order);
/// Positive density G(xy), invariant under every linear (lambda x, y / lambda).
Jet2 random_invariant_density(Rng& rng, int order);

/// Uniform point of the square [-r, r]^2.
Point2 random_point(Rng& rng, double r);

}  // namespace rnf
