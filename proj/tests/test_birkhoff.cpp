#include <doctest.h>

#include "rnf/birkhoff.hpp"
#include "rnf/random_jets.hpp"
#include "support.hpp"

using namespace rnf;
using test::j1;
using test::j2;
using test::q;

namespace {

MapJet2 linear_map(int order, const char* a, const char* b, const char* c, const char* d) {
  return MapJet2::linear(order, Mat2Q{q(a), q(b), q(c), q(d)});
}

}  // namespace

TEST_SUITE("birkhoff") {
  TEST_CASE("diagonalize_linear") {
    const MapJet2 m = linear_map(3, "2", "0", "0", "1/2");
    const Diagonalization dg = diagonalize_linear(m);
    CHECK(dg.lambda == 2);
    CHECK(dg.conjugacy == MapJet2::identity(3));

    const MapJet2 sym = linear_map(3, "17/8", "15/8", "15/8", "17/8");
    const Diagonalization ds = diagonalize_linear(sym);
    CHECK(ds.lambda == 4);
    CHECK(conjugate(sym, ds.conjugacy).linear_part() == Mat2Q{q("4"), 0, 0, q("1/4")});
    CHECK(ds.conjugacy.linear_part().det() == 1);

    // determinant 4: eigenvalues 4 and 1, not a conservative hyperbolic map
    CHECK_THROWS_AS(diagonalize_linear(linear_map(3, "5/2", "3/2", "3/2", "5/2")), PreconditionError);
    CHECK_THROWS_AS(diagonalize_linear(linear_map(3, "0", "-1", "1", "0")), PreconditionError);
    // irrational spectrum: trace 3
    CHECK_THROWS_AS(diagonalize_linear(linear_map(3, "2", "1", "1", "1")), PreconditionError);
    CHECK_THROWS_AS(diagonalize_linear(linear_map(3, "-2", "0", "0", "-1/2")), PreconditionError);
  }

  TEST_CASE("diagonalize_linear with the contracting direction first") {
    const MapJet2 m = linear_map(3, "1/3", "0", "0", "3");
    const Diagonalization dg = diagonalize_linear(m);
    CHECK(dg.lambda == 3);
    CHECK(conjugate(m, dg.conjugacy).linear_part() == Mat2Q{q("3"), 0, 0, q("1/3")});
  }

  TEST_CASE("resonance form is a fixed point") {
    const ResMap r(q("2"), j1(4, {"1", "1"}));
    const NormalizationResult res = birkhoff_normalize(r.to_map(9));
    CHECK(res.conjugacy == MapJet2::identity(9));
    CHECK(res.birkhoff_coefficients == j1(4, {"1", "1"}));
  }

  TEST_CASE("conjugated resonance map is recovered") {
    Rng rng(21);
    const ResMap r(q("2"), j1(4, {"1", "3"}));
    const MapJet2 s = random_symplectic(rng, 9);
    const MapJet2 m = compose_map(invert_map(s), compose_map(r.to_map(9), s));
    const NormalizationResult res = birkhoff_normalize(m);
    CHECK(res.birkhoff_coefficients == j1(4, {"1", "3"}));
    CHECK(conjugate(m, res.conjugacy) == r.to_map(9));
    CHECK(det_jacobian(res.conjugacy) == Jet2::constant(8, 1));
    CHECK(res.conjugacy.linear_part() == Mat2Q{});
  }

  TEST_CASE("example map") {
    const MapJet2 f = test::example_map(9);
    const NormalizationResult res = birkhoff_normalize(f);
    CHECK(res.res_form.lambda() == 2);
    CHECK(conjugate(f, res.conjugacy) == res.res_form.to_map(9));
    // the map is already of the form (2x w, y / (2w)) with w = 1 + xy/2
    CHECK(res.birkhoff_coefficients == j1(4, {"1", "1/2"}));
    CHECK(anosov_class(res.res_form) == q("-1/2"));
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(birkhoff_normalize(linear_map(4, "17/8", "15/8", "15/8", "17/8")), PreconditionError);
    CHECK_THROWS_AS(birkhoff_normalize(linear_map(4, "1/2", "0", "0", "2")), PreconditionError);
    const MapJet2 dissipative(Rational(2) * Jet2::x(4) + Jet2::monomial(4, 2, 0), Rational(1, 2) * Jet2::y(4));
    CHECK_THROWS_AS(birkhoff_normalize(dissipative), PreconditionError);
  }

  TEST_CASE("anosov_class") {
    CHECK(anosov_class(ResMap(q("2"), Jet1::constant(3, 1))) == 0);
    CHECK(anosov_class(ResMap(q("2"), j1(3, {"1", "3"}))) == -3);
    CHECK(anosov_class(ResMap(q("2"), exp(Jet1::variable(3)))) == -1);
  }

  TEST_CASE("time maps are area-preserving and invertible") {
    Rng rng(22);
    const Jet2 h = random_jet2(rng, 8, 3);
    const auto [v1, v2] = hamiltonian_field(h);
    const MapJet2 fwd = time_map(v1, v2, Rational(1));
    const MapJet2 back = time_map(v1, v2, Rational(-1));
    CHECK(compose_map(fwd, back) == MapJet2::identity(7));
    CHECK(det_jacobian(fwd) == Jet2::constant(6, 1));
    CHECK_THROWS_AS(time_map(Jet2::x(4), Jet2(4), Rational(1)), PreconditionError);
  }

  TEST_CASE("property: Birkhoff coefficients are invariant under symplectic conjugation") {
    Rng rng(23);
    const Rational lambdas[] = {q("3/2"), q("2"), q("3")};
    for (int s = 0; s < 6; ++s) {
      const ResMap r = random_resmap(rng, lambdas[s % 3], 3);
      const MapJet2 m = conjugate(r.to_map(7), random_symplectic(rng, 7));
      const MapJet2 m2 = conjugate(m, random_symplectic(rng, 7));
      CHECK(birkhoff_normalize(m).birkhoff_coefficients == birkhoff_normalize(m2).birkhoff_coefficients);
    }
  }

  TEST_CASE("property: resonance maps are area-preserving") {
    Rng rng(24);
    for (int s = 0; s < 10; ++s) {
      const ResMap r = random_resmap(rng, q("5/2"), 4);
      CHECK(det_jacobian(r.to_map(9)) == Jet2::constant(8, 1));
    }
  }

  TEST_CASE("centralizer of the example map") {
    const MapJet2 f = test::example_map(7);
    const CentralizerReport half = centralizer_solve(f, q("1/2"));
    CHECK_FALSE(half.feasible);
    REQUIRE(half.inconsistent_degree.has_value());
    CHECK(*half.inconsistent_degree == 3);
    CHECK(half.message.find("infeasible at degree ≤ 3") != std::string::npos);
    CHECK_FALSE(half.witness.has_value());

    const CentralizerReport one = centralizer_solve(f, q("1"));
    CHECK(one.feasible);
    REQUIRE(one.witness.has_value());
    CHECK(*one.witness == MapJet2::identity(7));
  }

  TEST_CASE("centralizer of a linear map") {
    const MapJet2 f = linear_map(7, "2", "0", "0", "1/2");
    const CentralizerReport rep = centralizer_solve(f, q("1/2"));
    CHECK(rep.feasible);
    REQUIRE(rep.witness.has_value());
    CHECK(*rep.witness == linear_map(7, "1/2", "0", "0", "1"));
    CHECK(compose_map(*rep.witness, f) == compose_map(f, *rep.witness));
  }

  TEST_CASE("centralizer with the contracting direction first") {
    const MapJet2 f = linear_map(5, "1/2", "0", "0", "2");
    const CentralizerReport rep = centralizer_solve(f, q("3"));
    REQUIRE(rep.feasible);
    CHECK(compose_map(*rep.witness, f) == compose_map(f, *rep.witness));
    CHECK(rep.witness->linear_part().det() == 3);
  }

  TEST_CASE("centralizer obstruction moves with the first nonzero coefficient") {
    const ResMap r(q("2"), j1(3, {"1", "0", "1"}));
    const CentralizerReport minus = centralizer_solve(r.to_map(7), q("-1"));
    CHECK(minus.feasible);
    CHECK(minus.witness->linear_part().det() == -1);
    CHECK(compose_map(*minus.witness, r.to_map(7)) == compose_map(r.to_map(7), *minus.witness));
    const CentralizerReport two = centralizer_solve(r.to_map(7), q("2"));
    CHECK_FALSE(two.feasible);
    CHECK(*two.inconsistent_degree == 5);
  }

  TEST_CASE("property: det target 1 is always feasible") {
    Rng rng(25);
    for (int s = 0; s < 5; ++s) {
      const ResMap r = random_resmap(rng, q("3/2"), 3);
      const MapJet2 m = conjugate(r.to_map(7), random_symplectic(rng, 7));
      const CentralizerReport rep = centralizer_solve(m, q("1"));
      CHECK(rep.feasible);
      CHECK(compose_map(*rep.witness, m) == compose_map(m, *rep.witness));
    }
  }
}
