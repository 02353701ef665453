#include <doctest.h>

#include <random>
#include <stdexcept>

#include "rnf/cocycle.hpp"
#include "rnf/random_jets.hpp"
#include "support.hpp"

using namespace rnf;
using test::j1;
using test::j2;
using test::q;

TEST_SUITE("jetalg") {
  TEST_CASE("rational parsing and formatting") {
    CHECK(q("6/4") == Rational(3, 2));
    CHECK(to_string(q("6/4")) == "3/2");
    CHECK(to_string(q("-10/5")) == "-2");
    CHECK(to_string(q("0/7")) == "0");
    CHECK(q("-0").get_num() == 0);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
    CHECK(make_rational(-4, 6) == q("-2/3"));
    CHECK(make_rational(-4, 6).get_den() == 3);
  }

  TEST_CASE("rational powers and square roots") {
    CHECK(pow(q("2/3"), 3) == q("8/27"));
    CHECK(pow(q("2/3"), -2) == q("9/4"));
    CHECK(pow(q("5"), 0) == 1);
    Rational r;
    CHECK(rational_sqrt(q("9/4"), r));
    CHECK(r == q("3/2"));
    CHECK_FALSE(rational_sqrt(q("2"), r));
    CHECK_FALSE(rational_sqrt(q("-4"), r));
  }

  TEST_CASE("products of jets") {
    const Jet2 a = j2(2, {{0, 0, "1"}, {1, 0, "1"}});
    const Jet2 b = j2(2, {{0, 0, "1"}, {0, 1, "1"}});
    CHECK(a * b == j2(2, {{0, 0, "1"}, {1, 0, "1"}, {0, 1, "1"}, {1, 1, "1"}}));
    CHECK(j1(2, {"1", "1"}) * j1(2, {"1", "-1"}) == j1(2, {"1", "0", "-1"}));
    const Jet1 zn = j1(4, {"0", "0", "0", "0", "1"});
    CHECK((zn * Jet1::variable(4)).is_zero());
    CHECK((Jet2::monomial(3, 2, 1) * Jet2::x(3)).is_zero());
  }

  TEST_CASE("mixed orders are rejected") {
    CHECK_THROWS_AS(Jet1(2) + Jet1(3), OrderMismatch);
    CHECK_THROWS_AS(Jet2(2) * Jet2(3), OrderMismatch);
    CHECK_THROWS_AS(compose(Jet2(2), Jet2(3), Jet2(3)), OrderMismatch);
  }

  TEST_CASE("reciprocal") {
    CHECK(reciprocal(j1(5, {"1", "1"})) == j1(5, {"1", "-1", "1", "-1", "1", "-1"}));
    CHECK(reciprocal(j1(3, {"2"})) == j1(3, {"1/2"}));
    const Jet1 a = j1(3, {"1", "1", "1"});
    const Jet1 inv = reciprocal(a);
    CHECK(inv == j1(3, {"1", "-1", "0", "1"}));
    CHECK(a * inv == Jet1::constant(3, 1));
    CHECK_THROWS_AS(reciprocal(j1(3, {"0", "1"})), PreconditionError);
    const Jet2 b = j2(4, {{0, 0, "3"}, {1, 0, "1"}, {1, 1, "-2"}});
    CHECK(b * reciprocal(b) == Jet2::constant(4, 1));
    CHECK_THROWS_AS(reciprocal(Jet2::x(3)), PreconditionError);
  }

  TEST_CASE("exp and log") {
    CHECK(log(j1(4, {"1", "1"})) == j1(4, {"0", "1", "-1/2", "1/3", "-1/4"}));
    CHECK(exp(Jet1(4)) == Jet1::constant(4, 1));
    CHECK(exp(Jet1::variable(4)) == j1(4, {"1", "1", "1/2", "1/6", "1/24"}));
    const Jet1 a = j1(4, {"1", "2", "1"});
    CHECK(exp(log(a)) == a);
    // log of a square is twice the log
    CHECK(log(a) == Rational(2) * log(j1(4, {"1", "1"})));
    CHECK_THROWS_AS(log(j1(3, {"2", "1"})), PreconditionError);
    CHECK_THROWS_AS(exp(j1(3, {"1", "1"})), PreconditionError);
  }

  TEST_CASE("univariate helpers") {
    const Jet1 a = j1(3, {"1", "2", "3", "4"});
    CHECK(a.derivative() == j1(2, {"2", "6", "12"}));
    CHECK(a.antiderivative(q("5")) == j1(4, {"5", "1", "1", "1", "1"}));
    CHECK(a.times_z() == j1(4, {"0", "1", "2", "3", "4"}));
    CHECK(pow(j1(3, {"1", "1"}), 3) == j1(3, {"1", "3", "3", "1"}));
    CHECK(pow(j1(3, {"1", "1"}), -1) == reciprocal(j1(3, {"1", "1"})));
    CHECK(compose(j1(3, {"0", "1", "1"}), j1(3, {"0", "1", "1"})) == j1(3, {"0", "1", "2", "2"}));
    CHECK(a.eval(0.5) == doctest::Approx(1 + 1 + 0.75 + 0.5));
    CHECK(a[7] == 0);
  }

  TEST_CASE("substitute_xy") {
    CHECK(substitute_xy(j1(1, {"1", "1"}), 2) == j2(2, {{0, 0, "1"}, {1, 1, "1"}}));
    CHECK(substitute_xy(j1(2, {"0", "0", "1"}), 4) == Jet2::monomial(4, 2, 2));
    CHECK(substitute_xy(j1(1, {"3", "1"}), 1) == Jet2::constant(1, 3));
  }

  TEST_CASE("composition and inversion of map jets") {
    const MapJet2 lin = MapJet2::linear(4, Mat2Q{q("2"), 0, 0, q("1/2")});
    CHECK(compose(Jet2::monomial(4, 1, 1), lin) == Jet2::monomial(4, 1, 1));
    CHECK(invert_map(lin) == MapJet2::linear(4, Mat2Q{q("1/2"), 0, 0, q("2")}));
    const MapJet2 f = test::example_map(3);
    CHECK(compose(Jet2::x(3), f) == j2(3, {{1, 0, "2"}, {2, 1, "1"}}));
    CHECK_THROWS_AS(MapJet2(Jet2::x(3), Jet2::x(3)), PreconditionError);
    CHECK_THROWS_AS(MapJet2(Jet2::x(3) + Jet2::constant(3, 1), Jet2::y(3)), PreconditionError);
  }

  TEST_CASE("example map second component is y / (2 + xy)") {
    const MapJet2 f = test::example_map(7);
    const Jet2 denom = j2(7, {{0, 0, "2"}, {1, 1, "1"}});
    CHECK(f.second() * denom == Jet2::y(7));
  }

  TEST_CASE("diagonal part and Jacobian determinant") {
    CHECK(diag_part(j2(4, {{0, 0, "3"}, {1, 0, "1"}, {1, 1, "1"}, {2, 2, "1"}})) == j1(2, {"3", "1", "1"}));
    CHECK(det_jacobian(test::example_map(9)) == Jet2::constant(8, 1));
    const ResMap r(q("2"), j1(3, {"1", "1"}));
    CHECK(det_jacobian(r.to_map(7)) == Jet2::constant(6, 1));
  }

  TEST_CASE("ring axioms on random jets") {
    Rng rng(11);
    for (int s = 0; s < 20; ++s) {
      const Jet2 a = random_jet2(rng, 6), b = random_jet2(rng, 6), c = random_jet2(rng, 6);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == Jet2(6));
      const Jet1 u = random_jet1(rng, 6), v = random_jet1(rng, 6), w = random_jet1(rng, 6);
      CHECK((u * v) * w == u * (v * w));
      CHECK(u * (v + w) == u * v + u * w);
    }
  }

  TEST_CASE("inverse operations on random jets") {
    Rng rng(12);
    for (int s = 0; s < 20; ++s) {
      Jet1 a = random_jet1(rng, 7);
      if (is_zero(a[0])) continue;
      CHECK(a * reciprocal(a) == Jet1::constant(7, 1));
      const Jet1 u = random_unit_omega(rng, 7);
      CHECK(exp(log(u)) == u);
      const Jet1 z0 = u - Jet1::constant(7, 1);
      CHECK(log(exp(z0)) == z0);
    }
    for (int s = 0; s < 10; ++s) {
      const Mat2Q lin{random_positive(rng), random_rational(rng), random_rational(rng), random_positive(rng)};
      if (is_zero(lin.det())) continue;
      const MapJet2 m(MapJet2::linear(6, lin).first() + random_jet2(rng, 6, 2),
                      MapJet2::linear(6, lin).second() + random_jet2(rng, 6, 2));
      const MapJet2 inv = invert_map(m);
      CHECK(compose_map(inv, m) == MapJet2::identity(6));
      CHECK(compose_map(m, inv) == MapJet2::identity(6));
    }
  }

  TEST_CASE("Horner composition agrees with naive expansion") {
    Rng rng(13);
    for (int s = 0; s < 10; ++s) {
      const Jet2 a = random_jet2(rng, 6);
      const Jet2 x = random_jet2(rng, 6, 1);
      const Jet2 y = random_jet2(rng, 6, 1);
      CHECK(compose(a, x, y) == test::naive_compose(a, x, y));
    }
  }

  TEST_CASE("functions of xy pass through resonance maps unchanged") {
    Rng rng(14);
    for (int s = 0; s < 10; ++s) {
      const ResMap r = random_resmap(rng, q("3/2"), 4);
      const Jet2 a = substitute_xy(random_jet1(rng, 4), 8);
      CHECK(compose(a, r.to_map(8)) == a);
    }
  }

  TEST_CASE("jet invariants") {
    const Jet2 a(3, {{{5, 0}, q("1")}, {{1, 1}, q("2")}, {{1, 1}, q("3")}});
    CHECK(a.coeff(5, 0) == 0);
    CHECK(a.coeff(1, 1) == 5);
    CHECK(a.terms().size() == 1);
    CHECK(Jet1(3).coeffs().size() == 4);
    CHECK_THROWS_AS(Jet2(-1), PreconditionError);
    CHECK(a.min_degree() == 2);
    CHECK(Jet2(3).min_degree() == 4);
  }
}
