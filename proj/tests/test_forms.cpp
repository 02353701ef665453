#include <doctest.h>

#include "rnf/forms.hpp"
#include "rnf/random_jets.hpp"
#include "support.hpp"

using namespace rnf;
using test::j1;
using test::j2;
using test::q;

namespace {

FormJet random_form(Rng& rng, int degree, int order) {
  FormJet f(degree, order);
  for (unsigned m : FormJet::masks(degree)) f.set(m, random_jet2(rng, order));
  return f;
}

VF3Jet random_field(Rng& rng, int order) {
  return {random_jet2(rng, order), random_jet2(rng, order), random_jet2(rng, order)};
}

}  // namespace

TEST_SUITE("forms") {
  TEST_CASE("d of functions and one-forms") {
    const FormJet df = d(FormJet::function(j2(4, {{2, 1, "1"}})));
    CHECK(df.degree() == 1);
    CHECK(df.order() == 3);
    CHECK(df.coeff(kDt).is_zero());
    CHECK(df.coeff(kDx) == j2(3, {{1, 1, "2"}}));
    CHECK(df.coeff(kDy) == j2(3, {{2, 0, "1"}}));

    CHECK(d(standard_beta(3)) == FormJet::two_form(Jet2::constant(2, 1), Jet2(2), Jet2(2)));

    // d(theta(xy) dt) = -y theta' dt^dx - x theta' dt^dy.
    const FormJet da = d(contact_form(ContactNF(j1(2, {"1", "1", "1"})), 4));
    CHECK(da.coeff(kDx | kDy) == Jet2::constant(3, 1));
    CHECK(da.coeff(kDt | kDx) == j2(3, {{0, 1, "-1"}, {1, 2, "-2"}}));
    CHECK(da.coeff(kDt | kDy) == j2(3, {{1, 0, "-1"}, {2, 1, "-2"}}));
  }

  TEST_CASE("property: d o d = 0") {
    Rng rng(41);
    for (int s = 0; s < 10; ++s) {
      for (int deg = 0; deg <= 1; ++deg) CHECK(d(d(random_form(rng, deg, 6))).is_zero());
    }
  }

  TEST_CASE("wedge") {
    const FormJet a = contact_form(ContactNF(j1(2, {"3", "3"})), 4);
    const FormJet vol = wedge(a.truncated(3), d(a));
    CHECK(scalar(vol) == Jet2::constant(3, 3));
    const FormJet dx = FormJet::one_form(Jet2(2), Jet2::constant(2, 1), Jet2(2));
    const FormJet dy = FormJet::one_form(Jet2(2), Jet2(2), Jet2::constant(2, 1));
    CHECK(wedge(dx, dy) == FormJet::two_form(Jet2::constant(2, 1), Jet2(2), Jet2(2)));
    CHECK(wedge(dy, dx) == FormJet::two_form(Jet2::constant(2, -1), Jet2(2), Jet2(2)));
    CHECK(wedge(dx, dx).is_zero());
  }

  TEST_CASE("property: wedge is graded commutative") {
    Rng rng(42);
    for (int s = 0; s < 10; ++s) {
      const FormJet a = random_form(rng, 1, 4);
      const FormJet b = random_form(rng, 1, 4);
      const FormJet c = random_form(rng, 2, 4);
      CHECK(wedge(a, b) + wedge(b, a) == FormJet(2, 4));
      CHECK(wedge(a, c) == wedge(c, a));
    }
  }

  TEST_CASE("interior") {
    const VF3Jet dt{Jet2::constant(3, 1), Jet2(3), Jet2(3)};
    const FormJet two = FormJet::two_form(Jet2(3), Jet2::constant(3, 1), Jet2(3));
    CHECK(interior(dt, two) == FormJet::one_form(Jet2(3), Jet2::constant(3, 1), Jet2(3)));
    const VF3Jet dx{Jet2(3), Jet2::constant(3, 1), Jet2(3)};
    CHECK(interior(dx, two) == FormJet::one_form(Jet2::constant(3, -1), Jet2(3), Jet2(3)));
    const FormJet vol = FormJet::three_form(Jet2::constant(3, 1));
    CHECK(interior(dt, vol) == FormJet::two_form(Jet2::constant(3, 1), Jet2(3), Jet2(3)));
  }

  TEST_CASE("property: interior is an antiderivation and L_v commutes with d") {
    Rng rng(43);
    for (int s = 0; s < 10; ++s) {
      const VF3Jet v = random_field(rng, 5);
      const FormJet a = random_form(rng, 1, 5);
      const FormJet b = random_form(rng, 1, 5);
      CHECK(interior(v, wedge(a, b)) == wedge(interior(v, a), b) - wedge(a, interior(v, b)));
      CHECK(interior(v, interior(v, random_form(rng, 2, 5))).is_zero());
      const FormJet f = random_form(rng, 0, 5);
      const Jet2& fn = scalar(f);
      CHECK(scalar(lie(v, f)) == v.v.truncated(4) * fn.partial_x() + v.w.truncated(4) * fn.partial_y());
      CHECK(d(lie(v, a)) == lie(v, d(a)));
    }
  }

  TEST_CASE("reeb_check") {
    const ContactNF c(j1(4, {"1", "1", "2", "-1"}));
    const ResVF field = reeb_field(c);
    CHECK(reeb_check(c, field).pass);
    const ResVF wrong(field.f() + Jet1::variable(field.f().order()), field.g());
    CHECK_FALSE(reeb_check(c, wrong).pass);
    const ResVF wrong_g(field.f(), field.g() + Jet1::variable(field.g().order()));
    CHECK_FALSE(reeb_check(c, wrong_g).pass);
  }

  TEST_CASE("property: Reeb field of random contact forms") {
    Rng rng(44);
    for (int s = 0; s < 10; ++s) {
      const ContactNF c = random_contact(rng, 5);
      CHECK(reeb_check(c, reeb_field(c)).pass);
      CHECK(volume_identity(c).pass);
    }
  }

  TEST_CASE("volume_identity") {
    const CheckReport r = volume_identity(ContactNF(j1(4, {"1", "1", "2"})));
    CHECK(r.pass);
    REQUIRE_FALSE(r.values.empty());
    const Jet2& v = r.values.front().jet;
    CHECK(v == j2(v.order(), {{0, 0, "1"}, {2, 2, "-2"}}));
  }

  TEST_CASE("poincare_primitive") {
    const FormJet df = d(FormJet::function(j2(5, {{2, 1, "1"}, {0, 3, "-2"}})));
    CHECK(poincare_primitive(df) == j2(5, {{2, 1, "1"}, {0, 3, "-2"}}));
    FormJet not_closed = FormJet::one_form(Jet2(3), Jet2(3), j2(3, {{1, 0, "1"}, {0, 1, "1"}}));
    not_closed.set(kDy, j2(3, {{1, 0, "1"}}));
    CHECK_THROWS_AS(poincare_primitive(not_closed), PreconditionError);
    CHECK_THROWS_AS(poincare_primitive(FormJet::one_form(Jet2::constant(3, 1), Jet2(3), Jet2(3))),
                    PreconditionError);
  }

  TEST_CASE("property: primitive round trip") {
    Rng rng(45);
    for (int s = 0; s < 10; ++s) {
      const Jet2 tau = random_jet2(rng, 6, 1);
      CHECK(poincare_primitive(d(FormJet::function(tau))) == tau);
    }
  }

  TEST_CASE("canonical_retime") {
    const Jet2 tau = j2(5, {{1, 2, "1"}, {3, 0, "1/2"}});
    const FormJet pullback = standard_beta(4) + d(FormJet::function(tau));
    const Jet2 r = canonical_retime(pullback);
    CHECK(r == -tau);
    CHECK(pullback + d(FormJet::function(r)) == standard_beta(4));
    CHECK_THROWS_AS(canonical_retime(FormJet::one_form(Jet2(3), Jet2(3), Jet2(3))), PreconditionError);
  }

  TEST_CASE("moser_normalize") {
    const ResMap f(q("2"), Jet1::constant(3, 1));
    const MapJet2 lin = f.to_map(6);
    const Jet2 g = j2(6, {{0, 0, "2"}, {1, 1, "3"}, {2, 2, "-1"}});
    const MapJet2 h = moser_normalize(g, f);
    CHECK(compose_map(h, lin) == compose_map(lin, h));
    CHECK(compose(g, h).truncated(5) * det_jacobian(h) == Jet2::constant(5, 1));

    const MapJet2 s = moser_normalize(Jet2::constant(4, 2), f);
    CHECK(s == MapJet2(j2(4, {{1, 0, "1/2"}}), j2(4, {{0, 1, "1"}})));

    CHECK_THROWS_AS(moser_normalize(g, ResMap(q("2"), j1(3, {"1", "1"}))), PreconditionError);
    CHECK_THROWS_AS(moser_normalize(j2(6, {{0, 0, "1"}, {1, 0, "1"}}), f), PreconditionError);
    CHECK_THROWS_AS(moser_normalize(j2(6, {{0, 0, "-1"}}), f), PreconditionError);
  }

  TEST_CASE("property: Moser on random invariant densities") {
    Rng rng(46);
    for (int s = 0; s < 5; ++s) {
      const ResMap f(random_positive(rng) + 1, Jet1::constant(3, 1));
      const Jet2 g = random_invariant_density(rng, 6);
      const MapJet2 h = moser_normalize(g, f);
      const MapJet2 lin = f.to_map(6);
      CHECK(compose_map(h, lin) == compose_map(lin, h));
      CHECK(compose(g, h).truncated(5) * det_jacobian(h) == Jet2::constant(5, 1));
    }
  }

  TEST_CASE("contact_transfer") {
    const ContactNF c(j1(2, {"1", "1", "1"}));
    const FormJet a0 = contact_form(c, 4);
    const Jet2 f = j2(5, {{1, 1, "2"}, {0, 2, "1"}});
    const TransferResult r = contact_transfer(a0, a0 + d(FormJet::function(f)));
    CHECK(r.exact);
    CHECK(r.period_integral == 0);
    CHECK(r.primitive == f);

    const FormJet shifted = a0 + FormJet::one_form(Jet2::constant(4, 2), Jet2(4), Jet2(4));
    const TransferResult p = contact_transfer(a0, shifted);
    CHECK_FALSE(p.exact);
    CHECK(p.period_integral == 2);
  }

  TEST_CASE("identities on random jets") {
    Rng rng(47);
    for (int s = 0; s < 10; ++s) {
      const Jet1 eta = random_jet1(rng, 4);
      CHECK(dr_identity(eta, random_rational(rng)).pass);
      CHECK(lie_identity(eta).pass);
      CHECK(tubular_identity(random_contact(rng, 6)).pass);
    }
  }
}
