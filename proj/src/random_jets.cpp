#include "rnf/random_jets.hpp"

namespace rnf {

Rational random_rational(Rng& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

Rational random_positive(Rng& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(1, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

Rational random_bounded(Rng& rng, long max_den, bool positive) {
  const long q = std::uniform_int_distribution<long>(1, max_den)(rng);
  const long p = std::uniform_int_distribution<long>(positive ? 1 : -q, q)(rng);
  return make_rational(p, q);
}

Jet1 random_jet1(Rng& rng, int order) {
  std::vector<Rational> c;
  for (int k = 0; k <= order; ++k) c.push_back(random_rational(rng));
  return Jet1(order, std::move(c));
}

Jet2 random_jet2(Rng& rng, int order, int min_degree) {
  Jet2 r(order);
  for (int d = min_degree; d <= order; ++d) {
    for (int i = 0; i <= d; ++i) r.add_term(i, d - i, random_rational(rng));
  }
  return r;
}

Jet2 random_off_diagonal(Rng& rng, int order) { return off_diagonal(random_jet2(rng, order)); }

Jet1 random_unit_omega(Rng& rng, int k) {
  std::vector<Rational> c{Rational(1)};
  for (int i = 1; i <= k; ++i) c.push_back(random_rational(rng));
  return Jet1(k, std::move(c));
}

ResMap random_resmap(Rng& rng, const Rational& lambda, int k) { return ResMap(lambda, random_unit_omega(rng, k)); }

MapJet2 random_symplectic(Rng& rng, int order) {
  const Jet2 h = random_jet2(rng, order + 1, 3);
  const auto [v1, v2] = hamiltonian_field(h);
  return time_map(v1, v2, Rational(1));
}

ContactNF random_contact(Rng& rng, int order) {
  std::vector<Rational> c{random_positive(rng), random_positive(rng)};
  for (int k = 2; k <= order; ++k) c.push_back(random_rational(rng, 1, 4));
  c.resize(static_cast<std::size_t>(order) + 1);
  return ContactNF(Jet1(order, std::move(c)));
}

ResVF random_resvf(Rng& rng, int order) {
  auto one = [&]() {
    std::vector<Rational> c{random_bounded(rng, 8, true)};
    for (int k = 1; k <= order; ++k) c.push_back(random_bounded(rng, 8, false));
    return Jet1(order, std::move(c));
  };
  Jet1 f = one();
  Jet1 g = one();
  return ResVF(std::move(f), std::move(g));
}

Jet2 random_invariant_density(Rng& rng, int order) {
  std::vector<Rational> c{random_positive(rng)};
  for (int k = 1; 2 * k <= order; ++k) c.push_back(random_rational(rng));
  const int k = static_cast<int>(c.size()) - 1;
  return substitute_xy(Jet1(k, std::move(c)), order);
}

Point2 random_point(Rng& rng, double r) {
  std::uniform_real_distribution<double> u(-r, r);
  const double x = u(rng);
  return {x, u(rng)};
}

}  // namespace rnf
