#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rnf/jet1.hpp"
#include "rnf/jet2.hpp"
#include "rnf/map_jet.hpp"
#include "rnf/rational.hpp"

namespace test {

inline rnf::Rational q(const std::string& s) { return rnf::parse_rational(s); }

inline rnf::Jet1 j1(int order, const std::vector<std::string>& coeffs) {
  std::vector<rnf::Rational> c;
  for (const auto& s : coeffs) c.push_back(q(s));
  return rnf::Jet1(order, std::move(c));
}

struct T2 {
  int i, j;
  std::string c;
};

inline rnf::Jet2 j2(int order, const std::vector<T2>& terms) {
  rnf::Jet2 r(order);
  for (const auto& t : terms) r.add_term(t.i, t.j, q(t.c));
  return r;
}

/// sum a_ij X^i Y^j with powers by repeated multiplication; a reference for
/// the Horner composition.
inline rnf::Jet2 naive_compose(const rnf::Jet2& a, const rnf::Jet2& x, const rnf::Jet2& y) {
  const int n = a.order();
  rnf::Jet2 acc(n);
  a.for_each_nonzero([&](int i, int j, const rnf::Rational& c) {
    rnf::Jet2 term = rnf::Jet2::constant(n, c);
    for (int k = 0; k < i; ++k) term = term * x;
    for (int k = 0; k < j; ++k) term = term * y;
    acc = acc + term;
  });
  return acc;
}

/// The example map (2x + x^2 y, y / (2 + xy)) at the given order, with the
/// second component expanded by hand as sum_k (-1)^k x^k y^{k+1} / 2^{k+1}.
inline rnf::MapJet2 example_map(int order) {
  rnf::Jet2 first(order), second(order);
  first.add_term(1, 0, rnf::Rational(2));
  first.add_term(2, 1, rnf::Rational(1));
  rnf::Rational c(1, 2);
  for (int k = 0; 2 * k + 1 <= order; ++k) {
    second.add_term(k, k + 1, c);
    c *= rnf::Rational(-1, 2);
  }
  return rnf::MapJet2(first, second);
}

}  // namespace test
