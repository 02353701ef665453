#include "rnf/identity_suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "rnf/birkhoff.hpp"
#include "rnf/forms.hpp"
#include "rnf/oracle.hpp"
#include "rnf/random_jets.hpp"

namespace rnf {

namespace {

const Rational kLambdas[] = {Rational(3, 2), Rational(2), Rational(3)};

struct Ctx {
  const SuiteConfig& cfg;
  Rng& rng;
  SuiteResult& out;

  void record(bool ok, const std::string& what) {
    ++out.cases;
    if (!ok) {
      if (out.failures == 0) out.first_failure = what;
      ++out.failures;
    }
  }

  void record_error(double err, double tol, const std::string& what) {
    out.max_error = std::max(out.max_error, err);
    record(err < tol, what + " error " + std::to_string(err));
  }

  Rational lambda() { return kLambdas[rng() % 3]; }
};

void suite_cocycle(Ctx& c) {
  const int n = c.cfg.order;
  for (int s = 0; s < c.cfg.samples; ++s) {
    const ResMap f = random_resmap(c.rng, c.lambda(), n / 2);
    const Jet2 phi = random_jet2(c.rng, n);
    const CocycleSplit split = normalize_cocycle(phi, f);
    c.record(substitute_xy(split.resonance_part, n) + split.coboundary_part == phi &&
                 coboundary(split.transfer, f) == split.coboundary_part && diag_part(split.transfer).is_zero(),
             "normalize_cocycle residual nonzero");
  }
}

void suite_diagonal(Ctx& c) {
  const int n = c.cfg.order;
  for (int s = 0; s < c.cfg.samples; ++s) {
    const ResMap f = random_resmap(c.rng, c.lambda(), n / 2);
    const Jet2 u = random_jet2(c.rng, n);
    c.record(diag_part(coboundary(u, f)).is_zero(), "coboundary with a diagonal term");
  }
}

void suite_birkhoff(Ctx& c) {
  const int n = c.cfg.order;
  for (int s = 0; s < c.cfg.samples; ++s) {
    const ResMap r = random_resmap(c.rng, c.lambda(), (n - 1) / 2);
    const MapJet2 m = conjugate(r.to_map(n), random_symplectic(c.rng, n));
    const NormalizationResult res = birkhoff_normalize(m);
    c.record(res.res_form == r && conjugate(m, res.conjugacy) == r.to_map(n), "Birkhoff coefficients not recovered");
  }
}

void suite_reeb(Ctx& c) {
  for (int s = 0; s < c.cfg.samples; ++s) {
    const ContactNF k = random_contact(c.rng, c.cfg.order);
    c.record(reeb_check(k, reeb_field(k)).pass, "Reeb conditions fail");
  }
}

void suite_volume(Ctx& c) {
  for (int s = 0; s < c.cfg.samples; ++s) {
    c.record(volume_identity(random_contact(c.rng, c.cfg.order)).pass, "alpha^dalpha != roof volume");
  }
}

void suite_dr(Ctx& c) {
  for (int s = 0; s < c.cfg.samples; ++s) {
    const Jet1 eta = random_jet1(c.rng, c.cfg.order - 1);
    const Rational c0 = random_positive(c.rng);
    const Jet1 roof = roof_from_eta(eta, c0);
    c.record(is_zero(roof[1]) && eta_from_roof(roof, eta[0]) == eta && dr_identity(eta, c0).pass,
             "return-time identity fails");
  }
}

void suite_lie(Ctx& c) {
  for (int s = 0; s < c.cfg.samples; ++s) {
    c.record(lie_identity(random_jet1(c.rng, c.cfg.order - 1)).pass, "L_Y beta != -xy deta");
  }
}

void suite_tubular(Ctx& c) {
  for (int s = 0; s < c.cfg.samples; ++s) {
    c.record(tubular_identity(random_contact(c.rng, c.cfg.order)).pass, "roof + z eta != theta");
  }
}

void suite_moser(Ctx& c) {
  const int n = c.cfg.order;
  for (int s = 0; s < c.cfg.samples; ++s) {
    const ResMap f(c.lambda(), Jet1::constant(0, Rational(1)));
    // moser_normalize verifies both postconditions itself and throws otherwise.
    try {
      moser_normalize(random_invariant_density(c.rng, n), f);
      c.record(true, "");
    } catch (const Error& e) {
      c.record(false, e.what());
    }
  }
}

void suite_centralizer(Ctx& c) {
  const int n = c.cfg.order;
  for (int s = 0; s < c.cfg.samples; ++s) {
    const ResMap r = random_resmap(c.rng, c.lambda(), (n - 1) / 2);
    const CentralizerReport id = centralizer_solve(r.to_map(n), Rational(1));
    c.record(id.feasible, "det 1 infeasible");
    if (!is_zero(r.omega()[1])) {
      const CentralizerReport half = centralizer_solve(r.to_map(n), Rational(1, 2));
      c.record(!half.feasible && half.inconsistent_degree == 3, "det 1/2 not obstructed at degree 3");
    }
  }
}

void suite_base_roof(Ctx& c) {
  for (int s = 0; s < c.cfg.samples; ++s) {
    const ContactNF k = random_contact(c.rng, c.cfg.order);
    const InvariantReport inv = contact_invariants(k);
    c.record(base_roof_reconstruct(inv.roof, inv.period, inv.lyapunov_plus) == k, "theta not reconstructed");
  }
}

void suite_linearizability(Ctx& c) {
  for (int s = 0; s < c.cfg.samples; ++s) {
    ContactNF k = random_contact(c.rng, c.cfg.order);
    if (s % 2 == 0) k = ContactNF(Jet1(c.cfg.order, {k.theta()[0], k.theta()[1]}));
    const bool a = linearizability_decide(k).linear;
    const bool b = contact_invariants(k).roof.is_constant();
    const bool d = section_map(reeb_field(k)).omega.is_constant();
    c.record(a == b && b == d, "linearizability criteria disagree");
  }
}

void suite_tangency(Ctx& c) {
  // Degree 4 terms are needed to see the Anosov class.
  const int n = std::max(c.cfg.order, 4);
  for (int s = 0; s < c.cfg.samples; ++s) {
    const ContactNF k = random_contact(c.rng, n / 2);
    const Jet2 r = substitute_xy(contact_roof(k.theta()), n);
    const ResMap f = random_resmap(c.rng, c.lambda(), (n - 1) / 2);
    const Tangency t = best_achievable_tangency(r, f);
    c.record((t.order >= 4) == is_zero(contact_invariants(k).anosov_class), "tangency does not track the Anosov class");
  }
}

void suite_flow(Ctx& c) {
  for (int s = 0; s < c.cfg.samples; ++s) {
    const ResVF v = random_resvf(c.rng, c.cfg.order);
    const Point2 p = random_point(c.rng, 0.4);
    c.record_error(flow_discrepancy(v, {0, p[0], p[1]}, 1.0, 1e-3), c.cfg.tolerance, "flow");
  }
}

void suite_fd_reeb(Ctx& c) {
  for (int s = 0; s < c.cfg.samples; ++s) {
    const ContactNF k = random_contact(c.rng, c.cfg.order);
    std::vector<Point2> pts;
    for (int i = 0; i < 10; ++i) pts.push_back(random_point(c.rng, 0.1));
    c.record_error(fd_reeb_check(k, reeb_field(k), pts).max_residual, 1e-6, "fd reeb");
  }
}

void suite_sl2(Ctx& c) {
  std::vector<Point2> pts;
  for (int i = 0; i < std::max(1, c.cfg.samples) * 10; ++i) pts.push_back(random_point(c.rng, 0.95));
  const Sl2Report rep = sl2_check(std::log(3.0), pts, c.cfg.order);
  c.record_error(rep.max_entry_error, 1e-12, "sl2 identity");
  c.record(rep.linearizable && rep.constant_roof, "sl2 contact form not linear");
}

void suite_section(Ctx& c) {
  for (int s = 0; s < c.cfg.samples; ++s) {
    const ResVF v = random_resvf(c.rng, c.cfg.order);
    const Point2 p = random_point(c.rng, 0.3);
    const SectionMap sm = section_map(v);
    const Point2 a = section_flow_eval(v.g(), 1.0, p);
    const Point2 b = section_map_eval(sm, p);
    // exp(g - g(0)) is truncated at the jet order; compare within the tail budget.
    const double budget = c.cfg.tolerance + tail_estimate(sm.omega, p[0] * p[1]) * 10;
    c.record_error(std::max(std::abs(a[0] - b[0]), std::abs(a[1] - b[1])), budget, "section map");
  }
}

using SuiteFn = std::function<void(Ctx&)>;

const std::map<std::string, SuiteFn>& exact_suites() {
  static const std::map<std::string, SuiteFn> m{
      {"cocycle", suite_cocycle},   {"diagonal", suite_diagonal},       {"birkhoff", suite_birkhoff},
      {"reeb", suite_reeb},         {"volume", suite_volume},           {"dr", suite_dr},
      {"lie", suite_lie},           {"tubular", suite_tubular},         {"moser", suite_moser},
      {"centralizer", suite_centralizer}, {"base-roof", suite_base_roof}, {"linearizability", suite_linearizability},
      {"tangency", suite_tangency}};
  return m;
}

const std::map<std::string, SuiteFn>& numeric_suites() {
  static const std::map<std::string, SuiteFn> m{
      {"flow", suite_flow}, {"fd-reeb", suite_fd_reeb}, {"sl2", suite_sl2}, {"section", suite_section}};
  return m;
}

std::vector<std::string> keys(const std::map<std::string, SuiteFn>& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

}  // namespace

std::vector<std::string> exact_suite_names() { return keys(exact_suites()); }
std::vector<std::string> numeric_suite_names() { return keys(numeric_suites()); }

std::vector<SuiteResult> run_suites(const SuiteConfig& cfg, const std::vector<std::string>& names) {
  std::vector<SuiteResult> out;
  for (const auto& name : names) {
    SuiteResult res;
    res.name = name;
    const SuiteFn* fn = nullptr;
    if (auto it = exact_suites().find(name); it != exact_suites().end()) {
      fn = &it->second;
      res.kind = "exact";
    } else if (auto jt = numeric_suites().find(name); jt != numeric_suites().end()) {
      fn = &jt->second;
      res.kind = "numeric";
    } else {
      throw std::invalid_argument("unknown suite: " + name);
    }
    // Each suite gets its own stream so results do not depend on suite selection.
    Rng rng(cfg.seed ^ std::hash<std::string>{}(name));
    Ctx ctx{cfg, rng, res};
    try {
      (*fn)(ctx);
    } catch (const Error& e) {
      ctx.record(false, std::string("error: ") + e.what());
    }
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace rnf
