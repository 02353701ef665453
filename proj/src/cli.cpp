#include "rnf/cli.hpp"

#include <cmath>
#include <iostream>
#include <optional>
#include <random>

#include <CLI11.hpp>

#include "rnf/birkhoff.hpp"
#include "rnf/forms.hpp"
#include "rnf/identity_suite.hpp"
#include "rnf/json_io.hpp"
#include "rnf/oracle.hpp"

namespace rnf::cli {

namespace {

struct RunConfig {
  int order = 8;
  double tolerance = 1e-9;
  std::string mode = "exact";
  std::uint64_t seed = 1;

  ParseOptions parse_options() const { return ParseOptions{mode != "exact"}; }
};

/// A failed precondition on user data, surfaced with exit code 2.
struct BadInput {
  std::string message;
  std::string pointer;
};

json load(const std::string& path) { return read_json_file(path); }

Rational rational_arg(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw BadInput{std::string(e.what()), flag};
  }
}

json check_json(const std::string& name, bool pass, const std::string& provenance) {
  return json{{"name", name}, {"pass", pass}, {"provenance", provenance}};
}

json check_json(const CheckReport& r, const std::string& provenance) {
  json j = to_json(r);
  j["provenance"] = provenance;
  return j;
}

json map_residual(const MapJet2& a, const MapJet2& b) {
  return json{{"order", a.order()}, {"components", json::array({to_json(a.first() - b.first())["coeffs"],
                                                                 to_json(a.second() - b.second())["coeffs"]})}};
}

struct Outcome {
  json report;
  int code = kOk;
};

Outcome finish(json report, bool pass) {
  report["status"] = pass ? "ok" : "fail";
  return Outcome{std::move(report), pass ? kOk : kFailure};
}

Outcome cmd_normalize(const RunConfig& cfg, const std::string& path) {
  const MapJet2 m = map_from_json(load(path), "", cfg.parse_options());
  const int n = m.order();
  json report{{"verb", "normalize-map"}, {"order", n}};
  MapJet2 pre = MapJet2::identity(n);
  const Mat2Q lin = m.linear_part();
  if (!is_zero(lin.b) || !is_zero(lin.c) || lin.a < lin.d) {
    const Diagonalization dg = diagonalize_linear(m);
    pre = dg.conjugacy;
    report["diagonalization"] = to_json(dg.conjugacy.linear_part());
  }
  const MapJet2 diag = conjugate(m, pre);
  const NormalizationResult res = birkhoff_normalize(diag);
  const MapJet2 total = compose_map(res.conjugacy, pre);
  const MapJet2 normal = res.res_form.to_map(n);
  const MapJet2 conj = conjugate(m, total);
  const bool residual_zero = conj == normal;
  const bool area = det_jacobian(total) == Jet2::constant(n - 1, Rational(1));
  report["lambda"] = to_json(res.res_form.lambda());
  report["omega"] = to_json(res.res_form.omega());
  report["birkhoff_coefficients"] = to_json(res.birkhoff_coefficients);
  report["anosov_class"] = to_json(anosov_class(res.res_form));
  report["conjugacy"] = to_json(total);
  json residual = check_json("h o m o h^-1 - resonance form", residual_zero, "exact jet arithmetic");
  residual["residual"] = map_residual(conj, normal);
  report["checks"] = json::array({residual, check_json("det Dh = 1", area, "exact jet arithmetic")});
  return finish(std::move(report), residual_zero && area);
}

Outcome cmd_solve_cocycle(const RunConfig& cfg, const std::string& phi_path, const std::string& res_path) {
  const Jet2 phi = jet2_from_json(load(phi_path), "", cfg.parse_options());
  const ResMap f = resmap_from_json(load(res_path), "", cfg.parse_options());
  const CocycleSplit split = normalize_cocycle(phi, f);
  const Jet2 residual = substitute_xy(split.resonance_part, phi.order()) + coboundary(split.transfer, f) - phi;
  json check = check_json("phi_bar(xy) + (w o F - w) - phi", residual.is_zero(), "exact jet arithmetic");
  check["residual"] = to_json(residual);
  json report{{"verb", "solve-cocycle"},
              {"resonance_part", to_json(split.resonance_part)},
              {"transfer", to_json(split.transfer)},
              {"coboundary_part", to_json(split.coboundary_part)},
              {"checks", json::array({check})}};
  return finish(std::move(report), residual.is_zero());
}

Outcome cmd_retime(const RunConfig& cfg, const std::string& roof_path, const std::string& res_path,
                   const std::string& transfer_path) {
  const Jet2 r = jet2_from_json(load(roof_path), "", cfg.parse_options());
  const ResMap f = resmap_from_json(load(res_path), "", cfg.parse_options());
  Jet2 u = transfer_path.empty() ? normalize_cocycle(r, f).transfer
                                 : jet2_from_json(load(transfer_path), "", cfg.parse_options());
  const Jet2 retimed = retime_roof(r, u, f);
  json report{{"verb", "retime"},
              {"convention", "retimed = r - (u o F - u)"},
              {"transfer", to_json(u)},
              {"retimed_roof", to_json(retimed)},
              {"resonance_part", to_json(diag_part(retimed))}};
  bool pass = true;
  if (transfer_path.empty()) {
    pass = off_diagonal(retimed).is_zero();
    report["checks"] = json::array({check_json("retimed roof depends on xy only", pass, "exact jet arithmetic")});
  }
  return finish(std::move(report), pass);
}

Outcome cmd_tangency(const RunConfig& cfg, const std::string& phi_path, const std::string& res_path) {
  const Jet2 phi = jet2_from_json(load(phi_path), "", cfg.parse_options());
  json report{{"verb", "tangency"}, {"tangency", to_json(tangency_order(phi))}};
  if (!res_path.empty()) {
    const ResMap f = resmap_from_json(load(res_path), "", cfg.parse_options());
    report["best_achievable"] = to_json(best_achievable_tangency(phi, f));
  }
  return finish(std::move(report), true);
}

Outcome cmd_invariants(const RunConfig& cfg, const std::string& contact_path, const std::string& vf_path) {
  json report{{"verb", "invariants"}};
  if (!contact_path.empty()) {
    const ContactNF c = contact_from_json(load(contact_path), "", cfg.parse_options());
    report["source"] = "contact";
    report["invariants"] = to_json(contact_invariants(c));
  } else {
    const ResVF v = resvf_from_json(load(vf_path), "", cfg.parse_options());
    report["source"] = "vector-field";
    report["invariants"] = to_json(vf_invariants(v));
    report["section_map"] = to_json(section_map(v));
  }
  return finish(std::move(report), true);
}

Outcome cmd_reeb(const RunConfig& cfg, const std::string& contact_path, const std::string& field_path) {
  const ContactNF c = contact_from_json(load(contact_path), "", cfg.parse_options());
  const ResVF field = field_path.empty() ? reeb_field(c) : resvf_from_json(load(field_path), "", cfg.parse_options());
  const CheckReport reeb = reeb_check(c, field);
  const CheckReport volume = volume_identity(c);
  json report{{"verb", "reeb"},
              {"field", to_json(field)},
              {"disc_order", disc_order(c)},
              {"checks", json::array({check_json(reeb, "exact jet arithmetic"), check_json(volume, "exact jet arithmetic")})}};
  return finish(std::move(report), reeb.pass && volume.pass);
}

Outcome cmd_linearizable(const RunConfig& cfg, const std::string& contact_path) {
  const ContactNF c = contact_from_json(load(contact_path), "", cfg.parse_options());
  const LinearizabilityReport lin = linearizability_decide(c);
  const Jet1 roof = contact_invariants(c).roof;
  const SectionMap sm = section_map(reeb_field(c));
  const bool agree = lin.linear == roof.is_constant() && lin.linear == sm.omega.is_constant();
  json report{{"verb", "linearizable"},
              {"linearizable", lin.linear},
              {"offending", lin.offending},
              {"roof", to_json(roof)},
              {"roof_constant", roof.is_constant()},
              {"section_omega", to_json(sm.omega)},
              {"checks", json::array({check_json("criteria agree", agree, "exact jet arithmetic")})}};
  return finish(std::move(report), agree);
}

Outcome cmd_base_roof(const RunConfig& cfg, const std::string& first, const std::string& second,
                      const std::string& roof_path, const std::string& period, const std::string& lyap) {
  json report{{"verb", "base-roof-compare"}};
  if (!roof_path.empty()) {
    if (period.empty() || lyap.empty()) throw BadInput{"--roof needs --period and --lyapunov", "--roof"};
    const Jet1 roof = jet1_from_json(load(roof_path), "", cfg.parse_options());
    const ContactNF c = base_roof_reconstruct(roof, rational_arg(period, "--period"), rational_arg(lyap, "--lyapunov"));
    const bool round_trip = contact_invariants(c).roof == roof;
    report["theta"] = to_json(c);
    report["checks"] = json::array({check_json("roof of the reconstruction", round_trip, "exact jet arithmetic")});
    return finish(std::move(report), round_trip);
  }
  if (first.empty() || second.empty()) throw BadInput{"give --first and --second, or --roof", ""};
  const ContactNF a = contact_from_json(load(first), "/first", cfg.parse_options());
  const ContactNF b = contact_from_json(load(second), "/second", cfg.parse_options());
  const InvariantReport ia = contact_invariants(a);
  const InvariantReport ib = contact_invariants(b);
  const ContactNF ra = base_roof_reconstruct(ia.roof, ia.period, ia.lyapunov_plus);
  const ContactNF rb = base_roof_reconstruct(ib.roof, ib.period, ib.lyapunov_plus);
  const bool same_data = ia.roof == ib.roof && ia.lyapunov_plus == ib.lyapunov_plus;
  const bool same_theta = ra == rb;
  const bool faithful = ra == a && rb == b;
  report["same_roof"] = ia.roof == ib.roof;
  report["same_lyapunov"] = ia.lyapunov_plus == ib.lyapunov_plus;
  report["same_theta"] = same_theta;
  report["reconstructed_first"] = to_json(ra);
  report["reconstructed_second"] = to_json(rb);
  report["checks"] = json::array({check_json("reconstruction reproduces each form", faithful, "exact jet arithmetic"),
                                  check_json("equal data iff equal theta", same_data == same_theta, "exact jet arithmetic")});
  return finish(std::move(report), faithful && same_data == same_theta);
}

Outcome cmd_moser(const RunConfig& cfg, const std::string& density_path, const std::string& lambda) {
  const Jet2 g = jet2_from_json(load(density_path), "", cfg.parse_options());
  const ResMap f(rational_arg(lambda, "--lambda"), Jet1::constant(0, Rational(1)));
  const MapJet2 h = moser_normalize(g, f);
  const int n = g.order();
  const MapJet2 lin = MapJet2::linear(n, Mat2Q{f.lambda(), Rational(0), Rational(0), Rational(1) / f.lambda()});
  const bool commutes = compose_map(h, lin) == compose_map(lin, h);
  const bool normal = compose(g, h).truncated(n - 1) * det_jacobian(h) == Jet2::constant(n - 1, Rational(1));
  json report{{"verb", "moser"},
              {"H", to_json(h)},
              {"checks", json::array({check_json("H o F = F o H", commutes, "exact jet arithmetic"),
                                      check_json("H^*(g dx^dy) = dx^dy", normal, "exact jet arithmetic")})}};
  return finish(std::move(report), commutes && normal);
}

Outcome cmd_centralizer(const RunConfig& cfg, const std::string& map_path, const std::string& det) {
  const MapJet2 f = map_from_json(load(map_path), "", cfg.parse_options());
  const CentralizerReport rep = centralizer_solve(f, rational_arg(det, "--det"));
  json report = to_json(rep);
  report["verb"] = "centralizer";
  report["status"] = rep.feasible ? "ok" : "infeasible";
  return Outcome{std::move(report), rep.feasible ? kOk : kFailure};
}

Outcome cmd_retime_canonical(const RunConfig& cfg, const std::string& form_path) {
  const FormJet form = form_from_json(load(form_path), "", cfg.parse_options());
  const Jet2 tau = canonical_retime(form);
  const FormJet shifted = form + d(FormJet::function(tau));
  const bool ok = shifted == standard_beta(form.order());
  json report{{"verb", "retime-canonical"},
              {"tau", to_json(tau)},
              {"checks", json::array({check_json("input + dtau = (x dy - y dx)/2", ok, "exact jet arithmetic")})}};
  return finish(std::move(report), ok);
}

Outcome cmd_verify(const RunConfig& cfg, std::vector<std::string> suites, bool numeric, int samples) {
  const bool run_exact = cfg.mode != "numeric";
  const bool run_numeric = numeric || cfg.mode != "exact";
  if (suites.empty()) {
    if (run_exact) suites = exact_suite_names();
    if (run_numeric) {
      for (auto& s : numeric_suite_names()) suites.push_back(s);
    }
  }
  SuiteConfig sc{cfg.seed, cfg.order, samples, cfg.tolerance};
  std::vector<SuiteResult> results;
  try {
    results = run_suites(sc, suites);
  } catch (const std::invalid_argument& e) {
    throw BadInput{e.what(), "--suite"};
  }
  json arr = json::array();
  bool pass = true;
  for (const auto& r : results) {
    json j{{"name", r.name}, {"provenance", r.kind == "exact" ? "exact jet arithmetic" : "floating-point oracle"},
           {"pass", r.pass()}, {"cases", r.cases}, {"failures", r.failures}};
    if (r.kind == "numeric") j["max_error"] = r.max_error;
    if (!r.pass()) j["first_failure"] = r.first_failure;
    arr.push_back(j);
    pass = pass && r.pass();
  }
  json report{{"verb", "verify"}, {"seed", cfg.seed}, {"order", cfg.order}, {"samples", samples}, {"checks", arr}};
  return finish(std::move(report), pass);
}

Outcome cmd_demo_sl2(const RunConfig& cfg, double t, int samples) {
  if (!(t > 0)) throw BadInput{"--T must be positive", "--T"};
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> u(-0.95, 0.95);
  std::vector<Point2> pts;
  for (int i = 0; i < samples; ++i) {
    const double x = u(rng);
    pts.push_back({x, u(rng)});
  }
  const Sl2Report rep = sl2_check(t, pts, cfg.order);
  const bool ok = rep.max_entry_error < 1e-12;
  json report{{"verb", "demo sl2"},
              {"T", t},
              {"samples", rep.samples},
              {"max_entry_error", rep.max_entry_error},
              {"max_det_error", rep.max_det_error},
              {"theta", to_json(rep.contact)},
              {"linearizable", rep.linearizable},
              {"roof", to_json(rep.roof)},
              {"constant_roof", rep.constant_roof},
              {"checks", json::array({check_json("g_T p(x,y) = p(e^T x, e^-T y) gamma", ok, "floating-point oracle")})}};
  return finish(std::move(report), ok && rep.linearizable && rep.constant_roof);
}

int emit_error(std::ostream& out, std::ostream& err, const std::string& message, const std::string& pointer) {
  json j{{"status", "error"}, {"error", message}};
  if (!pointer.empty()) j["pointer"] = pointer;
  out << j.dump(2) << "\n";
  err << "error: " << message << "\n";
  return kBadInput;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact jet computations for resonance normal forms near hyperbolic periodic orbits", "rnf"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--order", cfg.order, "Default jet order for generated objects")
      ->envname("RNF_ORDER")
      ->check(CLI::Range(2, 64));
  app.add_option("--tolerance", cfg.tolerance, "Tolerance for numeric comparisons")->check(CLI::PositiveNumber);
  app.add_option("--mode", cfg.mode, "exact, numeric or both")->check(CLI::IsMember({"exact", "numeric", "both"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized suites");

  std::string map_path, phi_path, res_path, transfer_path, contact_path, vf_path, field_path, first, second, roof_path,
      period, lyap, density_path, lambda, det, form_path;
  std::vector<std::string> suites;
  bool all = false, numeric = false;
  int samples = 10;
  double demo_t = std::log(3.0);
  int demo_samples = 100;

  auto* normalize = app.add_subcommand("normalize-map", "Birkhoff normal form of an area-preserving map jet");
  normalize->add_option("--map", map_path, "MapJet2 JSON file")->required();

  auto* solve = app.add_subcommand("solve-cocycle", "Split a cocycle into resonance part and coboundary");
  solve->add_option("--phi", phi_path, "Jet2 JSON file")->required();
  solve->add_option("--res", res_path, "ResMap JSON file")->required();

  auto* retime = app.add_subcommand("retime", "Retime a roof function by a transfer function");
  retime->add_option("--roof", phi_path, "Jet2 JSON file")->required();
  retime->add_option("--res", res_path, "ResMap JSON file")->required();
  retime->add_option("--transfer", transfer_path, "Jet2 JSON file (default: the canonical transfer)");

  auto* tangency = app.add_subcommand("tangency", "Tangency order to a constant");
  tangency->add_option("--phi", phi_path, "Jet2 JSON file")->required();
  tangency->add_option("--res", res_path, "ResMap JSON file, for the best tangency up to coboundaries");

  auto* invariants = app.add_subcommand("invariants", "Periodic-orbit invariants");
  auto* inv_contact = invariants->add_option("--contact", contact_path, "ContactNF JSON file");
  auto* inv_vf = invariants->add_option("--vf", vf_path, "ResVF JSON file");
  inv_contact->excludes(inv_vf);
  invariants->require_option(1);

  auto* reeb = app.add_subcommand("reeb", "Reeb field of a contact form and its exact checks");
  reeb->add_option("--contact", contact_path, "ContactNF JSON file")->required();
  reeb->add_option("--field", field_path, "ResVF JSON file to check instead of the computed field");

  auto* linearizable = app.add_subcommand("linearizable", "Decide linearizability of a contact form jet");
  linearizable->add_option("--contact", contact_path, "ContactNF JSON file")->required();

  auto* base_roof = app.add_subcommand("base-roof-compare", "Reconstruct contact forms from roof and Lyapunov data");
  base_roof->add_option("--first", first, "ContactNF JSON file");
  base_roof->add_option("--second", second, "ContactNF JSON file");
  base_roof->add_option("--roof", roof_path, "Roof Jet1 JSON file");
  base_roof->add_option("--period", period, "Period p/q");
  base_roof->add_option("--lyapunov", lyap, "Positive Lyapunov exponent p/q");

  auto* moser = app.add_subcommand("moser", "Normalize an invariant area density");
  moser->add_option("--density", density_path, "Jet2 JSON file")->required();
  moser->add_option("--lambda", lambda, "Multiplier p/q of F = (lambda x, y / lambda)")->required();

  auto* centralizer = app.add_subcommand("centralizer", "Commuting jet with prescribed determinant");
  centralizer->add_option("--map", map_path, "MapJet2 JSON file")->required();
  centralizer->add_option("--det", det, "Target det DH(0) as p/q")->required();

  auto* retime_canonical = app.add_subcommand("retime-canonical", "Primitive normalizing a section pullback");
  retime_canonical->add_option("--form", form_path, "FormJet JSON file (degree 1, no dt part)")->required();

  auto* verify = app.add_subcommand("verify", "Randomized identity suites");
  verify->add_flag("--all", all, "Run every suite of the selected mode");
  verify->add_option("--suite", suites, "Run only the named suites");
  verify->add_flag("--numeric", numeric, "Include the floating-point oracle suites");
  verify->add_option("--samples", samples, "Random cases per suite")->check(CLI::Range(1, 10000));

  auto* demo = app.add_subcommand("demo", "Worked examples");
  demo->require_subcommand(1);
  auto* sl2 = demo->add_subcommand("sl2", "Homogeneous SL(2,R) example");
  sl2->add_option("--T", demo_t, "Period T > 0 (default ln 3)");
  sl2->add_option("--samples", demo_samples, "Random sample points")->check(CLI::Range(1, 1000000));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return emit_error(out, err, e.what(), "");
  }

  try {
    Outcome o;
    if (*normalize) o = cmd_normalize(cfg, map_path);
    else if (*solve) o = cmd_solve_cocycle(cfg, phi_path, res_path);
    else if (*retime) o = cmd_retime(cfg, phi_path, res_path, transfer_path);
    else if (*tangency) o = cmd_tangency(cfg, phi_path, res_path);
    else if (*invariants) o = cmd_invariants(cfg, contact_path, vf_path);
    else if (*reeb) o = cmd_reeb(cfg, contact_path, field_path);
    else if (*linearizable) o = cmd_linearizable(cfg, contact_path);
    else if (*base_roof) o = cmd_base_roof(cfg, first, second, roof_path, period, lyap);
    else if (*moser) o = cmd_moser(cfg, density_path, lambda);
    else if (*centralizer) o = cmd_centralizer(cfg, map_path, det);
    else if (*retime_canonical) o = cmd_retime_canonical(cfg, form_path);
    else if (*verify) o = cmd_verify(cfg, all ? std::vector<std::string>{} : suites, numeric, samples);
    else o = cmd_demo_sl2(cfg, demo_t, demo_samples);
    out << o.report.dump(2) << "\n";
    if (o.code == kFailure && o.report.contains("message")) err << o.report["message"].get<std::string>() << "\n";
    return o.code;
  } catch (const SchemaError& e) {
    return emit_error(out, err, e.what(), e.pointer());
  } catch (const BadInput& e) {
    return emit_error(out, err, e.message, e.pointer);
  } catch (const PreconditionError& e) {
    return emit_error(out, err, e.what(), "");
  } catch (const OrderMismatch& e) {
    return emit_error(out, err, e.what(), "");
  } catch (const Error& e) {
    out << json{{"status", "fail"}, {"error", e.what()}}.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace rnf::cli
