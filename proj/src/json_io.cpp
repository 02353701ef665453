#include "rnf/json_io.hpp"

#include <charconv>
#include <fstream>

namespace rnf {

namespace {

const json& member(const json& j, const std::string& ptr, const char* key) {
  if (!j.is_object()) throw SchemaError(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(ptr + "/" + key, "missing required member");
  return *it;
}

int order_from_json(const json& j, const std::string& ptr) {
  if (!j.is_number_integer()) throw SchemaError(ptr, "order must be an integer");
  const auto n = j.get<long long>();
  if (n < 0 || n > 512) throw SchemaError(ptr, "order out of range");
  return static_cast<int>(n);
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size() && out >= 0;
}

Jet2 coeffs2_from_json(const json& c, int order, const std::string& ptr, const ParseOptions& opt) {
  if (!c.is_object()) throw SchemaError(ptr, "coefficients must be an object keyed by \"i,j\"");
  Jet2 out(order);
  for (const auto& [key, value] : c.items()) {
    const std::string p = ptr + "/" + pointer_token(key);
    const auto comma = key.find(',');
    int i = 0, jj = 0;
    if (comma == std::string::npos || !parse_int(std::string_view(key).substr(0, comma), i) ||
        !parse_int(std::string_view(key).substr(comma + 1), jj)) {
      throw SchemaError(p, "key must be \"i,j\" with non-negative integers");
    }
    if (i + jj > order) throw SchemaError(p, "monomial degree exceeds the jet order");
    out.add_term(i, jj, rational_from_json(value, p, opt));
  }
  return out;
}

json coeffs2_to_json(const Jet2& a) {
  json c = json::object();
  a.for_each_nonzero([&](int i, int j, const Rational& q) { c[std::to_string(i) + "," + std::to_string(j)] = to_json(q); });
  return c;
}

const char* mask_name(unsigned m) {
  switch (m) {
    case 0: return "1";
    case kDt: return "dt";
    case kDx: return "dx";
    case kDy: return "dy";
    case kDx | kDy: return "dx^dy";
    case kDt | kDx: return "dt^dx";
    case kDt | kDy: return "dt^dy";
    default: return "dt^dx^dy";
  }
}

}  // namespace

std::string pointer_token(const std::string& key) {
  std::string out;
  for (char ch : key) {
    if (ch == '~') out += "~0";
    else if (ch == '/') out += "~1";
    else out += ch;
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot open file " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("", "invalid JSON in " + path + ": " + e.what());
  }
}

Rational rational_from_json(const json& j, const std::string& ptr, const ParseOptions& opt) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(ptr, e.what());
    }
  }
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(mpz_class(std::to_string(j.get<unsigned long long>())))
                                  : Rational(mpz_class(std::to_string(j.get<long long>())));
  }
  if (j.is_number_float()) {
    if (!opt.allow_float) throw SchemaError(ptr, "floating-point numbers are not accepted in exact mode; use \"p/q\"");
    return Rational(j.get<double>());
  }
  throw SchemaError(ptr, "expected a rational string \"p/q\"");
}

json to_json(const Rational& q) { return to_string(q); }

Jet1 jet1_from_json(const json& j, const std::string& ptr, const ParseOptions& opt) {
  const int order = order_from_json(member(j, ptr, "order"), ptr + "/order");
  const json& c = member(j, ptr, "coeffs");
  if (!c.is_array()) throw SchemaError(ptr + "/coeffs", "coefficients must be an array");
  if (c.size() > static_cast<std::size_t>(order) + 1) {
    throw SchemaError(ptr + "/coeffs", "more coefficients than order + 1");
  }
  std::vector<Rational> out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    out.push_back(rational_from_json(c[k], ptr + "/coeffs/" + std::to_string(k), opt));
  }
  return Jet1(order, std::move(out));
}

json to_json(const Jet1& a) {
  json c = json::array();
  for (const auto& q : a.coeffs()) c.push_back(to_json(q));
  return json{{"order", a.order()}, {"coeffs", c}};
}

Jet2 jet2_from_json(const json& j, const std::string& ptr, const ParseOptions& opt) {
  const int order = order_from_json(member(j, ptr, "order"), ptr + "/order");
  return coeffs2_from_json(member(j, ptr, "coeffs"), order, ptr + "/coeffs", opt);
}

json to_json(const Jet2& a) { return json{{"order", a.order()}, {"coeffs", coeffs2_to_json(a)}}; }

MapJet2 map_from_json(const json& j, const std::string& ptr, const ParseOptions& opt) {
  const int order = order_from_json(member(j, ptr, "order"), ptr + "/order");
  const json& c = member(j, ptr, "components");
  if (!c.is_array() || c.size() != 2) throw SchemaError(ptr + "/components", "expected an array of two coefficient objects");
  Jet2 first = coeffs2_from_json(c[0], order, ptr + "/components/0", opt);
  Jet2 second = coeffs2_from_json(c[1], order, ptr + "/components/1", opt);
  try {
    return MapJet2(std::move(first), std::move(second));
  } catch (const PreconditionError& e) {
    throw SchemaError(ptr + "/components", e.what());
  }
}

json to_json(const MapJet2& m) {
  return json{{"order", m.order()}, {"components", json::array({coeffs2_to_json(m.first()), coeffs2_to_json(m.second())})}};
}

ResMap resmap_from_json(const json& j, const std::string& ptr, const ParseOptions& opt) {
  Rational lambda = rational_from_json(member(j, ptr, "lambda"), ptr + "/lambda", opt);
  Jet1 omega = jet1_from_json(member(j, ptr, "omega"), ptr + "/omega", opt);
  try {
    return ResMap(std::move(lambda), std::move(omega));
  } catch (const PreconditionError& e) {
    throw SchemaError(ptr, e.what());
  }
}

json to_json(const ResMap& r) { return json{{"lambda", to_json(r.lambda())}, {"omega", to_json(r.omega())}}; }

ResVF resvf_from_json(const json& j, const std::string& ptr, const ParseOptions& opt) {
  Jet1 f = jet1_from_json(member(j, ptr, "f"), ptr + "/f", opt);
  Jet1 g = jet1_from_json(member(j, ptr, "g"), ptr + "/g", opt);
  try {
    return ResVF(std::move(f), std::move(g));
  } catch (const PreconditionError& e) {
    throw SchemaError(ptr, e.what());
  }
}

json to_json(const ResVF& v) { return json{{"f", to_json(v.f())}, {"g", to_json(v.g())}}; }

ContactNF contact_from_json(const json& j, const std::string& ptr, const ParseOptions& opt) {
  const bool wrapped = j.is_object() && j.contains("theta");
  const std::string p = wrapped ? ptr + "/theta" : ptr;
  Jet1 theta = jet1_from_json(wrapped ? j.at("theta") : j, p, opt);
  try {
    return ContactNF(std::move(theta));
  } catch (const PreconditionError& e) {
    throw SchemaError(p, e.what());
  }
}

json to_json(const ContactNF& c) { return to_json(c.theta()); }

FormJet form_from_json(const json& j, const std::string& ptr, const ParseOptions& opt) {
  const json& deg = member(j, ptr, "degree");
  if (!deg.is_number_integer() || deg.get<long long>() < 0 || deg.get<long long>() > 3) {
    throw SchemaError(ptr + "/degree", "degree must be 0, 1, 2 or 3");
  }
  const int degree = deg.get<int>();
  const int order = order_from_json(member(j, ptr, "order"), ptr + "/order");
  const json& c = member(j, ptr, "components");
  if (!c.is_object()) throw SchemaError(ptr + "/components", "expected an object keyed by basis element");
  FormJet out(degree, order);
  for (const auto& [key, value] : c.items()) {
    const std::string p = ptr + "/components/" + pointer_token(key);
    bool found = false;
    for (unsigned m : FormJet::masks(degree)) {
      if (key == mask_name(m)) {
        out.set(m, coeffs2_from_json(value, order, p, opt));
        found = true;
      }
    }
    if (!found) throw SchemaError(p, "unknown basis element for a degree-" + std::to_string(degree) + " form");
  }
  return out;
}

json to_json(const FormJet& f) {
  json c = json::object();
  for (unsigned m : FormJet::masks(f.degree())) {
    if (!f.coeff(m).is_zero()) c[mask_name(m)] = coeffs2_to_json(f.coeff(m));
  }
  return json{{"degree", f.degree()}, {"order", f.order()}, {"components", c}};
}

json to_json(const Tangency& t) { return t.to_string(); }

json to_json(const InvariantReport& r) {
  return json{{"period", to_json(r.period)},
              {"lyapunov", json::array({to_json(r.lyapunov_plus), to_json(r.lyapunov_minus)})},
              {"roof", to_json(r.roof)},
              {"anosov_class", to_json(r.anosov_class)},
              {"fh_class", to_json(r.fh_class)}};
}

json to_json(const CheckReport& r) {
  json res = json::array();
  for (const auto& x : r.residuals) res.push_back(json{{"label", x.label}, {"jet", to_json(x.jet)}, {"zero", x.jet.is_zero()}});
  json out{{"name", r.name}, {"pass", r.pass}, {"residuals", res}};
  if (!r.values.empty()) {
    json vals = json::array();
    for (const auto& x : r.values) vals.push_back(json{{"label", x.label}, {"jet", to_json(x.jet)}});
    out["values"] = vals;
  }
  return out;
}

json to_json(const SectionMap& s) {
  return json{{"log_lambda", to_json(s.log_lambda)}, {"omega", to_json(s.omega)}, {"anosov_class", to_json(anosov_class(s))}};
}

json to_json(const LinearizabilityReport& r) { return json{{"linear", r.linear}, {"offending", r.offending}}; }

json to_json(const CentralizerReport& r) {
  json out{{"feasible", r.feasible}, {"message", r.message}};
  if (r.inconsistent_degree) out["inconsistent_degree"] = *r.inconsistent_degree;
  if (r.witness) out["witness"] = to_json(*r.witness);
  return out;
}

json to_json(const Mat2Q& m) {
  return json::array({json::array({to_json(m.a), to_json(m.b)}), json::array({to_json(m.c), to_json(m.d)})});
}

}  // namespace rnf
