#pragma once

#include <string>

#include <json.hpp>

#include "rnf/birkhoff.hpp"
#include "rnf/cocycle.hpp"
#include "rnf/contactnf.hpp"
#include "rnf/errors.hpp"
#include "rnf/forms.hpp"

namespace rnf {

using json = nlohmann::json;

/// Malformed JSON input; `pointer()` is the JSON pointer of the offending value.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : Error((pointer.empty() ? std::string("<root>") : pointer) + ": " + message), pointer_(std::move(pointer)) {}

  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

struct ParseOptions {
  /// Accept JSON floats (converted exactly from their binary value).
  bool allow_float = false;
};

/// Escapes a key as a JSON pointer reference token.
std::string pointer_token(const std::string& key);

json read_json_file(const std::string& path);

Rational rational_from_json(const json& j, const std::string& ptr, const ParseOptions& opt = {});
json to_json(const Rational& q);

Jet1 jet1_from_json(const json& j, const std::string& ptr = "", const ParseOptions& opt = {});
json to_json(const Jet1& a);

Jet2 jet2_from_json(const json& j, const std::string& ptr = "", const ParseOptions& opt = {});
json to_json(const Jet2& a);

/// {"order": N, "components": [coeffs, coeffs]}.
MapJet2 map_from_json(const json& j, const std::string& ptr = "", const ParseOptions& opt = {});
json to_json(const MapJet2& m);

/// {"lambda": "p/q", "omega": Jet1}.
ResMap resmap_from_json(const json& j, const std::string& ptr = "", const ParseOptions& opt = {});
json to_json(const ResMap& r);

/// {"f": Jet1, "g": Jet1}.
ResVF resvf_from_json(const json& j, const std::string& ptr = "", const ParseOptions& opt = {});
json to_json(const ResVF& v);

/// A bare Jet1 for theta, or {"theta": Jet1}.
ContactNF contact_from_json(const json& j, const std::string& ptr = "", const ParseOptions& opt = {});
json to_json(const ContactNF& c);

/// {"degree": k, "order": N, "components": {"dt": coeffs, "dx^dy": coeffs, ...}}.
FormJet form_from_json(const json& j, const std::string& ptr = "", const ParseOptions& opt = {});
json to_json(const FormJet& f);

json to_json(const Tangency& t);
json to_json(const InvariantReport& r);
json to_json(const CheckReport& r);
json to_json(const SectionMap& s);
json to_json(const LinearizabilityReport& r);
json to_json(const CentralizerReport& r);
json to_json(const Mat2Q& m);

}  // namespace rnf
