#include "qwiso/json.hpp"

#include <string>
#include <vector>

#include "qwiso/error.hpp"

namespace qwiso {

using json = nlohmann::ordered_json;

namespace {

template <typename T>
T field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(ErrorCode::kParseError, std::string("missing field \"") + name + "\"");
  }
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("field \"") + name + "\": " + e.what());
  }
}

}  // namespace

json to_json(const ConnectionSet& s) { return json{{"p", s.p()}, {"elements", s.elements()}}; }

json to_json(const Polynomial& poly) {
  return json{{"degree", poly.degree()}, {"monic", true}, {"coefficients", poly.coefficients()}};
}

json to_json(const IsoVerdict& v) {
  json j{{"isomorphic", v.isomorphic},
         {"witness_multiplier", nullptr},
         {"spectral_equal", v.spectral_equal},
         {"method_agreement", v.method_agreement}};
  if (v.witness_multiplier) j["witness_multiplier"] = *v.witness_multiplier;
  return j;
}

json to_json(const RecoveryReport& r) {
  return json{{"p", r.p},
              {"k", r.k},
              {"c_values", r.c_values},
              {"recovered_set", to_json(r.recovered_set)},
              {"max_rounding_residual", r.max_rounding_residual}};
}

json to_json(const SrgParameters& params) {
  return json::array({params.n, params.k, params.lambda, params.mu});
}

ConnectionSet connection_set_from_json(const json& j) {
  const int p = field<int>(j, "p");
  const auto elements = field<std::vector<int>>(j, "elements");
  return ConnectionSet::make(p, elements);
}

ConnectionSet parse_connection_set(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return connection_set_from_json(j);
}

Polynomial polynomial_from_json(const json& j) {
  auto coeffs = field<std::vector<double>>(j, "coefficients");
  const int degree = field<int>(j, "degree");
  if (degree + 1 != static_cast<int>(coeffs.size())) {
    throw Error(ErrorCode::kParseError, "degree does not match coefficient count");
  }
  if (!field<bool>(j, "monic")) {
    throw Error(ErrorCode::kParseError, "only monic polynomials are supported");
  }
  return Polynomial::monic(std::move(coeffs));
}

IsoVerdict iso_verdict_from_json(const json& j) {
  IsoVerdict v;
  v.isomorphic = field<bool>(j, "isomorphic");
  v.spectral_equal = field<bool>(j, "spectral_equal");
  v.method_agreement = field<bool>(j, "method_agreement");
  if (!j.contains("witness_multiplier")) {
    throw Error(ErrorCode::kParseError, "missing field \"witness_multiplier\"");
  }
  if (!j.at("witness_multiplier").is_null()) v.witness_multiplier = field<int>(j, "witness_multiplier");
  return v;
}

}  // namespace qwiso
