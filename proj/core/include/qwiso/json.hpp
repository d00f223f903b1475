#pragma once

// JSON interchange formats.
//
//   ConnectionSet   {"p": 13, "elements": [1, 3, 4, 9, 10, 12]}
//   Polynomial      {"degree": 6, "monic": true, "coefficients": [...ascending...]}
//   IsoVerdict      {"isomorphic": bool, "witness_multiplier": int|null,
//                    "spectral_equal": bool, "method_agreement": bool}
//   RecoveryReport  {"p", "k", "c_values", "recovered_set", "max_rounding_residual"}

#include <string_view>

#include <nlohmann/json.hpp>

#include "qwiso/modp.hpp"
#include "qwiso/polynomial.hpp"
#include "qwiso/recovery.hpp"

namespace qwiso {

nlohmann::ordered_json to_json(const ConnectionSet& s);
nlohmann::ordered_json to_json(const Polynomial& poly);
nlohmann::ordered_json to_json(const IsoVerdict& v);
nlohmann::ordered_json to_json(const RecoveryReport& r);
nlohmann::ordered_json to_json(const SrgParameters& params);

// Throw kParseError on malformed input; validation errors from the domain
// constructors propagate unchanged.
ConnectionSet connection_set_from_json(const nlohmann::ordered_json& j);
ConnectionSet parse_connection_set(std::string_view text);
Polynomial polynomial_from_json(const nlohmann::ordered_json& j);
IsoVerdict iso_verdict_from_json(const nlohmann::ordered_json& j);

}  // namespace qwiso
