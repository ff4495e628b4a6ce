#ifndef MOMPOLY_SERIALIZE_HPP
#define MOMPOLY_SERIALIZE_HPP

#include "mompoly/polynomial.hpp"

#include <json.hpp>

#include <string>

namespace mompoly {

// Exact scalars parse back exactly ("p/q" or integer strings); anything
// with a decimal point or exponent becomes a Float-mode scalar.
Scalar scalar_from_string(const std::string& s);

// Strict rational parsing for configuration values: accepts "p/q", integer
// and finite-decimal forms, never falls back to binary floating point.
Rational rational_from_string(const std::string& s);

nlohmann::json sequence_to_json(const MomentSequence& seq);
MomentSequence sequence_from_json(const nlohmann::json& j);

// {"basis": "moment"|"standard", "sequence": {...}, "coeffs": [strings]}
nlohmann::json polynomial_to_json(const MomentPolynomial& y, const std::string& basis);
MomentPolynomial polynomial_from_json(const nlohmann::json& j);

} // namespace mompoly

#endif
