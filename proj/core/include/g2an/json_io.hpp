#pragma once

#include "g2an/bigcomplex.hpp"
#include "g2an/frobenius.hpp"
#include "g2an/verify.hpp"

#include <json.hpp>

#include <string>

namespace g2an {

// Complex values travel as ["<re>", "<im>"] exact decimal strings so a point
// can be replayed bit-identically at any precision at least as large.
nlohmann::json complex_to_json(const BigComplex& v);
BigComplex complex_from_json(const nlohmann::json& j, long precision_bits);

nlohmann::json param_point_to_json(const ParamPoint& p);
ParamPoint param_point_from_json(const nlohmann::json& j, long precision_bits);

nlohmann::json jet_to_json(const Jet2& jet);
Jet2 jet_from_json(const nlohmann::json& j, long precision_bits);

nlohmann::json report_to_json(const VerificationReport& report);

} // namespace g2an
