#include "g2an/json_io.hpp"

#include "g2an/errors.hpp"

namespace g2an {

using nlohmann::json;

json complex_to_json(const BigComplex& v) {
    return json::array({v.re().to_decimal_exact(), v.im().to_decimal_exact()});
}

BigComplex complex_from_json(const json& j, long precision_bits) {
    if (!j.is_array() || j.size() != 2)
        throw DomainError("complex value must be a [re, im] pair of decimal strings");
    auto part = [&](const json& x) -> BigReal {
        if (x.is_string()) return BigReal(x.get<std::string>(), precision_bits);
        if (x.is_number()) return BigReal(x.get<double>(), precision_bits);
        throw DomainError("complex component must be a decimal string or number");
    };
    return BigComplex(part(j[0]), part(j[1]));
}

json param_point_to_json(const ParamPoint& p) {
    json t = json::array();
    for (const auto& v : p.t) t.push_back(complex_to_json(v));
    return json{{"n", p.n}, {"t", t}};
}

ParamPoint param_point_from_json(const json& j, long precision_bits) {
    if (!j.contains("n") || !j.contains("t"))
        throw DomainError("parameter point needs fields \"n\" and \"t\"");
    ParamPoint p;
    p.n = j.at("n").get<int>();
    const json& t = j.at("t");
    if (!t.is_array() || static_cast<int>(t.size()) != p.n)
        throw DomainError("field \"t\" must hold exactly n [re, im] pairs");
    p.t.reserve(t.size());
    for (const auto& v : t) p.t.push_back(complex_from_json(v, precision_bits));
    return p;
}

json jet_to_json(const Jet2& jet) {
    json ux = json::array(), uxx = json::array();
    for (const auto& v : jet.ux) ux.push_back(complex_to_json(v));
    for (const auto& v : jet.uxx) uxx.push_back(complex_to_json(v));
    return json{{"ux", ux}, {"uxx", uxx}};
}

Jet2 jet_from_json(const json& j, long precision_bits) {
    if (!j.contains("ux") || !j.contains("uxx"))
        throw DomainError("jet needs fields \"ux\" and \"uxx\"");
    Jet2 jet;
    for (const auto& v : j.at("ux")) jet.ux.push_back(complex_from_json(v, precision_bits));
    for (const auto& v : j.at("uxx")) jet.uxx.push_back(complex_from_json(v, precision_bits));
    return jet;
}

json report_to_json(const VerificationReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries) {
        json row{{"check_id", e.check_id}, {"n", e.n},
                 {"seed", e.seed},         {"trial", e.trial},
                 {"residual", e.residual}, {"termscale", e.termscale},
                 {"rel_residual", e.rel_residual}, {"tolerance", e.tolerance},
                 {"gating", e.gating},     {"passed", e.passed}};
        if (e.point_json) row["point"] = json::parse(*e.point_json);
        if (e.jet_json) row["jet"] = json::parse(*e.jet_json);
        entries.push_back(std::move(row));
    }
    return json{{"seed", report.seed},
                {"precision_bits", report.precision_bits},
                {"summary",
                 {{"total", report.summary.total},
                  {"passed", report.summary.passed},
                  {"failed", report.summary.failed},
                  {"informational_failed", report.summary.informational_failed},
                  {"wall_time_seconds", report.summary.wall_time_seconds}}},
                {"entries", entries}};
}

} // namespace g2an
