#pragma once

/**
 * @file json_io.hpp
 * @brief JSON serialization of verdicts and reports (nlohmann::json).
 *
 * Non-finite numbers are written as the strings "+inf", "-inf" and "nan".
 */

#include "classifier.hpp"
#include "kernels.hpp"
#include "oracle.hpp"
#include "ratio_engine.hpp"
#include "stochastic.hpp"
#include "verdict.hpp"

#include <json.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace monoratio {

using json = nlohmann::ordered_json;

inline json number_to_json(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "+inf" : "-inf";
    return v;
}

inline double number_from_json(const json& j)
{
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "+inf")
            return std::numeric_limits<double>::infinity();
        if (s == "-inf")
            return -std::numeric_limits<double>::infinity();
        if (s == "nan")
            return std::numeric_limits<double>::quiet_NaN();
        throw domain_error("expected a number, got \"" + s + "\"");
    }
    return j.get<double>();
}

inline json to_json(const LimitEstimate& e)
{
    json j;
    j["endpoint"] = std::string(to_string(e.endpoint));
    j["value"] = number_to_json(e.value);
    j["sign"] = std::string(to_string(e.sign));
    j["confidence"] = std::string(to_string(e.confidence));
    json samples = json::array();
    for (const auto& [p, h] : e.samples)
        samples.push_back(json::array({number_to_json(p), number_to_json(h)}));
    j["samples"] = samples;
    if (e.closed_form)
        j["closed_form"] = number_to_json(*e.closed_form);
    if (e.closed_form_agrees)
        j["closed_form_agrees"] = *e.closed_form_agrees;
    if (!e.note.empty())
        j["note"] = e.note;
    return j;
}

inline LimitEstimate limit_from_json(const json& j)
{
    LimitEstimate e;
    e.endpoint = j.at("endpoint").get<std::string>() == "lower" ? Endpoint::Lower : Endpoint::Upper;
    e.value = number_from_json(j.at("value"));
    const auto s = j.at("sign").get<std::string>();
    for (LimitSign c : {LimitSign::Positive, LimitSign::Negative, LimitSign::Zero, LimitSign::Undetermined})
        if (to_string(c) == s)
            e.sign = c;
    const auto c = j.at("confidence").get<std::string>();
    for (Confidence k : {Confidence::Converged, Confidence::Extrapolated, Confidence::Failed})
        if (to_string(k) == c)
            e.confidence = k;
    for (const auto& s2 : j.at("samples"))
        e.samples.emplace_back(number_from_json(s2.at(0)), number_from_json(s2.at(1)));
    if (j.contains("closed_form"))
        e.closed_form = number_from_json(j["closed_form"]);
    if (j.contains("closed_form_agrees"))
        e.closed_form_agrees = j["closed_form_agrees"].get<bool>();
    if (j.contains("note"))
        e.note = j["note"].get<std::string>();
    return e;
}

inline json to_json(const MonotonicityVerdict& v)
{
    json j;
    j["pattern"] = std::string(to_string(v.pattern));
    j["turning_point"] = v.turning_point ? number_to_json(*v.turning_point) : json(nullptr);
    j["provenance"] = v.provenance;
    json diags = json::array();
    for (const auto& e : v.endpoint_diagnostics)
        diags.push_back(to_json(e));
    j["endpoint_diagnostics"] = diags;
    if (v.numeric_pattern)
        j["numeric_pattern"] = std::string(to_string(*v.numeric_pattern));
    j["notes"] = v.notes;
    return j;
}

inline MonotonicityVerdict verdict_from_json(const json& j)
{
    MonotonicityVerdict v;
    const auto p = parse_pattern(j.at("pattern").get<std::string>());
    if (!p)
        throw domain_error("unknown pattern in verdict JSON");
    v.pattern = *p;
    if (!j.at("turning_point").is_null())
        v.turning_point = number_from_json(j["turning_point"]);
    v.provenance = j.at("provenance").get<std::string>();
    for (const auto& e : j.at("endpoint_diagnostics"))
        v.endpoint_diagnostics.push_back(limit_from_json(e));
    if (j.contains("numeric_pattern"))
        v.numeric_pattern = parse_pattern(j["numeric_pattern"].get<std::string>());
    v.notes = j.at("notes").get<std::vector<std::string>>();
    return v;
}

inline json to_json(const ObservedPattern& o)
{
    json j;
    j["pattern"] = std::string(to_string(o.pattern));
    json cps = json::array();
    for (double c : o.change_points)
        cps.push_back(number_to_json(c));
    j["change_points"] = cps;
    j["grid"] = {{"n", o.n}, {"spacing", std::string(to_string(o.spacing))}, {"lo", o.lo}, {"hi", o.hi}};
    j["noise_floor"] = o.noise_floor;
    return j;
}

inline json to_json(const Agreement& a)
{
    json j;
    j["status"] = std::string(to_string(a.status));
    j["predicted"] = std::string(to_string(a.predicted));
    j["observed"] = std::string(to_string(a.observed));
    j["turning_predicted"] = a.turning_predicted ? number_to_json(*a.turning_predicted) : json(nullptr);
    j["turning_observed"] = a.turning_observed ? number_to_json(*a.turning_observed) : json(nullptr);
    j["detail"] = a.detail;
    return j;
}

inline json to_json(const OrderVerdict& v)
{
    json j;
    j["relation"] = std::string(to_string(v.relation));
    j["provenance"] = v.provenance;
    json diags = json::array();
    for (const auto& e : v.diagnostics)
        diags.push_back(to_json(e));
    j["diagnostics"] = diags;
    if (v.fallback_relation)
        j["fallback_relation"] = std::string(to_string(*v.fallback_relation));
    if (v.fallback_pattern)
        j["fallback_pattern"] = std::string(to_string(*v.fallback_pattern));
    j["notes"] = v.notes;
    return j;
}

inline json to_json(const VerificationReport& r)
{
    json j;
    j["kernel"] = r.kernel;
    j["class"] = std::string(to_string(r.cls));
    j["passed"] = r.passed();
    json conds = json::array();
    for (const auto& c : r.conditions) {
        json cj = {{"label", c.label}, {"passed", c.passed}};
        if (!c.witness.empty())
            cj["witness"] = c.witness;
        conds.push_back(cj);
    }
    j["conditions"] = conds;
    if (r.endpoint_constant)
        j["endpoint_constant"] = number_to_json(*r.endpoint_constant);
    return j;
}

inline json to_json(const CoefficientShape& s)
{
    json j;
    j["kind"] = std::string(to_string(s.kind));
    j["m"] = s.m ? json(*s.m) : json(nullptr);
    j["scan_horizon"] = s.scan_horizon;
    if (!s.note.empty())
        j["note"] = s.note;
    return j;
}

} // namespace monoratio
