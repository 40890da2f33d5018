#pragma once
//
// JSON form of VerificationReport:
//
//   {case_id, points_tested, points_skipped, min_margin, argmin: {nu, x, y?},
//    violations: [...], inconclusive: [...]}
//
// Each violation / inconclusive entry is {nu, x, y?, margin, error?}; margin
// is null when the point failed to evaluate.  Non-finite numbers become null.
//

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "inequalities.hpp"

namespace struvekit {

namespace detail {

inline nlohmann::json finite_or_null(std::optional<double> v) {
    if (v && std::isfinite(*v)) return *v;
    return nullptr;
}

inline std::optional<double> optional_number(const nlohmann::json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

inline nlohmann::json point_json(const GridPoint& p) {
    nlohmann::json j{{"nu", p.nu}, {"x", p.x}};
    if (p.y) j["y"] = *p.y;
    return j;
}

inline GridPoint point_from_json(const nlohmann::json& j) {
    GridPoint p{j.at("nu").get<double>(), j.at("x").get<double>(), std::nullopt};
    if (j.contains("y") && !j.at("y").is_null()) p.y = j.at("y").get<double>();
    return p;
}

inline nlohmann::json point_margin_json(const PointMargin& m) {
    nlohmann::json j = point_json(m.point);
    j["margin"] = finite_or_null(m.margin);
    if (!m.error.empty()) j["error"] = m.error;
    return j;
}

inline PointMargin point_margin_from_json(const nlohmann::json& j) {
    PointMargin m{point_from_json(j), optional_number(j.at("margin")), {}};
    if (j.contains("error")) m.error = j.at("error").get<std::string>();
    return m;
}

} // namespace detail

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& m : r.violations) v.push_back(detail::point_margin_json(m));
    nlohmann::json inc = nlohmann::json::array();
    for (const auto& m : r.inconclusive) inc.push_back(detail::point_margin_json(m));
    return {{"case_id", r.case_id},
            {"points_tested", r.points_tested},
            {"points_skipped", r.points_skipped},
            {"min_margin", detail::finite_or_null(r.min_margin)},
            {"argmin", detail::point_json(r.argmin)},
            {"violations", std::move(v)},
            {"inconclusive", std::move(inc)}};
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.case_id = j.at("case_id").get<std::string>();
    r.points_tested = j.at("points_tested").get<int>();
    r.points_skipped = j.at("points_skipped").get<int>();
    r.min_margin = detail::optional_number(j.at("min_margin"));
    r.argmin = detail::point_from_json(j.at("argmin"));
    for (const auto& e : j.at("violations")) r.violations.push_back(detail::point_margin_from_json(e));
    for (const auto& e : j.at("inconclusive")) r.inconclusive.push_back(detail::point_margin_from_json(e));
    return r;
}

} // namespace struvekit
