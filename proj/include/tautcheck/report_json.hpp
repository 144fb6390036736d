#ifndef TAUTCHECK_REPORT_JSON_HPP
#define TAUTCHECK_REPORT_JSON_HPP

#include <string>

#include <json.hpp>

#include "tautcheck/verify.hpp"

namespace tautcheck {

// nlohmann::json keeps object keys sorted, which gives the canonical order.

inline nlohmann::json to_json(const CheckRecord& c)
{
    return {{"id", c.id},
            {"citation", c.citation},
            {"computed", c.computed},
            {"expected", c.expected},
            {"status", status_name(c.status)}};
}

inline nlohmann::json to_json(const Report& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back(to_json(c));
    return {{"checks", checks}, {"passed", r.passed()}, {"failed", r.failed()}, {"cited", r.cited()}};
}

inline std::string render_json(const Report& r) { return to_json(r).dump(2); }

} // namespace tautcheck

#endif // TAUTCHECK_REPORT_JSON_HPP
