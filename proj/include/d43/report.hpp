#pragma once

#include <string>
#include <utility>

#include "json.hpp"

namespace d43 {

// Machine-readable verification outcome. Violations are data, not errors:
// a failed check still returns normally with ok = false.
struct Report {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    bool ok = true;
    nlohmann::json violations = nlohmann::json::array();
    nlohmann::json tables = nlohmann::json::object();

    void fail(nlohmann::json v) {
        ok = false;
        violations.push_back(std::move(v));
    }

    nlohmann::json to_json() const {
        return {{"check", check},
                {"params", params},
                {"status", ok ? "pass" : "fail"},
                {"violations", violations},
                {"tables", tables}};
    }
};

}  // namespace d43
