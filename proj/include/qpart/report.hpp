#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "integer.hpp"

namespace qpart {

/// Outcome of checking an identity for every index up to n_max.
struct verification_report {
    struct failure {
        std::int64_t n = 0;
        integer residual;
    };

    std::string theorem;
    std::int64_t n_max = 0;
    std::optional<failure> first_failure;
    std::int64_t millis = 0;

    bool passed() const noexcept { return !first_failure.has_value(); }
};

/// {"theorem", "n_max", "status", "first_failure": {"n", "residual"} | null, "millis"}.
/// Residuals are decimal strings since they are unbounded integers.
inline nlohmann::ordered_json to_json(const verification_report& r) {
    nlohmann::ordered_json j;
    j["theorem"] = r.theorem;
    j["n_max"] = r.n_max;
    j["status"] = r.passed() ? "pass" : "fail";
    if (r.first_failure) {
        nlohmann::ordered_json f;
        f["n"] = r.first_failure->n;
        f["residual"] = to_string(r.first_failure->residual);
        j["first_failure"] = std::move(f);
    } else {
        j["first_failure"] = nullptr;
    }
    j["millis"] = r.millis;
    return j;
}

} // namespace qpart
