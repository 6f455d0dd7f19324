#pragma once

#include <cstdint>
#include <vector>

#include <qpart/series.hpp>

namespace qpart::test {

inline series from_ints(const std::vector<std::int64_t>& v) {
    std::vector<integer> c(v.begin(), v.end());
    return series(std::move(c));
}

inline std::vector<std::int64_t> to_ints(const series& s) {
    std::vector<std::int64_t> out;
    for (const auto& c : s.coefficients()) {
        out.push_back(static_cast<std::int64_t>(c));
    }
    return out;
}

} // namespace qpart::test
