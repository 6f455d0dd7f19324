#pragma once

// Right-hand-side indicator functions of the recurrences. Membership tests
// use exact integer square roots only.

#include <cstdint>
#include <optional>
#include <string_view>

#include "integer.hpp"

namespace qpart {

/// n = m(m+1)/2 for some m >= 0.
constexpr bool is_triangular(std::int64_t n) { return n >= 0 && is_perfect_square(8 * n + 1); }

/// n = m^2 for some m >= 0.
constexpr bool is_square(std::int64_t n) { return is_perfect_square(n); }

/// n = m(m+1) for some m >= 0.
constexpr bool is_pronic(std::int64_t n) { return n >= 0 && is_perfect_square(4 * n + 1); }

/// The unique m in Z with n = m(3m+1)/2, if any. 24n+1 = (6m+1)^2, so both
/// roots +-s of the discriminant are tried.
constexpr std::optional<std::int64_t> generalized_pentagonal_index(std::int64_t n) {
    if (n < 0) {
        return std::nullopt;
    }
    const std::int64_t d = 24 * n + 1;
    const std::int64_t s = isqrt(d);
    if (s * s != d) {
        return std::nullopt;
    }
    for (std::int64_t root : {s, -s}) {
        if ((root - 1) % 6 == 0) {
            const std::int64_t m = (root - 1) / 6;
            if (m * (3 * m + 1) / 2 == n) {
                return m;
            }
        }
    }
    return std::nullopt;
}

enum class indicator_kind {
    zero,
    triangular,             // 1 if n = m(m+1)/2
    square,                 // 1 if n = m^2
    gen_pentagonal_signed,  // (-1)^ceil(m/2) if n = m(3m+1)/2
    pronic,                 // 1 if n = k(k+1)
    delta0,                 // 1 if n = 0
};

constexpr int indicator(indicator_kind kind, std::int64_t n) {
    switch (kind) {
    case indicator_kind::zero: return 0;
    case indicator_kind::triangular: return is_triangular(n) ? 1 : 0;
    case indicator_kind::square: return is_square(n) ? 1 : 0;
    case indicator_kind::gen_pentagonal_signed: {
        const auto m = generalized_pentagonal_index(n);
        return m ? minus_one_pow(ceil_half(*m)) : 0;
    }
    case indicator_kind::pronic: return is_pronic(n) ? 1 : 0;
    case indicator_kind::delta0: return n == 0 ? 1 : 0;
    }
    return 0;
}

} // namespace qpart
