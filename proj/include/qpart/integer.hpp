#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace qpart {

using integer = boost::multiprecision::cpp_int;

inline std::string to_string(const integer& x) { return x.str(); }

/// Floor of the square root of a nonnegative 64-bit value, exact.
constexpr std::int64_t isqrt(std::int64_t n) {
    if (n < 0) {
        throw usage_error("isqrt of negative value");
    }
    if (n < 2) {
        return n;
    }
    // Newton iteration from above converges monotonically for integers.
    std::uint64_t x = static_cast<std::uint64_t>(n);
    std::uint64_t y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + static_cast<std::uint64_t>(n) / x) / 2;
    }
    return static_cast<std::int64_t>(x);
}

constexpr bool is_perfect_square(std::int64_t n) {
    if (n < 0) {
        return false;
    }
    const std::int64_t r = isqrt(n);
    return r * r == n;
}

/// ceil(k/2) for every k in Z, i.e. floor((k+1)/2). Gives ceil(-1/2) = 0
/// and ceil(-3/2) = -1.
constexpr std::int64_t ceil_half(std::int64_t k) {
    const std::int64_t t = k + 1;
    return t >= 0 ? t / 2 : -((-t + 1) / 2);
}

/// (-1)^e for any integer e.
constexpr int minus_one_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace qpart
