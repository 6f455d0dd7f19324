#pragma once

// Sparse theta series sum_k sign(k) q^{e(k)} arising from instances of the
// Jacobi triple product, plus the half-integral generalized pentagonal
// family used by the bisection recurrence.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "integer.hpp"
#include "series.hpp"

namespace qpart {

enum class theta_family {
    pent,       // k in Z,  k(3k+1)/2, (-1)^k
    pent_ceil,  // k in Z,  k(3k+1)/2, (-1)^ceil(k/2)
    pent2,      // k in Z,  k(3k+1),   (-1)^k
    tri,        // k >= 0,  k(k+1)/2,  +1
    tri_ceil,   // k >= 0,  k(k+1)/2,  (-1)^ceil(k/2)
    sq,         // k in Z,  k^2,       +1
    twosq,      // k in Z,  2k^2,      (-1)^k
    two_tri4,   // k >= 0,  2k(k+1),   +1
    gpent_half, // k >= 0,  G_k/2,     (-1)^ceil(k/2)
    sq_alt,     // k in Z,  k^2,       (-1)^k
    twosq_plus, // k in Z,  2k^2,      +1
};

inline constexpr std::array all_theta_families = {
    theta_family::pent,     theta_family::pent_ceil,  theta_family::pent2,  theta_family::tri,
    theta_family::tri_ceil, theta_family::sq,         theta_family::twosq,  theta_family::two_tri4,
    theta_family::gpent_half, theta_family::sq_alt,   theta_family::twosq_plus,
};

constexpr std::string_view name(theta_family f) {
    switch (f) {
    case theta_family::pent: return "PENT";
    case theta_family::pent_ceil: return "PENT_CEIL";
    case theta_family::pent2: return "PENT2";
    case theta_family::tri: return "TRI";
    case theta_family::tri_ceil: return "TRI_CEIL";
    case theta_family::sq: return "SQ";
    case theta_family::twosq: return "TWOSQ";
    case theta_family::two_tri4: return "TWO_TRI4";
    case theta_family::gpent_half: return "GPENT_HALF";
    case theta_family::sq_alt: return "SQ_ALT";
    case theta_family::twosq_plus: return "TWOSQ_PLUS";
    }
    return "?";
}

inline std::optional<theta_family> theta_family_from_name(std::string_view s) {
    for (auto f : all_theta_families) {
        if (name(f) == s) {
            return f;
        }
    }
    return std::nullopt;
}

constexpr bool is_two_sided(theta_family f) {
    switch (f) {
    case theta_family::tri:
    case theta_family::tri_ceil:
    case theta_family::two_tri4:
    case theta_family::gpent_half:
        return false;
    default:
        return true;
    }
}

/// Merca's G_k = ceil(k/2) * (3*ceil(k/2) + (-1)^k) / 2, k >= 0; this runs
/// through the generalized pentagonal numbers 0, 1, 2, 5, 7, 12, ...
constexpr std::int64_t merca_g(std::int64_t k) {
    const std::int64_t c = ceil_half(k);
    return c * (3 * c + minus_one_pow(k)) / 2;
}

/// Twice the exponent contributed by index k. Doubling keeps the
/// half-integral GPENT_HALF family in exact integer arithmetic.
constexpr std::int64_t twice_exponent(theta_family f, std::int64_t k) {
    switch (f) {
    case theta_family::pent:
    case theta_family::pent_ceil: return k * (3 * k + 1);
    case theta_family::pent2: return 2 * k * (3 * k + 1);
    case theta_family::tri:
    case theta_family::tri_ceil: return k * (k + 1);
    case theta_family::sq:
    case theta_family::sq_alt: return 2 * k * k;
    case theta_family::twosq:
    case theta_family::twosq_plus: return 4 * k * k;
    case theta_family::two_tri4: return 4 * k * (k + 1);
    case theta_family::gpent_half: return merca_g(k);
    }
    return 0;
}

constexpr int theta_sign(theta_family f, std::int64_t k) {
    switch (f) {
    case theta_family::pent:
    case theta_family::pent2:
    case theta_family::twosq:
    case theta_family::sq_alt: return minus_one_pow(k);
    case theta_family::pent_ceil:
    case theta_family::tri_ceil:
    case theta_family::gpent_half: return minus_one_pow(ceil_half(k));
    case theta_family::tri:
    case theta_family::sq:
    case theta_family::two_tri4:
    case theta_family::twosq_plus: return 1;
    }
    return 1;
}

/// Calls fn(k, exponent, sign) for every index whose exponent is an integer
/// in [0, bound]. Indices are visited in the order 0, -1, 1, -2, 2, ... for
/// two-sided families and 0, 1, 2, ... otherwise. Exponents grow strictly
/// with |k|, so the walk stops at the first |k| past the bound.
template <class Fn>
void for_each_theta_term(theta_family f, std::int64_t bound, Fn&& fn) {
    if (bound < 0) {
        return;
    }
    const std::int64_t twice_bound = 2 * bound;
    auto visit = [&](std::int64_t k) {
        const std::int64_t t = twice_exponent(f, k);
        if (t <= twice_bound && t % 2 == 0) {
            fn(k, t / 2, theta_sign(f, k));
        }
        return t <= twice_bound;
    };
    visit(0);
    for (std::int64_t m = 1;; ++m) {
        bool any = false;
        if (is_two_sided(f)) {
            any = visit(-m) || any;
        }
        any = visit(m) || any;
        if (!any) {
            break;
        }
    }
}

/// sum_k sign(k) q^{e(k)} truncated at the order.
inline series theta_series(theta_family f, std::size_t order) {
    std::vector<integer> c(order + 1);
    for_each_theta_term(f, static_cast<std::int64_t>(order),
                        [&](std::int64_t, std::int64_t e, int s) { c[static_cast<std::size_t>(e)] += s; });
    return series(std::move(c));
}

} // namespace qpart
