#pragma once

// q-Pochhammer products (sign*q^a; q^b) expanded as truncated series.

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "errors.hpp"
#include "series.hpp"

namespace qpart {

/// (sign*q^a; q^b)_inf raised to `power`.
struct product_factor {
    int sign = 1;
    std::int64_t a = 1;
    std::int64_t b = 1;
    std::int64_t power = 1;

    friend bool operator==(const product_factor&, const product_factor&) = default;
};

/// A finite product of Pochhammer factors; every factor has constant term 1,
/// so the product is always invertible.
struct product_spec {
    std::vector<product_factor> factors;

    void validate() const {
        for (const auto& f : factors) {
            if (f.sign != 1 && f.sign != -1) {
                throw usage_error("product factor sign must be +1 or -1");
            }
            if (f.a < 1 || f.b < 1) {
                throw usage_error("product factor needs a >= 1 and b >= 1, got a=" + std::to_string(f.a) +
                                  " b=" + std::to_string(f.b));
            }
            if (f.power == 0) {
                throw usage_error("product factor power must be nonzero");
            }
        }
    }

    /// The reciprocal product: every power negated.
    product_spec inverse() const {
        product_spec out = *this;
        for (auto& f : out.factors) {
            f.power = -f.power;
        }
        return out;
    }

    friend bool operator==(const product_spec&, const product_spec&) = default;
};

namespace detail {

inline series apply_factor(series s, const product_factor& f, std::size_t order) {
    for (std::int64_t rep = 0; rep < std::abs(f.power); ++rep) {
        for (std::int64_t e = f.a; e <= static_cast<std::int64_t>(order); e += f.b) {
            s = mul_binomial(std::move(s), f.sign, static_cast<std::size_t>(e));
        }
    }
    return s;
}

} // namespace detail

/// Expands the product mod q^{order+1}. Positive powers are multiplied out as
/// sparse binomials; all negative-power factors are expanded together and
/// inverted once at the end.
inline series pochhammer_expand(const product_spec& spec, std::size_t order) {
    spec.validate();
    series numerator = series::one(order);
    series denominator = series::one(order);
    bool has_denominator = false;
    for (const auto& f : spec.factors) {
        if (f.power > 0) {
            numerator = detail::apply_factor(std::move(numerator), f, order);
        } else {
            denominator = detail::apply_factor(std::move(denominator), f, order);
            has_denominator = true;
        }
    }
    if (!has_denominator) {
        return numerator;
    }
    return series_mul(numerator, series_inverse(denominator));
}

inline series pochhammer_expand(const product_factor& f, std::size_t order) {
    return pochhammer_expand(product_spec{{f}}, order);
}

/// Finite product prod_{k=0}^{n-1} (1 - sign*q^{a+k*b}). Unlike the infinite
/// form, a = 0 is allowed: (-1;q)_n is pochhammer_finite(-1, 0, 1, n, N).
inline series pochhammer_finite(int sign, std::int64_t a, std::int64_t b, std::int64_t n, std::size_t order) {
    if (sign != 1 && sign != -1) {
        throw usage_error("pochhammer_finite: sign must be +1 or -1");
    }
    if (n < 0 || a < 0 || b < 1) {
        throw usage_error("pochhammer_finite: need n >= 0, a >= 0, b >= 1");
    }
    series s = series::one(order);
    for (std::int64_t k = 0; k < n; ++k) {
        const std::int64_t e = a + k * b;
        if (e > static_cast<std::int64_t>(order)) {
            break;
        }
        s = mul_binomial(std::move(s), sign, static_cast<std::size_t>(e));
    }
    return s;
}

} // namespace qpart
