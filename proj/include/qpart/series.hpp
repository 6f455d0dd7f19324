#pragma once

// Truncated formal power series with exact coefficients.
//
// A basic_series<C> of order N holds the coefficients of q^0..q^N and
// represents its value modulo q^{N+1}. All binary operations require both
// operands to share the same order.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace qpart {

template <class Coeff>
class basic_series {
public:
    using coefficient_type = Coeff;

    /// The zero series of order 0.
    basic_series() : coeffs_(1) {}

    /// The zero series of the given order.
    explicit basic_series(std::size_t order) : coeffs_(order + 1) {}

    /// Takes ownership of a coefficient vector; its length fixes the order.
    explicit basic_series(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw usage_error("series needs at least one coefficient");
        }
    }

    basic_series(std::initializer_list<Coeff> coeffs) : basic_series(std::vector<Coeff>(coeffs)) {}

    static basic_series constant(const Coeff& c, std::size_t order) {
        basic_series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    static basic_series one(std::size_t order) { return constant(Coeff(1), order); }

    /// c * q^exponent, or zero when the exponent lies beyond the order.
    static basic_series monomial(const Coeff& c, std::size_t exponent, std::size_t order) {
        basic_series s(order);
        if (exponent <= order) {
            s.coeffs_[exponent] = c;
        }
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const Coeff& operator[](std::size_t n) const { return coeffs_[n]; }

    /// Coefficient of q^n with out-of-range and negative indices reading as 0.
    Coeff at(std::int64_t n) const {
        if (n < 0 || static_cast<std::size_t>(n) > order()) {
            return Coeff(0);
        }
        return coeffs_[static_cast<std::size_t>(n)];
    }

    std::span<const Coeff> coefficients() const noexcept { return coeffs_; }

    /// Releases the coefficient storage, leaving this series as zero of order 0.
    std::vector<Coeff> release() && {
        std::vector<Coeff> out = std::move(coeffs_);
        coeffs_.assign(1, Coeff(0));
        return out;
    }

    basic_series truncate(std::size_t new_order) const {
        if (new_order > order()) {
            throw usage_error("cannot truncate series of order " + std::to_string(order()) +
                              " to larger order " + std::to_string(new_order));
        }
        return basic_series(std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
    }

    bool is_unit() const { return coeffs_[0] == Coeff(1) || coeffs_[0] == Coeff(-1); }

    friend bool operator==(const basic_series& x, const basic_series& y) { return x.coeffs_ == y.coeffs_; }

    friend std::ostream& operator<<(std::ostream& os, const basic_series& s) {
        os << '[';
        for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
            os << (i ? "," : "") << s.coeffs_[i];
        }
        return os << "]+O(q^" << s.order() + 1 << ')';
    }

private:
    std::vector<Coeff> coeffs_;
};

using series = basic_series<integer>;

namespace detail {

template <class C>
void require_same_order(const basic_series<C>& x, const basic_series<C>& y, const char* op) {
    if (x.order() != y.order()) {
        throw usage_error(std::string(op) + ": order mismatch (" + std::to_string(x.order()) + " vs " +
                          std::to_string(y.order()) + ")");
    }
}

template <class C>
std::vector<std::size_t> support(const basic_series<C>& x) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i <= x.order(); ++i) {
        if (x[i] != C(0)) {
            idx.push_back(i);
        }
    }
    return idx;
}

} // namespace detail

template <class C>
basic_series<C> series_add(const basic_series<C>& x, const basic_series<C>& y) {
    detail::require_same_order(x, y, "series_add");
    std::vector<C> out(x.coefficients().begin(), x.coefficients().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += y[i];
    }
    return basic_series<C>(std::move(out));
}

template <class C>
basic_series<C> series_sub(const basic_series<C>& x, const basic_series<C>& y) {
    detail::require_same_order(x, y, "series_sub");
    std::vector<C> out(x.coefficients().begin(), x.coefficients().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= y[i];
    }
    return basic_series<C>(std::move(out));
}

template <class C>
basic_series<C> series_scale(const basic_series<C>& x, const C& c) {
    std::vector<C> out(x.coefficients().begin(), x.coefficients().end());
    for (auto& v : out) {
        v *= c;
    }
    return basic_series<C>(std::move(out));
}

/// Cauchy product truncated at the shared order.
template <class C>
basic_series<C> series_mul(const basic_series<C>& x, const basic_series<C>& y) {
    detail::require_same_order(x, y, "series_mul");
    const std::size_t n = x.order();
    // Iterate over the sparser operand's nonzero terms.
    auto sx = detail::support(x);
    auto sy = detail::support(y);
    const bool swap = sy.size() < sx.size();
    const basic_series<C>& sparse = swap ? y : x;
    const basic_series<C>& dense = swap ? x : y;
    const auto& idx = swap ? sy : sx;

    std::vector<C> out(n + 1);
    C tmp;
    for (std::size_t i : idx) {
        const C& a = sparse[i];
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (dense[j] != C(0)) {
                tmp = a;
                tmp *= dense[j];
                out[i + j] += tmp;
            }
        }
    }
    return basic_series<C>(std::move(out));
}

/// Multiplicative inverse by incremental convolution. The constant term must
/// be +1 or -1.
template <class C>
basic_series<C> series_inverse(const basic_series<C>& x) {
    if (!x.is_unit()) {
        std::ostringstream msg;
        msg << "series_inverse: constant term " << x[0] << " is not a unit";
        throw domain_error(msg.str());
    }
    const std::size_t n = x.order();
    const C c0 = x[0]; // c0 == 1/c0
    std::vector<std::size_t> nz;
    for (std::size_t k = 1; k <= n; ++k) {
        if (x[k] != C(0)) {
            nz.push_back(k);
        }
    }
    std::vector<C> y(n + 1);
    y[0] = c0;
    C acc;
    C tmp;
    for (std::size_t m = 1; m <= n; ++m) {
        acc = 0;
        for (std::size_t k : nz) {
            if (k > m) {
                break;
            }
            tmp = x[k];
            tmp *= y[m - k];
            acc += tmp;
        }
        y[m] = c0 == C(1) ? C(-acc) : acc;
    }
    return basic_series<C>(std::move(y));
}

/// Multiplies by q^shift, dropping terms past the order.
template <class C>
basic_series<C> series_shift(const basic_series<C>& x, std::size_t shift) {
    std::vector<C> out(x.order() + 1);
    for (std::size_t i = 0; i + shift <= x.order(); ++i) {
        out[i + shift] = x[i];
    }
    return basic_series<C>(std::move(out));
}

/// x * (1 - sign*q^e) in O(N). With e == 0 this is multiplication by the
/// constant (1 - sign).
template <class C>
basic_series<C> mul_binomial(basic_series<C> x, int sign, std::size_t e) {
    std::vector<C> c = std::move(x).release();
    const std::size_t n = c.size() - 1;
    if (e == 0) {
        for (auto& v : c) {
            v *= C(1 - sign);
        }
        return basic_series<C>(std::move(c));
    }
    if (e > n) {
        return basic_series<C>(std::move(c));
    }
    for (std::size_t i = n; i >= e; --i) {
        if (sign > 0) {
            c[i] -= c[i - e];
        } else {
            c[i] += c[i - e];
        }
        if (i == e) {
            break;
        }
    }
    return basic_series<C>(std::move(c));
}

/// x / (1 - sign*q^e) in O(N); requires e >= 1.
template <class C>
basic_series<C> div_binomial(basic_series<C> x, int sign, std::size_t e) {
    if (e == 0) {
        throw usage_error("div_binomial: exponent must be positive");
    }
    std::vector<C> c = std::move(x).release();
    for (std::size_t i = e; i < c.size(); ++i) {
        if (sign > 0) {
            c[i] += c[i - e];
        } else {
            c[i] -= c[i - e];
        }
    }
    return basic_series<C>(std::move(c));
}

/// Sum of a(m*n + r) q^n; the result has order floor((N - r)/m).
template <class C>
basic_series<C> progression_extract(const basic_series<C>& x, std::size_t m, std::size_t r) {
    if (m < 1 || r >= m) {
        throw usage_error("progression_extract: need m >= 1 and 0 <= r < m");
    }
    if (r > x.order()) {
        throw usage_error("progression_extract: residue exceeds series order");
    }
    const std::size_t out_order = (x.order() - r) / m;
    std::vector<C> out(out_order + 1);
    for (std::size_t n = 0; n <= out_order; ++n) {
        out[n] = x[m * n + r];
    }
    return basic_series<C>(std::move(out));
}

/// x^k for k >= 0 by repeated squaring; negative k inverts first.
template <class C>
basic_series<C> series_pow(const basic_series<C>& x, std::int64_t k) {
    if (k < 0) {
        return series_pow(series_inverse(x), -k);
    }
    basic_series<C> result = basic_series<C>::one(x.order());
    basic_series<C> base = x;
    while (k > 0) {
        if (k & 1) {
            result = series_mul(result, base);
        }
        k >>= 1;
        if (k > 0) {
            base = series_mul(base, base);
        }
    }
    return result;
}

template <class C>
basic_series<C> operator+(const basic_series<C>& x, const basic_series<C>& y) {
    return series_add(x, y);
}
template <class C>
basic_series<C> operator-(const basic_series<C>& x, const basic_series<C>& y) {
    return series_sub(x, y);
}
template <class C>
basic_series<C> operator*(const basic_series<C>& x, const basic_series<C>& y) {
    return series_mul(x, y);
}

} // namespace qpart
