#pragma once

// Residual form (LHS - RHS) of every recurrence and convolution identity
// for the counting functions. An identity holds at n iff its residual is 0.

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "errors.hpp"
#include "indicators.hpp"
#include "integer.hpp"
#include "partition_functions.hpp"
#include "report.hpp"
#include "theta.hpp"

namespace qpart {

enum class theorem_id {
    t1,
    t2,
    t3,
    t4,
    t5,
    t6,
    t7_dissect_odd,
    t8_dissect_even,
    t9_p2,
    t_qbar,
    t_pdo_ident,
    t_pd_ident,
    cor_pdo,
    cor_pd,
    cor_pood_parity,
    cor_p_parity,
    cor_p2_parity,
    classical_euler,
    classical_ewell,
    classical_cks_sq,
    classical_cks_signed,
    classical_merca_gk,
    classical_merca_peed_tri,
    classical_merca_peed_2sq,
    lebesgue,
};

inline constexpr std::array all_theorems = {
    theorem_id::t1,
    theorem_id::t2,
    theorem_id::t3,
    theorem_id::t4,
    theorem_id::t5,
    theorem_id::t6,
    theorem_id::t7_dissect_odd,
    theorem_id::t8_dissect_even,
    theorem_id::t9_p2,
    theorem_id::t_qbar,
    theorem_id::t_pdo_ident,
    theorem_id::t_pd_ident,
    theorem_id::cor_pdo,
    theorem_id::cor_pd,
    theorem_id::cor_pood_parity,
    theorem_id::cor_p_parity,
    theorem_id::cor_p2_parity,
    theorem_id::classical_euler,
    theorem_id::classical_ewell,
    theorem_id::classical_cks_sq,
    theorem_id::classical_cks_signed,
    theorem_id::classical_merca_gk,
    theorem_id::classical_merca_peed_tri,
    theorem_id::classical_merca_peed_2sq,
    theorem_id::lebesgue,
};

constexpr std::string_view name(theorem_id id) {
    switch (id) {
    case theorem_id::t1: return "T1";
    case theorem_id::t2: return "T2";
    case theorem_id::t3: return "T3";
    case theorem_id::t4: return "T4";
    case theorem_id::t5: return "T5";
    case theorem_id::t6: return "T6";
    case theorem_id::t7_dissect_odd: return "T7_DISSECT_ODD";
    case theorem_id::t8_dissect_even: return "T8_DISSECT_EVEN";
    case theorem_id::t9_p2: return "T9_P2";
    case theorem_id::t_qbar: return "T_QBAR";
    case theorem_id::t_pdo_ident: return "T_PDO_IDENT";
    case theorem_id::t_pd_ident: return "T_PD_IDENT";
    case theorem_id::cor_pdo: return "COR_PDO";
    case theorem_id::cor_pd: return "COR_PD";
    case theorem_id::cor_pood_parity: return "COR_POOD_PARITY";
    case theorem_id::cor_p_parity: return "COR_P_PARITY";
    case theorem_id::cor_p2_parity: return "COR_P2_PARITY";
    case theorem_id::classical_euler: return "CLASSICAL_EULER";
    case theorem_id::classical_ewell: return "CLASSICAL_EWELL";
    case theorem_id::classical_cks_sq: return "CLASSICAL_CKS_SQ";
    case theorem_id::classical_cks_signed: return "CLASSICAL_CKS_SIGNED";
    case theorem_id::classical_merca_gk: return "CLASSICAL_MERCA_GK";
    case theorem_id::classical_merca_peed_tri: return "CLASSICAL_MERCA_PEED_TRI";
    case theorem_id::classical_merca_peed_2sq: return "CLASSICAL_MERCA_PEED_2SQ";
    case theorem_id::lebesgue: return "LEBESGUE";
    }
    return "?";
}

inline std::optional<theorem_id> theorem_from_name(std::string_view s) {
    for (auto id : all_theorems) {
        if (name(id) == s) {
            return id;
        }
    }
    return std::nullopt;
}

constexpr bool is_classical(theorem_id id) {
    return id >= theorem_id::classical_euler && id <= theorem_id::classical_merca_peed_2sq;
}

constexpr bool is_parity(theorem_id id) {
    return id == theorem_id::cor_pood_parity || id == theorem_id::cor_p_parity || id == theorem_id::cor_p2_parity;
}

namespace detail {

/// sum_k sign(k) * a(n - e(k)) over the family's terms with e(k) <= n.
inline integer theta_sum(theta_family f, partition_fn id, std::int64_t n, partition_tables& t) {
    integer acc = 0;
    if (n < 0) {
        return acc;
    }
    const auto tab = t.table(id, static_cast<std::size_t>(n));
    for_each_theta_term(f, n, [&](std::int64_t, std::int64_t e, int s) {
        if (s > 0) {
            acc += (*tab)[static_cast<std::size_t>(n - e)];
        } else {
            acc -= (*tab)[static_cast<std::size_t>(n - e)];
        }
    });
    return acc;
}

inline integer val(partition_fn id, std::int64_t n, partition_tables& t) { return t.value(id, n); }

inline integer mod2(const integer& x) { return (x % 2 == 0) ? integer(0) : integer(1); }

} // namespace detail

// Theorems on overpartitions into odd parts.

/// sum_{k in Z} (-1)^k po(n - k(3k+1)/2) minus the signed pentagonal indicator.
inline integer residual_t1(std::int64_t n, partition_tables& t = default_tables()) {
    return detail::theta_sum(theta_family::pent, partition_fn::po_odd, n, t) -
           indicator(indicator_kind::gen_pentagonal_signed, n);
}

/// sum_{k>=0} (-1)^ceil(k/2) po(n - k(k+1)/2) minus [n triangular].
inline integer residual_t2(std::int64_t n, partition_tables& t = default_tables()) {
    return detail::theta_sum(theta_family::tri_ceil, partition_fn::po_odd, n, t) -
           indicator(indicator_kind::triangular, n);
}

/// po(n) + 2 sum_{k>=1} (-1)^k po(n - 2k^2) minus (2 on positive squares, 1 at 0).
inline integer residual_t3(std::int64_t n, partition_tables& t = default_tables()) {
    const int rhs = n == 0 ? 1 : 2 * indicator(indicator_kind::square, n);
    return detail::theta_sum(theta_family::twosq, partition_fn::po_odd, n, t) - rhs;
}

inline integer residual_t4(std::int64_t n, partition_tables& t = default_tables()) {
    return detail::val(partition_fn::po_odd, n, t) - detail::theta_sum(theta_family::tri, partition_fn::pood, n, t);
}

inline integer residual_t5(std::int64_t n, partition_tables& t = default_tables()) {
    return detail::val(partition_fn::po_odd, n, t) -
           detail::theta_sum(theta_family::pent_ceil, partition_fn::p, n, t);
}

inline integer residual_t6(std::int64_t n, partition_tables& t = default_tables()) {
    return detail::val(partition_fn::po_odd, n, t) - detail::theta_sum(theta_family::twosq, partition_fn::op, n, t);
}

/// po(2n+1) - 2 sum_{k>=0} op(n - 2k(k+1)).
inline integer residual_dissect_odd(std::int64_t n, partition_tables& t = default_tables()) {
    return detail::val(partition_fn::po_odd, 2 * n + 1, t) -
           2 * detail::theta_sum(theta_family::two_tri4, partition_fn::op, n, t);
}

/// po(2n) - op(n) - 2 sum_{k>=1} op(n - 2k^2).
inline integer residual_dissect_even(std::int64_t n, partition_tables& t = default_tables()) {
    return detail::val(partition_fn::po_odd, 2 * n, t) -
           detail::theta_sum(theta_family::twosq_plus, partition_fn::op, n, t);
}

inline integer residual_t9(std::int64_t n, partition_tables& t = default_tables()) {
    return detail::val(partition_fn::po_odd, n, t) - detail::theta_sum(theta_family::tri, partition_fn::p2, n, t);
}

inline integer residual_qbar(std::int64_t n, partition_tables& t = default_tables()) {
    return detail::val(partition_fn::qbar, n, t) - detail::theta_sum(theta_family::tri, partition_fn::p, n, t);
}

inline integer residual_pdo_identity(std::int64_t n, partition_tables& t = default_tables()) {
    return detail::theta_sum(theta_family::pent, partition_fn::po_odd, n, t) -
           detail::theta_sum(theta_family::pent2, partition_fn::pdo, n, t);
}

/// The left sum runs over k >= 0 only; the two-sided reading counts every
/// triangular exponent twice and already fails at n = 0.
inline integer residual_pd_identity(std::int64_t n, partition_tables& t = default_tables()) {
    return detail::theta_sum(theta_family::tri_ceil, partition_fn::po_odd, n, t) -
           detail::theta_sum(theta_family::pent2, partition_fn::pd, n, t);
}

inline integer residual_cor_pdo(std::int64_t n, partition_tables& t = default_tables()) {
    return detail::theta_sum(theta_family::pent2, partition_fn::pdo, n, t) -
           indicator(indicator_kind::gen_pentagonal_signed, n);
}

inline integer residual_cor_pd(std::int64_t n, partition_tables& t = default_tables()) {
    return detail::theta_sum(theta_family::pent2, partition_fn::pd, n, t) - indicator(indicator_kind::triangular, n);
}

/// The corollary's sum reduced mod 2. The congruence is stated for n > 0;
/// at n = 0 every sum equals 1 and is reported as 0.
inline integer parity_residual(theorem_id id, std::int64_t n, partition_tables& t = default_tables()) {
    integer sum;
    switch (id) {
    case theorem_id::cor_pood_parity: sum = detail::theta_sum(theta_family::tri, partition_fn::pood, n, t); break;
    case theorem_id::cor_p_parity: sum = detail::theta_sum(theta_family::pent_ceil, partition_fn::p, n, t); break;
    case theorem_id::cor_p2_parity: sum = detail::theta_sum(theta_family::tri, partition_fn::p2, n, t); break;
    default: throw usage_error("parity_residual: not a parity corollary: " + std::string(name(id)));
    }
    if (n == 0) {
        sum -= 1;
    }
    return detail::mod2(sum);
}

/// Residuals of the classical recurrences for p(n) and peed(n).
inline integer classical_residual(theorem_id id, std::int64_t n, partition_tables& t = default_tables()) {
    using detail::theta_sum;
    using detail::val;
    switch (id) {
    case theorem_id::classical_euler:
        return theta_sum(theta_family::pent, partition_fn::p, n, t) - indicator(indicator_kind::delta0, n);
    case theorem_id::classical_ewell: {
        const integer rhs = n % 2 == 0 ? val(partition_fn::pd, n / 2, t) : integer(0);
        return theta_sum(theta_family::tri_ceil, partition_fn::p, n, t) - rhs;
    }
    case theorem_id::classical_cks_sq: {
        // p(n) + sum_{j>=1} (-1)^j (p(n - j^2) + p(n - 2j^2))
        integer lhs = val(partition_fn::p, n, t);
        for (std::int64_t j = 1; j * j <= n; ++j) {
            integer term = val(partition_fn::p, n - j * j, t) + val(partition_fn::p, n - 2 * j * j, t);
            lhs += minus_one_pow(j) * term;
        }
        const integer rhs = n % 2 == 0 ? val(partition_fn::pdo, n, t) : integer(0);
        return lhs - rhs;
    }
    case theorem_id::classical_cks_signed:
        return theta_sum(theta_family::sq_alt, partition_fn::p, n, t) -
               minus_one_pow(n) * val(partition_fn::pdo, n, t);
    case theorem_id::classical_merca_gk: {
        // Second sum: p(n/2 - k(k+1)/8), zero at non-integral arguments.
        integer second = 0;
        for (std::int64_t k = 0; k * (k + 1) <= 4 * n; ++k) {
            const boost::rational<std::int64_t> arg =
                boost::rational<std::int64_t>(n, 2) - boost::rational<std::int64_t>(k * (k + 1), 8);
            second += t.value(partition_fn::p, arg);
        }
        return theta_sum(theta_family::gpent_half, partition_fn::p, n, t) - second;
    }
    case theorem_id::classical_merca_peed_tri:
        return theta_sum(theta_family::tri_ceil, partition_fn::peed, n, t) - indicator(indicator_kind::pronic, n);
    case theorem_id::classical_merca_peed_2sq:
        return theta_sum(theta_family::twosq, partition_fn::peed, n, t) - indicator(indicator_kind::triangular, n);
    default: break;
    }
    throw usage_error("classical_residual: not a classical recurrence: " + std::string(name(id)));
}

/// Coefficient n of the Lebesgue partial sum minus po(n).
inline integer residual_lebesgue(std::int64_t n, partition_tables& t = default_tables()) {
    if (n < 0) {
        return 0;
    }
    return t.lebesgue(static_cast<std::size_t>(n))->at(n) - detail::val(partition_fn::po_odd, n, t);
}

inline integer residual(theorem_id id, std::int64_t n, partition_tables& t = default_tables()) {
    if (n < 0) {
        throw usage_error("residual: n must be nonnegative");
    }
    switch (id) {
    case theorem_id::t1: return residual_t1(n, t);
    case theorem_id::t2: return residual_t2(n, t);
    case theorem_id::t3: return residual_t3(n, t);
    case theorem_id::t4: return residual_t4(n, t);
    case theorem_id::t5: return residual_t5(n, t);
    case theorem_id::t6: return residual_t6(n, t);
    case theorem_id::t7_dissect_odd: return residual_dissect_odd(n, t);
    case theorem_id::t8_dissect_even: return residual_dissect_even(n, t);
    case theorem_id::t9_p2: return residual_t9(n, t);
    case theorem_id::t_qbar: return residual_qbar(n, t);
    case theorem_id::t_pdo_ident: return residual_pdo_identity(n, t);
    case theorem_id::t_pd_ident: return residual_pd_identity(n, t);
    case theorem_id::cor_pdo: return residual_cor_pdo(n, t);
    case theorem_id::cor_pd: return residual_cor_pd(n, t);
    case theorem_id::cor_pood_parity:
    case theorem_id::cor_p_parity:
    case theorem_id::cor_p2_parity: return parity_residual(id, n, t);
    case theorem_id::lebesgue: return residual_lebesgue(n, t);
    default: return classical_residual(id, n, t);
    }
}

/// Tables a theorem touches up to n_max, so verification does not grow the
/// cache piecemeal.
inline void reserve_for(theorem_id id, std::int64_t n_max, partition_tables& t) {
    const auto n = static_cast<std::size_t>(n_max);
    auto need = [&](partition_fn f, std::size_t order) { t.table(f, order); };
    switch (id) {
    case theorem_id::t7_dissect_odd:
    case theorem_id::t8_dissect_even:
        need(partition_fn::po_odd, 2 * n + 1);
        need(partition_fn::op, n);
        break;
    case theorem_id::lebesgue:
        need(partition_fn::po_odd, n);
        t.lebesgue(n);
        break;
    default:
        for (auto f : all_partition_fns) {
            if (f != partition_fn::qbar || id == theorem_id::t_qbar) {
                need(f, n);
            }
        }
        break;
    }
}

/// Runs the residual for every 0 <= n <= n_max and records the first
/// nonzero one.
inline verification_report verify(theorem_id id, std::int64_t n_max, partition_tables& t = default_tables()) {
    if (n_max < 0) {
        throw usage_error("verify: n_max must be nonnegative");
    }
    const auto start = std::chrono::steady_clock::now();
    verification_report report;
    report.theorem = std::string(name(id));
    report.n_max = n_max;
    reserve_for(id, n_max, t);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        integer r = residual(id, n, t);
        if (r != 0) {
            report.first_failure = verification_report::failure{n, std::move(r)};
            break;
        }
    }
    report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                        .count();
    return report;
}

/// po(0..n_max) from the sparse square recurrence
///   po(n) = rhs(n) - 2 sum_{k>=1} (-1)^k po(n - 2k^2),
/// with rhs = 1 at 0, 2 at positive squares, 0 elsewhere. O(n^{3/2}).
inline std::vector<integer> fast_po_odd_table(std::int64_t n_max) {
    if (n_max < 0) {
        throw usage_error("fast_po_odd_table: n_max must be nonnegative");
    }
    std::vector<integer> po(static_cast<std::size_t>(n_max) + 1);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        integer v = n == 0 ? 1 : 2 * indicator(indicator_kind::square, n);
        for (std::int64_t k = 1; 2 * k * k <= n; ++k) {
            const integer& prev = po[static_cast<std::size_t>(n - 2 * k * k)];
            if (k % 2 == 0) {
                v -= 2 * prev;
            } else {
                v += 2 * prev;
            }
        }
        po[static_cast<std::size_t>(n)] = std::move(v);
    }
    return po;
}

} // namespace qpart
