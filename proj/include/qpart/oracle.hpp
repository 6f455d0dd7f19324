#pragma once

// Brute-force partition enumeration for small n. Shares nothing with the
// series engine so it can serve as an independent check on it.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "partition_functions.hpp"

namespace qpart::oracle {

/// Largest n accepted by the enumerators.
inline constexpr std::int64_t envelope = 60;

enum class part_filter { any, odd_only, exclude_2_mod_4 };
enum class distinctness { none, all_distinct, odd_distinct, even_distinct };
enum class overline { none, overpartition };
enum class copies { single, bipartition_distinct };

struct constraint_spec {
    part_filter parts = part_filter::any;
    distinctness distinct = distinctness::none;
    overline marks = overline::none;
    copies multiplicity = copies::single;

    friend bool operator==(const constraint_spec&, const constraint_spec&) = default;
};

/// The combinatorial model of each counting function:
///   P      any parts
///   OP     any parts, overlined first occurrences
///   PO_ODD odd parts, overlined first occurrences
///   PD     all parts distinct
///   PDO    odd parts, all distinct
///   POOD   odd parts distinct, even parts free
///   P2     no part = 2 mod 4
///   QBAR   ordered pair of distinct-part partitions
///   PEED   even parts distinct, odd parts free
inline constraint_spec spec_for(partition_fn id) {
    switch (id) {
    case partition_fn::p: return {};
    case partition_fn::op: return {part_filter::any, distinctness::none, overline::overpartition};
    case partition_fn::po_odd: return {part_filter::odd_only, distinctness::none, overline::overpartition};
    case partition_fn::pd: return {part_filter::any, distinctness::all_distinct};
    case partition_fn::pdo: return {part_filter::odd_only, distinctness::all_distinct};
    case partition_fn::pood: return {part_filter::any, distinctness::odd_distinct};
    case partition_fn::p2: return {part_filter::exclude_2_mod_4};
    case partition_fn::qbar:
        return {part_filter::any, distinctness::all_distinct, overline::none, copies::bipartition_distinct};
    case partition_fn::peed: return {part_filter::any, distinctness::even_distinct};
    }
    throw usage_error("unknown partition function");
}

namespace detail {

inline bool part_allowed(part_filter f, std::int64_t s) {
    switch (f) {
    case part_filter::any: return true;
    case part_filter::odd_only: return s % 2 == 1;
    case part_filter::exclude_2_mod_4: return s % 4 != 2;
    }
    return false;
}

inline std::int64_t max_multiplicity(distinctness d, std::int64_t s, std::int64_t remaining) {
    const std::int64_t free = remaining / s;
    switch (d) {
    case distinctness::none: return free;
    case distinctness::all_distinct: return std::min<std::int64_t>(free, 1);
    case distinctness::odd_distinct: return s % 2 == 1 ? std::min<std::int64_t>(free, 1) : free;
    case distinctness::even_distinct: return s % 2 == 0 ? std::min<std::int64_t>(free, 1) : free;
    }
    return 0;
}

/// Walks every partition of `remaining` into parts <= max_part, choosing
/// part sizes in decreasing order and a multiplicity for each, and calls
/// visit(sizes_used) on completion.
inline void enumerate(const constraint_spec& spec, std::int64_t remaining, std::int64_t max_part,
                      std::int64_t sizes_used, const std::function<void(std::int64_t)>& visit) {
    if (remaining == 0) {
        visit(sizes_used);
        return;
    }
    for (std::int64_t s = std::min(max_part, remaining); s >= 1; --s) {
        if (!part_allowed(spec.parts, s)) {
            continue;
        }
        const std::int64_t top = max_multiplicity(spec.distinct, s, remaining);
        for (std::int64_t m = 1; m <= top; ++m) {
            enumerate(spec, remaining - m * s, s - 1, sizes_used + 1, visit);
        }
    }
}

inline integer count_single(const constraint_spec& spec, std::int64_t n) {
    integer total = 0;
    enumerate(spec, n, n, 0, [&](std::int64_t sizes) {
        if (spec.marks == overline::overpartition) {
            // Each distinct part size independently overlined or not.
            total += integer(1) << static_cast<unsigned>(sizes);
        } else {
            total += 1;
        }
    });
    return total;
}

inline void check_envelope(std::int64_t n) {
    if (n < 0) {
        throw usage_error("oracle: n must be nonnegative");
    }
    if (n > envelope) {
        throw envelope_error("oracle: n = " + std::to_string(n) + " exceeds enumeration envelope " +
                             std::to_string(envelope));
    }
}

} // namespace detail

/// Exact count of partitions of n satisfying the constraints, by explicit
/// enumeration. Refuses n above the envelope.
inline integer oracle_count(const constraint_spec& spec, std::int64_t n) {
    detail::check_envelope(n);
    if (spec.multiplicity == copies::bipartition_distinct) {
        constraint_spec one = spec;
        one.multiplicity = copies::single;
        integer total = 0;
        for (std::int64_t k = 0; k <= n; ++k) {
            total += detail::count_single(one, k) * detail::count_single(one, n - k);
        }
        return total;
    }
    return detail::count_single(spec, n);
}

inline std::vector<integer> oracle_table(const constraint_spec& spec, std::int64_t n_max) {
    detail::check_envelope(n_max);
    std::vector<integer> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        out.push_back(oracle_count(spec, n));
    }
    return out;
}

/// Every partition of n (non-increasing part lists), unconstrained. Used to
/// check the overpartition weighting structurally.
inline std::vector<std::vector<std::int64_t>> all_partitions(std::int64_t n) {
    detail::check_envelope(n);
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t rem, std::int64_t maxp) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (std::int64_t s = std::min(rem, maxp); s >= 1; --s) {
            cur.push_back(s);
            rec(rem - s, s);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

} // namespace qpart::oracle
