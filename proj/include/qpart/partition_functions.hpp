#pragma once

// The nine partition-counting functions, each defined by its
// generating-function product, and a thread-safe memo of their tables.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "errors.hpp"
#include "integer.hpp"
#include "pochhammer.hpp"
#include "series.hpp"

namespace qpart {

enum class partition_fn {
    p,      // unrestricted partitions
    op,     // overpartitions
    po_odd, // overpartitions into odd parts
    pd,     // distinct parts
    pdo,    // distinct odd parts
    pood,   // odd parts distinct, even parts unrestricted
    p2,     // no part congruent to 2 mod 4
    qbar,   // bipartitions into distinct parts
    peed,   // even parts distinct, odd parts unrestricted
};

inline constexpr std::array all_partition_fns = {
    partition_fn::p,    partition_fn::op, partition_fn::po_odd, partition_fn::pd,   partition_fn::pdo,
    partition_fn::pood, partition_fn::p2, partition_fn::qbar,   partition_fn::peed,
};

inline constexpr std::size_t partition_fn_count = all_partition_fns.size();

/// Enumerator tag, e.g. "PO_ODD".
constexpr std::string_view tag(partition_fn id) {
    switch (id) {
    case partition_fn::p: return "P";
    case partition_fn::op: return "OP";
    case partition_fn::po_odd: return "PO_ODD";
    case partition_fn::pd: return "PD";
    case partition_fn::pdo: return "PDO";
    case partition_fn::pood: return "POOD";
    case partition_fn::p2: return "P2MOD4";
    case partition_fn::qbar: return "QBAR";
    case partition_fn::peed: return "PEED";
    }
    return "?";
}

/// Short name used by the identity language and the command line.
constexpr std::string_view short_name(partition_fn id) {
    switch (id) {
    case partition_fn::p: return "p";
    case partition_fn::op: return "op";
    case partition_fn::po_odd: return "po_bar";
    case partition_fn::pd: return "pd";
    case partition_fn::pdo: return "pdo";
    case partition_fn::pood: return "pood";
    case partition_fn::p2: return "p2";
    case partition_fn::qbar: return "qbar";
    case partition_fn::peed: return "peed";
    }
    return "?";
}

inline std::optional<partition_fn> partition_fn_from_name(std::string_view s) {
    for (auto id : all_partition_fns) {
        if (short_name(id) == s || tag(id) == s) {
            return id;
        }
    }
    return std::nullopt;
}

/// Generating function of each counting function as a Pochhammer product.
inline product_spec generating_product(partition_fn id) {
    using F = product_factor;
    switch (id) {
    case partition_fn::p: return {{F{1, 1, 1, -1}}};
    case partition_fn::op: return {{F{-1, 1, 1, 1}, F{1, 1, 1, -1}}};
    case partition_fn::po_odd: return {{F{-1, 1, 2, 1}, F{1, 1, 2, -1}}};
    case partition_fn::pd: return {{F{-1, 1, 1, 1}}};
    case partition_fn::pdo: return {{F{-1, 1, 2, 1}}};
    case partition_fn::pood: return {{F{-1, 1, 2, 1}, F{1, 2, 2, -1}}};
    case partition_fn::p2: return {{F{1, 2, 4, 1}, F{1, 1, 1, -1}}};
    case partition_fn::qbar: return {{F{-1, 1, 1, 2}}};
    case partition_fn::peed: return {{F{1, 4, 4, 1}, F{1, 1, 1, -1}}};
    }
    throw usage_error("unknown partition function");
}

inline series gf_series(partition_fn id, std::size_t order) {
    return pochhammer_expand(generating_product(id), order);
}

/// First j_max+1 terms of sum_j (-1;q)_j q^{j(j+1)/2} / (q;q)_j.
///
/// The running numerator (-1;q)_j and reciprocal 1/(q;q)_j are advanced one
/// binomial at a time; terms whose valuation j(j+1)/2 exceeds the order
/// vanish and are skipped.
inline series lebesgue_partial(std::int64_t j_max, std::size_t order) {
    if (j_max < 0) {
        throw usage_error("lebesgue_partial: j_max must be nonnegative");
    }
    const auto n = static_cast<std::int64_t>(order);
    std::vector<integer> total(order + 1);
    series numer = series::one(order);     // (-1;q)_j
    series inv_denom = series::one(order); // 1/(q;q)_j
    for (std::int64_t j = 0; j <= j_max; ++j) {
        if (j > 0) {
            numer = mul_binomial(std::move(numer), -1, static_cast<std::size_t>(j - 1));
            if (j <= n) {
                inv_denom = div_binomial(std::move(inv_denom), 1, static_cast<std::size_t>(j));
            }
        }
        const std::int64_t shift = j * (j + 1) / 2;
        if (shift > n) {
            break;
        }
        // Only coefficients below order - shift survive the shift.
        const auto width = static_cast<std::size_t>(n - shift);
        const series term = series_mul(numer.truncate(width), inv_denom.truncate(width));
        for (std::size_t i = 0; i <= width; ++i) {
            total[i + static_cast<std::size_t>(shift)] += term[i];
        }
    }
    return series(std::move(total));
}

/// Memoized coefficient tables, one per counting function, grown on demand.
///
/// Readers share a lock per function; growth takes that function's lock
/// exclusively. Tables are handed out as immutable snapshots, so a reader
/// keeps a consistent view even if the cache grows meanwhile.
class partition_tables {
public:
    using table_ptr = std::shared_ptr<const series>;

    partition_tables() = default;
    partition_tables(const partition_tables&) = delete;
    partition_tables& operator=(const partition_tables&) = delete;

    /// Snapshot of the table for `id` covering at least `min_order`.
    table_ptr table(partition_fn id, std::size_t min_order) {
        slot& s = slots_[static_cast<std::size_t>(id)];
        {
            std::shared_lock lock(s.mutex);
            if (s.data && s.data->order() >= min_order) {
                return s.data;
            }
        }
        std::unique_lock lock(s.mutex);
        if (s.data && s.data->order() >= min_order) {
            return s.data;
        }
        std::size_t target = min_order;
        if (s.data) {
            target = std::max(target, 2 * s.data->order());
        }
        s.data = std::make_shared<const series>(gf_series(id, target));
        return s.data;
    }

    integer value(partition_fn id, std::int64_t n) {
        if (n < 0) {
            return 0;
        }
        return (*table(id, static_cast<std::size_t>(n)))[static_cast<std::size_t>(n)];
    }

    /// Zero at every argument outside the nonnegative integers.
    integer value(partition_fn id, const boost::rational<std::int64_t>& x) {
        if (x.denominator() != 1) {
            return 0;
        }
        return value(id, x.numerator());
    }

    std::size_t cached_order(partition_fn id) const {
        const slot& s = slots_[static_cast<std::size_t>(id)];
        std::shared_lock lock(s.mutex);
        return s.data ? s.data->order() : 0;
    }

    /// Fault injection: adds delta to one cached coefficient. The table must
    /// already cover n. A later growth of the same table recomputes it and
    /// discards the perturbation.
    void perturb(partition_fn id, std::size_t n, const integer& delta) {
        slot& s = slots_[static_cast<std::size_t>(id)];
        std::unique_lock lock(s.mutex);
        if (!s.data || s.data->order() < n) {
            throw usage_error("perturb: coefficient not cached");
        }
        std::vector<integer> c(s.data->coefficients().begin(), s.data->coefficients().end());
        c[n] += delta;
        s.data = std::make_shared<const series>(std::move(c));
    }

    /// Lebesgue partial sum carried far enough to be exact at `min_order`.
    table_ptr lebesgue(std::size_t min_order) {
        {
            std::shared_lock lock(lebesgue_.mutex);
            if (lebesgue_.data && lebesgue_.data->order() >= min_order) {
                return lebesgue_.data;
            }
        }
        std::unique_lock lock(lebesgue_.mutex);
        if (!lebesgue_.data || lebesgue_.data->order() < min_order) {
            std::size_t target = min_order;
            if (lebesgue_.data) {
                target = std::max(target, 2 * lebesgue_.data->order());
            }
            lebesgue_.data = std::make_shared<const series>(
                lebesgue_partial(static_cast<std::int64_t>(target) + 1, target));
        }
        return lebesgue_.data;
    }

private:
    struct slot {
        mutable std::shared_mutex mutex;
        table_ptr data;
    };
    std::array<slot, partition_fn_count> slots_;
    slot lebesgue_;
};

/// Process-wide cache behind function_value.
inline partition_tables& default_tables() {
    static partition_tables tables;
    return tables;
}

inline integer function_value(partition_fn id, std::int64_t n) { return default_tables().value(id, n); }

inline integer function_value(partition_fn id, const boost::rational<std::int64_t>& x) {
    return default_tables().value(id, x);
}

} // namespace qpart
