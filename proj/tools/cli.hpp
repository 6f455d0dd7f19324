#pragma once

// Command-line front end. Kept in a header so tests can drive run()
// in-process; qpart.cpp only forwards argv.
//
// Exit codes: 0 success, 1 verification failure, 2 usage, parse or I/O error.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <qpart/qpart.hpp>

namespace qpart::cli {

enum class output_format { plain, csv, json };

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

namespace detail {

/// Runs job(i) for i in [0, count) on up to `threads` workers (0 = one per
/// hardware thread). Callers store results by index, so output order does
/// not depend on scheduling.
template <class Job>
void parallel_for(std::size_t count, unsigned threads, Job&& job) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            job(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                job(i);
            }
        });
    }
}

inline void write_report_plain(std::ostream& out, const verification_report& r) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.theorem << " n_max=" << r.n_max;
    if (r.first_failure) {
        out << " first failure at n=" << r.first_failure->n << " residual=" << r.first_failure->residual;
    }
    out << " (" << r.millis << " ms)\n";
}

inline void write_report_csv_header(std::ostream& out) {
    out << "theorem,n_max,status,first_failure_n,residual,millis\n";
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        q += c;
        if (c == '"') {
            q += '"';
        }
    }
    return q + "\"";
}

inline void write_report_csv(std::ostream& out, const verification_report& r) {
    out << csv_field(r.theorem) << ',' << r.n_max << ',' << (r.passed() ? "pass" : "fail") << ',';
    if (r.first_failure) {
        out << r.first_failure->n << ',' << r.first_failure->residual;
    } else {
        out << ',';
    }
    out << ',' << r.millis << '\n';
}

} // namespace detail

inline int cmd_compute(const std::string& function, std::int64_t n_max, output_format fmt, std::ostream& out,
                       std::ostream& err) {
    const auto id = partition_fn_from_name(function);
    if (!id) {
        err << "error: unknown function '" << function << "' (expected one of:";
        for (auto f : all_partition_fns) {
            err << ' ' << short_name(f);
        }
        err << ")\n";
        return exit_usage;
    }
    if (n_max < 0) {
        err << "error: --n must be nonnegative\n";
        return exit_usage;
    }
    const series s = gf_series(*id, static_cast<std::size_t>(n_max));
    switch (fmt) {
    case output_format::csv:
        out << "n,value\n";
        for (std::size_t n = 0; n <= s.order(); ++n) {
            out << n << ',' << s[n] << '\n';
        }
        break;
    case output_format::json: {
        nlohmann::ordered_json j;
        j["function"] = std::string(short_name(*id));
        j["n_max"] = n_max;
        auto values = nlohmann::json::array();
        for (const auto& c : s.coefficients()) {
            values.push_back(to_string(c));
        }
        j["values"] = std::move(values);
        out << j.dump() << '\n';
        break;
    }
    case output_format::plain:
        for (std::size_t n = 0; n <= s.order(); ++n) {
            out << n << ' ' << s[n] << '\n';
        }
        break;
    }
    return exit_ok;
}

inline int cmd_verify(const std::string& which, std::int64_t n_max, output_format fmt, unsigned threads,
                      std::ostream& out, std::ostream& err) {
    std::vector<theorem_id> ids;
    if (which == "all") {
        ids.assign(all_theorems.begin(), all_theorems.end());
    } else if (const auto id = theorem_from_name(which)) {
        ids.push_back(*id);
    } else {
        err << "error: unknown theorem '" << which << "' (use 'all' or one of:";
        for (auto t : all_theorems) {
            err << ' ' << name(t);
        }
        err << ")\n";
        return exit_usage;
    }
    if (n_max < 0) {
        err << "error: --n must be nonnegative\n";
        return exit_usage;
    }

    std::vector<verification_report> reports(ids.size());
    detail::parallel_for(ids.size(), threads, [&](std::size_t i) { reports[i] = verify(ids[i], n_max); });

    const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    switch (fmt) {
    case output_format::json:
        if (which == "all") {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& r : reports) {
                arr.push_back(to_json(r));
            }
            out << arr.dump(2) << '\n';
        } else {
            out << to_json(reports.front()).dump(2) << '\n';
        }
        break;
    case output_format::csv:
        detail::write_report_csv_header(out);
        for (const auto& r : reports) {
            detail::write_report_csv(out, r);
        }
        break;
    case output_format::plain:
        for (const auto& r : reports) {
            detail::write_report_plain(out, r);
        }
        break;
    }
    return all_pass ? exit_ok : exit_failure;
}

inline int cmd_check(const std::string& path, std::optional<std::int64_t> order, output_format fmt, unsigned threads,
                     std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot read '" << path << "'\n";
        return exit_usage;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    std::vector<dsl::identity_statement> stmts;
    try {
        stmts = dsl::parse(buf.str());
    } catch (const parse_error& e) {
        err << path << ':' << e.what() << '\n';
        return exit_usage;
    }
    if (order && *order < 0) {
        err << "error: --order must be nonnegative\n";
        return exit_usage;
    }

    std::vector<std::optional<dsl::check_result>> results(stmts.size());
    std::vector<std::string> errors(stmts.size());
    detail::parallel_for(stmts.size(), threads, [&](std::size_t i) {
        try {
            results[i] = dsl::check(stmts[i], order);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });

    for (std::size_t i = 0; i < stmts.size(); ++i) {
        if (!errors[i].empty()) {
            err << path << ':' << stmts[i].line << ": error: " << errors[i] << '\n';
            return exit_usage;
        }
    }

    std::size_t passed = 0;
    if (fmt == output_format::csv) {
        out << "line,";
        detail::write_report_csv_header(out);
    }
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < stmts.size(); ++i) {
        const auto& res = *results[i];
        passed += res.report.passed() ? 1 : 0;
        switch (fmt) {
        case output_format::plain:
            out << "line " << stmts[i].line << ": ";
            detail::write_report_plain(out, res.report);
            if (!res.report.passed()) {
                out << "  at q^" << res.report.first_failure->n << ": lhs=" << res.lhs_coeff
                    << " rhs=" << res.rhs_coeff << '\n';
            }
            break;
        case output_format::csv:
            out << stmts[i].line << ',';
            detail::write_report_csv(out, res.report);
            break;
        case output_format::json: {
            auto j = to_json(res.report);
            j["line"] = stmts[i].line;
            arr.push_back(std::move(j));
            break;
        }
        }
    }
    if (fmt == output_format::json) {
        out << arr.dump(2) << '\n';
    }
    err << passed << '/' << stmts.size() << " statements passed\n";
    return passed == stmts.size() ? exit_ok : exit_failure;
}

inline int cmd_oracle_compare(const std::string& function, std::int64_t n_max, std::ostream& out, std::ostream& err) {
    const auto id = partition_fn_from_name(function);
    if (!id) {
        err << "error: unknown function '" << function << "'\n";
        return exit_usage;
    }
    if (n_max < 0 || n_max > oracle::envelope) {
        err << "error: --n must lie in [0, " << oracle::envelope << "] for brute-force enumeration\n";
        return exit_usage;
    }
    const series s = gf_series(*id, static_cast<std::size_t>(n_max));
    const auto spec = oracle::spec_for(*id);
    out << "n,series,oracle,status\n";
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const integer brute = oracle::oracle_count(spec, n);
        const integer& fast = s[static_cast<std::size_t>(n)];
        const bool ok = brute == fast;
        out << n << ',' << fast << ',' << brute << ',' << (ok ? "agree" : "MISMATCH") << '\n';
        if (!ok) {
            err << short_name(*id) << ": first mismatch at n=" << n << " (series " << fast << ", oracle " << brute
                << ")\n";
            return exit_failure;
        }
    }
    err << short_name(*id) << ": series and enumeration agree for 0 <= n <= " << n_max << '\n';
    return exit_ok;
}

/// Parses `args` (without the program name) and dispatches.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Partition functions via truncated q-series: tables, recurrence checks, identity files"};
    app.require_subcommand(1);

    const std::map<std::string, output_format> formats{
        {"plain", output_format::plain}, {"csv", output_format::csv}, {"json", output_format::json}};

    std::string function;
    std::string theorem;
    std::string file;
    std::int64_t n_max = 0;
    std::optional<std::int64_t> order;
    output_format fmt = output_format::plain;
    unsigned threads = 0;

    auto* compute = app.add_subcommand("compute", "Print a table of values 0..n");
    compute->add_option("function", function, "p, op, po_bar, pd, pdo, pood, p2, qbar, peed")->required();
    compute->add_option("--n", n_max, "Largest index")->required();
    compute->add_option("--format", fmt, "plain, csv or json")->transform(CLI::CheckedTransformer(formats));

    auto* verify_cmd = app.add_subcommand("verify", "Check recurrence residuals for 0 <= n <= N");
    verify_cmd->add_option("theorem", theorem, "Theorem id or 'all'")->required();
    verify_cmd->add_option("--n", n_max, "Largest index")->required();
    verify_cmd->add_option("--format", fmt, "plain, csv or json")->transform(CLI::CheckedTransformer(formats));
    verify_cmd->add_option("--threads", threads, "Worker threads (0 = auto)");

    auto* check_cmd = app.add_subcommand("check", "Check every identity in a .qid file");
    check_cmd->add_option("file", file, "Identity file")->required();
    check_cmd->add_option("--order", order, "Override every statement's truncation order");
    check_cmd->add_option("--format", fmt, "plain, csv or json")->transform(CLI::CheckedTransformer(formats));
    check_cmd->add_option("--threads", threads, "Worker threads (0 = auto)");

    auto* oracle_cmd = app.add_subcommand("oracle-compare", "Compare series values with brute-force counts");
    oracle_cmd->add_option("function", function, "Partition function name")->required();
    oracle_cmd->add_option("--n", n_max, "Largest index")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (compute->parsed()) {
            return cmd_compute(function, n_max, fmt, out, err);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(theorem, n_max, fmt, threads, out, err);
        }
        if (check_cmd->parsed()) {
            return cmd_check(file, order, fmt, threads, out, err);
        }
        if (oracle_cmd->parsed()) {
            return cmd_oracle_compare(function, n_max, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace qpart::cli
