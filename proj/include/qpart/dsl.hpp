#pragma once

// A small language for stating q-series identities:
//
//   stmt      := expr "==" expr "within" INT
//   expr      := term (("+"|"-") term)*
//   term      := factor (("*"|"/") factor)*
//   factor    := atom ("^" ["-"] INT)?
//   atom      := INT | IDENT | pochhammer | theta-call | extract-call
//              | lebesgue-call | "(" expr ")"
//   pochhammer    := "P" "(" ["-"] "q^" INT ";" "q^" INT ")"
//   theta-call    := "theta" "(" IDENT ")"
//   extract-call  := "extract" "(" expr "," INT "," INT ")"
//   lebesgue-call := "lebesgue" "(" INT ")"
//
// One statement per line, '#' starts a comment. Bare identifiers name a
// counting function (p, op, po_bar, pd, pdo, pood, p2, qbar, peed) or a
// theta family (PENT, TRI, ...).

#include <cctype>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "partition_functions.hpp"
#include "pochhammer.hpp"
#include "report.hpp"
#include "series.hpp"
#include "theta.hpp"

namespace qpart::dsl {

struct expr_node;
using expr_ptr = std::shared_ptr<const expr_node>;

struct int_literal {
    integer value;
};
struct pochhammer_node {
    product_factor factor; // factor.power carries any ^k applied directly
};
struct theta_node {
    theta_family family;
};
struct function_node {
    partition_fn id;
};
enum class binary_op { add, sub, mul, div };
struct binary_node {
    binary_op op;
    expr_ptr lhs;
    expr_ptr rhs;
};
struct pow_node {
    expr_ptr base;
    std::int64_t exponent;
};
struct extract_node {
    expr_ptr inner;
    std::int64_t m;
    std::int64_t r;
};
struct lebesgue_node {
    std::int64_t j_max;
};

struct expr_node {
    std::variant<int_literal, pochhammer_node, theta_node, function_node, binary_node, pow_node, extract_node,
                 lebesgue_node>
        value;
};

template <class T>
expr_ptr make(T node) {
    return std::make_shared<const expr_node>(expr_node{std::move(node)});
}

struct identity_statement {
    expr_ptr lhs;
    expr_ptr rhs;
    std::int64_t order = 0;
    std::size_t line = 0; // 1-based source line, 0 if built in code
};

struct parse_options {
    std::int64_t max_order = 5000;
};

// ---------------------------------------------------------------------------
// Lexer

namespace detail {

enum class tok { integer, ident, lparen, rparen, semicolon, comma, plus, minus, star, slash, caret, eqeq, end };

struct token {
    tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

inline std::vector<token> lex_line(std::string_view src, std::size_t line) {
    std::vector<token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        const std::size_t col = i + 1;
        if (c == '#') {
            break;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            out.push_back({tok::integer, std::string(src.substr(i, j - i)), line, col});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
                ++j;
            }
            out.push_back({tok::ident, std::string(src.substr(i, j - i)), line, col});
            i = j;
            continue;
        }
        if (c == '=' && i + 1 < src.size() && src[i + 1] == '=') {
            out.push_back({tok::eqeq, "==", line, col});
            i += 2;
            continue;
        }
        tok kind;
        switch (c) {
        case '(': kind = tok::lparen; break;
        case ')': kind = tok::rparen; break;
        case ';': kind = tok::semicolon; break;
        case ',': kind = tok::comma; break;
        case '+': kind = tok::plus; break;
        case '-': kind = tok::minus; break;
        case '*': kind = tok::star; break;
        case '/': kind = tok::slash; break;
        case '^': kind = tok::caret; break;
        default: throw parse_error(line, col, std::string(1, c), "unexpected character");
        }
        out.push_back({kind, std::string(1, c), line, col});
        ++i;
    }
    out.push_back({tok::end, "", line, src.size() + 1});
    return out;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser over one line's tokens.

class parser {
public:
    parser(std::vector<token> toks, const parse_options& opts) : toks_(std::move(toks)), opts_(opts) {}

    identity_statement statement() {
        identity_statement s;
        s.line = peek().line;
        s.lhs = expr();
        expect(tok::eqeq, "expected '=='");
        s.rhs = expr();
        const token& w = peek();
        if (w.kind != tok::ident || w.text != "within") {
            fail(w, "expected 'within'");
        }
        advance();
        const token& n = peek();
        s.order = integer_token("expected truncation order after 'within'");
        if (s.order < 0 || s.order > opts_.max_order) {
            fail(n, "order exceeds engine maximum " + std::to_string(opts_.max_order));
        }
        if (peek().kind != tok::end) {
            fail(peek(), "unexpected trailing input");
        }
        return s;
    }

private:
    const token& peek() const { return toks_[pos_]; }
    const token& advance() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

    [[noreturn]] static void fail(const token& t, const std::string& msg) {
        throw parse_error(t.line, t.column, t.kind == tok::end ? "end of line" : t.text, msg);
    }

    const token& expect(tok kind, const std::string& msg) {
        if (peek().kind != kind) {
            fail(peek(), msg);
        }
        return advance();
    }

    std::int64_t integer_token(const std::string& msg) {
        const token& t = peek();
        if (t.kind != tok::integer) {
            fail(t, msg);
        }
        if (t.text.size() > 15) {
            fail(t, "integer too large");
        }
        advance();
        return std::stoll(t.text);
    }

    expr_ptr expr() {
        expr_ptr lhs = term();
        while (peek().kind == tok::plus || peek().kind == tok::minus) {
            const binary_op op = advance().kind == tok::plus ? binary_op::add : binary_op::sub;
            lhs = make(binary_node{op, lhs, term()});
        }
        return lhs;
    }

    expr_ptr term() {
        expr_ptr lhs = factor();
        while (peek().kind == tok::star || peek().kind == tok::slash) {
            const binary_op op = advance().kind == tok::star ? binary_op::mul : binary_op::div;
            lhs = make(binary_node{op, lhs, factor()});
        }
        return lhs;
    }

    expr_ptr factor() {
        expr_ptr base = atom();
        if (peek().kind != tok::caret) {
            return base;
        }
        advance();
        const bool negative = peek().kind == tok::minus;
        if (negative) {
            advance();
        }
        std::int64_t k = integer_token("malformed exponent: expected integer after '^'");
        if (negative) {
            k = -k;
        }
        if (const auto* p = std::get_if<pochhammer_node>(&base->value); p && p->factor.power == 1 && k != 0) {
            pochhammer_node folded = *p;
            folded.factor.power = k;
            return make(folded);
        }
        return make(pow_node{base, k});
    }

    // Parses "q^INT" (or bare "q" for q^1) inside a Pochhammer symbol.
    std::int64_t q_power() {
        const token& q = peek();
        if (q.kind != tok::ident || q.text != "q") {
            fail(q, "malformed exponent: expected q^INT");
        }
        advance();
        if (peek().kind != tok::caret) {
            return 1;
        }
        advance();
        const token& e = peek();
        const std::int64_t v = integer_token("malformed exponent: expected integer after 'q^'");
        if (v < 1) {
            fail(e, "malformed exponent: q-power must be at least 1");
        }
        return v;
    }

    expr_ptr atom() {
        const token& t = peek();
        switch (t.kind) {
        case tok::integer: {
            advance();
            return make(int_literal{integer(t.text.c_str())});
        }
        case tok::lparen: {
            advance();
            expr_ptr e = expr();
            expect(tok::rparen, "expected ')'");
            return e;
        }
        case tok::ident: break;
        default: fail(t, "expected an expression");
        }

        const std::string word = t.text;
        advance();
        if (word == "P" && peek().kind == tok::lparen) {
            advance();
            int sign = 1;
            if (peek().kind == tok::minus) {
                advance();
                sign = -1;
            }
            const std::int64_t a = q_power();
            expect(tok::semicolon, "expected ';' in Pochhammer symbol");
            const std::int64_t b = q_power();
            expect(tok::rparen, "expected ')' to close Pochhammer symbol");
            return make(pochhammer_node{product_factor{sign, a, b, 1}});
        }
        if (word == "theta" && peek().kind == tok::lparen) {
            advance();
            const token& f = peek();
            if (f.kind != tok::ident) {
                fail(f, "expected theta family name");
            }
            const auto fam = theta_family_from_name(f.text);
            if (!fam) {
                fail(f, "unknown theta family");
            }
            advance();
            expect(tok::rparen, "expected ')' after theta family");
            return make(theta_node{*fam});
        }
        if (word == "extract" && peek().kind == tok::lparen) {
            advance();
            expr_ptr inner = expr();
            expect(tok::comma, "expected ',' in extract");
            const token& mt = peek();
            const std::int64_t m = integer_token("expected modulus in extract");
            expect(tok::comma, "expected ',' in extract");
            const std::int64_t r = integer_token("expected residue in extract");
            if (m < 1 || r >= m) {
                fail(mt, "extract needs m >= 1 and 0 <= r < m");
            }
            expect(tok::rparen, "expected ')' to close extract");
            return make(extract_node{inner, m, r});
        }
        if (word == "lebesgue" && peek().kind == tok::lparen) {
            advance();
            const std::int64_t j = integer_token("expected term count in lebesgue");
            expect(tok::rparen, "expected ')' to close lebesgue");
            return make(lebesgue_node{j});
        }
        if (const auto id = partition_fn_from_name(word)) {
            return make(function_node{*id});
        }
        if (const auto fam = theta_family_from_name(word)) {
            return make(theta_node{*fam});
        }
        fail(t, "unknown function name");
    }

    std::vector<token> toks_;
    const parse_options& opts_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses every statement in `text`. Blank and comment-only lines are
/// skipped. Throws parse_error carrying the line and column.
inline std::vector<identity_statement> parse(std::string_view text, const parse_options& opts = {}) {
    std::vector<identity_statement> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        auto toks = detail::lex_line(line, line_no);
        if (toks.size() > 1) {
            detail::parser p(std::move(toks), opts);
            out.push_back(p.statement());
        }
        if (end == text.size()) {
            break;
        }
        start = end + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Printing

namespace detail {

inline int precedence(const expr_node& e) {
    if (const auto* b = std::get_if<binary_node>(&e.value)) {
        return (b->op == binary_op::add || b->op == binary_op::sub) ? 1 : 2;
    }
    if (std::holds_alternative<pow_node>(e.value)) {
        return 3;
    }
    if (const auto* p = std::get_if<pochhammer_node>(&e.value); p && p->factor.power != 1) {
        return 3;
    }
    return 4;
}

inline void print(std::ostream& os, const expr_node& e);

inline void print_wrapped(std::ostream& os, const expr_node& e, bool wrap) {
    if (wrap) {
        os << '(';
    }
    print(os, e);
    if (wrap) {
        os << ')';
    }
}

inline void print(std::ostream& os, const expr_node& e) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, int_literal>) {
                os << n.value;
            } else if constexpr (std::is_same_v<T, pochhammer_node>) {
                const auto& f = n.factor;
                os << "P(" << (f.sign < 0 ? "-" : "") << "q^" << f.a << "; q^" << f.b << ")";
                if (f.power != 1) {
                    os << '^' << f.power;
                }
            } else if constexpr (std::is_same_v<T, theta_node>) {
                os << "theta(" << name(n.family) << ")";
            } else if constexpr (std::is_same_v<T, function_node>) {
                os << short_name(n.id);
            } else if constexpr (std::is_same_v<T, binary_node>) {
                static constexpr const char* symbols[] = {" + ", " - ", " * ", " / "};
                const int p = precedence(e);
                print_wrapped(os, *n.lhs, precedence(*n.lhs) < p);
                os << symbols[static_cast<int>(n.op)];
                print_wrapped(os, *n.rhs, precedence(*n.rhs) <= p);
            } else if constexpr (std::is_same_v<T, pow_node>) {
                print_wrapped(os, *n.base, precedence(*n.base) < 4);
                os << '^' << n.exponent;
            } else if constexpr (std::is_same_v<T, extract_node>) {
                os << "extract(";
                print(os, *n.inner);
                os << ", " << n.m << ", " << n.r << ")";
            } else if constexpr (std::is_same_v<T, lebesgue_node>) {
                os << "lebesgue(" << n.j_max << ")";
            }
        },
        e.value);
}

} // namespace detail

inline std::string to_string(const expr_node& e) {
    std::ostringstream os;
    detail::print(os, e);
    return os.str();
}

/// Canonical source form; parse(to_string(s)) yields an equivalent statement.
inline std::string to_string(const identity_statement& s) {
    return to_string(*s.lhs) + " == " + to_string(*s.rhs) + " within " + std::to_string(s.order);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace detail {

inline series require_unit(series s, const expr_node& e, const std::string& path) {
    if (!s.is_unit()) {
        std::ostringstream msg;
        msg << "division by non-unit series at " << path << " (`" << to_string(e) << "` has constant term " << s[0]
            << ")";
        throw domain_error(msg.str());
    }
    return s;
}

inline series eval(const expr_node& e, std::size_t order, const std::string& path, partition_tables& tables) {
    return std::visit(
        [&](const auto& n) -> series {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, int_literal>) {
                return series::constant(n.value, order);
            } else if constexpr (std::is_same_v<T, pochhammer_node>) {
                return pochhammer_expand(n.factor, order);
            } else if constexpr (std::is_same_v<T, theta_node>) {
                return theta_series(n.family, order);
            } else if constexpr (std::is_same_v<T, function_node>) {
                return tables.table(n.id, order)->truncate(order);
            } else if constexpr (std::is_same_v<T, binary_node>) {
                static constexpr const char* names[] = {"add", "sub", "mul", "div"};
                const std::string base = path + "." + names[static_cast<int>(n.op)];
                series x = eval(*n.lhs, order, base + "[0]", tables);
                series y = eval(*n.rhs, order, base + "[1]", tables);
                switch (n.op) {
                case binary_op::add: return series_add(x, y);
                case binary_op::sub: return series_sub(x, y);
                case binary_op::mul: return series_mul(x, y);
                case binary_op::div:
                    return series_mul(x, series_inverse(require_unit(std::move(y), *n.rhs, base + "[1]")));
                }
                throw usage_error("bad operator");
            } else if constexpr (std::is_same_v<T, pow_node>) {
                series b = eval(*n.base, order, path + ".pow", tables);
                if (n.exponent < 0) {
                    b = require_unit(std::move(b), *n.base, path + ".pow");
                }
                return series_pow(b, n.exponent);
            } else if constexpr (std::is_same_v<T, extract_node>) {
                const auto m = static_cast<std::size_t>(n.m);
                const auto r = static_cast<std::size_t>(n.r);
                series inner = eval(*n.inner, m * order + r, path + ".extract", tables);
                return progression_extract(inner, m, r);
            } else if constexpr (std::is_same_v<T, lebesgue_node>) {
                return lebesgue_partial(n.j_max, order);
            }
        },
        e.value);
}

} // namespace detail

/// Exact value of the expression mod q^{order+1}.
inline series evaluate(const expr_node& e, std::size_t order, partition_tables& tables = default_tables()) {
    return detail::eval(e, order, "expr", tables);
}

/// Result of checking one statement: the report plus, on failure, the two
/// coefficients at the first differing exponent.
struct check_result {
    verification_report report;
    integer lhs_coeff;
    integer rhs_coeff;
};

inline check_result check(const identity_statement& stmt, std::optional<std::int64_t> order_override = std::nullopt,
                          partition_tables& tables = default_tables()) {
    const auto start = std::chrono::steady_clock::now();
    const std::int64_t order = order_override.value_or(stmt.order);
    if (order < 0) {
        throw usage_error("check: order must be nonnegative");
    }
    check_result out;
    identity_statement shown = stmt;
    shown.order = order;
    out.report.theorem = to_string(shown);
    out.report.n_max = order;
    const auto n = static_cast<std::size_t>(order);
    const series lhs = detail::eval(*stmt.lhs, n, "lhs", tables);
    const series rhs = detail::eval(*stmt.rhs, n, "rhs", tables);
    for (std::size_t i = 0; i <= n; ++i) {
        if (lhs[i] != rhs[i]) {
            out.report.first_failure =
                verification_report::failure{static_cast<std::int64_t>(i), integer(lhs[i] - rhs[i])};
            out.lhs_coeff = lhs[i];
            out.rhs_coeff = rhs[i];
            break;
        }
    }
    out.report.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return out;
}

} // namespace qpart::dsl
