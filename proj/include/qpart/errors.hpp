#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpart {

/// Caller passed arguments that violate an operation's preconditions
/// (mismatched orders, unknown names, bad ranges).
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematically undefined request, e.g. inverting a series whose
/// constant term is not a unit.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Brute-force enumeration was asked for an n beyond its envelope.
class envelope_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Syntax or name-resolution error in identity source text. Line and
/// column are 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, std::size_t column, std::string token, const std::string& what)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what +
                             (token.empty() ? std::string{} : " near '" + token + "'")),
          line_(line), column_(column), token_(std::move(token)) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string token_;
};

} // namespace qpart
