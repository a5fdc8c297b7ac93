#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace detcond {

/// Malformed scalar or matrix text. Line and column are 1-based; zero means
/// the position is unknown (e.g. a bare scalar parsed outside a file).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return what;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

/// An exact division left a remainder. Inside the determinant algorithms this
/// always means an internal invariant was broken.
class InexactDivision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two determinant methods produced different exact values for one matrix.
class MethodDisagreement : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace detcond
