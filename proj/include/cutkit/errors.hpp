#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cutkit {

/// Input violates a structural invariant of a value (bad index, mismatched spaces, ...).
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Arithmetic would leave R_sme (two different added indices in one vector).
class outside_rsme_error : public validation_error {
public:
    using validation_error::validation_error;
};

/// An operation was called outside its domain.
class precondition_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Textual input could not be parsed. Line and column are 1-based; 0 means unknown.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(format(what, line, column)), message_(what), line_(line), column_(column) {}

    /// The message without the position suffix.
    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0 && column == 0) return what;
        return what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
    }

    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

} // namespace cutkit
