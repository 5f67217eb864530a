#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cbn {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// State or input vector whose length does not match the network.
class dimension_error : public error {
public:
    using error::error;
};

/// Malformed argument: bad control set, bad bit string, schedule mismatch.
class specification_error : public error {
public:
    using error::error;
};

/// Graph does not have the structure an operation requires
/// (not strongly connected, cyclic where a DAG is needed, ...).
class structure_error : public error {
public:
    using error::error;
};

/// An explicit size limit was exceeded. Never silently truncated.
class budget_error : public error {
public:
    using error::error;
};

/// The control set fails the controllability condition an operation needs.
class not_controllable_error : public error {
public:
    using error::error;
};

/// Input claimed to be an orbit (or similar) but is not.
class validation_error : public error {
public:
    using error::error;
};

/// Internal invariant broken; indicates a bug rather than bad input.
class consistency_error : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t line, std::size_t column)
        : error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace cbn
