#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringgray {

/// Operands or arguments that do not belong to the same ring, a map applied
/// outside its domain (e.g. phi4 on an element of Z8+uZ8), or a quantity that
/// is undefined for its input (minimum weight of the zero code).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Text input (element token, matrix file) that does not follow the grammar.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(message), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A brute-force computation would exceed its configured bound.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::uint64_t requested, std::uint64_t cap)
        : std::runtime_error(what + ": requires " + std::to_string(requested) + ", cap is " + std::to_string(cap)),
          requested_(requested), cap_(cap) {}

    std::uint64_t requested() const noexcept { return requested_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t requested_;
    std::uint64_t cap_;
};

/// Two routes to the same quantity disagreed (e.g. a character sum with a
/// non-vanishing imaginary part).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ringgray
