#pragma once

#include <stdexcept>
#include <string>

namespace tsdecomp {

/// Malformed or insufficient input data (bad CSV, gap months, too-short series).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A month stamp outside the span of a series.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Caller violated a documented precondition.
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Arithmetic outside the function's domain (percentage error against zero).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Unknown name in a registry.
class LookupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// DataError raised while parsing text, carrying the 1-based line it refers to.
class ParseError : public DataError {
public:
    ParseError(std::size_t line, const std::string& what)
        : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace tsdecomp
