#pragma once

#include <stdexcept>
#include <string>

namespace eqseq {

/// Argument outside the exact-integer range this library supports.
class RangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

/// Mathematically invalid input (non-coprime moduli, zero divisor, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Work would exceed the configured period or degree budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller did not establish an operation's precondition.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An internal consistency check failed. Indicates an arithmetic bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t byte)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", byte " +
                             std::to_string(byte) + ")"),
          line_(line), byte_(byte) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t byte() const noexcept { return byte_; }

private:
    std::size_t line_;
    std::size_t byte_;
};

}  // namespace eqseq
