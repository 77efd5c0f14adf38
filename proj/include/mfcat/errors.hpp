#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mfcat {

// Bad arguments or configuration (CLI exit code 1).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Polynomial syntax error (exit code 2).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A computed fact contradicts an expected identity (exit code 3).
class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The precision ladder ran out before two consecutive agreements (exit code 4).
class PrecisionCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mfcat
