#pragma once

#include <stdexcept>
#include <string>

namespace stylo {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input data, schema violations, impossible configuration. Exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Malformed file contents (JSONL, CoNLL-U, rule table). Carries a line number
// when one is known.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& msg, long line = -1)
        : ValidationError(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    long line() const { return line_; }

private:
    long line_;
};

class ConfigError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Completion endpoint / transport failures. Exit code 2.
class EndpointError : public Error {
public:
    using Error::Error;
};

} // namespace stylo
