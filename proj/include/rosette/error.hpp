#pragma once

#include <stdexcept>
#include <string>

namespace rosette {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A parameter violates an operation precondition. `field` names the
// offending config key where one applies ("N", "radii", ...).
class InvalidParameter : public Error {
public:
    InvalidParameter(std::string field, const std::string& reason)
        : Error(field.empty() ? reason : field + ": " + reason),
          field_(std::move(field)), reason_(reason) {}

    const std::string& field() const noexcept { return field_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string field_;
    std::string reason_;
};

class NoSpecialCircle : public Error {
public:
    NoSpecialCircle() : Error("pattern has no special circle") {}
};

class DegenerateLine : public Error {
public:
    using Error::Error;
};

class ParallelRay : public Error {
public:
    using Error::Error;
};

class DegenerateTriple : public Error {
public:
    using Error::Error;
};

class MotifCapExceeded : public Error {
public:
    using Error::Error;
};

class EmptyPattern : public Error {
public:
    EmptyPattern() : Error("segment set is empty") {}
};

class SyntaxError : public Error {
public:
    SyntaxError(int line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

    int line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    int line_;
    std::string reason_;
};

// Config-level validation failure; carries the config key path.
class ValidationError : public InvalidParameter {
public:
    using InvalidParameter::InvalidParameter;
};

}  // namespace rosette
