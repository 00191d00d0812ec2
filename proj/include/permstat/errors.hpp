#pragma once

#include <stdexcept>
#include <string>

namespace permstat {

// Error taxonomy shared by the library and the CLI exit-code scheme:
//   parse -> 2, domain -> 3, internal_contradiction -> 4, resource_limit -> 5
enum class ErrorCode {
    parse,
    domain,
    internal_contradiction,
    resource_limit,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string tag, const std::string& message)
        : std::runtime_error(message), code_(code), tag_(std::move(tag)) {}

    ErrorCode code() const noexcept { return code_; }

    // Short machine-readable identifier, e.g. "invalid-length".
    const std::string& tag() const noexcept { return tag_; }

private:
    ErrorCode code_;
    std::string tag_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& message, std::string tag = "parse")
        : Error(ErrorCode::parse, std::move(tag), message) {}
};

class DomainError : public Error {
public:
    DomainError(std::string tag, const std::string& message)
        : Error(ErrorCode::domain, std::move(tag), message) {}
};

// A verified claim failed at runtime. This always indicates an
// implementation bug, never bad user input.
class InternalContradictionError : public Error {
public:
    explicit InternalContradictionError(const std::string& message)
        : Error(ErrorCode::internal_contradiction, "internal-contradiction", message) {}
};

class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& message)
        : Error(ErrorCode::resource_limit, "resource-limit", message) {}
};

} // namespace permstat
