#pragma once

#include <stdexcept>
#include <string>

namespace dfc {

// Base class for every error raised by the library. The CLI maps these to
// structured error objects keyed by kind().
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct InvalidIndex : Error {
    explicit InvalidIndex(const std::string& m) : Error("InvalidIndex", m) {}
};

struct InvalidSplit : Error {
    explicit InvalidSplit(const std::string& m) : Error("InvalidSplit", m) {}
};

struct DimensionExceeded : Error {
    explicit DimensionExceeded(const std::string& m) : Error("DimensionExceeded", m) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& m) : Error("DimensionMismatch", m) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& m) : Error("OutOfRange", m) {}
};

struct DegreeError : Error {
    explicit DegreeError(const std::string& m) : Error("DegreeError", m) {}
};

struct BianchiViolation : Error {
    explicit BianchiViolation(const std::string& m) : Error("BianchiViolation", m) {}
};

struct InvalidFrame : Error {
    explicit InvalidFrame(const std::string& m) : Error("InvalidFrame", m) {}
};

struct InvalidParameters : Error {
    explicit InvalidParameters(const std::string& m) : Error("InvalidParameters", m) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error("ParseError", m) {}
};

struct SymmetryConflict : Error {
    explicit SymmetryConflict(const std::string& m) : Error("SymmetryConflict", m) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& m) : Error("ConfigError", m) {}
};

} // namespace dfc
