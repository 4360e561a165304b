#pragma once

#include <stdexcept>
#include <string>

namespace siegelkit {

// Every error the library raises derives from Error. The CLI maps
// DomainError to exit code 2 and BoundError to exit code 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a mathematical precondition (non-fundamental discriminant,
/// non-eigenform, mismatched groups, malformed table, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A truncation or discriminant bound is too small for the request.
class BoundError : public Error {
public:
    using Error::Error;
};

enum class FormatErrorKind {
    MissingMagic,
    BadHeader,
    MalformedLine,
    MalformedValue,
    NonReducedKey,
    DuplicateKey,
    BoundViolation,
    MissingKey,
};

inline const char* to_string(FormatErrorKind kind) {
    switch (kind) {
        case FormatErrorKind::MissingMagic: return "missing magic line";
        case FormatErrorKind::BadHeader: return "bad header";
        case FormatErrorKind::MalformedLine: return "malformed line";
        case FormatErrorKind::MalformedValue: return "malformed value";
        case FormatErrorKind::NonReducedKey: return "non-reduced key";
        case FormatErrorKind::DuplicateKey: return "duplicate key";
        case FormatErrorKind::BoundViolation: return "bound violation";
        case FormatErrorKind::MissingKey: return "missing key";
    }
    return "unknown";
}

/// SIEGEL-TABLE parse failure, tagged with a kind and a 1-based line number.
class FormatError : public DomainError {
public:
    FormatError(FormatErrorKind kind, std::size_t line, const std::string& detail)
        : DomainError("line " + std::to_string(line) + ": " + to_string(kind) +
                      (detail.empty() ? std::string{} : ": " + detail)),
          kind_(kind),
          line_(line) {}

    FormatErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

private:
    FormatErrorKind kind_;
    std::size_t line_;
};

}  // namespace siegelkit
