#pragma once

#include <stdexcept>
#include <string>

namespace diffmod {

// Domain errors carry a stable machine-readable code; the CLI surfaces it
// as {"error": code, "detail": what()}.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define DIFFMOD_ERROR(Name)                                   \
    class Name : public DomainError {                         \
    public:                                                   \
        explicit Name(const std::string& detail)              \
            : DomainError(#Name, detail) {}                   \
    }

DIFFMOD_ERROR(SingularMatrix);
DIFFMOD_ERROR(NotNormalizable);
DIFFMOD_ERROR(RankZero);
DIFFMOD_ERROR(UnsupportedPoint);
DIFFMOD_ERROR(IncompatibleTriple);
DIFFMOD_ERROR(MixedCaseUnsupported);
DIFFMOD_ERROR(InsufficientPrecision);
DIFFMOD_ERROR(SingularInput);
DIFFMOD_ERROR(IrrationalEigenvalue);
DIFFMOD_ERROR(WindowTooSmall);

#undef DIFFMOD_ERROR

// Malformed input (job files, expression strings). CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& detail) : std::runtime_error(detail) {}
};

} // namespace diffmod
