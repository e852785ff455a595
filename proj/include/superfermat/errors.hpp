#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superfermat {

// Byte range [begin, end) into a source string.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
    bool operator==(const Span &) const = default;
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct SignatureMismatch : Error {
    using Error::Error;
    SignatureMismatch() : Error("signature mismatch") {}
};

struct ParityMismatch : Error {
    using Error::Error;
    ParityMismatch() : Error("parity mismatch") {}
};

struct InhomogeneousRelation : Error {
    using Error::Error;
};

struct AlgebraMismatch : Error {
    using Error::Error;
    AlgebraMismatch() : Error("jet arguments belong to different Weil algebras") {}
};

struct NotFiniteDimensional : Error {
    using Error::Error;
    NotFiniteDimensional() : Error("quotient algebra is not finite-dimensional") {}
};

struct NoAugmentation : Error {
    using Error::Error;
    NoAugmentation() : Error("algebra has no augmentation (1 lies in the ideal)") {}
};

struct OddGeneratorPresent : Error {
    using Error::Error;
    OddGeneratorPresent() : Error("presentation uses odd generators") {}
};

struct StepLimitExceeded : Error {
    using Error::Error;
};

struct DomainError : Error {
    Span span;
    explicit DomainError(const std::string &msg, Span s = {}) : Error(msg), span(s) {}
};

struct LexError : Error {
    Span span;
    LexError(const std::string &msg, Span s) : Error(msg), span(s) {}
};

struct ParseError : Error {
    Span span;
    ParseError(const std::string &msg, Span s) : Error(msg), span(s) {}
};

struct UnknownGenerator : ParseError {
    std::string name;
    UnknownGenerator(const std::string &n, Span s)
        : ParseError("unknown generator `" + n + "`", s), name(n) {}
};

struct UnknownFunction : ParseError {
    std::string name;
    UnknownFunction(const std::string &n, Span s)
        : ParseError("unknown function `" + n + "`", s), name(n) {}
};

} // namespace superfermat
