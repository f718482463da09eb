#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dwitt {

// Base for all library errors. Every message carries operation context.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& ctx) : Error("division by zero: " + ctx) {}
};

struct MixedFields : Error {
    explicit MixedFields(const std::string& ctx) : Error("operands belong to different fields: " + ctx) {}
};

struct MixedRings : Error {
    explicit MixedRings(const std::string& ctx) : Error("operands belong to different rings: " + ctx) {}
};

struct ZeroInput : Error {
    explicit ZeroInput(const std::string& ctx) : Error("zero input: " + ctx) {}
};

struct AllZero : Error {
    explicit AllZero(const std::string& ctx) : Error("all inputs are zero: " + ctx) {}
};

struct UnsupportedMultivariateGcd : Error {
    explicit UnsupportedMultivariateGcd(const std::string& ctx)
        : Error("multivariate gcd supported only for unit or monomial inputs: " + ctx) {}
};

struct SigmaIsIdentityOnSample : Error {
    explicit SigmaIsIdentityOnSample(const std::string& ctx)
        : Error("endomorphism acts as the identity on the whole sample: " + ctx) {}
};

struct InvalidOverride : Error {
    explicit InvalidOverride(const std::string& ctx)
        : Error("override is not a unit multiple of the computed gcd: " + ctx) {}
};

struct DeltaNotInRing : Error {
    explicit DeltaNotInRing(const std::string& ctx)
        : Error("sigma(g) is not divisible by g; the chosen g is wrong: " + ctx) {}
};

struct NotDivisible : Error {
    explicit NotDivisible(const std::string& ctx) : Error("exact division failed: " + ctx) {}
};

struct ZeroGenerator : Error {
    explicit ZeroGenerator(const std::string& ctx) : Error("ideal generator is zero: " + ctx) {}
};

struct UnsupportedSigma : Error {
    explicit UnsupportedSigma(const std::string& ctx)
        : Error("operation requires a monomial-diagonal endomorphism: " + ctx) {}
};

struct UnsupportedFamily : Error {
    explicit UnsupportedFamily(const std::string& ctx) : Error("unsupported family: " + ctx) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& ctx) : Error("invalid configuration: " + ctx) {}
};

// Parser errors carry a byte offset into the source text.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(std::size_t pos, const std::string& expected)
        : Error("syntax error at position " + std::to_string(pos) + ": expected " + expected),
          position(pos) {}
};

struct UnknownSymbol : Error {
    std::size_t position;
    UnknownSymbol(std::size_t pos, const std::string& name)
        : Error("unknown symbol '" + name + "' at position " + std::to_string(pos)), position(pos) {}
};

struct ExponentDomainError : Error {
    std::size_t position;
    ExponentDomainError(std::size_t pos, const std::string& var)
        : Error("negative exponent on non-Laurent variable '" + var + "' at position " +
                std::to_string(pos)),
          position(pos) {}
};

}  // namespace dwitt
