#pragma once

#include <stdexcept>
#include <string>

namespace fqha {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotOddPrime : Error {
    explicit NotOddPrime(long long p)
        : Error("not an odd prime: " + std::to_string(p)) {}
};

struct DegreeOutOfRange : Error {
    explicit DegreeOutOfRange(int k)
        : Error("extension degree out of range: " + std::to_string(k)) {}
};

struct CapExceeded : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero in field") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

struct HypothesisViolated : Error {
    using Error::Error;
};

struct EmptySet : Error {
    EmptySet() : Error("operation requires a nonempty point set") {}
};

struct EmptyVariety : Error {
    EmptyVariety() : Error("variety has no points") {}
};

struct NotOnSphere : Error {
    using Error::Error;
};

struct ZeroRadius : Error {
    ZeroRadius() : Error("radius must be nonzero") {}
};

struct BadExponent : Error {
    using Error::Error;
};

struct BadTheta : Error {
    using Error::Error;
};

struct ZeroFunction : Error {
    ZeroFunction() : Error("function is identically zero") {}
};

struct NegativeValue : Error {
    NegativeValue() : Error("function must be nonnegative") {}
};

struct InvalidCover : Error {
    using Error::Error;
};

struct Uncoverable : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct EmptyMatrix : Error {
    EmptyMatrix() : Error("field matrix filters match no prime power") {}
};

} // namespace fqha
