#pragma once

#include <stdexcept>
#include <string>

namespace hopfrob {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroDivision : Error {
    ZeroDivision() : Error("division by zero") {}
};

// Scalars of two distinct cyclotomic orders (both > 1) may not be mixed.
struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct Singular : Error {
    Singular() : Error("matrix is singular") {}
};

struct NotRankOne : Error {
    explicit NotRankOne(const std::string& what) : Error(what) {}
};

struct NoAntipode : Error {
    NoAntipode() : Error("the antipode system is inconsistent") {}
};

// One-sided convolution inverses are rejected, never silently accepted.
struct AntipodeOneSided : Error {
    AntipodeOneSided() : Error("antipode satisfies only one side of the Hopf law") {}
};

struct SnakeFailure : Error {
    SnakeFailure() : Error("cap/cup do not satisfy the snake equations") {}
};

struct DegeneratePairing : Error {
    explicit DegeneratePairing(const std::string& what) : Error(what) {}
};

struct NotAGroup : Error {
    explicit NotAGroup(const std::string& what) : Error(what) {}
};

struct NotCoinvertible : Error {
    NotCoinvertible() : Error("copoint has no coinverse for the comonoid") {}
};

struct InvalidForm : Error {
    explicit InvalidForm(const std::string& what) : Error(what) {}
};

// A verified construction produced data violating its own postcondition.
// Indicates a bug in the toolkit, never valid-input behaviour.
struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace hopfrob
