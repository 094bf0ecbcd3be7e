#ifndef LATMEAS_ERRORS_HPP
#define LATMEAS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latmeas {

// Base class for everything this library throws on bad input or a broken
// precondition. Verdict failures are not exceptions; they are reported as
// data (see verdict.hpp).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A pair of elements has no unique greatest lower / least upper bound.
struct NotALattice : Error {
    int lhs = -1;
    int rhs = -1;
    NotALattice(const std::string& msg, int a, int b) : Error(msg), lhs(a), rhs(b) {}
    explicit NotALattice(const std::string& msg) : Error(msg) {}
};

struct CycleDetected : Error {
    using Error::Error;
};

struct MissingBounds : Error {
    using Error::Error;
};

struct GroundSetTooLarge : Error {
    using Error::Error;
};

struct NotAMember : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct InvalidMeasure : Error {
    using Error::Error;
};

struct DomainMismatch : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ReferentialError : Error {
    using Error::Error;
};

struct SizeTooLargeForExhaustive : Error {
    using Error::Error;
};

struct UsageError : Error {
    using Error::Error;
};

} // namespace latmeas

#endif
