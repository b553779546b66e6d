#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

// Base for all computation errors raised by the library.
struct CalcError : std::runtime_error {
    explicit CalcError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroInput : CalcError {
    explicit ZeroInput(const std::string& msg) : CalcError(msg) {}
};

struct NonUnitAtDivisor : CalcError {
    explicit NonUnitAtDivisor(const std::string& msg) : CalcError(msg) {}
};

struct IdenticallyZeroDenominator : CalcError {
    explicit IdenticallyZeroDenominator(const std::string& msg) : CalcError(msg) {}
};

struct PoleAtPoint : CalcError {
    explicit PoleAtPoint(const std::string& msg) : CalcError(msg) {}
};

struct RamifiedAlongCurve : CalcError {
    explicit RamifiedAlongCurve(const std::string& msg) : CalcError(msg) {}
};

struct EntryNotUnit : CalcError {
    explicit EntryNotUnit(const std::string& msg) : CalcError(msg) {}
};

struct NotUnramified : CalcError {
    explicit NotUnramified(const std::string& msg) : CalcError(msg) {}
};

struct DegenerateForm : CalcError {
    explicit DegenerateForm(const std::string& msg) : CalcError(msg) {}
};

struct PointNotOnConic : CalcError {
    explicit PointNotOnConic(const std::string& msg) : CalcError(msg) {}
};

// A divisor shape outside the supported monic-linear family, or a factor
// support that cannot be split into such divisors.
struct UnsupportedDivisor : CalcError {
    explicit UnsupportedDivisor(const std::string& msg) : CalcError(msg) {}
};

struct ParseError : CalcError {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : CalcError(msg + " at offset " + std::to_string(off)), offset(off) {}
};

// Breach of an internal invariant; maps to its own CLI exit code.
struct InternalError : CalcError {
    explicit InternalError(const std::string& msg) : CalcError(msg) {}
};

} // namespace brauer
