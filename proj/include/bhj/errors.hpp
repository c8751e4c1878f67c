#pragma once

#include <stdexcept>
#include <string>

namespace bhj {

// Base class for all library errors. Every concrete error carries a stable
// code used by the CLI to map failures onto process exit codes.
class Error : public std::runtime_error {
public:
    Error(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const noexcept { return code_; }

private:
    int code_;
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(14, what) {}
};

struct InvariantViolation : Error {
    explicit InvariantViolation(const std::string& what) : Error(4, what) {}
};

struct SingularMap : Error {
    explicit SingularMap(const std::string& what) : Error(5, what) {}
};

struct NotAMorphism : Error {
    explicit NotAMorphism(const std::string& what) : Error(6, what) {}
};

struct NonCommuting : Error {
    explicit NonCommuting(const std::string& what) : Error(7, what) {}
};

struct WrongParity : Error {
    explicit WrongParity(const std::string& what) : Error(8, what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(9, what) {}
};

struct OOperatorAxiomsFailed : Error {
    explicit OOperatorAxiomsFailed(const std::string& what) : Error(10, what) {}
};

struct PreJordanAxiomsFailed : Error {
    explicit PreJordanAxiomsFailed(const std::string& what) : Error(11, what) {}
};

struct NotSelfReversing : Error {
    explicit NotSelfReversing(const std::string& what) : Error(12, what) {}
};

struct AlgebraMismatch : Error {
    explicit AlgebraMismatch(const std::string& what) : Error(13, what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(2, what) {}
};

struct UnresolvedReference : Error {
    explicit UnresolvedReference(const std::string& what) : Error(3, what) {}
};

} // namespace bhj
