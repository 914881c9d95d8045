#pragma once

#include <stdexcept>
#include <string>

namespace loophom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixing values from different generator contexts.
struct ContextError : Error {
    using Error::Error;
};

// Inhomogeneous input where a homogeneous one is required, or a
// degree-mismatched image under a graded substitution.
struct GradingError : Error {
    using Error::Error;
};

struct SubstitutionError : Error {
    using Error::Error;
};

// Hilbert series with different truncation bounds.
struct BoundError : Error {
    using Error::Error;
};

// Pairing called with the wrong number of arguments.
struct ArityError : Error {
    using Error::Error;
};

// A rewrite rule whose tail does not drop in the word order.
struct OrientationError : Error {
    using Error::Error;
};

// The surviving relations fail the regular-sequence certificate.
struct NotCartanPairError : Error {
    using Error::Error;
};

// A linear relation that should have been eliminated upstream.
struct ReductionError : Error {
    using Error::Error;
};

// Structure constants violating antisymmetry or Jacobi.
struct InvalidLieError : Error {
    using Error::Error;
};

struct NonintegralDivisionError : Error {
    using Error::Error;
};

struct ParameterError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ", col " + std::to_string(column_) + ": " + what_),
          line(line_), column(column_) {}
};

struct SemanticError : Error {
    using Error::Error;
};

} // namespace loophom
