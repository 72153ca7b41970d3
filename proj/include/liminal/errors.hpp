#ifndef LIMINAL_ERRORS_HPP
#define LIMINAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liminal {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed polynomial text. `position` is the 0-based byte offset of the
// offending token.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// The quotient ring is not finite-dimensional (non-isolated critical locus,
// or the wrong ideal was handed in).
struct InfiniteDimensionalError : Error {
    explicit InfiniteDimensionalError(const std::string& msg) : Error(msg) {}
};

// The germ is not an isolated singularity as far as the global ring can see.
struct NotIsolatedError : Error {
    explicit NotIsolatedError(const std::string& msg) : Error(msg) {}
};

// A configurable resource guard tripped; the computation was aborted rather
// than left to run unbounded.
struct TooLargeError : Error {
    explicit TooLargeError(const std::string& msg) : Error(msg) {}
};

// Weight-graded invariants were requested for a germ without a diagonal
// weight system.
struct NoWeightSystemError : Error {
    explicit NoWeightSystemError(const std::string& msg) : Error(msg) {}
};

// Domain violations that are input problems rather than computation failures
// (constant germ, hypersurface missing the origin, index out of range...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A configuration point has neither a usable classification nor a tag.
struct UnclassifiedPointError : Error {
    explicit UnclassifiedPointError(const std::string& msg) : Error(msg) {}
};

// The relation matrix does not have one column per 1-liminal point.
struct MatrixShapeMismatchError : Error {
    explicit MatrixShapeMismatchError(const std::string& msg) : Error(msg) {}
};

// Configuration file violates the schema. `pointer` is a JSON pointer to the
// offending element.
struct SchemaError : Error {
    std::string pointer;
    SchemaError(const std::string& msg, std::string ptr)
        : Error(msg + " (at " + ptr + ")"), pointer(std::move(ptr)) {}
};

// The Poincare series of the candidate weight system is not a polynomial,
// i.e. the input was not an isolated weighted homogeneous singularity.
struct SeriesNotPolynomialError : Error {
    explicit SeriesNotPolynomialError(const std::string& msg) : Error(msg) {}
};

}  // namespace liminal

#endif  // LIMINAL_ERRORS_HPP
