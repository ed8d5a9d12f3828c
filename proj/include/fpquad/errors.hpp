#pragma once

#include <stdexcept>
#include <string>

namespace fpquad {

// Base class of every failure thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid argument values or an unmet call precondition (usage errors).
struct PreconditionError : Error {
    using Error::Error;
};

// Evaluation requested outside a function's domain: branch cuts, points on
// the segment [0,1], or a contour that fails validation for the integrand.
struct DomainError : Error {
    using Error::Error;
};

// An iterative scheme exhausted its budget without converging.
struct ConvergenceError : Error {
    using Error::Error;
};

// The analyticity strip of half-width d' is unusable: the image of a strip
// boundary line touches [0,1] or crosses a singularity of the integrand.
struct StripError : Error {
    using Error::Error;
};

} // namespace fpquad
