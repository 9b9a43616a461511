#pragma once

#include <stdexcept>
#include <string>

namespace cohen {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested table or sieve would exceed the configured memory cap.
struct ResourceError : Error {
    using Error::Error;
};

// An argument is outside the range a table or method cap supports.
struct RangeError : Error {
    using Error::Error;
};

// An exact integer computation would overflow the 128-bit accumulator.
struct OverflowError : Error {
    using Error::Error;
};

// A floating-point result failed an internal consistency check
// (imaginary part or rounding residual above tolerance).
struct NumericIntegrityError : Error {
    using Error::Error;
};

// An argument violates a mathematical precondition (odd Bernoulli index,
// nonpositive logs, non-real parameter where a real one is required, ...).
struct DomainError : Error {
    using Error::Error;
};

// Parameters fall outside the case regions of an asymptotic formula.
struct RegionError : Error {
    using Error::Error;
};

// The (beta, z) = (1, 0) corner: the Dirichlet divisor problem.
struct ExcludedParameterError : RegionError {
    using RegionError::RegionError;
};

// z1 = 0, z2 = 0 or z1 = z2 in the pair main term: poles collide.
struct DegenerateParameterError : RegionError {
    using RegionError::RegionError;
};

// Evaluation too close to the pole of zeta at s = 1.
struct PoleError : Error {
    using Error::Error;
};

// A brute-force oracle was asked to run beyond its intended scale.
struct ScaleError : Error {
    using Error::Error;
};

}  // namespace cohen
