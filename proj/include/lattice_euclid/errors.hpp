#pragma once

#include <stdexcept>
#include <string>

namespace lattice_euclid {

/// Base class of every error raised by the library.
class LatticeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Elimination found no nonzero pivot in some column.
class SingularMatrix : public LatticeError {
public:
    using LatticeError::LatticeError;
};

/// A column replacement would make the maintained inverse singular.
class SingularUpdate : public LatticeError {
public:
    using LatticeError::LatticeError;
};

/// The chosen pivot coordinate is integral, so no exchange is possible.
class IntegralPivot : public LatticeError {
public:
    using LatticeError::LatticeError;
};

class DimensionMismatch : public LatticeError {
public:
    using LatticeError::LatticeError;
};

/// A vector is not in the rational column span of the generators.
class SpanMismatch : public LatticeError {
public:
    using LatticeError::LatticeError;
};

class ExhaustedRetries : public LatticeError {
public:
    using LatticeError::LatticeError;
};

class InvalidParams : public LatticeError {
public:
    using LatticeError::LatticeError;
};

/// An invariant that the algorithms guarantee was observed to fail.
class InternalError : public LatticeError {
public:
    using LatticeError::LatticeError;
};

}  // namespace lattice_euclid
