#ifndef FRACADI_ERRORS_HPP
#define FRACADI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracadi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Degenerate interval or too few cells to have an interior node.
class InvalidGridError : public Error {
public:
    using Error::Error;
};

/// Vector or field extents disagree with the operator they are used with.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Fractional order outside (1, 2].
class UnsupportedOrderError : public Error {
public:
    using Error::Error;
};

/// Bad user input: non-finite samples, inconsistent steps, bad problem data.
class InputError : public Error {
public:
    using Error::Error;
};

/// A time step produced a non-finite value.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// Convergence rate requested from a nonpositive error.
class UndefinedRateError : public Error {
public:
    using Error::Error;
};

} // namespace fracadi

#endif // FRACADI_ERRORS_HPP
