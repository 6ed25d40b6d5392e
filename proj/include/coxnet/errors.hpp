#pragma once

#include <stdexcept>
#include <string>

namespace coxnet {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Requested group family/rank has no net construction here (F4, G2, H3, H4, I2(m), bad rank).
class UnsupportedGroup : public Error {
public:
    using Error::Error;
};

/// Polynomial division left a nonzero remainder.
class NonExactDivision : public Error {
public:
    using Error::Error;
};

/// The orthogonality system for the ray direction does not have a one-dimensional kernel.
class DegenerateParabolic : public Error {
public:
    using Error::Error;
};

/// Sample length does not match the group's ambient realization (or lies off its span).
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Subset-mean net would need more than the configured number of boundaries.
class SampleTooLarge : public Error {
public:
    using Error::Error;
};

/// Group order exceeds the enumeration limit.
class GroupTooLarge : public Error {
public:
    using Error::Error;
};

/// Sample produced tied boundaries or a ray midpoint on a chamber wall.
class NonGenericSample : public Error {
public:
    using Error::Error;
};

}  // namespace coxnet
