#pragma once

#include <stdexcept>
#include <string>

namespace struvekit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Gamma-family argument at a pole (non-positive integer).
class PoleError : public Error {
public:
    using Error::Error;
};

/// Argument outside the region where a representation is valid.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Series or quadrature ran out of terms / levels before meeting its tolerance.
class NonConvergence : public Error {
public:
    using Error::Error;
};

/// The result is a small difference of large quantities and too few digits survive.
class CancellationError : public Error {
public:
    using Error::Error;
};

/// Fox-Wright series with non-positive convergence index.
class ConvergenceDomainError : public Error {
public:
    using Error::Error;
};

/// No grid point satisfies an inequality case's domain.
class EmptyDomainError : public Error {
public:
    using Error::Error;
};

/// Invalid tolerance / level / term settings.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace struvekit
