#pragma once

#include <stdexcept>
#include <string>

namespace h2z {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input document (configuration, CSV, command line value).
struct ParseError : Error {
    using Error::Error;
};

/// Well-formed input carrying an out-of-range or inconsistent value.
struct ValidationError : Error {
    using Error::Error;
};

/// Operation called outside its mathematical domain.
struct DomainError : Error {
    using Error::Error;
};

/// A required (v,L) entry is absent from a data table.
struct DataMissingError : Error {
    using Error::Error;
};

/// A required mixing entry or configured resource is absent.
struct ConfigError : Error {
    using Error::Error;
};

/// Mixing-coefficient recovery has no real solution within tolerance.
struct InversionError : Error {
    using Error::Error;
};

/// Transition has no component for the requested polarization.
struct ForbiddenTransitionError : Error {
    using Error::Error;
};

} // namespace h2z
