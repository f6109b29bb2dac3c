#pragma once

#include <stdexcept>
#include <string>

namespace qtail {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad argument or input outside the operation's domain.
struct DomainError : Error {
    using Error::Error;
};

// A hypothesis of the analytic theory fails (d+ <= 0, aperiodicity,
// wrong regime, degenerate kernel). CLI exit status 2.
struct HypothesisError : Error {
    using Error::Error;
};

// A numerical oracle did not converge or was rejected (residual caps,
// censoring, fit failures). CLI exit status 3.
struct OracleError : Error {
    using Error::Error;
};

// Malformed configuration.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace qtail
