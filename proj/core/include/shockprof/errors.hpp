#pragma once

#include <stdexcept>
#include <string>

namespace shockprof {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A fluid state outside the domain psi0 > |psi1|, or an EOS argument outside
/// its validity interval.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An equation of state that violates its construction invariants.
class EosError : public Error {
public:
    using Error::Error;
};

/// Superluminal sound speed or an indefinite mass matrix.
class CausalityError : public Error {
public:
    using Error::Error;
};

/// The flux constants admit fewer than two end states.
class NoShockError : public Error {
public:
    using Error::Error;
};

/// Root refinement did not converge.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Bad configuration or model/EOS combination.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace shockprof
