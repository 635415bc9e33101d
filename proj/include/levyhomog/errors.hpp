#pragma once

#include <stdexcept>
#include <string>

namespace levyhomog {

// Precondition failure on a numerical routine's arguments.
struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Division by zero during expression evaluation.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exterior data does not reach the quadrature truncation radius.
struct HaloTooShort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A linear system could not be solved to tolerance.
struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An iteration or extrapolation failed to reach its tolerance.
struct NotConverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sampled d(I) values do not fit an affine law; signals a solver bug.
struct NotAffine : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A subellipticity certificate check failed.
struct CertificateFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Monotonicity of the scheme was violated (comparison or M-matrix check).
struct OrderingViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    std::string key;
    std::string reason;
    ConfigError(std::string key_, std::string reason_)
        : std::runtime_error(key_ + ": " + reason_),
          key(std::move(key_)),
          reason(std::move(reason_)) {}
};

}  // namespace levyhomog
