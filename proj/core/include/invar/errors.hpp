#ifndef INVAR_ERRORS_HPP
#define INVAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace invar {

/// Base class of all errors thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad user-supplied parameter (CLI exit status 2).
class parameter_error : public error {
public:
    using error::error;
};

/// Vector length does not match the system rank.
class dimension_error : public parameter_error {
public:
    using parameter_error::parameter_error;
};

/// Input outside the mathematical domain of an operation (CLI exit status 2).
class domain_error : public error {
public:
    using error::error;
};

/// A configured work budget was exhausted (CLI exit status 3).
class resource_error : public error {
public:
    using error::error;
};

/// Two routes that must agree did not (CLI exit status 4).
class consistency_error : public error {
public:
    using error::error;
};

} // namespace invar

#endif
