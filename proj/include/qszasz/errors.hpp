#ifndef QSZASZ_ERRORS_HPP
#define QSZASZ_ERRORS_HPP

#include <stdexcept>

namespace qszasz {

// A series argument left its convergence region, or parameters put it there.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Kernel series lacks the nonnegativity needed for a positive operator.
class PositivityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A partial product or power left the representable range; the caller should
// switch to the normalized weight form or reduce the truncation depth.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// A verifier was invoked with a hypothesis that fails its own check.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Config file rejected; the message carries file:line.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qszasz

#endif
