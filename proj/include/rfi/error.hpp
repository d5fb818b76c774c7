#pragma once

#include <stdexcept>
#include <string>

namespace rfi {

/// Argument outside the operation's domain (negative frequency, q = 0, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Object used in the wrong lifecycle state (e.g. an unnormalized profile).
class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rfi
