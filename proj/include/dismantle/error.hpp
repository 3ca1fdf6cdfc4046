#pragma once

#include <stdexcept>
#include <string>

namespace dismantle {

enum class ErrorKind {
    invalid_input,   // malformed values, schema violations
    unknown_vertex,
    not_dismantlable,
    disconnected,
    cap_exceeded,
    precondition,
    hypothesis,      // a checked hypothesis of a construction does not hold
    counterexample,  // a verified statement failed on a concrete instance
    internal,        // an output failed its own verification
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace dismantle
