// errors.hpp - internal error type shared by all core modules.
//
// Core code throws copson::error with a status matching the public C API
// codes; the C API boundary catches it, stores the message thread-locally,
// and returns the status.
#pragma once

#include <stdexcept>
#include <string>

namespace copson {

enum class status {
    ok = 0,
    null_pointer = 1,
    invalid_argument = 2,
    domain = 3,
    index = 4,
    nonfinite = 5,
    io = 6,
    parse = 7,
    internal = 8,
};

class error : public std::runtime_error {
public:
    error(status code, const std::string &message)
        : std::runtime_error(message), code_(code) {}

    status code() const noexcept { return code_; }

private:
    status code_;
};

[[noreturn]] inline void fail(status code, const std::string &message) {
    throw error(code, message);
}

// Guards used by preconditions; kept terse at call sites.
inline void require(bool ok, status code, const std::string &message) {
    if (!ok)
        fail(code, message);
}

} // namespace copson
