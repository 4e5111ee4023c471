#pragma once

#include <stdexcept>
#include <string>

namespace udapp {

enum class ErrorCode {
    InvalidArgument = 1,
    NotFound,
    Parse,
    Schema,
    RosterMismatch,
    UnknownSample,
    IllegalEvent,
    Io,
};

// All engine failures surface as this exception; the C API maps `code` onto
// its status enumeration.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace udapp
