#pragma once

#include <stdexcept>
#include <string>

namespace mhd {

enum class ErrorCode {
    Argument,      // bad argument value (domain violation)
    Range,         // invalid interval / out of supported range
    Precondition,  // operation precondition violated
    Resource,      // desk-scale resource guard tripped
    Numeric,       // transform value too far from an integer
    Config,        // experiment configuration invalid
    Io,            // file I/O failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace mhd
