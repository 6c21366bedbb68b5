#pragma once

#include <stdexcept>
#include <string>

namespace emo {

// Invalid configuration, bad component combination, malformed input text.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem-level failures (missing file, unwritable directory).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace emo
