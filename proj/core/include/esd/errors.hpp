#pragma once

#include <stdexcept>
#include <string>

namespace esd {

// Error taxonomy shared by the library and the CLI exit-code mapping:
// config/usage -> 2, data/format -> 3, everything else -> 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct DataError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct NumericError : Error { using Error::Error; };
struct StateError : Error { using Error::Error; };

} // namespace esd
