#pragma once

#include <stdexcept>
#include <string>

namespace stylo {

// Base class for everything the library throws.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file (tagged TSV, manifest, Newick, ...). Messages carry
// "file:line:" prefixes where a location is known.
struct ParseError : Error {
    using Error::Error;
};

// Invalid configuration or arguments (overlapping profile specs, bad flag
// values, unit mismatches). Maps to CLI exit code 1.
struct ConfigError : Error {
    using Error::Error;
};

// Structurally valid input that cannot be processed (empty selection,
// zero-total table, duplicate ids). Maps to CLI exit code 2.
struct DataError : Error {
    using Error::Error;
};

} // namespace stylo
