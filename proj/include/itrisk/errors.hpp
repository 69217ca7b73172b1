#pragma once

#include <stdexcept>
#include <string>

namespace itrisk {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad call arguments (empty plan, unknown version label, >8 modules for
// exhaustive search, ...).
struct ArgumentError : Error {
    using Error::Error;
};

// Input document could not be parsed or fails its schema.
struct ParseError : Error {
    ParseError(const std::string& file, const std::string& where, const std::string& what)
        : Error(file + ": " + where + ": " + what), file_name(file), location(where) {}
    std::string file_name;
    std::string location;
};

// Plan references an id the model or the replay state does not know.
struct PlanReferenceError : Error {
    using Error::Error;
};

// Plan construction failed (precedence violation, disconnected module, ...).
struct BuildError : Error {
    using Error::Error;
};

// Arithmetic would overflow (absurd op-count inputs).
struct RangeError : Error {
    using Error::Error;
};

// A pipeline stage is missing a parameter its kind requires.
struct ConfigurationError : Error {
    using Error::Error;
};

// An internal invariant broke; maps to CLI exit code 3.
struct InternalError : Error {
    using Error::Error;
};

} // namespace itrisk
