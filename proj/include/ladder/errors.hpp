#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ladder {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter violates an operation's precondition.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Grid dimensions are incompatible with the requested bit packing.
class EncodingError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

/// Fewer data points than neighbors requested.
class InsufficientDataError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

/// Lookup of an unknown task or variant.
class RegistryError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

/// Malformed file or document. Carries the byte offset (or a field path for
/// structured documents) where parsing stopped.
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::uint64_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

    FormatError(const std::string& what, const std::string& path)
        : Error(what + " (at " + path + ")"), path_(path) {}

    std::uint64_t offset() const noexcept { return offset_; }
    const std::string& path() const noexcept { return path_; }

private:
    std::uint64_t offset_ = 0;
    std::string path_;
};

/// A variant's output differs from its oracle.
class VerificationError : public Error {
public:
    using Error::Error;
};

} // namespace ladder
