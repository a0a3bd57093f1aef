#pragma once

#include <stdexcept>
#include <string>

namespace gvcc {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Tensor shape or dimension disagreement.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Invalid configuration (violated invariants, impossible knob combinations).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Malformed or truncated byte stream.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Stored checksum does not match the recomputed one.
class ChecksumError : public Error {
public:
    using Error::Error;
};

/// Nonfinite values or diverging numerics.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Request exceeds a configured resource cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// File system failures.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace gvcc
