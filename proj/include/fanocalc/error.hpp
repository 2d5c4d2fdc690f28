#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fanocalc {

/// Base of every error raised by the library. The CLI maps these to exit
/// code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// Wrong number of arguments, class from another model, wrong vector length.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// An expression is not homogeneous of the degree an operation needs.
class DegreeError : public Error {
public:
    using Error::Error;
};

class UnknownSymbolError : public Error {
public:
    using Error::Error;
};

/// Parse failure in an expression, recipe or identifier. `offset` is a byte
/// offset into the parsed text, always within [0, text.size()].
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& message)
        : Error("at offset " + std::to_string(offset) + ": " + message),
          offset_(offset), detail_(message) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t offset_;
    std::string detail_;
};

class UnknownFamilyError : public Error {
public:
    using Error::Error;
};

class NoRecipeError : public Error {
public:
    using Error::Error;
};

class NotAPencilError : public Error {
public:
    using Error::Error;
};

/// Raised when numeric data contradicts a structural fact, e.g. both halves
/// of a splitting of an ample class being composed with a pencil.
class InconsistentModelError : public Error {
public:
    using Error::Error;
};

/// Recipe-derived and tabulated data disagree.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class DataFormatError : public Error {
public:
    using Error::Error;
};

} // namespace fanocalc
