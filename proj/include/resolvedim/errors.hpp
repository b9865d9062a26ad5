#pragma once

#include <stdexcept>
#include <string>

namespace resolvedim {

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRangeError : Error {
    using Error::Error;
};

struct SelfLoopError : Error {
    using Error::Error;
};

struct MalformedHeaderError : Error {
    using Error::Error;
};

struct TruncatedBitstreamError : Error {
    using Error::Error;
};

struct DisconnectedError : Error {
    using Error::Error;
};

struct TooLargeError : Error {
    using Error::Error;
};

struct NotResolvingError : Error {
    using Error::Error;
};

struct InvalidSpecError : Error {
    using Error::Error;
};

struct NotGridVertexError : Error {
    using Error::Error;
};

struct NotDiagonalPairError : Error {
    using Error::Error;
};

struct OutOfFormulaRangeError : Error {
    using Error::Error;
};

} // namespace resolvedim
