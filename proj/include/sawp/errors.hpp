#pragma once

#include <stdexcept>
#include <string>

namespace sawp {

// Base class for every domain error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- model document errors
class SchemaError : public Error {
public:
    using Error::Error;
};
class ReferenceError : public Error {
public:
    using Error::Error;
};
class DuplicateIdError : public Error {
public:
    using Error::Error;
};
class EmptySelectionError : public Error {
public:
    using Error::Error;
};

// --- solver errors
class ZeroLengthError : public Error {
public:
    using Error::Error;
};
class SingularSystemError : public Error {
public:
    using Error::Error;
};
class DomainError : public Error {
public:
    using Error::Error;
};
class ShapeMismatchError : public Error {
public:
    using Error::Error;
};

// --- benchmark errors
class UnknownCaseError : public Error {
public:
    using Error::Error;
};
class AssetCorruptionError : public Error {
public:
    using Error::Error;
};
class InapplicableMutationError : public Error {
public:
    using Error::Error;
};

// --- prompt errors
class SelfExemplarError : public Error {
public:
    using Error::Error;
};

// --- gateway errors
class AuthError : public Error {
public:
    using Error::Error;
};
class TimeoutError : public Error {
public:
    using Error::Error;
};
class RateLimitError : public Error {
public:
    using Error::Error;
};
class ReplayMissError : public Error {
public:
    using Error::Error;
};
class DuplicateDigestError : public Error {
public:
    using Error::Error;
};
class IOError : public Error {
public:
    using Error::Error;
};

} // namespace sawp
