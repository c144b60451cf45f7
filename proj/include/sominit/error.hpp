#pragma once

#include <stdexcept>
#include <string>

namespace sominit {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyDataSet : public Error {
public:
    using Error::Error;
};

/// All points coincide (or too few distinct points), so no direction is defined.
class DegenerateCloud : public Error {
public:
    using Error::Error;
};

class ZeroLengthSegment : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class UnknownShape : public Error {
public:
    using Error::Error;
};

/// Malformed text input; the message carries the 1-based line number.
class ParseError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class TooManyNodes : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class DegenerateRegressor : public Error {
public:
    using Error::Error;
};

} // namespace sominit
