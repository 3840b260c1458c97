#pragma once

#include <stdexcept>
#include <string>

namespace wcl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidGrid : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class UnsupportedOrder : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace wcl
