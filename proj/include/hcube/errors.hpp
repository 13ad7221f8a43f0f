#pragma once

#include <stdexcept>

namespace hcube {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CapError : public Error {
public:
    using Error::Error;
};

class MalformedEdgeError : public Error {
public:
    using Error::Error;
};

class StructuralError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace hcube
