#pragma once

#include <stdexcept>
#include <string>

namespace equifacet {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateInput : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class MalformedCatalog : public Error {
public:
    using Error::Error;
};

class InvariantViolation : public Error {
public:
    using Error::Error;
};

class NoSignChange : public Error {
public:
    using Error::Error;
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

}  // namespace equifacet
