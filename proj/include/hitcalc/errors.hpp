#pragma once

#include <stdexcept>
#include <string>

namespace hitcalc {

// Input text could not be parsed. CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t position = 0)
        : std::runtime_error(std::move(msg)), pos(position) {}
    std::size_t pos;
};

// A computation would exceed the configured size cap. CLI exit code 3.
class SizeCapError : public std::runtime_error {
public:
    SizeCapError(std::string msg, std::size_t required, std::size_t cap)
        : std::runtime_error(std::move(msg)), required(required), cap(cap) {}
    std::size_t required;
    std::size_t cap;
};

// A domain precondition was violated (e.g. non-descending omega-vector
// passed to straighten). CLI exit code 4.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hitcalc
