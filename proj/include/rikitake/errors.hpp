#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rikitake {

// Two values live in different variable rings.
class RingMismatchError : public std::invalid_argument {
public:
    explicit RingMismatchError(const std::string& what)
        : std::invalid_argument(what) {}
};

// A parameter is outside the domain where the requested object exists
// (e.g. the beta-family of tensors at beta = 0).
class ParameterDomainError : public std::domain_error {
public:
    explicit ParameterDomainError(const std::string& what)
        : std::domain_error(what) {}
};

// Expression-syntax failure; offset is the byte position in the source text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace rikitake
