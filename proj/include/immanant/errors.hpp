#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace immanant {

/// Malformed graph6 / sparse6 / digraph6 / JSON text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Well-formed input that violates a graph invariant (loop, duplicate, range).
class ValidationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition of a mathematical operation does not hold.
class ContractError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class UnsupportedSize : public std::out_of_range {
    using std::out_of_range::out_of_range;
};

class MalformedDeck : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace immanant
