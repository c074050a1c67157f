#pragma once

#include <stdexcept>
#include <string>

namespace ricci {

// Malformed input: edge-list text, graph-spec strings, rationals, selectors.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input that violates an operation's precondition
// (non-adjacent pair, unequal degrees, disconnected supports, ...).
class PreconditionError : public std::runtime_error {
  public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Two independent computation routes disagreed. This is a solver bug,
// never a property of the input.
class CrossCheckError : public std::logic_error {
  public:
    explicit CrossCheckError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ricci
