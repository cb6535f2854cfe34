#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rwalk {

/// Base class for recoverable library errors. Plain precondition violations
/// throw std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge-list text did not match the expected format.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A connected graph could not be generated within the retry budget.
class GenerationFailure : public Error {
public:
    GenerationFailure(int attempts, const std::string& what)
        : Error(what), attempts_(attempts) {}

    int attempts() const noexcept { return attempts_; }

private:
    int attempts_;
};

/// The walk reached a node with no neighbors before covering the graph.
class StuckWalk : public Error {
public:
    using Error::Error;
};

}  // namespace rwalk
