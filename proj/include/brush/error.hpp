#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brush {

// Base for every error raised by the library. Callers that only care about
// "did it work" catch this; the CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class InvalidSequence : public Error {
public:
    using Error::Error;
};

class InvalidOrientation : public Error {
public:
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

// A vertex was asked to fire while holding fewer brushes than dirty edges.
class InfeasibleStep : public Error {
public:
    InfeasibleStep(std::size_t step, int vertex, int have, int need)
        : Error("step " + std::to_string(step) + ": vertex " + std::to_string(vertex) +
                " holds " + std::to_string(have) + " brushes but has " +
                std::to_string(need) + " dirty edges"),
          step_(step), vertex_(vertex), have_(have), need_(need) {}

    std::size_t step() const { return step_; }
    int vertex() const { return vertex_; }
    int have() const { return have_; }
    int need() const { return need_; }

private:
    std::size_t step_;
    int vertex_;
    int have_;
    int need_;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class ResourceError : public Error {
public:
    using Error::Error;
};

class PreconditionViolation : public Error {
public:
    using Error::Error;
};

class InvalidClassification : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace brush
