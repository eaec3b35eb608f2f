#pragma once

#include <stdexcept>
#include <string>

namespace msvf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptySetError : Error {
    using Error::Error;
};
struct InvalidEndpointError : Error {
    using Error::Error;
};
struct LevelOverflowError : Error {
    using Error::Error;
};
struct FiniteOnlyError : Error {
    using Error::Error;
};
struct TooLargeError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct BadExponentError : Error {
    using Error::Error;
};
struct NotContractiveError : Error {
    using Error::Error;
};
struct ConvexityRequiredError : Error {
    using Error::Error;
};
struct GlueError : Error {
    using Error::Error;
};
struct BadWeightsError : Error {
    using Error::Error;
};
struct DegenerateInputError : Error {
    using Error::Error;
};

// Parse failures carry the 1-based line number of the offending input line.
struct ParseError : Error {
    ParseError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_no(line) {}
    int line_no;
};

} // namespace msvf
