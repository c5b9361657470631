#ifndef SSPT_ERRORS_HPP
#define SSPT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sspt {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A required target/terminal cannot be reached from the source.
struct UnreachableTarget : Error {
    explicit UnreachableTarget(std::uint32_t v)
        : Error("vertex " + std::to_string(v) + " is unreachable from the source"), vertex(v) {}
    std::uint32_t vertex;
};

// A terminal is missing from the shortest path subgraph.
struct TerminalUnreachable : Error {
    explicit TerminalUnreachable(std::uint32_t t)
        : Error("terminal " + std::to_string(t) + " has no shortest path from the source"),
          terminal(t) {}
    std::uint32_t terminal;
};

// Enumeration guard exceeded (oracle or exact set cover).
struct TooLarge : Error {
    using Error::Error;
};

// Oracle wall-clock budget exceeded.
struct TimeLimitExceeded : Error {
    using Error::Error;
};

// The derived Set Cover instance has no feasible cover.
struct InfeasibleCover : Error {
    using Error::Error;
};

// A tree handed to an expansion/mapping step violates its precondition.
struct PreconditionViolated : Error {
    using Error::Error;
};

struct InfeasibleTree : Error {
    using Error::Error;
};

struct NotAcyclic : Error {
    using Error::Error;
};

// Malformed instance/solution text.
struct ParseError : Error {
    ParseError(std::size_t line_no, const std::string& reason)
        : Error("line " + std::to_string(line_no) + ": " + reason), line(line_no) {}
    std::size_t line;
};

// Structurally valid file describing an invalid instance (e.g. source listed as terminal).
struct InvariantViolation : Error {
    using Error::Error;
};

struct InvalidSpec : Error {
    using Error::Error;
};

}  // namespace sspt

#endif
