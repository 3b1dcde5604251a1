#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vasseq
{

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A transition was fired in a configuration where it is not enabled.
class NotEnabled : public Error
{
public:
    using Error::Error;
};

/// A bounded search exceeded its node budget.
class ResourceBound : public Error
{
public:
    explicit ResourceBound(std::uint64_t budget)
        : Error("node budget of " + std::to_string(budget) + " explored configurations exceeded"),
          budget_(budget)
    {
    }

    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t budget_;
};

/// A counter machine violates the syntactic rules of two-counter machines.
class InvalidMachine : public Error
{
public:
    explicit InvalidMachine(std::vector<std::string> problems);

    const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
    std::vector<std::string> problems_;
};

/// The auxiliary VASS handed to zero-test extraction was not produced by build_n.
class MalformedN : public Error
{
public:
    using Error::Error;
};

/// A structural invariant of a VASS (or of a resolver answer) does not hold.
class InvariantViolation : public Error
{
public:
    using Error::Error;
};

/// Input text could not be parsed. `line()` is 1-based, 0 when unknown.
class SyntaxError : public Error
{
public:
    SyntaxError(std::size_t line, const std::string& message)
        : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A documented precondition of an operation does not hold.
class PreconditionFailed : public Error
{
public:
    using Error::Error;
};

} // namespace vasseq
