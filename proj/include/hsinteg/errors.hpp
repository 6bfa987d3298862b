#ifndef HSINTEG_ERRORS_HPP
#define HSINTEG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hsinteg
{

// Caller supplied inconsistent arguments (mixed rings, bad indices, ...).
class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Textual input could not be parsed. `position` is a 0-based character
// offset into the offending string (or a line number where noted).
class ParseError : public UsageError
{
public:
    ParseError(const std::string &what, std::size_t position)
        : UsageError(what + " (at position " + std::to_string(position) + ")"), message_(what), position_(position)
    {
    }

    // The message without the position suffix.
    const std::string &message() const noexcept
    {
        return message_;
    }

    std::size_t position() const noexcept
    {
        return position_;
    }

private:
    std::string message_;
    std::size_t position_;
};

// Mathematically undefined request: division by zero, inverting a non-unit.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// A configured resource guard tripped (degree, term count, pair queue, time).
class ResourceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A post-condition self-check failed. Always a bug.
class InternalError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace hsinteg

#endif
