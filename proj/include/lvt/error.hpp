#pragma once

#include <stdexcept>
#include <string>

namespace lvt {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the combinatorial input was violated: a duplicate
/// entry, a box that is not a corner, an invalid tableau sequence, ...
class DomainError : public Error {
public:
    using Error::Error;
};

/// An enumeration or sweep was asked to run beyond its configured size guard.
class BoundError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline void require(bool cond, const std::string& what)
{
    if (!cond)
        throw DomainError(what);
}

} // namespace detail

} // namespace lvt
